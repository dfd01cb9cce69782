#ifndef LINCOM_SOLVER_STATE_HPP
#define LINCOM_SOLVER_STATE_HPP

#include <cstdint>
#include <vector>

#include "alt_partitions.hpp"
#include "counters.hpp"
#include "graph.hpp"
#include "rng.hpp"

namespace lincom {

// One solver run's mutable state: the partition structure, the uncovered-edge
// set with O(1) insert/delete/uniform-sample, fixed-vertex flags, and age
// stamps. add/remove keep every piece in sync in O(d(v)).
class SolverState {
public:
    SolverState(const Graph& g, std::uint64_t seed);

    const Graph& graph() const { return g_; }
    AltPartitions& partitions() { return parts_; }
    const AltPartitions& partitions() const { return parts_; }
    Counters& counters() { return counters_; }
    Rng& rng() { return rng_; }

    std::int64_t uncovered_count() const { return static_cast<std::int64_t>(uncov_.size()); }
    bool covered() const { return uncov_.empty(); }
    EdgeId sample_uncovered_edge();
    bool edge_uncovered(EdgeId e) const { return uncov_pos_[e] >= 0; }

    void add_vertex(VertexId v);
    void remove_vertex(VertexId v); // rejects fixed vertices

    bool fixed(VertexId v) const { return fixed_[v] != 0; }
    const std::vector<char>& fixed_flags() const { return fixed_; }
    int fixed_count() const { return fixed_count_; }
    void mark_fixed(VertexId v); // v must be in the cover

    // Parks the fixed vertices; from here on loss scans see only removable
    // cover members and the step counter starts advancing.
    void begin_local_search();
    bool in_local_search() const { return parked_phase_; }

    std::int64_t step() const { return step_; }
    void advance_step();
    std::int64_t age_stamp(VertexId v) const { return age_stamp_[v]; }

    int cover_size() const { return parts_.cover_size(); }
    std::vector<VertexId> cover_vertices() const; // ascending ids
    std::vector<char> cover_flags() const;

    // Full from-scratch oracle: recomputes every score and the uncovered set
    // from the definitions and compares against the incremental state.
    // Throws std::logic_error on any mismatch.
    void full_consistency_check() const;

private:
    void uncov_insert(EdgeId e);
    void uncov_remove(EdgeId e);

    const Graph& g_;
    AltPartitions parts_;
    Counters counters_;
    Rng rng_;
    std::vector<char> fixed_;
    std::vector<std::int64_t> age_stamp_;
    std::vector<EdgeId> uncov_;      // stack of uncovered edge ids
    std::vector<EdgeId> uncov_pos_;  // edge id -> stack index, -1 when covered
    std::int64_t step_ = 0;
    int fixed_count_ = 0;
    bool parked_phase_ = false;
};

} // namespace lincom

#endif
