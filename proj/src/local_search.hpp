#ifndef LINCOM_LOCAL_SEARCH_HPP
#define LINCOM_LOCAL_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "construct.hpp"
#include "counters.hpp"
#include "graph.hpp"

namespace lincom {

struct SolveConfig {
    std::uint64_t seed = 1;
    double cutoff_seconds = 1000.0;
    std::optional<std::int64_t> max_steps;
    bool deterministic_ties = false;
    // Test hook: run the full from-scratch consistency oracle every N steps
    // (0 disables it).
    std::int64_t self_check_every = 0;
};

struct SolveOutcome {
    std::vector<VertexId> best_cover; // ascending ids
    std::int64_t best_size = 0;
    bool optimal_guaranteed = false;
    std::int64_t steps = 0;
    double elapsed_seconds = 0.0;
    double steps_per_ms = 0.0;
    Counters counters;      // whole run
    Counters init_counters; // snapshot when construction finished
};

// Construct with init_vc; if that certifies optimality, return at step 0.
// Otherwise exchange vertices until the step or wall-clock budget runs out:
// record the cover whenever complete and shrink it by one, remove a random
// minimum-loss non-fixed vertex, then add the greater-gain endpoint of a
// random uncovered edge (ties to the older endpoint).
SolveOutcome solve(const Graph& g, const SolveConfig& config);

// The addition rule: greater gain wins, ties go to the older endpoint
// (smaller age stamp), then to the lower id.
VertexId choose_add_endpoint(const SolverState& st, VertexId u, VertexId v);

} // namespace lincom

#endif
