#ifndef LINCOM_ALT_PARTITIONS_HPP
#define LINCOM_ALT_PARTITIONS_HPP

#include <span>
#include <string>
#include <vector>

#include "counters.hpp"
#include "graph.hpp"
#include "rng.hpp"

namespace lincom {

// All vertices live in one slot array, segmented into contiguous regions
// ordered [loss-0][gain-0][loss-1][gain-1]...[loss-K][gain-K]. A vertex in
// the cover with loss k sits in loss-k; a vertex outside with gain k sits in
// gain-k. Two pointer arrays mark region starts, so emptiness tests are O(1),
// score +-1 moves cross exactly one opposite-side region with two boundary
// swaps, and extremal-score scans touch at most K+1 boundaries.
//
// Parked vertices (the permanently-fixed cover members during local search)
// are pulled out into a dead prefix [0, dead_end): their scores stay tracked,
// but no scan or region ever sees them.
class AltPartitions {
public:
    AltPartitions() = default;

    // C = empty: counting sort on the initial scores (gain = degree).
    // `counters` must outlive this object; pass the owning solver's block.
    void init_from_scores(std::span<const int> scores, Counters* counters);

    // Re-segments from current membership/scores, parking the flagged
    // vertices. One counting sort, O(|V| + K).
    void park(std::span<const char> parked);

    int vertex_count() const { return static_cast<int>(slot_.size()); }
    int max_score_bound() const { return max_k_; }

    bool in_cover(VertexId v) const { return in_cover_[v] != 0; }
    bool parked(VertexId v) const { return parked_[v] != 0; }
    int score(VertexId v) const { return score_[v]; }
    int cover_size() const { return cover_size_; }
    // Cover members that scans may return (excludes parked).
    int removable_count() const { return removable_; }

    // O(1) moves. Preconditions are enforced with logic errors: membership
    // side must match, vertex must not be parked, and the resulting score
    // must stay within [0, initial score cap].
    void place_into_cover(VertexId v);
    void place_out_of_cover(VertexId v);
    void gain_decrement(VertexId v);
    void gain_increment(VertexId v);
    void loss_decrement(VertexId v);
    void loss_increment(VertexId v);

    // Score bookkeeping for parked vertices (no relocation).
    void adjust_parked_score(VertexId v, int delta);

    // Ascending scan from loss-0; uniform member of the first non-empty
    // region (deterministic mode: lowest vertex id in it). Throws when no
    // removable vertex exists.
    VertexId random_min_loss_vertex(Rng& rng, bool deterministic);

    // Smallest k >= 1 with gain-k non-empty. Throws if none exists.
    int min_positive_gain_partition();

    // Monotone descending cursor over gain regions; returns the largest
    // k <= cursor with gain-k non-empty and leaves the cursor there.
    int descend_max_gain_cursor();
    int max_gain_cursor() const { return cursor_; }
    void reset_max_gain_cursor() { cursor_ = max_k_; }

    VertexId pick_in_gain_region(int k, Rng& rng, bool deterministic) const;

    std::span<const VertexId> loss_region(int k) const;
    std::span<const VertexId> gain_region(int k) const;

    // One line per populated score level: `loss-3: v4 v17 | gain-3: v2`.
    std::string dump() const;

    // Structure-only invariants (inverse permutation, region bounds,
    // membership/side agreement). Throws std::logic_error on violation.
    void check_consistency() const;

private:
    void swap_slots(int a, int b);
    [[noreturn]] void bad(VertexId v, const char* what) const;

    std::vector<VertexId> slot_; // region-segmented vertex array
    std::vector<int> pos_;       // inverse of slot_
    std::vector<int> score_;     // gain if outside cover, loss if inside
    std::vector<int> cap_;       // initial score = degree; hard score bound
    std::vector<char> in_cover_;
    std::vector<char> parked_;
    std::vector<int> loss_start_; // size max_k_ + 2, last entry = |V| sentinel
    std::vector<int> gain_start_; // size max_k_ + 1
    int max_k_ = 0;
    int dead_end_ = 0;
    int removable_ = 0;
    int cover_size_ = 0;
    int cursor_ = 0;
    Counters* counters_ = nullptr;
};

} // namespace lincom

#endif
