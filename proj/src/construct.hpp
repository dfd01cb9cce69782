#ifndef LINCOM_CONSTRUCT_HPP
#define LINCOM_CONSTRUCT_HPP

#include <cstdint>
#include <vector>

#include "counters.hpp"
#include "graph.hpp"
#include "solver_state.hpp"

namespace lincom {

struct CoverResult {
    std::vector<VertexId> cover; // ascending ids
    std::vector<char> in_cover;
    std::vector<char> fixed;
    bool optimal_guaranteed = false; // true iff no max-gain pick was needed
    Counters counters;
    // Final max-gain cursor level (max-gain constructor only, else -1); the
    // boundary-test identity is tests == |C| + (d_max - k_final).
    int k_final = -1;
};

// Reduction-driven construction: triangle/quadrilateral/degree-1 rules to
// mutual fixpoint, falling back to a maximum-gain pick only when no rule
// applies; then redundant vertices are dropped. Vertices added before the
// first max-gain pick are marked fixed.
CoverResult init_vc(const Graph& g, std::uint64_t seed, bool deterministic = false);

// Greedy constructors on the partition structure, O(|V| + |C| + |E|).
CoverResult min_gain_construct_vc(const Graph& g, std::uint64_t seed,
                                  bool deterministic = false);
CoverResult max_gain_construct_vc(const Graph& g, std::uint64_t seed,
                                  bool deterministic = false);

// Removes loss-0 non-fixed vertices (lowest slot first) until none remain.
int eliminate_redundant(SolverState& st);

// In-place variant driving an existing state; used by the local search.
struct InitOutcome {
    bool optimal_guaranteed = false;
};
InitOutcome run_init_vc(SolverState& st, bool deterministic);

} // namespace lincom

#endif
