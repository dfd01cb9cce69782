#ifndef LINCOM_ORACLE_HPP
#define LINCOM_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

// Ground-truth machinery for tests: exact small-instance solving, literal
// quadratic reference constructors, and from-scratch score evaluation.
namespace lincom::oracle {

struct ExactResult {
    int optimum_size = 0;
    std::vector<VertexId> one_optimal_cover;
    // Present only when enumeration was requested (n <= 14); each entry is a
    // bitmask over vertex ids.
    std::optional<std::vector<std::uint32_t>> all_minimum_covers;
};

// Branch and bound on a max-degree vertex (take v, or take all of N(v)),
// with a greedy-matching lower bound. Requires n <= 26; with
// enumerate_all = true requires n <= 14 and lists every minimum cover by
// exhaustive subset sweep.
ExactResult exact_min_vc(const Graph& g, bool enumerate_all = false);

// Direct O(|E|) check that `in_cover` marks a vertex cover.
bool is_cover(const Graph& g, const std::vector<char>& in_cover);

// Scores straight from the definitions, O(|V| + |E|):
//   v in C:  loss(v) = covered edges that removing v would uncover
//   v not in C: gain(v) = uncovered edges that adding v would cover
struct DefinitionScores {
    std::vector<int> score;      // loss if in cover, gain otherwise
    std::int64_t uncovered = 0;  // edges with both endpoints outside the cover
};
DefinitionScores recompute_scores(const Graph& g, const std::vector<char>& in_cover);

// Literal quadratic reference constructors: gains live in a plain array and
// every pick rescans all vertices (the classical O(|V|^2) behavior). With
// deterministic = true ties break toward the lowest vertex id; otherwise the
// tie is resolved with one rng draw over the tied candidates.
struct NaiveCover {
    std::vector<char> in_cover;
    std::vector<VertexId> order;  // vertices in the sequence they were added
};

// Pick a minimum-positive-gain vertex, add all its out-of-cover neighbors in
// adjacency order; repeat until covered.
NaiveCover naive_min_gain(const Graph& g, Rng& rng, bool deterministic);

// Pick a maximum-gain vertex, add it; repeat until covered.
NaiveCover naive_max_gain(const Graph& g, Rng& rng, bool deterministic);

} // namespace lincom::oracle

#endif
