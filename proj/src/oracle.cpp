#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace lincom::oracle {
namespace {

// Greedy maximal matching on the residual graph (vertices in `out`): every
// matched edge forces at least one more cover vertex.
int matching_lower_bound(const std::vector<std::uint32_t>& nbr, std::uint32_t out) {
    int lb = 0;
    std::uint32_t avail = out;
    while (avail) {
        int v = std::countr_zero(avail);
        avail &= avail - 1;
        std::uint32_t cand = nbr[v] & avail;
        if (cand) {
            int u = std::countr_zero(cand);
            avail &= ~(std::uint32_t{1} << u);
            ++lb;
        }
    }
    return lb;
}

struct Bnb {
    int n;
    std::uint32_t full;
    const std::vector<std::uint32_t>& nbr;
    int best_size;
    std::uint32_t best_mask = 0;

    void search(std::uint32_t chosen, int size) {
        if (size >= best_size) return;
        std::uint32_t out = full & ~chosen;
        int max_deg = 0;
        int max_v = -1;
        std::uint32_t rest = out;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int d = std::popcount(nbr[v] & out);
            if (d > max_deg) {
                max_deg = d;
                max_v = v;
            }
        }
        if (max_deg == 0) { // no edge inside `out` is uncovered
            best_size = size;
            best_mask = chosen;
            return;
        }
        if (size + matching_lower_bound(nbr, out) >= best_size) return;
        // Branch: either max_v joins the cover, or all its residual neighbors do.
        search(chosen | (std::uint32_t{1} << max_v), size + 1);
        std::uint32_t forced = nbr[max_v] & out;
        search(chosen | forced, size + std::popcount(forced));
    }
};

bool mask_is_cover(const std::vector<std::uint32_t>& nbr, int n, std::uint32_t mask) {
    for (int v = 0; v < n; ++v)
        if (!(mask >> v & 1u) && (nbr[v] & ~mask)) return false;
    return true;
}

std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
    std::vector<std::uint32_t> nbr(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= std::uint32_t{1} << v;
        nbr[v] |= std::uint32_t{1} << u;
    }
    return nbr;
}

} // namespace

ExactResult exact_min_vc(const Graph& g, bool enumerate_all) {
    const int n = g.vertex_count();
    if (n > 26)
        throw std::invalid_argument("exact_min_vc: limited to 26 vertices, got " +
                                    std::to_string(n));
    if (enumerate_all && n > 14)
        throw std::invalid_argument("exact_min_vc: cover enumeration limited to 14 "
                                    "vertices, got " + std::to_string(n));

    auto nbr = neighbor_masks(g);
    ExactResult res;

    Bnb bnb{n, n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1, nbr, n, 0};
    // Trivial upper bound: all vertices form a cover.
    bnb.best_mask = bnb.full;
    bnb.best_size = n;
    if (g.edge_count() == 0) {
        bnb.best_size = 0;
        bnb.best_mask = 0;
    } else {
        bnb.search(0, 0);
    }

    res.optimum_size = bnb.best_size;
    for (int v = 0; v < n; ++v)
        if (bnb.best_mask >> v & 1u) res.one_optimal_cover.push_back(v);

    if (enumerate_all) {
        std::vector<std::uint32_t> all;
        const std::uint32_t limit = std::uint32_t{1} << n;
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            int size = std::popcount(mask);
            if (size > res.optimum_size || !mask_is_cover(nbr, n, mask)) continue;
            if (size < res.optimum_size)
                throw std::logic_error("exact_min_vc: enumeration beat branch and bound");
            all.push_back(mask);
        }
        if (all.empty()) throw std::logic_error("exact_min_vc: no cover of optimum size");
        res.all_minimum_covers = std::move(all);
    }
    return res;
}

bool is_cover(const Graph& g, const std::vector<char>& in_cover) {
    for (auto [u, v] : g.edges())
        if (!in_cover[u] && !in_cover[v]) return false;
    return true;
}

DefinitionScores recompute_scores(const Graph& g, const std::vector<char>& in_cover) {
    DefinitionScores out;
    out.score.assign(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        const bool cu = in_cover[u], cv = in_cover[v];
        if (!cu && !cv) { // uncovered: contributes to both gains
            ++out.uncovered;
            ++out.score[u];
            ++out.score[v];
        } else if (cu && !cv) { // covered by u alone: u's loss
            ++out.score[u];
        } else if (!cu && cv) {
            ++out.score[v];
        }
    }
    return out;
}

namespace {

struct NaiveState {
    const Graph& g;
    std::vector<int> gain;
    std::vector<char> in_cover;
    std::int64_t uncovered;
    NaiveCover out;

    explicit NaiveState(const Graph& g_)
        : g(g_), gain(g_.vertex_count()), in_cover(g_.vertex_count(), 0),
          uncovered(g_.edge_count()) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) gain[v] = g.degree(v);
        out.in_cover.assign(g.vertex_count(), 0);
    }

    void add(VertexId v) {
        uncovered -= gain[v];
        in_cover[v] = 1;
        out.in_cover[v] = 1;
        out.order.push_back(v);
        for (VertexId w : g.neighbors(v))
            if (!in_cover[w]) --gain[w];
    }

    // Lowest-id vertex among those attaining the scanned extreme.
    VertexId pick(bool want_min, Rng& rng, bool deterministic) const {
        const VertexId n = g.vertex_count();
        int best = want_min ? std::numeric_limits<int>::max() : 0;
        VertexId first = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (in_cover[v] || gain[v] <= 0) continue;
            if (want_min ? gain[v] < best : gain[v] > best) {
                best = gain[v];
                first = v;
            }
        }
        if (first < 0)
            throw std::logic_error("naive constructor: uncovered edges but no positive gain");
        if (deterministic) return first;
        std::vector<VertexId> ties;
        for (VertexId v = 0; v < n; ++v)
            if (!in_cover[v] && gain[v] == best) ties.push_back(v);
        return ties[rng.bounded(static_cast<std::uint32_t>(ties.size()))];
    }
};

} // namespace

NaiveCover naive_min_gain(const Graph& g, Rng& rng, bool deterministic) {
    NaiveState st(g);
    while (st.uncovered > 0) {
        VertexId v = st.pick(/*want_min=*/true, rng, deterministic);
        for (VertexId w : g.neighbors(v)) // v itself stays outside the cover
            if (!st.in_cover[w]) st.add(w);
    }
    return std::move(st.out);
}

NaiveCover naive_max_gain(const Graph& g, Rng& rng, bool deterministic) {
    NaiveState st(g);
    while (st.uncovered > 0) st.add(st.pick(/*want_min=*/false, rng, deterministic));
    return std::move(st.out);
}

} // namespace lincom::oracle
