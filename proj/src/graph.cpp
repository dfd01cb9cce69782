#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rng.hpp"

namespace lincom {

Graph Graph::from_edges(std::span<const std::pair<VertexId, VertexId>> raw_edges,
                        VertexId vertex_count) {
    if (vertex_count < 0)
        throw GraphBuildError("vertex count must be non-negative");

    Graph g;
    g.n_ = vertex_count;

    // Normalize: drop self-loops, orient u < v.
    std::vector<std::pair<VertexId, VertexId>> norm;
    norm.reserve(raw_edges.size());
    for (auto [u, v] : raw_edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw GraphBuildError("edge endpoint " + std::to_string(std::max(u, v)) +
                                  " out of range [0, " + std::to_string(vertex_count) + ")");
        if (u == v) {
            ++g.dropped_;
            continue;
        }
        if (u > v) std::swap(u, v);
        norm.emplace_back(u, v);
    }

    // Lexicographic sort via two stable counting passes (second key, then
    // first key), O(V + E); then collapse duplicates.
    const auto m = norm.size();
    std::vector<std::pair<VertexId, VertexId>> tmp(m);
    std::vector<EdgeId> count(static_cast<std::size_t>(vertex_count) + 1, 0);
    for (const auto& e : norm) ++count[e.second];
    std::partial_sum(count.begin(), count.end(), count.begin());
    for (auto it = norm.rbegin(); it != norm.rend(); ++it) tmp[--count[it->second]] = *it;

    std::fill(count.begin(), count.end(), 0);
    for (const auto& e : tmp) ++count[e.first];
    std::partial_sum(count.begin(), count.end(), count.begin());
    for (auto it = tmp.rbegin(); it != tmp.rend(); ++it) norm[--count[it->first]] = *it;

    g.edges_.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!g.edges_.empty() && g.edges_.back() == norm[i]) {
            ++g.dropped_;
            continue;
        }
        g.edges_.push_back(norm[i]);
    }
    g.edges_.shrink_to_fit();

    // CSR fill.
    g.offsets_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
    for (auto [u, v] : g.edges_) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

    g.adj_.resize(2 * g.edges_.size());
    g.inc_.resize(2 * g.edges_.size());
    std::vector<EdgeId> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges_.size()); ++e) {
        auto [u, v] = g.edges_[e];
        g.adj_[cursor[u]] = v;
        g.inc_[cursor[u]++] = e;
        g.adj_[cursor[v]] = u;
        g.inc_[cursor[v]++] = e;
    }
    // Edges were emitted in lexicographic order, so each vertex's neighbor
    // list is already sorted ascending.

    for (VertexId v = 0; v < vertex_count; ++v)
        g.max_degree_ = std::max(g.max_degree_, g.degree(v));
    return g;
}

Graph Graph::random(VertexId n, double edge_prob, std::uint64_t seed) {
    if (n < 0) throw GraphBuildError("vertex count must be non-negative");
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw GraphBuildError("edge probability must lie in [0, 1]");

    std::vector<std::pair<VertexId, VertexId>> edges;
    if (n >= 2 && edge_prob > 0.0) {
        Rng rng(seed);
        const double total_pairs = 0.5 * static_cast<double>(n) * (n - 1);
        edges.reserve(static_cast<std::size_t>(edge_prob * total_pairs * 1.1) + 16);
        if (edge_prob >= 1.0) {
            for (VertexId u = 0; u < n; ++u)
                for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        } else {
            // Walk the strictly-upper-triangular pair sequence with geometric
            // jumps: skip ~ floor(log(U)/log(1-p)) pairs between edges.
            const double log1mp = std::log1p(-edge_prob);
            std::int64_t idx = -1;
            const std::int64_t last = static_cast<std::int64_t>(total_pairs);
            while (true) {
                double u01 = rng.next_double();
                // next_double() < 1, so log(1-u01) is finite; u01 == 0 gives skip 0.
                std::int64_t skip = static_cast<std::int64_t>(std::log1p(-u01) / log1mp);
                idx += 1 + skip;
                if (idx >= last) break;
                // Invert pair index -> (u, v): row u owns n-1-u pairs.
                std::int64_t rem = idx;
                VertexId u = 0;
                // Closed-form row via quadratic formula, fixed up for rounding.
                double nd = static_cast<double>(n);
                double disc = (2 * nd - 1) * (2 * nd - 1) - 8.0 * static_cast<double>(rem);
                u = static_cast<VertexId>((2 * nd - 1 - std::sqrt(disc)) / 2.0);
                auto row_start = [n](VertexId r) {
                    return static_cast<std::int64_t>(r) * (2 * n - r - 1) / 2;
                };
                while (u > 0 && row_start(u) > rem) --u;
                while (row_start(u + 1) <= rem) ++u;
                VertexId v = static_cast<VertexId>(u + 1 + (rem - row_start(u)));
                edges.emplace_back(u, v);
            }
        }
    }
    return from_edges(edges, n);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u == v) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

} // namespace lincom
