#ifndef LINCOM_GRAPH_HPP
#define LINCOM_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lincom {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct GraphBuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph. Adjacency is stored contiguously per
// vertex (CSR), sorted, with a parallel array of incident edge ids so that
// covering/uncovering an edge during a neighbor scan is O(1). Self-loops and
// duplicate edges from the input are dropped at build time and counted.
class Graph {
public:
    Graph() = default;

    // raw edges are 0-based pairs; ids must be < vertex_count.
    static Graph from_edges(std::span<const std::pair<VertexId, VertexId>> raw_edges,
                            VertexId vertex_count);

    // Erdos-Renyi G(n, p), sampled with geometric skips so the cost is
    // O(n + |E|), deterministic for a given seed.
    static Graph random(VertexId n, double edge_prob, std::uint64_t seed);

    VertexId vertex_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

    VertexId degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
    }
    std::span<const EdgeId> incident_edges(VertexId v) const {
        return {inc_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
    }

    // Edge endpoints, lower id first.
    std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[e]; }
    std::span<const std::pair<VertexId, VertexId>> edges() const { return edges_; }

    bool has_edge(VertexId u, VertexId v) const;

    VertexId max_degree() const { return max_degree_; }
    double avg_degree() const {
        return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(edges_.size()) / n_;
    }

    // Self-loops plus duplicate pairs dropped while building.
    std::int64_t dropped_input_edges() const { return dropped_; }

private:
    VertexId n_ = 0;
    VertexId max_degree_ = 0;
    std::int64_t dropped_ = 0;
    std::vector<EdgeId> offsets_;                      // n + 1
    std::vector<VertexId> adj_;                        // 2|E|, sorted per vertex
    std::vector<EdgeId> inc_;                          // 2|E|, edge id parallel to adj_
    std::vector<std::pair<VertexId, VertexId>> edges_; // |E|, u < v, lexicographic
};

} // namespace lincom

#endif
