#ifndef LINCOM_TEST_UTIL_HPP
#define LINCOM_TEST_UTIL_HPP

#include <utility>
#include <vector>

#include "graph.hpp"

namespace lincom::testutil {

using Edges = std::vector<std::pair<VertexId, VertexId>>;

inline Graph make_path(VertexId n) {
    Edges e;
    for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(e, n);
}

inline Graph make_cycle(VertexId n) {
    Edges e;
    for (VertexId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(e, n);
}

// Center is vertex 0, leaves 1..n_leaves.
inline Graph make_star(VertexId n_leaves) {
    Edges e;
    for (VertexId i = 1; i <= n_leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(e, n_leaves + 1);
}

inline Graph make_complete(VertexId n) {
    Edges e;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(e, n);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph make_petersen() {
    Edges e;
    for (VertexId i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(e, 10);
}

} // namespace lincom::testutil

#endif
