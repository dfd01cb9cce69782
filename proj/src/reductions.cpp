#include "reductions.hpp"

#include <stdexcept>

namespace lincom {
namespace {

void add_cover_vertex(SolverState& st, VertexId v, bool mark_fixed) {
    st.add_vertex(v);
    if (mark_fixed) st.mark_fixed(v);
}

// The two out-of-cover neighbors of a gain-2 vertex (the endpoints of its two
// uncovered edges).
std::pair<VertexId, VertexId> uncovered_pair(SolverState& st, VertexId v) {
    const auto& parts = st.partitions();
    VertexId n1 = -1, n2 = -1;
    for (VertexId w : st.graph().neighbors(v)) {
        ++st.counters().neighbor_visits;
        if (parts.in_cover(w)) continue;
        if (n1 < 0) n1 = w;
        else if (n2 < 0) n2 = w;
        else throw std::logic_error("gain-2 vertex with three uncovered neighbors");
    }
    if (n2 < 0) throw std::logic_error("gain-2 vertex with fewer than two uncovered neighbors");
    return {n1, n2};
}

} // namespace

int apply_triangle_rule_to_fixpoint(SolverState& st, RuleMemo& memo, bool mark_fixed) {
    auto& parts = st.partitions();
    int added = 0;
    bool applied = true;
    while (applied) {
        applied = false;
        auto region = parts.gain_region(2);
        for (std::size_t idx = 0; idx < region.size(); ++idx) {
            VertexId v = region[idx];
            if (memo.triangle_checked[v]) continue;
            auto [n1, n2] = uncovered_pair(st, v);
            if (st.graph().has_edge(n1, n2)) {
                add_cover_vertex(st, n1, mark_fixed);
                add_cover_vertex(st, n2, mark_fixed);
                added += 2;
                ++st.counters().rule_triangle;
                applied = true;
                break; // region shuffled; restart the scan
            }
            memo.triangle_checked[v] = 1;
        }
    }
    return added;
}

int apply_quadrilateral_rule_to_fixpoint(SolverState& st, RuleMemo& memo, bool mark_fixed) {
    auto& parts = st.partitions();
    const Graph& g = st.graph();
    int added = 0;
    bool applied = true;
    while (applied) {
        applied = false;
        auto region = parts.gain_region(2);
        for (std::size_t idx = 0; idx < region.size(); ++idx) {
            VertexId v = region[idx];
            if (memo.quadrilateral_checked[v]) continue;
            auto [n1, n2] = uncovered_pair(st, v);
            if (g.has_edge(n1, n2)) { // triangle-shaped; never a quadrilateral
                memo.quadrilateral_checked[v] = 1;
                continue;
            }
            // A partner shares the whole pair, so it is adjacent to n1: scan
            // n1's neighbors for an out-of-cover gain-2 vertex also adjacent
            // to n2 (gain 2 then forces its pair to be exactly {n1, n2}).
            VertexId partner = -1;
            for (VertexId w : g.neighbors(n1)) {
                ++st.counters().neighbor_visits;
                if (w != v && !parts.in_cover(w) && parts.score(w) == 2 && g.has_edge(w, n2)) {
                    partner = w;
                    break;
                }
            }
            if (partner >= 0) {
                add_cover_vertex(st, n1, mark_fixed);
                add_cover_vertex(st, n2, mark_fixed);
                added += 2;
                ++st.counters().rule_quadrilateral;
                applied = true;
                break; // restart
            }
            memo.quadrilateral_checked[v] = 1;
        }
    }
    return added;
}

int apply_degree1_rule_to_fixpoint(SolverState& st, bool mark_fixed) {
    auto& parts = st.partitions();
    int added = 0;
    while (true) {
        auto region = parts.gain_region(1);
        if (region.empty()) break;
        VertexId v = region.front(); // lowest slot; every member is applicable
        VertexId u = -1;
        for (VertexId w : st.graph().neighbors(v)) {
            ++st.counters().neighbor_visits;
            if (!parts.in_cover(w)) { u = w; break; }
        }
        if (u < 0) throw std::logic_error("gain-1 vertex with no uncovered edge");
        add_cover_vertex(st, u, mark_fixed);
        ++added;
        ++st.counters().rule_degree1;
    }
    return added;
}

} // namespace lincom
