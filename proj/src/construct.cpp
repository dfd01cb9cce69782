#include "construct.hpp"

#include <stdexcept>

#include "oracle.hpp"
#include "reductions.hpp"

namespace lincom {
namespace {

CoverResult finish(SolverState& st, bool optimal_guaranteed, int k_final) {
    if (st.uncovered_count() != 0)
        throw std::logic_error("constructor finished with uncovered edges");
    // Cheap O(|E|) guard on the hottest bookkeeping path: recount from scratch.
    if (oracle::recompute_scores(st.graph(), st.cover_flags()).uncovered != 0)
        throw std::logic_error("uncovered-edge recount disagrees at construction end");
    CoverResult out;
    out.cover = st.cover_vertices();
    out.in_cover = st.cover_flags();
    out.fixed = st.fixed_flags();
    out.optimal_guaranteed = optimal_guaranteed;
    out.counters = st.counters();
    out.k_final = k_final;
    return out;
}

} // namespace

int eliminate_redundant(SolverState& st) {
    auto& parts = st.partitions();
    int removed = 0;
    while (true) {
        // Always re-take the current lowest-slot removable member: removals
        // shuffle the region, and neighbors' loss bumps can move members.
        auto region = parts.loss_region(0);
        VertexId pick = -1;
        for (VertexId v : region)
            if (!st.fixed(v)) { pick = v; break; }
        if (pick < 0) break;
        st.remove_vertex(pick); // loss 0: removal uncovers nothing
        ++removed;
        ++st.counters().redundant_removed;
    }
    return removed;
}

InitOutcome run_init_vc(SolverState& st, bool deterministic) {
    RuleMemo memo(st.graph().vertex_count());
    auto& parts = st.partitions();
    bool max_gain_used = false;
    while (st.uncovered_count() > 0) {
        int applied = apply_triangle_rule_to_fixpoint(st, memo, !max_gain_used);
        applied += apply_quadrilateral_rule_to_fixpoint(st, memo, !max_gain_used);
        applied += apply_degree1_rule_to_fixpoint(st, !max_gain_used);
        if (applied > 0) continue;
        if (st.uncovered_count() == 0) break;
        max_gain_used = true;
        int k = parts.descend_max_gain_cursor();
        if (k < 1) throw std::logic_error("max gain 0 with uncovered edges");
        st.add_vertex(parts.pick_in_gain_region(k, st.rng(), deterministic));
        ++st.counters().max_gain_picks;
    }
    eliminate_redundant(st);
    return {!max_gain_used};
}

CoverResult init_vc(const Graph& g, std::uint64_t seed, bool deterministic) {
    SolverState st(g, seed);
    auto outcome = run_init_vc(st, deterministic);
    return finish(st, outcome.optimal_guaranteed, -1);
}

CoverResult min_gain_construct_vc(const Graph& g, std::uint64_t seed, bool deterministic) {
    SolverState st(g, seed);
    auto& parts = st.partitions();
    while (st.uncovered_count() > 0) {
        int k = parts.min_positive_gain_partition();
        VertexId min_g_v = parts.pick_in_gain_region(k, st.rng(), deterministic);
        // min_g_v itself stays outside: its whole uncovered neighborhood joins.
        for (VertexId w : g.neighbors(min_g_v)) {
            ++st.counters().neighbor_visits;
            if (parts.in_cover(w)) continue;
            st.add_vertex(w);
        }
    }
    return finish(st, false, -1);
}

CoverResult max_gain_construct_vc(const Graph& g, std::uint64_t seed, bool deterministic) {
    SolverState st(g, seed);
    auto& parts = st.partitions();
    parts.reset_max_gain_cursor();
    while (st.uncovered_count() > 0) {
        int k = parts.descend_max_gain_cursor();
        if (k < 1) throw std::logic_error("max gain 0 with uncovered edges");
        st.add_vertex(parts.pick_in_gain_region(k, st.rng(), deterministic));
    }
    return finish(st, false, parts.max_gain_cursor());
}

} // namespace lincom
