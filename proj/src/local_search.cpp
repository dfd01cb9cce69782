#include "local_search.hpp"

#include <chrono>

#include "solver_state.hpp"

namespace lincom {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

} // namespace

VertexId choose_add_endpoint(const SolverState& st, VertexId u, VertexId v) {
    int gu = st.partitions().score(u), gv = st.partitions().score(v);
    if (gu != gv) return gu > gv ? u : v;
    if (st.age_stamp(u) != st.age_stamp(v)) return st.age_stamp(u) < st.age_stamp(v) ? u : v;
    return u; // edge endpoints arrive lower id first
}

SolveOutcome solve(const Graph& g, const SolveConfig& config) {
    const auto t0 = Clock::now();
    SolverState st(g, config.seed);
    SolveOutcome out;

    auto record_best = [&] {
        out.best_cover = st.cover_vertices();
        out.best_size = st.cover_size();
    };

    auto init = run_init_vc(st, config.deterministic_ties);
    out.init_counters = st.counters();
    record_best();
    if (init.optimal_guaranteed) {
        out.optimal_guaranteed = true;
        out.counters = st.counters();
        out.elapsed_seconds = seconds_since(t0);
        return out;
    }

    st.begin_local_search();
    auto& parts = st.partitions();
    while (true) {
        if (config.max_steps && st.step() >= *config.max_steps) break;
        if ((st.step() & 1023) == 0 && seconds_since(t0) >= config.cutoff_seconds) break;

        if (st.covered()) {
            if (st.cover_size() < out.best_size) record_best();
            if (parts.removable_count() == 0) break; // cover of fixed vertices only
            st.remove_vertex(parts.random_min_loss_vertex(st.rng(), config.deterministic_ties));
        }
        if (parts.removable_count() > 0)
            st.remove_vertex(parts.random_min_loss_vertex(st.rng(), config.deterministic_ties));
        if (st.uncovered_count() > 0) {
            auto [u, v] = g.edge(st.sample_uncovered_edge());
            st.add_vertex(choose_add_endpoint(st, u, v));
        }
        st.advance_step();
        if (config.self_check_every > 0 && st.step() % config.self_check_every == 0)
            st.full_consistency_check();
    }
    // A budget bound may cut the loop between an improving addition and the
    // top-of-loop record; catch it here.
    if (st.covered() && st.cover_size() < out.best_size) record_best();

    out.steps = st.step();
    out.counters = st.counters();
    out.elapsed_seconds = seconds_since(t0);
    if (out.elapsed_seconds > 0)
        out.steps_per_ms = static_cast<double>(out.steps) / (out.elapsed_seconds * 1000.0);
    return out;
}

} // namespace lincom
