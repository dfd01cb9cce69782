#include "solver_state.hpp"

#include <stdexcept>
#include <string>

#include "oracle.hpp"

namespace lincom {

SolverState::SolverState(const Graph& g, std::uint64_t seed)
    : g_(g), rng_(seed), fixed_(g.vertex_count(), 0), age_stamp_(g.vertex_count(), 0),
      uncov_pos_(g.edge_count(), -1) {
    std::vector<int> degrees(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
    parts_.init_from_scores(degrees, &counters_);
    uncov_.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) uncov_insert(e);
}

EdgeId SolverState::sample_uncovered_edge() {
    if (uncov_.empty()) throw std::logic_error("sample_uncovered_edge on a full cover");
    return uncov_[rng_.bounded(static_cast<std::uint32_t>(uncov_.size()))];
}

void SolverState::uncov_insert(EdgeId e) {
    uncov_pos_[e] = static_cast<EdgeId>(uncov_.size());
    uncov_.push_back(e);
}

void SolverState::uncov_remove(EdgeId e) {
    EdgeId at = uncov_pos_[e];
    if (at < 0) throw std::logic_error("uncovered-set remove of a covered edge");
    EdgeId last = uncov_.back();
    uncov_[at] = last;
    uncov_pos_[last] = at;
    uncov_.pop_back();
    uncov_pos_[e] = -1;
}

void SolverState::add_vertex(VertexId v) {
    parts_.place_into_cover(v);
    age_stamp_[v] = step_;
    auto nbs = g_.neighbors(v);
    auto incs = g_.incident_edges(v);
    for (std::size_t i = 0; i < nbs.size(); ++i) {
        ++counters_.neighbor_visits;
        VertexId w = nbs[i];
        if (parts_.in_cover(w)) {
            // edge (v,w) gains a second cover vertex
            if (parts_.parked(w)) parts_.adjust_parked_score(w, -1);
            else parts_.loss_decrement(w);
        } else {
            // edge (v,w) was uncovered and v now covers it
            parts_.gain_decrement(w);
            uncov_remove(incs[i]);
        }
    }
}

void SolverState::remove_vertex(VertexId v) {
    if (fixed_[v]) throw std::logic_error("remove_vertex on a fixed vertex");
    parts_.place_out_of_cover(v);
    age_stamp_[v] = step_;
    auto nbs = g_.neighbors(v);
    auto incs = g_.incident_edges(v);
    for (std::size_t i = 0; i < nbs.size(); ++i) {
        ++counters_.neighbor_visits;
        VertexId w = nbs[i];
        if (parts_.in_cover(w)) {
            // w is now the sole cover vertex of edge (v,w)
            if (parts_.parked(w)) parts_.adjust_parked_score(w, 1);
            else parts_.loss_increment(w);
        } else {
            // edge (v,w) is no longer covered by anyone
            parts_.gain_increment(w);
            uncov_insert(incs[i]);
        }
    }
}

void SolverState::mark_fixed(VertexId v) {
    if (!parts_.in_cover(v)) throw std::logic_error("mark_fixed on a non-cover vertex");
    if (parked_phase_) throw std::logic_error("mark_fixed after local search began");
    if (!fixed_[v]) {
        fixed_[v] = 1;
        ++fixed_count_;
    }
}

void SolverState::begin_local_search() {
    parts_.park(fixed_);
    parked_phase_ = true;
}

void SolverState::advance_step() {
    ++step_;
    ++counters_.steps;
}

std::vector<VertexId> SolverState::cover_vertices() const {
    std::vector<VertexId> out;
    out.reserve(parts_.cover_size());
    for (VertexId v = 0; v < g_.vertex_count(); ++v)
        if (parts_.in_cover(v)) out.push_back(v);
    return out;
}

std::vector<char> SolverState::cover_flags() const {
    std::vector<char> f(g_.vertex_count(), 0);
    for (VertexId v = 0; v < g_.vertex_count(); ++v) f[v] = parts_.in_cover(v) ? 1 : 0;
    return f;
}

void SolverState::full_consistency_check() const {
    auto expect = [](bool ok, const std::string& what) {
        if (!ok) throw std::logic_error("solver state inconsistent: " + what);
    };
    parts_.check_consistency();
    auto truth = oracle::recompute_scores(g_, cover_flags());
    for (VertexId v = 0; v < g_.vertex_count(); ++v)
        expect(parts_.score(v) == truth.score[v],
               "score of vertex " + std::to_string(v) + " is " +
                   std::to_string(parts_.score(v)) + ", definition gives " +
                   std::to_string(truth.score[v]));
    expect(uncovered_count() == truth.uncovered, "uncovered-edge count drifted");
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
        auto [u, v] = g_.edge(e);
        bool should = !parts_.in_cover(u) && !parts_.in_cover(v);
        expect(edge_uncovered(e) == should,
               "uncovered-set membership wrong for edge " + std::to_string(e));
        if (should)
            expect(uncov_[uncov_pos_[e]] == e, "uncovered-set index broken for edge " +
                                                   std::to_string(e));
    }
    for (VertexId v = 0; v < g_.vertex_count(); ++v)
        if (fixed_[v]) expect(parts_.in_cover(v), "fixed vertex left the cover");
}

} // namespace lincom
