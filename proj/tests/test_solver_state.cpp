#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "solver_state.hpp"
#include "test_util.hpp"

using namespace lincom;
using namespace lincom::testutil;

TEST_CASE("fresh state starts with every edge uncovered") {
    Graph g = make_cycle(6);
    SolverState st(g, 1);
    CHECK(st.uncovered_count() == 6);
    CHECK(!st.covered());
    CHECK(st.cover_size() == 0);
    st.full_consistency_check();
}

TEST_CASE("adding a vertex covers exactly its incident edges") {
    Graph g = make_star(5);
    SolverState st(g, 1);
    st.add_vertex(0);
    CHECK(st.covered());
    st.remove_vertex(0);
    CHECK(st.uncovered_count() == 5);
    st.full_consistency_check();
}

TEST_CASE("age stamps record the step of the latest addition") {
    Graph g = make_path(3);
    SolverState st(g, 1);
    st.add_vertex(1);
    CHECK(st.age_stamp(1) == 0);
    st.begin_local_search();
    st.advance_step();
    st.advance_step();
    st.remove_vertex(1);
    st.add_vertex(1);
    CHECK(st.age_stamp(1) == 2);
}

TEST_CASE("fixed vertices refuse removal and parking is final") {
    Graph g = make_complete(4);
    SolverState st(g, 1);
    st.add_vertex(0);
    st.mark_fixed(0);
    CHECK_THROWS_AS(st.remove_vertex(0), std::logic_error);
    st.add_vertex(1);
    st.begin_local_search();
    CHECK_THROWS_AS(st.mark_fixed(1), std::logic_error);
}

TEST_CASE("sampled edges are always currently uncovered") {
    Graph g = Graph::random(50, 0.1, 3);
    SolverState st(g, 3);
    st.add_vertex(7);
    st.add_vertex(19);
    for (int i = 0; i < 200; ++i) {
        EdgeId e = st.sample_uncovered_edge();
        auto [u, v] = g.edge(e);
        CHECK(!st.partitions().in_cover(u));
        CHECK(!st.partitions().in_cover(v));
    }
}

TEST_CASE("every uncovered edge is reachable by sampling") {
    Graph g = make_cycle(8);
    SolverState st(g, 5);
    st.add_vertex(0); // leaves 6 uncovered edges
    std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);
    for (int i = 0; i < 500; ++i) seen[st.sample_uncovered_edge()] = 1;
    int distinct = 0;
    for (char c : seen) distinct += c;
    CHECK(distinct == 6);
}

TEST_CASE("a long random mutation storm never drifts from the definitions") {
    // scaled-down rehearsal of the million-flip consistency run
    Graph g = Graph::random(2000, 0.005, 99);
    SolverState st(g, 99);
    Rng rng(1234);
    std::int64_t flips = 50000;
    for (std::int64_t i = 1; i <= flips; ++i) {
        VertexId v = static_cast<VertexId>(rng.bounded(2000));
        if (st.partitions().in_cover(v)) st.remove_vertex(v);
        else st.add_vertex(v);
        if (i % 10000 == 0) st.full_consistency_check();
    }
    st.full_consistency_check();
    auto scores = oracle::recompute_scores(g, st.cover_flags());
    CHECK(scores.uncovered == st.uncovered_count());
}

TEST_CASE("parked fixed vertices stay out of the removable pool") {
    Graph g = make_star(4);
    SolverState st(g, 1);
    st.add_vertex(0);
    st.mark_fixed(0);
    st.add_vertex(1);
    st.begin_local_search();
    auto& parts = st.partitions();
    CHECK(parts.cover_size() == 2);
    CHECK(parts.removable_count() == 1);
    Rng rng(1);
    CHECK(parts.random_min_loss_vertex(rng, true) == 1);
    st.remove_vertex(1);
    CHECK(parts.removable_count() == 0);
    CHECK_THROWS_AS(parts.random_min_loss_vertex(rng, true), std::runtime_error);
    st.full_consistency_check();
}

TEST_CASE("parked vertex scores keep tracking their true loss") {
    Graph g = make_star(3);
    SolverState st(g, 1);
    st.add_vertex(0);
    st.mark_fixed(0);
    st.begin_local_search();
    // adding a leaf shares one of the hub's edges, dropping its loss
    st.add_vertex(1);
    auto scores = oracle::recompute_scores(g, st.cover_flags());
    CHECK(st.partitions().score(0) == scores.score[0]);
    st.remove_vertex(1);
    auto scores2 = oracle::recompute_scores(g, st.cover_flags());
    CHECK(st.partitions().score(0) == scores2.score[0]);
    st.full_consistency_check();
}
