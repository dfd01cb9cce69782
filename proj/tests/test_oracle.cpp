#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <vector>

#include "graph.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "test_util.hpp"

using namespace lincom;
namespace tu = lincom::testutil;

namespace {

// Reference optimum by raw subset sweep, independent of the branch and bound.
int sweep_optimum(const Graph& g) {
    const int n = g.vertex_count();
    int best = n;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (!(mask >> u & 1u) && !(mask >> v & 1u)) { ok = false; break; }
        if (ok) best = std::min(best, std::popcount(mask));
    }
    return best;
}

std::vector<char> cover_flags(const std::vector<VertexId>& cover, int n) {
    std::vector<char> f(n, 0);
    for (VertexId v : cover) f[v] = 1;
    return f;
}

} // namespace

TEST_CASE("K3 optimum and all minimum covers") {
    Graph g = tu::make_complete(3);
    auto res = oracle::exact_min_vc(g, /*enumerate_all=*/true);
    CHECK(res.optimum_size == 2);
    REQUIRE(res.all_minimum_covers.has_value());
    auto covers = *res.all_minimum_covers;
    std::sort(covers.begin(), covers.end());
    CHECK(covers == std::vector<std::uint32_t>{0b011, 0b101, 0b110});
    CHECK(oracle::is_cover(g, cover_flags(res.one_optimal_cover, 3)));
}

TEST_CASE("star K1,4 has the unique cover {center}") {
    Graph g = tu::make_star(4);
    auto res = oracle::exact_min_vc(g, true);
    CHECK(res.optimum_size == 1);
    REQUIRE(res.all_minimum_covers.has_value());
    CHECK(*res.all_minimum_covers == std::vector<std::uint32_t>{0b00001});
}

TEST_CASE("Petersen optimum is 6") {
    auto res = oracle::exact_min_vc(tu::make_petersen());
    CHECK(res.optimum_size == 6);
    CHECK(static_cast<int>(res.one_optimal_cover.size()) == 6);
}

TEST_CASE("paths and cycles match the closed forms") {
    // path P_n needs floor(n/2); cycle C_n needs ceil(n/2)
    for (int n = 2; n <= 12; ++n) {
        CHECK(oracle::exact_min_vc(tu::make_path(n)).optimum_size == n / 2);
        if (n >= 3) CHECK(oracle::exact_min_vc(tu::make_cycle(n)).optimum_size == (n + 1) / 2);
    }
}

TEST_CASE("branch and bound agrees with subset sweep on random graphs") {
    for (int i = 0; i < 60; ++i) {
        int n = 4 + i % 9; // 4..12
        double p = 0.1 + 0.1 * (i % 5);
        Graph g = Graph::random(n, p, 1000 + i);
        auto res = oracle::exact_min_vc(g, true);
        CHECK(res.optimum_size == sweep_optimum(g));
        for (std::uint32_t mask : *res.all_minimum_covers)
            CHECK(std::popcount(mask) == res.optimum_size);
        CHECK(static_cast<int>(res.one_optimal_cover.size()) == res.optimum_size);
        CHECK(oracle::is_cover(g, cover_flags(res.one_optimal_cover, n)));
    }
}

TEST_CASE("size limits are enforced") {
    Graph g = Graph::random(27, 0.1, 3);
    CHECK_THROWS_AS(oracle::exact_min_vc(g), std::invalid_argument);
    Graph h = Graph::random(15, 0.1, 3);
    CHECK_THROWS_AS(oracle::exact_min_vc(h, true), std::invalid_argument);
    CHECK_NOTHROW(oracle::exact_min_vc(h));
}

TEST_CASE("scores by definition on K3") {
    Graph g = tu::make_complete(3);
    std::vector<char> c{1, 0, 0};
    auto s = oracle::recompute_scores(g, c);
    CHECK(s.score[0] == 2); // loss: both covered edges rely on vertex 0 alone
    CHECK(s.score[1] == 1); // gain: the one uncovered edge (1,2)
    CHECK(s.score[2] == 1);
    CHECK(s.uncovered == 1);
}

TEST_CASE("scores by definition at the boundaries") {
    Graph g = Graph::random(20, 0.2, 11);
    std::vector<char> none(20, 0), all(20, 1);
    auto s0 = oracle::recompute_scores(g, none);
    CHECK(s0.uncovered == g.edge_count());
    for (VertexId v = 0; v < 20; ++v) CHECK(s0.score[v] == g.degree(v)); // gain = degree
    auto s1 = oracle::recompute_scores(g, all);
    CHECK(s1.uncovered == 0);
    for (VertexId v = 0; v < 20; ++v) CHECK(s1.score[v] == 0); // every edge doubly covered
}

TEST_CASE("naive constructors on the contract instances") {
    Rng rng(1);
    // star: min-gain picks a leaf and adds the center; max-gain picks the center
    Graph star = tu::make_star(3);
    auto mn = oracle::naive_min_gain(star, rng, true);
    CHECK(mn.order == std::vector<VertexId>{0});
    auto mx = oracle::naive_max_gain(star, rng, true);
    CHECK(mx.order == std::vector<VertexId>{0});
    // K3: both build a 2-cover
    Graph k3 = tu::make_complete(3);
    CHECK(oracle::naive_min_gain(k3, rng, true).order.size() == 2);
    CHECK(oracle::naive_max_gain(k3, rng, true).order.size() == 2);
    // single edge
    Graph e1 = Graph::from_edges(tu::Edges{{0, 1}}, 2);
    CHECK(oracle::naive_min_gain(e1, rng, true).order.size() == 1);
    CHECK(oracle::naive_max_gain(e1, rng, true).order.size() == 1);
    // empty graph
    Graph e0 = Graph::from_edges(tu::Edges{}, 4);
    CHECK(oracle::naive_min_gain(e0, rng, true).order.empty());
    CHECK(oracle::naive_max_gain(e0, rng, true).order.empty());
}

TEST_CASE("naive constructors always emit valid covers") {
    for (int i = 0; i < 40; ++i) {
        Graph g = Graph::random(8 + 7 * (i % 10), 0.05 + 0.04 * (i % 6), 500 + i);
        for (bool det : {true, false}) {
            Rng rng(77 + i);
            auto a = oracle::naive_min_gain(g, rng, det);
            CHECK(oracle::is_cover(g, a.in_cover));
            auto b = oracle::naive_max_gain(g, rng, det);
            CHECK(oracle::is_cover(g, b.in_cover));
        }
    }
}

TEST_CASE("deterministic naive runs are reproducible") {
    Graph g = Graph::random(60, 0.1, 21);
    Rng r1(5), r2(9); // rng must be irrelevant in deterministic mode
    CHECK(oracle::naive_min_gain(g, r1, true).order == oracle::naive_min_gain(g, r2, true).order);
    CHECK(oracle::naive_max_gain(g, r1, true).order == oracle::naive_max_gain(g, r2, true).order);
}
