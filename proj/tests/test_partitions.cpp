#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <vector>

#include "alt_partitions.hpp"
#include "counters.hpp"
#include "rng.hpp"

using namespace lincom;

namespace {

struct Fixture {
    Counters counters;
    AltPartitions p;
    explicit Fixture(std::vector<int> scores) { p.init_from_scores(scores, &counters); }
};

std::vector<VertexId> region_vec(std::span<const VertexId> r) { return {r.begin(), r.end()}; }

} // namespace

TEST_CASE("init sorts vertices by nondecreasing score") {
    Fixture f({3, 1, 2, 1});
    CHECK(region_vec(f.p.gain_region(1)) == std::vector<VertexId>{1, 3});
    CHECK(region_vec(f.p.gain_region(2)) == std::vector<VertexId>{2});
    CHECK(region_vec(f.p.gain_region(3)) == std::vector<VertexId>{0});
    CHECK(f.p.gain_region(0).empty());
    for (int k = 0; k <= 3; ++k) CHECK(f.p.loss_region(k).empty());
    CHECK(f.p.max_score_bound() == 3);
    f.p.check_consistency();
}

TEST_CASE("init boundary cases") {
    Fixture empty_graph({0, 0, 0, 0});
    CHECK(region_vec(empty_graph.p.gain_region(0)) == std::vector<VertexId>{0, 1, 2, 3});
    empty_graph.p.check_consistency();

    Fixture k3({2, 2, 2});
    CHECK(region_vec(k3.p.gain_region(2)) == std::vector<VertexId>{0, 1, 2});
    k3.p.check_consistency();
}

TEST_CASE("placing into the cover swaps with the region front and shifts the pointer") {
    // Five vertices at gain 52; v0 enters the cover first so the gain-52
    // region afterwards begins with v1. Placing v3 must swap it with v1 and
    // leave v3 as the rightmost member of loss-52.
    Fixture f(std::vector<int>(5, 52));
    f.p.place_into_cover(0);
    CHECK(region_vec(f.p.gain_region(52)) == std::vector<VertexId>{1, 2, 3, 4});
    f.p.place_into_cover(3);
    auto loss = region_vec(f.p.loss_region(52));
    CHECK(loss.back() == 3);
    CHECK(loss == std::vector<VertexId>{0, 3});
    // the two swapped: v1 (old region front) now sits in v3's old slot
    auto gain = region_vec(f.p.gain_region(52));
    CHECK(gain == std::vector<VertexId>{2, 1, 4});
    CHECK(f.p.in_cover(3));
    CHECK(f.p.score(3) == 52); // loss equals the old gain
    f.p.check_consistency();
}

TEST_CASE("singleton region: self-swap empties it") {
    Fixture f({1, 2, 3});
    f.p.place_into_cover(1);
    CHECK(f.p.gain_region(2).empty());
    CHECK(region_vec(f.p.loss_region(2)) == std::vector<VertexId>{1});
    f.p.check_consistency();
}

TEST_CASE("place out is the membership inverse of place in") {
    Fixture f({2, 2, 2});
    f.p.place_into_cover(1);
    CHECK(f.p.in_cover(1));
    f.p.place_out_of_cover(1);
    CHECK_FALSE(f.p.in_cover(1));
    CHECK(f.p.score(1) == 2);
    auto g2 = region_vec(f.p.gain_region(2));
    std::sort(g2.begin(), g2.end());
    CHECK(g2 == std::vector<VertexId>{0, 1, 2});
    CHECK(f.p.loss_region(2).empty());
    f.p.check_consistency();

    // sole member of loss-0 moves to gain-0
    Fixture z({0, 1});
    z.p.place_into_cover(0);
    CHECK(region_vec(z.p.loss_region(0)) == std::vector<VertexId>{0});
    z.p.place_out_of_cover(0);
    CHECK(region_vec(z.p.gain_region(0)) == std::vector<VertexId>{0});
    z.p.check_consistency();
}

TEST_CASE("score steps relocate across one interleaved region") {
    Fixture f({2, 2, 2, 1, 1});
    // v3 at gain 1 drops to gain 0
    f.p.gain_decrement(3);
    CHECK(f.p.score(3) == 0);
    CHECK(region_vec(f.p.gain_region(0)) == std::vector<VertexId>{3});
    // cover member loss 0 -> 1 -> 0
    f.p.place_into_cover(0);
    f.p.loss_decrement(0); // 2 -> 1
    f.p.loss_decrement(0); // 1 -> 0
    CHECK(f.p.score(0) == 0);
    CHECK(region_vec(f.p.loss_region(0)) == std::vector<VertexId>{0});
    f.p.loss_increment(0);
    CHECK(f.p.score(0) == 1);
    CHECK(region_vec(f.p.loss_region(1)) == std::vector<VertexId>{0});
    // gain increment back up
    f.p.gain_increment(3);
    CHECK(f.p.score(3) == 1);
    f.p.check_consistency();
}

TEST_CASE("score under/overflow and side mismatches raise logic errors") {
    Fixture f({1, 2});
    CHECK_THROWS_AS(f.p.place_out_of_cover(0), std::logic_error);
    CHECK_THROWS_AS(f.p.loss_increment(0), std::logic_error);
    f.p.gain_decrement(0);
    CHECK_THROWS_AS(f.p.gain_decrement(0), std::logic_error); // below 0
    f.p.gain_increment(0);
    CHECK_THROWS_AS(f.p.gain_increment(0), std::logic_error); // above cap 1
    f.p.place_into_cover(0);
    CHECK_THROWS_AS(f.p.place_into_cover(0), std::logic_error);
    CHECK_THROWS_AS(f.p.gain_decrement(0), std::logic_error); // wrong side
}

TEST_CASE("each move touches a bounded number of cells") {
    Fixture f({3, 3, 3, 3, 2, 2, 1});
    auto writes_of = [&](auto&& op) {
        std::int64_t before = f.counters.cell_writes;
        op();
        return f.counters.cell_writes - before;
    };
    CHECK(writes_of([&] { f.p.place_into_cover(0); }) <= 8);
    CHECK(writes_of([&] { f.p.loss_decrement(0); }) <= 8);
    CHECK(writes_of([&] { f.p.loss_increment(0); }) <= 8);
    CHECK(writes_of([&] { f.p.place_out_of_cover(0); }) <= 8);
    CHECK(writes_of([&] { f.p.gain_decrement(4); }) <= 8);
    CHECK(writes_of([&] { f.p.gain_increment(4); }) <= 8);
}

TEST_CASE("min-loss scan returns the single candidate") {
    Fixture f({2, 2, 2, 1});
    Rng rng(4);
    f.p.place_into_cover(3);   // loss-1 = {3}
    f.p.loss_decrement(3);     // -> loss-0
    f.p.loss_increment(3);     // back to loss-1; loss-0 empty
    CHECK(f.p.random_min_loss_vertex(rng, false) == 3);
    CHECK(f.p.random_min_loss_vertex(rng, true) == 3);
}

TEST_CASE("min-loss scan is uniform over the minimum region") {
    Fixture f({2, 2, 2});
    Rng rng(99);
    f.p.place_into_cover(0);
    f.p.place_into_cover(1); // both at loss 2; loss-0, loss-1 empty
    std::map<VertexId, int> freq;
    for (int i = 0; i < 2000; ++i) ++freq[f.p.random_min_loss_vertex(rng, false)];
    CHECK(freq.size() == 2);
    CHECK(freq[0] > 800);
    CHECK(freq[1] > 800);
    // deterministic mode returns the lowest id
    CHECK(f.p.random_min_loss_vertex(rng, true) == 0);
}

TEST_CASE("min-loss requires a removable vertex") {
    Fixture f({1, 1});
    Rng rng(1);
    CHECK_THROWS_AS(f.p.random_min_loss_vertex(rng, false), std::runtime_error);
}

TEST_CASE("extremal gain scans") {
    // star K1,3 shape: center degree 3, leaves 1
    Fixture f({3, 1, 1, 1});
    CHECK(f.p.min_positive_gain_partition() == 1);
    f.p.reset_max_gain_cursor();
    CHECK(f.p.descend_max_gain_cursor() == 3);

    Fixture k3({2, 2, 2});
    CHECK(k3.p.min_positive_gain_partition() == 2);
    k3.p.reset_max_gain_cursor();
    CHECK(k3.p.descend_max_gain_cursor() == 2);

    // single remaining positive-gain level
    Fixture one({1, 1, 0});
    CHECK(one.p.min_positive_gain_partition() == 1);
}

TEST_CASE("boundary tests are counted per region probe") {
    Fixture f({1, 1, 1, 3});
    std::int64_t t0 = f.counters.boundary_tests;
    CHECK(f.p.min_positive_gain_partition() == 1); // one probe
    CHECK(f.counters.boundary_tests - t0 == 1);

    f.p.reset_max_gain_cursor();
    f.p.place_into_cover(3); // gain-3 emptied
    t0 = f.counters.boundary_tests;
    CHECK(f.p.descend_max_gain_cursor() == 1); // probes 3, 2, 1
    CHECK(f.counters.boundary_tests - t0 == 3);
    // the cursor is persistent: the next call probes only level 1
    t0 = f.counters.boundary_tests;
    CHECK(f.p.descend_max_gain_cursor() == 1);
    CHECK(f.counters.boundary_tests - t0 == 1);
}

TEST_CASE("deterministic gain pick takes the lowest vertex id") {
    Fixture f({2, 2, 2, 2});
    Rng rng(8);
    f.p.place_into_cover(0); // shuffles the region
    CHECK(f.p.pick_in_gain_region(2, rng, true) == 1);
}

TEST_CASE("dump lists each populated level") {
    Fixture f({3, 3, 3});
    f.p.place_into_cover(0);
    f.p.place_into_cover(1);
    CHECK(f.p.dump() == "loss-3: v0 v1 | gain-3: v2\n");
}

TEST_CASE("parking pulls fixed vertices out of every region") {
    Fixture f({2, 3, 2, 1, 2});
    Rng rng(5);
    f.p.place_into_cover(1);
    f.p.place_into_cover(0);
    std::vector<char> parked{1, 0, 0, 0, 0}; // fix v0
    f.p.park(parked);
    CHECK(f.p.parked(0));
    CHECK(f.p.in_cover(0));
    CHECK(f.p.removable_count() == 1);
    CHECK(f.p.cover_size() == 2);
    // v0 appears in no loss region; min-loss can only return v1
    CHECK(f.p.random_min_loss_vertex(rng, false) == 1);
    f.p.adjust_parked_score(0, -1);
    CHECK(f.p.score(0) == 1);
    CHECK_THROWS_AS(f.p.adjust_parked_score(1, 1), std::logic_error);
    CHECK_THROWS_AS(f.p.place_out_of_cover(0), std::logic_error);
    CHECK(f.p.dump().substr(0, 8) == "dead: v0");
    f.p.check_consistency();
}

TEST_CASE("random valid operation storm stays consistent with a naive model") {
    const int n = 60;
    std::vector<int> caps(n);
    Rng seedgen(2024);
    for (int v = 0; v < n; ++v) caps[v] = 1 + static_cast<int>(seedgen.bounded(6));
    Fixture f(caps);
    Rng rng(7);
    struct Model { bool in_c; int score; };
    std::vector<Model> model(n);
    for (int v = 0; v < n; ++v) model[v] = {false, caps[v]};

    for (int it = 0; it < 20000; ++it) {
        VertexId v = static_cast<VertexId>(rng.bounded(n));
        auto& m = model[v];
        switch (rng.bounded(4)) {
        case 0:
            if (!m.in_c) { f.p.place_into_cover(v); m.in_c = true; }
            break;
        case 1:
            if (m.in_c) { f.p.place_out_of_cover(v); m.in_c = false; }
            break;
        case 2:
            if (m.score > 0) {
                if (m.in_c) f.p.loss_decrement(v); else f.p.gain_decrement(v);
                --m.score;
            }
            break;
        default:
            if (m.score < caps[v]) {
                if (m.in_c) f.p.loss_increment(v); else f.p.gain_increment(v);
                ++m.score;
            }
            break;
        }
        if (it % 500 == 0) f.p.check_consistency();
    }
    f.p.check_consistency();
    for (int v = 0; v < n; ++v) {
        CHECK(f.p.in_cover(v) == model[v].in_c);
        CHECK(f.p.score(v) == model[v].score);
        auto region = model[v].in_c ? f.p.loss_region(model[v].score)
                                    : f.p.gain_region(model[v].score);
        CHECK(std::find(region.begin(), region.end(), v) != region.end());
    }
    // min-loss result agrees with a naive scan over the model
    int best = 1 << 30;
    for (int v = 0; v < n; ++v)
        if (model[v].in_c) best = std::min(best, model[v].score);
    if (best < (1 << 30)) {
        Rng r2(3);
        VertexId got = f.p.random_min_loss_vertex(r2, false);
        CHECK(model[got].in_c);
        CHECK(model[got].score == best);
    }
}
