#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "helpers.hpp"
#include "zf/graph6.hpp"
#include "zf/sim.hpp"

using namespace zf;

namespace {

// the order-6 tree from the worked time-step example, 0-indexed
Graph example_tree() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}}); }

}  // namespace

TEST_CASE("closure on the worked tree example") {
    Graph t = example_tree();
    ForcingTrace trace = closure(t, vertices_to_mask({0, 3}));
    REQUIRE(trace.step_count() == 3);
    CHECK(trace.steps[0] == std::vector<Force>{{0, 1}, {3, 2}});
    CHECK(trace.steps[1] == std::vector<Force>{{2, 4}});
    CHECK(trace.steps[2] == std::vector<Force>{{4, 5}});
    CHECK(trace.filled() == t.vertex_mask());
    CHECK(is_valid_trace(t, trace));
}

TEST_CASE("closure basics") {
    Graph p3 = family(Family::Path, 3);
    auto tr = closure(p3, 1);  // one endpoint
    CHECK(tr.step_count() == 2);
    CHECK(tr.filled() == p3.vertex_mask());

    Graph c5 = family(Family::Cycle, 5);
    auto stalled = closure(c5, 1);
    CHECK(stalled.step_count() == 0);
    CHECK(stalled.filled() == 1);

    CHECK(closure(p3, 0).filled() == 0);
}

TEST_CASE("zero forcing predicate and propagation time") {
    Graph p4 = family(Family::Path, 4);
    CHECK(is_zfs(p4, 1));
    Graph c5 = family(Family::Cycle, 5);
    CHECK(is_zfs(c5, vertices_to_mask({0, 1})));
    CHECK(!is_zfs(c5, 1));

    CHECK(propagation_time(p4, 1) == 3);
    CHECK(propagation_time(p4, p4.vertex_mask()) == 0);
    CHECK(!propagation_time(c5, 1).has_value());
    Graph k4 = family(Family::Complete, 4);
    CHECK(propagation_time(k4, vertices_to_mask({0, 1, 2})) == 1);
}

TEST_CASE("fort predicate") {
    Graph c5 = family(Family::Cycle, 5);
    CHECK(is_fort(c5, vertices_to_mask({0, 1, 3})));  // paper's {1,2,4}
    CHECK(!is_fort(c5, 1));
    CHECK(is_fort(c5, c5.vertex_mask()));
    CHECK(!is_fort(c5, 0));
    Graph p2 = family(Family::Path, 2);
    CHECK(!is_fort(p2, 1));
    CHECK(is_fort(p2, 3));
}

TEST_CASE("oracle Z") {
    for (int n = 1; n <= 8; ++n) CHECK(oracle_Z(family(Family::Path, n)).value == 1);
    CHECK(oracle_Z(family(Family::Complete, 4)).value == 3);
    CHECK(oracle_Z(family(Family::Hypercube, 3)).value == 4);
    CHECK(oracle_Z(family(Family::Cycle, 5)).value == 2);
    CHECK(oracle_Z(family(Family::Path, 5)).witness == 1);  // lex-first witness
    CHECK_THROWS_AS(oracle_Z(Graph(20, {}), OracleLimits{}), std::invalid_argument);
}

TEST_CASE("oracle pt and PT") {
    auto q3 = oracle_pt_PT(family(Family::Hypercube, 3));
    CHECK(q3.zero_forcing_number == 4);
    CHECK(q3.pt == 1);
    CHECK(q3.PT == 2);
    CHECK(q3.realized == std::vector<int>{1, 2});

    auto p4 = oracle_pt_PT(family(Family::Path, 4));
    CHECK(p4.pt == 3);
    CHECK(p4.PT == 3);

    auto k3 = oracle_pt_PT(family(Family::Complete, 3));
    CHECK(k3.pt == 1);
    CHECK(k3.PT == 1);
}

TEST_CASE("oracle throttling") {
    auto p4 = oracle_th(family(Family::Path, 4));
    CHECK(p4.value == 3);
    CHECK(p4.witness == vertices_to_mask({0, 3}));
    for (int n = 2; n <= 6; ++n) CHECK(oracle_th(family(Family::Complete, n)).value == n);
    CHECK(oracle_th(family(Family::Path, 1)).value == 1);
}

TEST_CASE("oracle minimal forts") {
    auto c5 = oracle_minimal_forts(family(Family::Cycle, 5));
    REQUIRE(c5.size() == 5);
    CHECK(c5.all_minimal);
    std::vector<std::uint64_t> expect{
        vertices_to_mask({0, 1, 3}), vertices_to_mask({1, 2, 4}), vertices_to_mask({0, 2, 3}),
        vertices_to_mask({1, 3, 4}), vertices_to_mask({0, 2, 4})};
    std::sort(expect.begin(), expect.end());
    auto got = c5.forts;
    std::sort(got.begin(), got.end());
    CHECK(got == expect);

    for (int n = 5; n <= 9; ++n) {
        auto forts = oracle_minimal_forts(family(Family::Star, n));
        CHECK(forts.size() == (n - 1) * (n - 2) / 2);
    }
    auto k1 = oracle_minimal_forts(family(Family::Path, 1));
    REQUIRE(k1.size() == 1);
    CHECK(k1.forts[0] == 1);
}

TEST_CASE("oracle fort number") {
    CHECK(oracle_ft(family(Family::Cycle, 5)).value == 1);
    CHECK(oracle_ft(family(Family::Star, 5)).value == 2);
    CHECK(oracle_ft(family(Family::Path, 1)).value == 1);
    auto s7 = oracle_ft(family(Family::Star, 7));
    CHECK(s7.value == 3);
    std::uint64_t used = 0;
    for (auto f : s7.packing) {
        CHECK(is_fort(family(Family::Star, 7), f));
        CHECK((used & f) == 0);
        used |= f;
    }
}

TEST_CASE("closure is monotone and idempotent") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_gnp(8, "0.4", rng());
        std::uint64_t a = rng() & g.vertex_mask();
        std::uint64_t b = a | (rng() & g.vertex_mask());
        std::uint64_t ca = closure(g, a).filled();
        CHECK((ca & closure(g, b).filled()) == ca);  // cl(a) subset of cl(b)
        CHECK(closure(g, ca).filled() == ca);
    }
}

TEST_CASE("fort cover characterization of zero forcing sets") {
    // a set forces everything iff it meets every minimal fort
    std::vector<Graph> graphs{family(Family::Cycle, 5), family(Family::Path, 4),
                              family(Family::Complete, 4), family(Family::Star, 5),
                              example_tree(), random_gnp(6, "0.5", 3), random_gnp(6, "0.3", 9)};
    for (const auto& g : graphs) {
        auto forts = oracle_minimal_forts(g);
        for (std::uint64_t s = 0; s <= g.vertex_mask(); ++s) {
            bool hits_all = true;
            for (auto f : forts.forts)
                if (!(f & s)) {
                    hits_all = false;
                    break;
                }
            CHECK(is_zfs(g, s) == hits_all);
        }
    }
}

TEST_CASE("propagation time bounds and ft <= Z") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = random_gnp(7, "0.4", rng());
        auto z = oracle_Z(g);
        CHECK(oracle_ft(g).value <= z.value);
        for (std::uint64_t c = 0; c <= g.vertex_mask(); c += 3) {
            auto pt = propagation_time(g, c);
            if (pt) CHECK(*pt <= g.n() - std::popcount(c & g.vertex_mask()));
        }
    }
}

TEST_CASE("isolated vertices sit in every ZFS and form forts") {
    Graph g(4, {{1, 2}});  // vertices 0 and 3 isolated
    CHECK(is_fort(g, 1));
    CHECK(is_fort(g, 8));
    CHECK(!is_zfs(g, vertices_to_mask({1, 2, 3})));
    CHECK(is_zfs(g, vertices_to_mask({0, 1, 3})));
}

TEST_CASE("minimum fort within a set") {
    Graph c5 = family(Family::Cycle, 5);
    auto whole = minimum_fort_within(c5, c5.vertex_mask());
    REQUIRE(whole.has_value());
    CHECK(std::popcount(*whole) == 3);
    CHECK(!minimum_fort_within(c5, vertices_to_mask({0, 1})).has_value());
    CHECK(contains_fort(c5, vertices_to_mask({0, 1, 3})));
    CHECK(!contains_fort(c5, vertices_to_mask({0, 1})));
}

TEST_CASE("trace replay rejects corruption") {
    Graph t = example_tree();
    ForcingTrace trace = closure(t, vertices_to_mask({0, 3}));
    ForcingTrace bad = trace;
    bad.steps[0][0].forcer = 5;
    CHECK(!is_valid_trace(t, bad));
    bad = trace;
    bad.steps[2].clear();
    CHECK(!is_valid_trace(t, bad));
    bad = trace;
    bad.filled_at[1] = 2;
    CHECK(!is_valid_trace(t, bad));
}
