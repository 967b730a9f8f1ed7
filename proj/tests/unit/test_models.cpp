#include <doctest.h>

#include <bit>

#include "helpers.hpp"
#include "zf/models.hpp"
#include "zf/sim.hpp"
#include "zf/solver.hpp"

using namespace zf;
using namespace zf::models;

namespace {

Graph example_tree() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}}); }

// the published feasible infection-model assignment for the order-6 tree,
// translated to 0-indexed labels: s = {1,0,0,1,0,0}, x = {0,1,2,0,3,5},
// forces 1->2, 2->3, 3->5, 5->6 (1-indexed), z = 5
std::vector<Rat> im_example_assignment(const milp::LinearModel& m, const Graph& g) {
    ImLayout L = im_layout(g, 5);
    std::vector<Rat> a(static_cast<size_t>(m.num_variables()), Rat(0));
    std::vector<int> x{0, 1, 2, 0, 3, 5};
    a[static_cast<size_t>(L.s(0))] = 1;
    a[static_cast<size_t>(L.s(3))] = 1;
    for (int v = 0; v < 6; ++v) a[static_cast<size_t>(L.x(v))] = x[static_cast<size_t>(v)];
    ArcList arcs(g);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 4}, {4, 5}})
        a[static_cast<size_t>(L.y(arcs.index_of(u, v)))] = 1;
    a[static_cast<size_t>(L.z())] = 5;
    return a;
}

}  // namespace

TEST_CASE("im shape and the worked feasible assignment") {
    Graph t = example_tree();
    auto m = build_im(t, 5, Variant::Z);
    CHECK(m.num_variables() == 2 * 6 + 10 + 1);
    auto a = im_example_assignment(m, t);
    CHECK(m.is_feasible(a));
    CHECK(m.objective_value(a) == 2);
    CHECK_THROWS_AS(build_im(t, 0, Variant::Z), std::invalid_argument);
    CHECK_THROWS_AS(build_im(t, 5, Variant::PT), std::invalid_argument);
}

TEST_CASE("the idle-step assignment is infeasible for the time step model") {
    Graph t = example_tree();
    auto m = build_tsm(t, 5, Variant::Z);
    CHECK(m.num_variables() == 6 * 6 + 10 * 5 + 5);
    TsmLayout L = tsm_layout(t, 5);
    std::vector<Rat> a(static_cast<size_t>(m.num_variables()), Rat(0));
    std::vector<int> filled_at{0, 1, 2, 0, 3, 5};
    for (int v = 0; v < 6; ++v)
        for (int tt = 0; tt <= 5; ++tt)
            if (filled_at[static_cast<size_t>(v)] <= tt) a[static_cast<size_t>(L.x(v, tt))] = 1;
    ArcList arcs(t);
    a[static_cast<size_t>(L.y(arcs.index_of(0, 1), 1))] = 1;
    a[static_cast<size_t>(L.y(arcs.index_of(1, 2), 2))] = 1;
    a[static_cast<size_t>(L.y(arcs.index_of(2, 4), 3))] = 1;
    a[static_cast<size_t>(L.y(arcs.index_of(4, 5), 5))] = 1;
    for (int tt = 1; tt <= 5; ++tt) a[static_cast<size_t>(L.z(tt))] = 1;
    auto why = m.first_violation(a);
    REQUIRE(why.has_value());
    // the gray leaf (paper vertex 4) sees its white neighbor yet nothing fires
    CHECK(why->find("ready") != std::string::npos);
}

TEST_CASE("im solves match derived values") {
    Graph c5 = family(Family::Cycle, 5);
    auto sol = milp::solve_ip(build_im(c5, 4, Variant::Z), {}, im_hints(c5, 4, Variant::Z));
    REQUIRE(sol.status == milp::SolveStatus::Optimal);
    CHECK(sol.objective_value == 2);
    CHECK(is_zfs(c5, extract_zfs(c5, sol, ZfModelKind::IM)));

    Graph p4 = family(Family::Path, 4);
    auto pt = milp::solve_ip(build_im(p4, 3, Variant::Pt), {}, im_hints(p4, 3, Variant::Pt));
    CHECK(pt.objective_value == Rat(1) + Rat(3, 6));  // Z = 1, pt = 3

    // without hints the same optimum comes out of the plain LP search
    auto bare = milp::solve_ip(build_im(p4, 3, Variant::Pt));
    CHECK(bare.objective_value == pt.objective_value);
}

TEST_CASE("tsm solves match the published hypercube row") {
    Graph q3 = family(Family::Hypercube, 3);
    auto sol = milp::solve_ip(build_tsm(q3, 7, Variant::PT), {}, tsm_hints(q3, 7, Variant::PT));
    REQUIRE(sol.status == milp::SolveStatus::Optimal);
    TsmLayout L = tsm_layout(q3, 7);
    Rat zsum = 0, ssum = 0;
    for (int t = 1; t <= 7; ++t) zsum += sol.assignment[static_cast<size_t>(L.z(t))];
    for (int v = 0; v < 8; ++v) ssum += sol.assignment[static_cast<size_t>(L.x(v, 0))];
    CHECK(ssum == 4);
    CHECK(zsum == 2);

    Graph k3 = family(Family::Complete, 3);
    auto pt = milp::solve_ip(build_tsm(k3, 2, Variant::Pt), {}, tsm_hints(k3, 2, Variant::Pt));
    CHECK(pt.objective_value == Rat(2) + Rat(1, 4));  // Z = 2, pt = 1

    auto bare = milp::solve_ip(build_tsm(k3, 2, Variant::Pt));
    CHECK(bare.objective_value == pt.objective_value);
}

TEST_CASE("tsm pti constraint") {
    Graph q3 = family(Family::Hypercube, 3);
    int T = 4;  // hypercube override 2^{d-1}
    auto at2 = milp::solve_ip(build_tsm_pti(q3, T, 2), {}, tsm_hints(q3, T, Variant::Pt, 2));
    REQUIRE(at2.status == milp::SolveStatus::Optimal);
    TsmLayout L = tsm_layout(q3, T);
    Rat zsum = 0;
    for (int t = 1; t <= T; ++t) zsum += at2.assignment[static_cast<size_t>(L.z(t))];
    CHECK(zsum == 2);

    auto at3 = milp::solve_ip(build_tsm_pti(q3, T, 3), {}, tsm_hints(q3, T, Variant::Pt, 3));
    CHECK(at3.status == milp::SolveStatus::Infeasible);

    Graph p4 = family(Family::Path, 4);
    auto k0 = milp::solve_ip(build_tsm_pti(p4, 3, 0), {}, tsm_hints(p4, 3, Variant::Pt, 0));
    auto plain = milp::solve_ip(build_tsm(p4, 3, Variant::Pt), {}, tsm_hints(p4, 3, Variant::Pt));
    CHECK(k0.objective_value == plain.objective_value);
    CHECK_THROWS_AS(build_tsm_pti(p4, 3, 9), std::invalid_argument);
}

TEST_CASE("fort cover variants on C5") {
    Graph c5 = family(Family::Cycle, 5);
    auto all = oracle_minimal_forts(c5);
    CHECK(milp::solve_ip(build_fort_cover(c5, all, false)).objective_value == 2);
    CHECK(milp::solve_lp(build_fort_cover(c5, all, true)).objective_value == Rat(5, 3));

    // first three forts only: the half weighting is feasible yet misses F4
    FortCollection partial{{vertices_to_mask({0, 1, 3}), vertices_to_mask({1, 2, 4}),
                            vertices_to_mask({0, 2, 3})},
                           true};
    auto relaxed = build_fort_cover(c5, partial, true);
    std::vector<Rat> s{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(0), Rat(0)};
    CHECK(relaxed.is_feasible(s));
    FortCollection with_f4 = partial;
    with_f4.forts.push_back(vertices_to_mask({1, 3, 4}));
    auto why = build_fort_cover(c5, with_f4, true).first_violation(s);
    REQUIRE(why.has_value());
    CHECK(why->find("cover3") != std::string::npos);

    FortCollection bogus{{vertices_to_mask({0})}, false};
    CHECK_THROWS_AS(build_fort_cover(c5, bogus, false), std::invalid_argument);
}

TEST_CASE("minimum fort model") {
    Graph c5 = family(Family::Cycle, 5);
    auto hints = fort_model_hints(c5);
    CHECK(milp::solve_ip(build_min_fort(c5, 0), {}, hints).objective_value == 3);
    CHECK(milp::solve_ip(build_min_fort(c5, vertices_to_mask({0, 1})), {}, hints).status ==
          milp::SolveStatus::Infeasible);
    Graph s5 = family(Family::Star, 5);
    auto sol = milp::solve_ip(build_min_fort(s5, 1), {}, fort_model_hints(s5));
    CHECK(sol.objective_value == 2);
    CHECK(std::popcount(extract_fort(s5, sol)) == 2);
}

TEST_CASE("closure fixing yields the same optima") {
    // fixing on cl(C) instead of C never changes the feasible forts
    std::vector<Graph> graphs{family(Family::Cycle, 6), family(Family::Star, 5),
                              random_gnp(6, "0.4", 12)};
    for (const auto& g : graphs) {
        for (std::uint64_t c : {std::uint64_t(0), std::uint64_t(1), vertices_to_mask({0, 2})}) {
            auto plain = milp::solve_ip(build_min_fort(g, c), {}, fort_model_hints(g));
            auto closed = milp::solve_ip(build_min_fort(g, c, {.fix_closure = true}), {},
                                         fort_model_hints(g));
            CHECK(plain.status == closed.status);
            if (plain.status == milp::SolveStatus::Optimal)
                CHECK(plain.objective_value == closed.objective_value);
        }
    }
}

TEST_CASE("weighted separation model") {
    Graph c5 = family(Family::Cycle, 5);
    std::vector<Rat> s{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(0), Rat(0)};
    auto sol = milp::solve_ip(build_frac_min_fort(c5, s), {}, fort_model_hints(c5));
    REQUIRE(sol.status == milp::SolveStatus::Optimal);
    CHECK(sol.objective_value == Rat(1, 2));
    CHECK(extract_fort(c5, sol) == vertices_to_mask({1, 3, 4}));  // paper's {2,4,5}

    std::vector<Rat> third(5, Rat(1, 3));
    CHECK(milp::solve_ip(build_frac_min_fort(c5, third), {}, fort_model_hints(c5)).objective_value ==
          1);
    std::vector<Rat> ones(5, Rat(1));
    CHECK(milp::solve_ip(build_frac_min_fort(c5, ones), {}, fort_model_hints(c5)).objective_value ==
          3);
    std::vector<Rat> bad(5, Rat(2));
    CHECK_THROWS_AS(build_frac_min_fort(c5, bad), std::invalid_argument);
}

TEST_CASE("minimal fort exclusion model") {
    Graph c5 = family(Family::Cycle, 5);
    auto all = oracle_minimal_forts(c5);
    FortCollection none{{}, true};
    CHECK(milp::solve_ip(build_minimal_fort_excl(c5, none), {}, fort_model_hints(c5))
              .objective_value == 3);

    FortCollection four{{all.forts[0], all.forts[1], all.forts[2], all.forts[3]}, true};
    auto sol = milp::solve_ip(build_minimal_fort_excl(c5, four), {}, fort_model_hints(c5));
    REQUIRE(sol.status == milp::SolveStatus::Optimal);
    CHECK(extract_fort(c5, sol) == all.forts[4]);

    CHECK(milp::solve_ip(build_minimal_fort_excl(c5, all), {}, fort_model_hints(c5)).status ==
          milp::SolveStatus::Infeasible);
}

TEST_CASE("fort number model with and without symmetry rows") {
    Graph c5 = family(Family::Cycle, 5);
    CHECK(milp::solve_ip(build_fort_number(c5), {}, fn_hints(c5)).objective_value == 1);
    Graph s5 = family(Family::Star, 5);
    auto sol = milp::solve_ip(build_fort_number(s5), {}, fn_hints(s5));
    CHECK(sol.objective_value == 2);
    auto packing = extract_packing(s5, sol);
    CHECK(packing.size() == 2);
    Graph k1 = family(Family::Path, 1);
    CHECK(milp::solve_ip(build_fort_number(k1)).objective_value == 1);

    auto sym = milp::solve_ip(build_fort_number(s5, {.symmetry_breaking = true}), {}, fn_hints(s5));
    CHECK(sym.objective_value == 2);
}

TEST_CASE("extracted traces replay") {
    Graph p4 = family(Family::Path, 4);
    auto im = milp::solve_ip(build_im(p4, 3, Variant::Pt), {}, im_hints(p4, 3, Variant::Pt));
    auto trace = extract_trace(p4, im, ZfModelKind::IM, 3);
    CHECK(trace.step_count() == 3);

    Graph t = example_tree();
    auto tsm = milp::solve_ip(build_tsm(t, 5, Variant::PT), {}, tsm_hints(t, 5, Variant::PT));
    auto strace = extract_trace(t, tsm, ZfModelKind::TSM, 5);
    CHECK(strace.step_count() == 3);  // the worked example's true maximum
}

TEST_CASE("model names carry the pieces for reproducible exports") {
    Graph c5 = family(Family::Cycle, 5);
    auto m = build_tsm(c5, 4, Variant::Th);
    CHECK(m.name().find("tsm_") == 0);
    CHECK(m.name().find("_T4_") != std::string::npos);
    CHECK(m.name().find("th") != std::string::npos);
    CHECK(m.name().find(graph_tag(c5)) != std::string::npos);
}
