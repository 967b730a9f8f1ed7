#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "zf/models.hpp"
#include "zf/mps.hpp"
#include "zf/sim.hpp"

using namespace zf;
using namespace zf::milp;

TEST_CASE("golden single-variable mps") {
    LinearModel m("one");
    m.add_binary("x");
    m.set_objective({{0, Rat(1)}}, ObjSense::Minimize);
    std::string expect =
        "NAME          one\n"
        "ROWS\n"
        " N  OBJ\n"
        "COLUMNS\n"
        "    MARKER0    'MARKER'                 'INTORG'\n"
        "    x         OBJ       1           \n"
        "    MARKER1    'MARKER'                 'INTEND'\n"
        "RHS\n"
        "BOUNDS\n"
        " LO BND       x         0           \n"
        " UP BND       x         1           \n"
        "ENDATA\n";
    CHECK(export_mps(m) == expect);
}

TEST_CASE("mps round trip is exact") {
    Graph c5 = family(Family::Cycle, 5);
    auto fc = models::build_fort_cover(c5, oracle_minimal_forts(c5), false);
    CHECK(parse_mps(export_mps(fc)) == fc);

    // TSM on K3 carries 1/3 coefficients, exercising the $= exact comments
    Graph k3 = family(Family::Complete, 3);
    auto tsm = models::build_tsm(k3, 2, models::Variant::Pt);
    CHECK(parse_mps(export_mps(tsm)) == tsm);

    auto im = models::build_im(c5, 4, models::Variant::Th);
    CHECK(parse_mps(export_mps(im)) == im);

    auto fn = models::build_fort_number(k3);
    CHECK(parse_mps(export_mps(fn)) == fn);
}

TEST_CASE("long names are mangled and restored") {
    LinearModel m("longnames");
    m.add_variable("a_rather_long_variable_name", 0, 2, true);
    m.add_binary("y");
    m.add_constraint({{0, Rat(1)}, {1, Rat(1)}}, RowSense::LE, Rat(2),
                     "an_even_longer_constraint_name");
    m.set_objective({{0, Rat(1)}}, ObjSense::Maximize);
    std::string text = export_mps(m);
    CHECK(text.find("a_rather_long_variable_name") != std::string::npos);  // via LONGNAME map
    LinearModel back = parse_mps(text);
    CHECK(back == m);
    CHECK(back.variable(0).name == "a_rather_long_variable_name");
    CHECK(back.row(0).name == "an_even_longer_constraint_name");
}

TEST_CASE("lp format text mentions every section") {
    Graph k3 = family(Family::Complete, 3);
    auto tsm = models::build_tsm(k3, 2, models::Variant::Pt);
    std::string text = export_lp_format(tsm);
    CHECK(text.find("Minimize") != std::string::npos);
    CHECK(text.find("Subject To") != std::string::npos);
    CHECK(text.find("Bounds") != std::string::npos);
    CHECK(text.find("Generals") != std::string::npos);
    CHECK(text.find("End") != std::string::npos);
    CHECK(text.find("\\ exact") != std::string::npos);  // 1/3 coefficients noted exactly
}

TEST_CASE("solution file grammar") {
    auto res = parse_solution_file("# Objective value = 5/3\nx 1\ny 0.5\n");
    CHECK(res.solved);
    CHECK(res.objective == Rat(5, 3));
    REQUIRE(res.values.size() == 2);
    CHECK(res.values[1].second == Rat(1, 2));
}

TEST_CASE("external solver hook end to end with a stub solver") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "zfip_ext_test";
    fs::create_directories(dir);
    fs::path script = dir / "fakesolver.sh";
    {
        std::ofstream out(script);
        out << "#!/bin/sh\n"
               "echo \"# Objective value = 2\" > \"$2\"\n"
               "echo \"s0 1\" >> \"$2\"\n"
               "echo \"s2 1\" >> \"$2\"\n";
    }
    fs::permissions(script, fs::perms::owner_all);
    Graph c5 = family(Family::Cycle, 5);
    auto fc = models::build_fort_cover(c5, oracle_minimal_forts(c5), false);
    auto res = solve_with_external(fc, script.string(), dir.string());
    CHECK(res.solved);
    CHECK(res.objective == 2);  // matches the built-in optimum for C5
}
