#include <doctest.h>

#include <filesystem>

#include "helpers.hpp"
#include "zf/graph6.hpp"
#include "zf/sim.hpp"

using namespace zf;
using zf::test::isomorphic;

TEST_CASE("reference encodings") {
    // expected strings produced with an independent reference encoder
    CHECK(parse_graph6("@") == Graph(1, {}));
    CHECK(parse_graph6("A_") == family(Family::Complete, 2));
    CHECK(parse_graph6("Bw") == family(Family::Complete, 3));
    CHECK(parse_graph6("Ch") == family(Family::Path, 4));
    CHECK(parse_graph6("Dhc") == family(Family::Cycle, 5));
    CHECK(parse_graph6("C~") == family(Family::Complete, 4));
    CHECK(parse_graph6("Esa?") == family(Family::Star, 6));

    Graph q3 = parse_graph6("Gr`HOk");
    CHECK(q3.n() == 8);
    CHECK(q3.m() == 12);
    CHECK(isomorphic(q3, family(Family::Hypercube, 3)));

    CHECK(encode_graph6(Graph(1, {})) == "@");
    CHECK(encode_graph6(family(Family::Complete, 2)) == "A_");
    CHECK(encode_graph6(family(Family::Complete, 3)) == "Bw");
    CHECK(encode_graph6(family(Family::Path, 4)) == "Ch");
    CHECK(encode_graph6(family(Family::Cycle, 5)) == "Dhc");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);   // long form
    CHECK_THROWS_AS(parse_graph6(std::string(1, '\x20')), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("A"), std::invalid_argument);     // truncated
    CHECK_THROWS_AS(parse_graph6("A_?"), std::invalid_argument);   // overlong
    CHECK_THROWS_AS(parse_graph6("AO"), std::invalid_argument);    // nonzero trailing bits
    CHECK_THROWS_AS(encode_graph6(Graph(63, {})), std::invalid_argument);
    CHECK_THROWS_AS(encode_graph6(Graph(0, {})), std::invalid_argument);
}

TEST_CASE("header marker is tolerated") {
    CHECK(parse_graph6(">>graph6<<A_") == family(Family::Complete, 2));
}

TEST_CASE("round trip over the fixture corpora is bit exact") {
    namespace fs = std::filesystem;
    int files = 0;
    for (const char* name : {"graphs4.g6", "graphs5.g6", "graphs6.g6", "graphs7.g6", "trees05.g6",
                             "trees08.g6", "trees10.g6"}) {
        fs::path path = fs::path(zf::test::data_dir()) / "corpus" / name;
        if (!fs::exists(path)) continue;
        ++files;
        for (const auto& line : read_graph6_lines(path.string())) {
            CHECK(encode_graph6(parse_graph6(line)) == line);
        }
    }
    CHECK(files == 7);
}

TEST_CASE("corpus sizes match the external generator") {
    namespace fs = std::filesystem;
    auto count = [](const std::string& p) { return read_graph6_lines(p).size(); };
    fs::path dir = fs::path(zf::test::data_dir()) / "corpus";
    CHECK(count((dir / "graphs4.g6").string()) == 11);
    CHECK(count((dir / "graphs5.g6").string()) == 34);
    CHECK(count((dir / "graphs6.g6").string()) == 156);
    CHECK(count((dir / "graphs7.g6").string()) == 1044);
    CHECK(count((dir / "trees05.g6").string()) == 3);
    CHECK(count((dir / "trees10.g6").string()) == 106);
}
