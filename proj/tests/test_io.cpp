#include <doctest.h>

#include "lcc/error.hpp"
#include "lcc/generators.hpp"
#include "lcc/io.hpp"
#include "lcc/rect_cover.hpp"
#include "oracles.hpp"

using namespace lcc;

TEST_CASE("graph json") {
    const Graph g = gen_kneser(5, 2);
    const Json j = to_json(g);
    CHECK(j["n"] == 10);
    CHECK(j["edges"].size() == 15);
    CHECK(graph_from_json(j) == g);
    CHECK(canonical_dump(to_json(Graph(3, {{2, 1}}))) == "{\"edges\":[[1,2]],\"n\":3}\n");
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"edges":[[0,2]]})")), MalformedInput);
    CHECK(graph_from_json(Json::parse(R"({"n":2,"edges":[[1,0]]})")) == Graph(2, {{0, 1}}));
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges":[]})")), MalformedInput);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":-1,"edges":[]})")), MalformedInput);
}

TEST_CASE("covering json is sorted") {
    const CliqueCovering c{{{2, 0}, {1, 0}}};
    CHECK(canonical_dump(to_json(c)) == "{\"cliques\":[[0,1],[0,2]]}\n");
    CHECK(covering_from_json(to_json(c)).cliques == std::vector<Clique>{{0, 1}, {0, 2}});
    CHECK_THROWS_AS(covering_from_json(Json::parse(R"({"cliques":[[0,"a"]]})")), MalformedInput);
}

TEST_CASE("representation json") {
    const IntersectionRepresentation r{3, {{0, 2}, {}, {1}}};
    CHECK(representation_from_json(to_json(r)) == r);
    CHECK_THROWS_AS(representation_from_json(Json::parse(R"({"labels":1,"sets":[[3]]})")), MalformedInput);
}

TEST_CASE("rational json") {
    CHECK(to_json(Rational(3)) == Json(3));
    CHECK(to_json(Rational(-5, 4)) == Json(-1.25));
    CHECK(to_json(Rational(1, 3)) == Json("1/3"));
    for (auto q : {Rational(7), Rational(-1, 2), Rational(13, 64), Rational(2, 3), Rational(-22, 7)})
        CHECK(rational_from_json(to_json(q)) == q);
    CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
    CHECK(rational_from_json(Json(0.375)) == Rational(3, 8));
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), MalformedInput);
    // doubles are read at their exact binary value
    CHECK(rational_from_json(Json(0.1)) == Rational(3602879701896397LL, 36028797018963968LL));
    CHECK_THROWS_AS(rational_from_json(Json("x")), MalformedInput);
}

TEST_CASE("interval model json") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto m = gen_random_linear_interval(20, 7, Seed{s});
        CHECK(interval_model_from_json(to_json(m)) == m);
        CHECK(interval_model_from_json(Json::parse(canonical_dump(to_json(m)))) == m);
    }
    CHECK_THROWS_AS(interval_model_from_json(Json::parse(R"({"points":[2,1],"intervals":[]})")), MalformedInput);
    CHECK_THROWS_AS(interval_model_from_json(Json::parse(R"({"points":[1],"intervals":[[2,1]]})")), MalformedInput);
}

TEST_CASE("rect covering json") {
    const RectCovering c = staircase_cover(7, {2, 3});
    const Json j = to_json(c);
    CHECK(j["n"] == 7);
    CHECK(j["rects"][0].contains("rows"));
    CHECK(rect_covering_from_json(j) == c);
    const RectCovering odd{3, {Rectangle{{1, 3}, {1}}}};
    const Json oj = to_json(odd);
    CHECK(oj["rects"][0].contains("row_set"));
    CHECK(rect_covering_from_json(oj) == odd);
    CHECK_THROWS_AS(rect_covering_from_json(Json::parse(R"({"n":2,"rects":[{"rows":[2,1],"cols":[1,1]}]})")),
                    MalformedInput);
}

TEST_CASE("family json") {
    const SetPairFamily f{2, 2, {{{0}, {0, 1}}, {{0, 1}, {2}}}};
    const Json j = to_json(f);
    CHECK(j["pairs"][1]["A"] == Json::array({0, 1}));
    CHECK(family_from_json(j) == f);
    CHECK_THROWS_AS(family_from_json(Json::parse(R"({"r":1,"pairs":[]})")), MalformedInput);
}

TEST_CASE("files") {
    const auto dir = std::filesystem::temp_directory_path() / "lcc_io_test";
    std::filesystem::create_directories(dir);
    write_text_file(dir / "g.json", canonical_dump(to_json(oracle::cycle(5))));
    CHECK(graph_from_json(read_json_file(dir / "g.json")) == oracle::cycle(5));
    write_text_file(dir / "bad.json", "{not json");
    CHECK_THROWS_AS(read_json_file(dir / "bad.json"), MalformedInput);
    CHECK_THROWS_AS(read_json_file(dir / "missing.json"), MalformedInput);
    std::filesystem::remove_all(dir);
}
