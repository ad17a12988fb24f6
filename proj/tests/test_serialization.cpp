#include "loopcell/serialization.hpp"
#include "loopcell/verify.hpp"

#include <catch_amalgamated.hpp>

using namespace loopcell;

TEST_CASE("rational strings") {
    CHECK(rat_str(Rat(1, 3)) == "1/3");
    CHECK(rat_str(Rat(-2, 4)) == "-1/2");
    CHECK(rat_str(Rat(5)) == "5/1");
    CHECK(parse_rat("1/3") == Rat(1, 3));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat("-3/9") == Rat(-1, 3));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("cube tuples round-trip with a stable schema") {
    CubeTuple t(1, {Cube(1, {{Rat(0), Rat(1, 2)}}), Cube(1, {{Rat(1, 2), Rat(1)}})});
    Json j = to_json(t);
    CHECK(j.dump() ==
          R"({"k":1,"cubes":[{"k":1,"intervals":[["0/1","1/2"]]},{"k":1,"intervals":[["1/2","1/1"]]}]})");
    CHECK(cube_tuple_from_json(j) == t);
}

TEST_CASE("configurations round-trip") {
    Configuration conf(1, 1, {{{Rat(1, 3)}, {Rat(1, 2)}}}, true);
    Json j = to_json(conf);
    CHECK(j.dump() == R"({"k":1,"m":1,"ordered":true,"points":[{"x":["1/3"],"y":["1/2"]}]})");
    CHECK(configuration_from_json(j) == conf);

    // the ordered flag defaults to n > 0
    Json bare = Json::parse(R"({"k":1,"m":1,"points":[{"x":["1/3"],"y":["1/2"]}]})");
    CHECK(configuration_from_json(bare) == conf);
    Json empty = Json::parse(R"({"k":1,"m":1,"points":[]})");
    CHECK(configuration_from_json(empty).size() == 0);

    CHECK_THROWS_AS(configuration_from_json(Json::parse(R"({"k":1,"m":1,"points":[{"x":[0.5],"y":["1/2"]}]})")),
                    std::invalid_argument);
}

TEST_CASE("tubular points round-trip") {
    TubularPoint b(1, 1, 2, {Rat(1, 2)}, {{Rat(1, 3)}, {Rat(2, 3)}}, {{Rat(3, 25), Rat(-3, 25)}});
    Json j = to_json(b);
    TubularPoint back = tubular_point_from_json(j);
    CHECK(back.x == b.x);
    CHECK(back.eta == b.eta);
    CHECK(back.w == b.w);
}

TEST_CASE("matrices parse from sparse triples") {
    Json j = Json::parse(R"({"rows":2,"cols":2,"triples":[[0,0,2],[0,1,4],[1,0,6],[1,1,"8"]]})");
    IMatrix m = matrix_from_json(j);
    CHECK(m[0][0] == 2);
    CHECK(m[1][1] == 8);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"triples":[[3,0,1]]})")),
                    std::invalid_argument);
}

TEST_CASE("e1 page emits matching tsv and json") {
    E1Page page = e1_page(1, 2, 3, 6);
    Json j = to_json(page);
    std::string tsv = to_tsv(page);
    // same entries in both encodings
    size_t lines = 0;
    for (char c : tsv)
        if (c == '\n')
            ++lines;
    CHECK(lines == j.at("entries").size() + 1);
    CHECK(j.at("k") == 1);

    std::string expected_tsv =
        "p\tq\ttotal\tdim\n"
        "1\t-1\t0\t1\n"
        "2\t-1\t1\t1\n"
        "2\t0\t2\t1\n"
        "3\t-1\t2\t1\n"
        "3\t0\t3\t1\n";
    CHECK(tsv == expected_tsv);
}

TEST_CASE("verify report is byte-identical for a fixed seed") {
    RunConfig cfg;
    cfg.cases_operad = cfg.cases_filtration = 10;
    cfg.cases_tubular = cfg.cases_bar = cfg.cases_scanning = cfg.cases_snf = 10;
    auto a = run_all(cfg);
    auto b = run_all(cfg);
    CHECK(render_report(a, "tsv") == render_report(b, "tsv"));
    CHECK(render_report(a, "json") == render_report(b, "json"));
}
