#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grt/io.hpp"
#include "grt/suites.hpp"

using namespace grt;

TEST_CASE("family specs") {
    CHECK(is_isomorphic(parse_group(R"({"family":"cyclic","n":6})"), cyclic_group(6)));
    auto heis = parse_group(R"({"family":"heisenberg_p","p":3})");
    CHECK(heis->order() == 27);
    CHECK(nilpotency_class(heis) == 2);
    CHECK(parse_group(R"({"family":"quaternion"})")->order() == 8);
    CHECK(parse_group(R"({"family":"dihedral","n":5})")->order() == 10);
    CHECK(parse_group(R"({"family":"alternating","n":4})")->order() == 12);
    auto dp = parse_group(
        R"({"family":"direct_product","factors":[{"family":"cyclic","n":2},{"family":"cyclic","n":3}]})");
    CHECK(is_isomorphic(dp, cyclic_group(6)));
}

TEST_CASE("permutation and table specs") {
    auto s3 = parse_group(R"({"permutation":{"degree":3,"generators":[[1,2,0],[1,0,2]]}})");
    CHECK(s3->order() == 6);
    CHECK_FALSE(s3->is_abelian());
    CHECK(is_isomorphic(s3, symmetric_group(3)));

    auto z3 = parse_group(R"({"table":[[0,1,2],[1,2,0],[2,0,1]]})");
    CHECK(is_isomorphic(z3, cyclic_group(3)));
    CHECK_THROWS_AS(parse_group(R"({"table":[[1,0],[0,1]]})"), NotAGroup);
}

TEST_CASE("semidirect spec") {
    // Z/2 acting on Z/3 by inversion gives S3
    auto g = parse_group(
        R"({"family":"semidirect","group":{"family":"cyclic","n":2},)"
        R"("space":{"family":"cyclic","n":3},"action":[[0,1,2],[0,2,1]]})");
    CHECK(is_isomorphic(g, symmetric_group(3)));
}

TEST_CASE("wrapping and errors") {
    CHECK(parse_group(R"({"format_version":1,"group":{"family":"cyclic","n":4}})")->order() == 4);
    CHECK_THROWS_AS(parse_group(R"({"format_version":2,"group":{"family":"cyclic","n":4}})"),
                    ParseError);
    CHECK_THROWS_AS(parse_group(R"({"family":"frobnicate"})"), ParseError);
    CHECK_THROWS_AS(parse_group(R"({"family":"cyclic"})"), ParseError);
    CHECK_THROWS_AS(parse_group(R"({"n":4})"), ParseError);
    CHECK_THROWS_AS(parse_group("not json"), ParseError);
    CHECK_THROWS_AS(parse_group("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_group(R"({"family":"cyclic","n":100})", 50), Error);
    CHECK_THROWS_AS(parse_group(
                        R"({"family":"direct_product","factors":[{"family":"cyclic","n":40},{"family":"cyclic","n":40}]})",
                        100),
                    OrderCapExceeded);
    // parse errors carry the byte position
    try {
        parse_group("{\"family\": }");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("12") != std::string::npos);
    }
}

TEST_CASE("system specs") {
    auto z3 = cyclic_group(3);
    auto sys = parse_system(
        R"({"system":{"parameters":["a"],"variables":1,"relators":[[{"var":0},{"var":0},{"param":0}]]}})",
        z3);
    CHECK(sys.num_variables == 1);
    CHECK(sys.parameters == std::vector<std::string>{"a"});
    CHECK(satisfies_system(z3, sys));
    CHECK_FALSE(satisfies_system(cyclic_group(2), sys));

    // concrete relator x·g with inverse exponent folding
    auto conc = parse_system(R"({"variables":1,"relators":[[{"var":0},{"const":1,"exp":-1}]]})", z3);
    auto sols = solve(z3, conc);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == std::vector<int>{1});

    CHECK_THROWS_AS(parse_system(R"({"variables":1,"relators":[[{"var":3}]]})", z3), ParseError);
    CHECK_THROWS_AS(parse_system(R"({"variables":1,"relators":[[{"const":9}]]})", z3), ParseError);
    CHECK_THROWS_AS(parse_system(R"({"variables":1,"relators":[[{"var":0,"exp":2}]]})", z3),
                    ParseError);
    CHECK_THROWS_AS(parse_system(R"({"variables":1})", z3), ParseError);

    // serialization round trip
    auto back = parse_system(system_to_json(sys).dump(), z3);
    CHECK(back.relators == sys.relators);
    CHECK(back.parameters == sys.parameters);
}

TEST_CASE("suite registry") {
    auto names = suite_names();
    CHECK(names.size() == 10);
    CHECK_THROWS_AS(run_suite("", 1), UnknownSuite);
    CHECK_THROWS_AS(run_suite("bogus", 1), UnknownSuite);

    auto a = run_suite("equations", 42);
    auto b = run_suite("equations", 42);
    CHECK(a.ok());
    CHECK(render_report(a) == render_report(b));
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(render_report(a).find("status: PASS") != std::string::npos);
    // seed and caps are part of the canonical report
    CHECK(render_report(run_suite("equations", 43)) != render_report(a));
}
