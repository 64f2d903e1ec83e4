#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grt/families.hpp"
#include "grt/levine.hpp"

using namespace grt;

TEST_CASE("word reduction") {
    auto z4 = cyclic_group(4);
    CHECK(reduce({}, z4).empty());
    CHECK(reduce({const_syl(1), const_syl(3)}, z4).empty());
    CHECK(reduce({var_syl(0), var_syl(0, -1)}, z4).empty());
    // cancellation exposing a constant pair
    CHECK(reduce({const_syl(1), var_syl(0), var_syl(0, -1), const_syl(3)}, z4).empty());
    auto w = reduce({const_syl(1), const_syl(1), var_syl(0)}, z4);
    REQUIRE(w.syllables.size() == 2);
    CHECK(w.syllables[0].index == 2);
    // identity constants vanish
    CHECK(reduce({const_syl(0)}, z4).empty());
    CHECK_THROWS_AS(reduce({const_syl(1)}, nullptr), Error);
}

TEST_CASE("contractible and acyclic") {
    auto z4 = cyclic_group(4);
    auto just_const = reduce({const_syl(1)}, z4);
    CHECK(is_contractible(just_const));
    CHECK(is_acyclic(just_const));
    auto conj = reduce({var_syl(0), const_syl(1), var_syl(0, -1)}, z4);
    CHECK(is_contractible(conj));
    CHECK(is_acyclic(conj));
    auto xg = reduce({var_syl(0), const_syl(1)}, z4);
    CHECK_FALSE(is_contractible(xg));
    CHECK_FALSE(is_acyclic(xg));
    // x y x^-1 y^-1: acyclic but not contractible
    auto comm = reduce({var_syl(0), var_syl(1), var_syl(0, -1), var_syl(1, -1)}, z4);
    CHECK_FALSE(is_contractible(comm));
    CHECK(is_acyclic(comm));
}

TEST_CASE("random words satisfy their advertised shapes") {
    SplitMix64 rng(7);
    auto g = symmetric_group(3);
    for (int t = 0; t < 200; ++t) {
        auto w = random_contractible_word(rng, g, 3);
        CHECK(is_contractible(w));
        CHECK(is_acyclic(w)); // kernel containment
        auto v = random_acyclic_word(rng, g, 3);
        CHECK(is_acyclic(v));
    }
}

TEST_CASE("evaluation is invariant under reduction") {
    SplitMix64 rng(13);
    auto g = quaternion_group();
    for (int t = 0; t < 300; ++t) {
        std::vector<Syllable> raw;
        int len = rng.pick(10);
        for (int i = 0; i < len; ++i) {
            switch (rng.pick(2)) {
            case 0: raw.push_back(const_syl(rng.pick(g->order()))); break;
            default: raw.push_back(var_syl(rng.pick(2), rng.pick(2) == 0 ? 1 : -1)); break;
            }
        }
        std::vector<int> assignment{rng.pick(g->order()), rng.pick(g->order())};
        FreeProductWord unreduced{raw};
        CHECK(evaluate(unreduced, g, assignment) == evaluate(reduce(raw, g), g, assignment));
    }
}

TEST_CASE("evaluate basics") {
    auto z3 = cyclic_group(3);
    CHECK(evaluate(FreeProductWord{}, z3, {}) == 0);
    auto w = reduce({var_syl(0), var_syl(0), const_syl(1)}, z3);
    CHECK(evaluate(w, z3, {1}) == 0); // 1+1+1 = 0 mod 3
    CHECK(evaluate(w, z3, {0}) == 1);
    auto s3 = symmetric_group(3);
    int g0 = generating_set(s3)[0];
    auto comm = reduce({var_syl(0, -1), const_syl(s3->inv(g0)), var_syl(0), const_syl(g0)}, s3);
    CHECK(evaluate(comm, s3, {g0}) == 0);
}

TEST_CASE("solve") {
    auto z4 = cyclic_group(4);
    // x = empty word forces the identity
    auto sys = make_levine_system(z4, {FreeProductWord{}});
    auto sols = solve(z4, sys);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == std::vector<int>{0});

    // nilpotent groups: every sampled Levine system has exactly one solution
    SplitMix64 rng(99);
    for (const auto& [name, g] : nilpotent_catalog(27)) {
        (void)name;
        for (int t = 0; t < 10; ++t) {
            int nv = 1 + rng.pick(2);
            std::vector<FreeProductWord> ws;
            for (int i = 0; i < nv; ++i) ws.push_back(random_contractible_word(rng, g, nv));
            CHECK(solve(g, make_levine_system(g, ws)).size() == 1);
        }
    }

    auto a5 = alternating_group(5);
    std::vector<FreeProductWord> empty_ws(4);
    auto big = make_levine_system(a5, empty_ws);
    CHECK_THROWS_AS(solve(a5, big), SearchCapExceeded);
}

TEST_CASE("invisible subgroups") {
    for (const auto& [name, g] : nilpotent_catalog(32)) {
        (void)name;
        CHECK(invisible_subgroups(g).empty());
    }
    auto a5 = alternating_group(5);
    auto inv_a5 = invisible_subgroups(a5);
    REQUIRE(inv_a5.size() == 1);
    CHECK(inv_a5[0].is_whole());
    auto s3 = symmetric_group(3);
    auto inv_s3 = invisible_subgroups(s3);
    REQUIRE(inv_s3.size() == 1);
    CHECK(inv_s3[0].size() == 3);
}

TEST_CASE("two-solution witness for S3") {
    auto s3 = symmetric_group(3);
    auto h = invisible_subgroups(s3).front();
    auto w = build_two_solution_witness(s3, h);
    CHECK(w.system.num_variables == 1);
    CHECK(w.solution_generators != w.solution_trivial);
    auto sols = solve(s3, w.system);
    CHECK(sols.size() >= 2);
    CHECK(std::find(sols.begin(), sols.end(), w.solution_generators) != sols.end());
    CHECK(std::find(sols.begin(), sols.end(), w.solution_trivial) != sols.end());
}

TEST_CASE("two-solution witness for A5") {
    auto a5 = alternating_group(5);
    auto w = build_two_solution_witness(a5, whole_subgroup(a5));
    CHECK(w.system.num_variables <= 2);
    auto sols = solve(a5, w.system);
    CHECK(sols.size() >= 2);
}

TEST_CASE("witness rejects non-invisible subgroups") {
    auto z4 = cyclic_group(4);
    CHECK_THROWS_AS(build_two_solution_witness(z4, trivial_subgroup(z4)), Error);
    CHECK_THROWS_AS(build_two_solution_witness(z4, subgroup_generated(z4, {2})), Error);
}

TEST_CASE("prop58 harness") {
    auto heis = heisenberg_group(3);
    auto rep = harness_prop58(heis, 5, 40);
    CHECK_FALSE(rep.has_invisible);
    CHECK(rep.ok());
    CHECK(rep.systems_checked == 40);

    auto rep_a5 = harness_prop58(alternating_group(5), 5, 10);
    CHECK(rep_a5.has_invisible);
    CHECK(rep_a5.ok());

    auto rep_triv = harness_prop58(trivial_group(), 5, 5);
    CHECK(rep_triv.ok());
}

TEST_CASE("prop510 harness") {
    auto q8 = quaternion_group();
    CHECK(harness_prop510(q8, center(q8)).ok());
    CHECK(harness_prop510(q8, whole_subgroup(q8)).ok());
    auto heis = heisenberg_group(3);
    CHECK(harness_prop510(heis, trivial_subgroup(heis)).ok());
    CHECK_THROWS_AS(harness_prop510(symmetric_group(3), trivial_subgroup(symmetric_group(3))),
                    NotNilpotent);
}

TEST_CASE("lemma 5.11") {
    auto s3 = symmetric_group(3);
    auto a3 = invisible_subgroups(s3).front();
    CHECK(check_lemma511(s3, trivial_subgroup(s3), a3));
    CHECK(check_lemma511(s3, a3, a3));
    CHECK(check_lemma511(s3, trivial_subgroup(s3), trivial_subgroup(s3)));
    for (const auto& [name, g] : mixed_catalog(16)) {
        (void)name;
        auto normals = normal_subgroups(g);
        for (const auto& u : normals)
            for (const auto& v : normals) {
                bool contained = true;
                for (int x : u.elements())
                    if (!v.contains(x)) contained = false;
                if (!contained) continue;
                CHECK(check_lemma511(g, u, v, 600));
            }
    }
}
