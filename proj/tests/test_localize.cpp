#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "grt/families.hpp"
#include "grt/localize.hpp"

using namespace grt;

TEST_CASE("unique p-divisibility") {
    CHECK(is_uniquely_p_divisible(cyclic_group(3), 2));
    CHECK_FALSE(is_uniquely_p_divisible(cyclic_group(2), 2));
    // divisibility scan agrees with the order-coprimality criterion
    for (const auto& [name, g] : mixed_catalog(24)) {
        (void)name;
        for (int p : {2, 3, 5, 7})
            CHECK(is_uniquely_p_divisible(g, p) == (g->order() % p != 0));
    }
}

TEST_CASE("p-locality") {
    CHECK(is_p_local(cyclic_group(3), make_prime_set({2})));
    CHECK_FALSE(is_p_local(cyclic_group(6), make_prime_set({2})));
    CHECK(is_p_local(symmetric_group(3), PrimeSet{}));
    CHECK_THROWS_AS(make_prime_set({4}), Error);
    CHECK_THROWS_AS(make_prime_set({1}), Error);
}

TEST_CASE("baumslag localization") {
    auto z6 = cyclic_group(6);
    auto l = baumslag_localize(z6, make_prime_set({2}));
    CHECK(is_isomorphic(l.group, cyclic_group(3)));
    CHECK(l.eta.is_surjective());

    auto q8 = quaternion_group();
    CHECK(baumslag_localize(q8, make_prime_set({2})).group->order() == 1);
    CHECK(baumslag_localize(q8, make_prime_set({3})).group->order() == 8);

    CHECK_THROWS_AS(baumslag_localize(symmetric_group(3), make_prime_set({2})), NotNilpotent);

    // idempotence
    auto once = baumslag_localize(direct_product(z6, cyclic_group(5)), make_prime_set({2, 3}));
    auto twice = baumslag_localize(once.group, make_prime_set({2, 3}));
    CHECK(twice.group->order() == once.group->order());
}

TEST_CASE("localization kernel is exactly what every P-local target kills") {
    // universal property at finite scale: Ker η is the P-torsion, which
    // every homomorphism into a P-local group must kill, and η itself
    // separates everything else
    for (const auto& [name, g] : nilpotent_catalog(36)) {
        (void)name;
        for (auto primes : {std::vector<int>{2}, {3}, {2, 3}, {5}}) {
            auto p = make_prime_set(primes);
            auto l = baumslag_localize(g, p);
            CHECK(is_p_local(l.group, p));
            auto ker = hom_kernel(l.eta);
            for (int x = 0; x < g->order(); ++x) {
                int n = g->element_order(x);
                for (int q : p.primes)
                    while (n % q == 0) n /= q;
                CHECK(ker.contains(x) == (n == 1));
            }
        }
    }
}

TEST_CASE("power identity") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    GroupAction inversion{z2, z3, {{0, 1, 2}, {0, 2, 1}}};
    CHECK(check_power_identity(z2, z3, inversion, 1));
    CHECK(check_power_identity(z2, z3, inversion, 2));
    for (const auto& [name, g] : mixed_catalog(20)) {
        (void)name;
        for (const auto& u : normal_subgroups(g)) {
            if (u.is_trivial()) continue;
            auto act = conjugation_action(u);
            for (int n = 1; n <= 6; ++n) CHECK(check_power_identity(g, act.space, act, n));
        }
    }
}

TEST_CASE("equivariant locality") {
    auto p2 = p_local_predicate(make_prime_set({2}));
    auto z3 = cyclic_group(3);
    CHECK(is_equivariantly_local(z3, trivial_group(), trivial_action(z3, trivial_group()), p2));
    CHECK(is_equivariantly_local(z3, cyclic_group(5), trivial_action(z3, cyclic_group(5)), p2));
    CHECK_FALSE(
        is_equivariantly_local(z3, cyclic_group(2), trivial_action(z3, cyclic_group(2)), p2));
    CHECK_THROWS_AS(is_equivariantly_local(cyclic_group(2), z3, trivial_action(cyclic_group(2), z3),
                                           p2),
                    PredicateFailsOnBase);
}

TEST_CASE("theorem 3.5 harness") {
    std::vector<std::pair<GroupRef, Subgroup>> instances;
    auto z15 = cyclic_group(15);
    instances.emplace_back(z15, subgroup_generated(z15, {5})); // order-3 subgroup
    for (const auto& [name, g] : mixed_catalog(30)) {
        (void)name;
        for (const auto& u : normal_subgroups(g)) instances.emplace_back(g, u);
    }
    for (auto primes : {std::vector<int>{2}, {3}, {2, 3}}) {
        auto rep = harness_theorem35(p_local_predicate(make_prime_set(primes)), instances);
        CHECK(rep.instances > 0);
        CHECK(rep.ok());
    }
    auto rep2 = harness_theorem35(torsion_free_at_2_predicate(), instances);
    CHECK(rep2.ok());
    auto rep4 = harness_theorem35(no_order_4_predicate(), instances);
    CHECK(rep4.ok());
}

TEST_CASE("lemma 3.1 harness") {
    auto p2 = p_local_predicate(make_prime_set({2}));
    auto z15 = cyclic_group(15);
    auto z5 = cyclic_group(5);
    auto q = quotient(z15, subgroup_generated(z15, {5}));
    CHECK(q.group->order() == 5);
    CHECK(harness_lemma31(q.projection, p2));
    CHECK(harness_lemma31(identity_hom(z15), p2));
    CHECK(harness_lemma31(identity_hom(z5), p2));

    SplitMix64 rng(3);
    int checked = 0;
    for (const auto& [name, g] : mixed_catalog(30)) {
        (void)name;
        if (!p2.test(g)) continue;
        for (const auto& u : normal_subgroups(g)) {
            auto qq = quotient(g, u);
            if (!p2.test(qq.group)) continue;
            CHECK(harness_lemma31(qq.projection, p2));
            ++checked;
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("section 4 harness") {
    auto q8 = quaternion_group();
    auto heis = heisenberg_group(3);
    CHECK(harness_section4(make_prime_set({3}), {q8}).ok());
    CHECK(harness_section4(make_prime_set({2}), {q8}).ok());
    CHECK(harness_section4(make_prime_set({2}), {heis}).ok());
    std::vector<GroupRef> batch;
    for (const auto& [name, g] : nilpotent_catalog(24)) {
        (void)name;
        batch.push_back(g);
    }
    CHECK(harness_section4(make_prime_set({2}), batch).ok());
    CHECK(harness_section4(make_prime_set({2, 3}), batch).ok());
}

TEST_CASE("equation systems with parameters") {
    // {a}, {x}, {x^2 a}
    EquationSystem sys;
    sys.parameters = {"a"};
    sys.num_variables = 1;
    sys.relators = {reduce({var_syl(0), var_syl(0), param_syl(0)}, nullptr)};
    CHECK(satisfies_system(cyclic_group(3), sys));
    CHECK_FALSE(satisfies_system(cyclic_group(2), sys));

    // empty relators, one variable: every assignment solves
    EquationSystem loose;
    loose.num_variables = 1;
    CHECK_FALSE(satisfies_system(cyclic_group(2), loose));
    CHECK(satisfies_system(trivial_group(), loose));

    auto pres = translate_system(sys);
    CHECK(pres.source_generators == std::vector<std::string>{"a"});
    CHECK(pres.target_generators == std::vector<std::string>{"a", "x1"});
    REQUIRE(pres.relators.size() == 1);
    CHECK(pres.relators[0] == "x1·x1·a");
}

TEST_CASE("x^p a system agrees with unique divisibility") {
    for (const auto& [name, g] : mixed_catalog(20)) {
        (void)name;
        for (int p : {2, 3, 5}) {
            EquationSystem sys;
            sys.parameters = {"a"};
            sys.num_variables = 1;
            std::vector<Syllable> raw(p, var_syl(0));
            raw.push_back(param_syl(0));
            sys.relators = {reduce(raw, nullptr)};
            CHECK(satisfies_system(g, sys) == is_uniquely_p_divisible(g, p));
        }
    }
}

TEST_CASE("ns maps") {
    auto s3 = symmetric_group(3);
    CHECK(is_ns_map(identity_hom(s3)));
    CHECK(is_ns_map(hom_from_images(s3, cyclic_group(1), {0, 0, 0, 0, 0, 0})));
    CHECK(is_ns_map(hom_from_images(cyclic_group(2), cyclic_group(4), {0, 2})));
    CHECK_FALSE(is_ns_map(hom_from_images(trivial_group(), s3, {0})));
}

TEST_CASE("prop 8.1 harness") {
    CHECK(harness_prop81(cyclic_group(6), make_prime_set({2})).ok());
    CHECK(harness_prop81(direct_product(cyclic_group(9), cyclic_group(7)), make_prime_set({2}))
              .ok());
    CHECK(harness_prop81(heisenberg_group(3), make_prime_set({5})).ok());
    CHECK(harness_prop81(quaternion_group(), make_prime_set({2})).ok());
}

TEST_CASE("graded lie ring") {
    // abelian: one layer, zero bracket
    auto ring_ab = graded_lie_ring(cyclic_group(12));
    CHECK(ring_ab.num_layers() == 1);
    CHECK(ring_ab.invariants[0] == FGAbelian{0, {12}});
    for (const auto& row : ring_ab.bracket[0][0])
        for (int v : row) CHECK(v == 0);

    // Q8: layers Z/2 x Z/2 and Z/2 with a nonzero bracket in degree 1
    auto ring_q8 = graded_lie_ring(quaternion_group());
    REQUIRE(ring_q8.num_layers() == 2);
    CHECK(ring_q8.invariants[0] == FGAbelian{0, {2, 2}});
    CHECK(ring_q8.invariants[1] == FGAbelian{0, {2}});
    bool nonzero = false;
    for (const auto& row : ring_q8.bracket[0][0])
        for (int v : row) nonzero = nonzero || v != 0;
    CHECK(nonzero);

    // Heisenberg p^3: layers (Z/p)^2 and Z/p, nondegenerate bracket
    for (int p : {2, 3}) {
        auto ring = graded_lie_ring(heisenberg_group(p));
        REQUIRE(ring.num_layers() == 2);
        CHECK(ring.invariants[0] == FGAbelian{0, {p, p}});
        CHECK(ring.invariants[1] == FGAbelian{0, {p}});
        for (int a = 1; a < ring.layers[0].group->order(); ++a) {
            bool hits = false;
            for (int b = 0; b < ring.layers[0].group->order(); ++b)
                hits = hits || ring.bracket[0][0][a][b] != 0;
            CHECK(hits);
        }
    }

    // axioms run as part of construction across a catalog
    for (const auto& [name, g] : nilpotent_catalog(64)) {
        (void)name;
        if (g->order() == 1) continue;
        CHECK(graded_lie_ring(g).num_layers() >= 1);
    }
    CHECK_THROWS_AS(graded_lie_ring(symmetric_group(3)), NotNilpotent);
}
