#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grt/families.hpp"
#include "grt/keune.hpp"

using namespace grt;

namespace {

SplitCoupleEpi identity_couple(const GroupRef& g) {
    return make_couple(identity_hom(g), identity_hom(g), identity_hom(g));
}

SplitCoupleEpi inclusion_couple(const Subgroup& u) {
    return c_translate(inclusion_crossed_module(u));
}

} // namespace

TEST_CASE("i_of and k_of basics") {
    auto z4 = cyclic_group(4);
    // identity couple: the diagonal
    auto diag = i_of(identity_couple(z4));
    CHECK(diag.size() == 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(diag.contains(a * 4 + b) == (a == b));

    // inclusion couple on Z/2 inside Z/4: order 8 inside Z/4 × Z/4
    auto c = inclusion_couple(subgroup_generated(z4, {2}));
    CHECK(i_of(c).size() == 8);

    // trivial target
    auto one = trivial_group();
    CHECK(i_of(identity_couple(one)).size() == 1);

    // K of an injection is the diagonal
    CHECK(k_of(identity_hom(z4)).members == diag.members);
    // K of Z/4 -> Z/2 has order 8
    auto z2 = cyclic_group(2);
    CHECK(k_of(hom_from_images(z4, z2, {0, 1, 0, 1})).size() == 8);
    // K of the trivial map is everything
    CHECK(k_of(hom_from_images(z4, one, {0, 0, 0, 0})).size() == 16);
}

TEST_CASE("right exact diagrams from inclusions") {
    for (const auto& [name, g] : mixed_catalog(16)) {
        (void)name;
        for (const auto& u : normal_subgroups(g)) {
            auto c = inclusion_couple(u);
            for (const auto& w : normal_subgroups(g)) {
                auto q = quotient(g, w);
                auto res = check_right_exact(c, q.projection); // throws on any split vote
                CHECK(res.image_equality == (u == w));
                CHECK(res.exact_sequence == res.image_equality);
                CHECK(res.coequalizer == res.image_equality);
                CHECK(res.pullback_epi == res.image_equality);
            }
        }
    }
}

TEST_CASE("right exact check rejects mismatched or non-epi phi") {
    auto z4 = cyclic_group(4);
    auto c = identity_couple(z4);
    auto emb = hom_from_images(cyclic_group(2), z4, {0, 2});
    CHECK_THROWS_AS(check_right_exact(c, emb), TargetMismatch);
    auto non_epi = hom_from_images(z4, z4, {0, 2, 0, 2});
    CHECK_THROWS_AS(check_right_exact(c, non_epi), Error);
}

TEST_CASE("coequalizer of a couple") {
    auto z4 = cyclic_group(4);
    // alpha0 = alpha1: coequalizer is the target itself
    CHECK(coequalizer_of_couple(identity_couple(z4)).group->order() == 4);
    // Z/2 inside Z/4: coequalizer Z/2
    auto q = coequalizer_of_couple(inclusion_couple(subgroup_generated(z4, {2})));
    CHECK(is_isomorphic(q.group, cyclic_group(2)));
    // whole group included in itself: trivial coequalizer
    auto s3 = symmetric_group(3);
    CHECK(coequalizer_of_couple(inclusion_couple(whole_subgroup(s3))).group->order() == 1);
}

TEST_CASE("coequalizer agrees with pi1 of the translated module") {
    for (const auto& [name, g] : mixed_catalog(16)) {
        (void)name;
        for (const auto& u : normal_subgroups(g)) {
            auto c = inclusion_couple(u);
            CHECK(is_isomorphic(coequalizer_of_couple(c).group,
                                pi1_of_precrossed(n_translate(c))));
        }
    }
}

TEST_CASE("translations verify their round trips") {
    // trivial module 1 -> G gives the identity couple
    auto s3 = symmetric_group(3);
    auto m = make_precrossed(hom_from_images(trivial_group(), s3, {0}),
                             trivial_action(s3, trivial_group()));
    auto c = c_translate(m);
    CHECK(c.domain()->order() == 6);
    CHECK(c.alpha0.images == c.alpha1.images);

    // Z/2 inside Z/4 lives on the order-8 semidirect product
    auto z4 = cyclic_group(4);
    auto c2 = inclusion_couple(subgroup_generated(z4, {2}));
    CHECK(c2.domain()->order() == 8);

    // round trips across a catalog (verified internally on every call)
    for (const auto& [name, g] : mixed_catalog(24)) {
        (void)name;
        for (const auto& u : normal_subgroups(g)) {
            auto couple = inclusion_couple(u);
            auto back = n_translate(couple);
            CHECK(back.boundary.source->order() == u.size());
        }
    }
}

TEST_CASE("phi_sub_g for the identity functor returns the action unchanged") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    GroupAction inversion{z2, z3, {{0, 1, 2}, {0, 2, 1}}};
    auto p = phi_sub_g(identity_functor(), z2, z3, inversion);
    CHECK(p.kernel.group->order() == 3);
    CHECK(p.action.act == inversion.act);
}

TEST_CASE("phi_sub_g for abelianization can kill the fiber") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    GroupAction inversion{z2, z3, {{0, 1, 2}, {0, 2, 1}}};
    auto p = phi_sub_g(abelianization_functor(), z2, z3, inversion);
    CHECK(p.kernel.group->order() == 1); // abelianization of S3 is Z/2
}

TEST_CASE("phi_sub_g for the square functor doubles the fiber") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    GroupAction inversion{z2, z3, {{0, 1, 2}, {0, 2, 1}}};
    auto p = phi_sub_g(square_functor(), z2, z3, inversion);
    CHECK(p.kernel.group->order() == 9);
    CHECK(is_isomorphic(p.kernel.group, direct_product(z3, z3)));
}

TEST_CASE("phi_pcr") {
    auto z4 = cyclic_group(4);
    auto m = inclusion_crossed_module(subgroup_generated(z4, {2}));

    auto id_m = phi_pcr(identity_functor(), m);
    CHECK(id_m.boundary.source->order() == 2);
    CHECK(hom_image(id_m.boundary) == hom_image(m.boundary));

    auto ab_m = phi_pcr(abelianization_functor(), m);
    CHECK(ab_m.boundary.source->order() == 2);
    CHECK(ab_m.boundary.target->order() == 4);
    CHECK(hom_image(ab_m.boundary).size() == 2);

    auto one = trivial_group();
    auto trivial_m = make_precrossed(hom_from_images(one, one, {0}), trivial_action(one, one));
    auto t = phi_pcr(square_functor(), trivial_m);
    CHECK(t.boundary.source->order() == 1);
}

TEST_CASE("naturality of the coaugmentations") {
    auto z4 = cyclic_group(4);
    auto s3 = symmetric_group(3);
    auto q8 = quaternion_group();
    std::vector<GroupHom> homs{hom_from_images(z4, cyclic_group(2), {0, 1, 0, 1}),
                               quotient(s3, normal_closure(s3, {generating_set(s3)[0]})).projection,
                               identity_hom(q8)};
    for (const auto& f : builtin_functors())
        for (const auto& h : homs) CHECK(verify_naturality(f, h));
}

TEST_CASE("condition 3 holds for the built-in right exact functors") {
    auto functors = builtin_functors(700);
    for (const auto& [name, g] : mixed_catalog(24)) {
        (void)name;
        for (const auto& u : normal_subgroups(g)) {
            if (u.is_trivial()) continue;
            for (const auto& f : functors) {
                try {
                    auto res = test_right_exact_condition3(f, u, 700);
                    CHECK_MESSAGE(res.ok, f.name, ": ", res.witness);
                } catch (const OrderCapExceeded&) {
                    // square functor on the larger instances
                }
            }
        }
    }
}

TEST_CASE("condition 6 holds for the built-in right exact functors") {
    auto functors = builtin_functors(700);
    // spot examples
    auto q8 = quaternion_group();
    auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
    auto proj = quotient(q8, center(q8)).projection;
    CHECK(is_isomorphic(proj.target, v4));
    for (const auto& f : functors) {
        try {
            auto res = test_right_exact_condition6(f, proj, 700);
            CHECK_MESSAGE(res.ok, f.name, ": ", res.witness);
            auto res_id = test_right_exact_condition6(f, identity_hom(q8), 700);
            CHECK(res_id.ok);
        } catch (const OrderCapExceeded&) {
        }
    }
    for (const auto& [name, g] : mixed_catalog(12)) {
        (void)name;
        for (const auto& u : normal_subgroups(g)) {
            if (u.is_trivial()) continue;
            auto p = quotient(g, u).projection;
            for (const auto& f : functors) {
                try {
                    auto res = test_right_exact_condition6(f, p, 700);
                    CHECK_MESSAGE(res.ok, f.name, ": ", res.witness);
                } catch (const OrderCapExceeded&) {
                }
            }
        }
    }
}

TEST_CASE("condition 5 holds on nerves of crossed modules") {
    auto z4 = cyclic_group(4);
    auto s3 = symmetric_group(3);
    std::vector<TruncatedSimplicialGroup> nerves;
    nerves.push_back(nerve(inclusion_crossed_module(subgroup_generated(z4, {2})), 2));
    for (const auto& u : normal_subgroups(s3)) {
        if (u.is_trivial() || u.is_whole()) continue;
        nerves.push_back(nerve(inclusion_crossed_module(u), 2));
    }
    for (const auto& f : builtin_functors(1400)) {
        for (const auto& k : nerves) {
            try {
                auto res = test_right_exact_condition5(f, k);
                CHECK_MESSAGE(res.ok, f.name, ": ", res.witness);
            } catch (const OrderCapExceeded&) {
            }
        }
    }
}
