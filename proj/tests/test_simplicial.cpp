#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grt/families.hpp"
#include "grt/simplicial.hpp"

using namespace grt;

TEST_CASE("constant simplicial group") {
    auto g = symmetric_group(3);
    auto k = constant_simplicial(g, 3);
    CHECK(verify_simplicial(k));
    auto m = moore_complex(k);
    CHECK(m.levels[0].is_whole());
    for (int n = 1; n <= 3; ++n) CHECK(m.levels[n].is_trivial());
    CHECK(is_isomorphic(homotopy_group(k, 0), g));
    CHECK(homotopy_group(k, 1)->order() == 1);
    CHECK(homotopy_group(k, 2)->order() == 1);
}

TEST_CASE("inclusion crossed module satisfies peiffer") {
    auto g = symmetric_group(3);
    for (const auto& n : normal_subgroups(g)) {
        if (n.is_trivial()) continue;
        auto pcm = inclusion_crossed_module(n);
        CHECK(pcm.peiffer);
    }
}

TEST_CASE("nerve of Z/2 inside Z/4") {
    auto z4 = cyclic_group(4);
    auto pcm = inclusion_crossed_module(subgroup_generated(z4, {2}));
    auto k = nerve(pcm, 3);
    CHECK(k.levels[0]->order() == 4);
    CHECK(k.levels[1]->order() == 8);
    CHECK(k.levels[2]->order() == 16);
    CHECK(k.levels[3]->order() == 32);
    CHECK(verify_simplicial(k));

    auto m = moore_complex(k);
    CHECK(m.levels[1].size() == 2); // NK_1 recovers the subgroup
    CHECK(m.levels[2].is_trivial());
    CHECK(m.levels[3].is_trivial());

    auto pi0 = homotopy_group(k, 0);
    CHECK(pi0->order() == 2);
    CHECK(is_isomorphic(pi0, cyclic_group(2)));
    CHECK(homotopy_group(k, 1)->order() == 1);
    CHECK(homotopy_group(k, 2)->order() == 1);
}

TEST_CASE("nerve of inclusions: pi0 is the quotient, pi1 trivial") {
    for (const auto& [name, g] : mixed_catalog(12)) {
        (void)name;
        for (const auto& n : normal_subgroups(g)) {
            if (n.is_trivial()) continue;
            auto pcm = inclusion_crossed_module(n);
            auto k = nerve(pcm, 2, 4000);
            CHECK(is_isomorphic(homotopy_group(k, 0), quotient(g, n).group));
            CHECK(homotopy_group(k, 1)->order() == 1);
        }
    }
}

TEST_CASE("nerve of a quotient boundary has pi1 the kernel") {
    // Z/4 -> Z/2 with trivial action is a crossed module; pi1 = Z/2
    auto z4 = cyclic_group(4);
    auto z2 = cyclic_group(2);
    auto d = hom_from_images(z4, z2, {0, 1, 0, 1});
    auto pcm = make_precrossed(d, trivial_action(z2, z4));
    CHECK(pcm.peiffer);
    auto k = nerve(pcm, 2);
    CHECK(homotopy_group(k, 0)->order() == 1);
    auto pi1 = homotopy_group(k, 1);
    CHECK(is_isomorphic(pi1, z2));
    CHECK(is_isomorphic(pi1_of_precrossed(pcm), trivial_group()));
}

TEST_CASE("peiffer violation is witnessed and blocks the nerve") {
    // trivial boundary from a nonabelian group: u1^{∂u2} = u1 but u1^{u2} != u1
    auto s3 = symmetric_group(3);
    auto one = trivial_group();
    GroupHom d{s3, one, std::vector<int>(6, 0)};
    auto w = peiffer_witness(d, trivial_action(one, s3));
    REQUIRE(w.has_value());
    CHECK(s3->conj(w->first, w->second) != w->first);
    auto pcm = make_precrossed(d, trivial_action(one, s3));
    CHECK_FALSE(pcm.peiffer);
    CHECK_THROWS_AS(nerve(pcm, 2), PeifferViolated);
}

TEST_CASE("non-equivariant boundary is rejected") {
    // identity Z/4 -> Z/4 with the inversion action is not equivariant
    auto z4 = cyclic_group(4);
    GroupAction inversion{z4, z4, {{0, 1, 2, 3}, {0, 3, 2, 1}, {0, 1, 2, 3}, {0, 3, 2, 1}}};
    CHECK_THROWS_AS(make_precrossed(identity_hom(z4), inversion), NotAHomomorphism);
}

TEST_CASE("simplicial identity witness on a corrupted complex") {
    auto z4 = cyclic_group(4);
    auto k = nerve(inclusion_crossed_module(subgroup_generated(z4, {2})), 2);
    std::swap(k.faces[2][1].images[3], k.faces[2][1].images[5]);
    auto w = simplicial_witness(k);
    REQUIRE(w.has_value());
    CHECK(w->level == 2);
}

TEST_CASE("truncation recovers the crossed module") {
    auto q8 = quaternion_group();
    for (const auto& n : normal_subgroups(q8)) {
        if (n.is_trivial()) continue;
        auto pcm = inclusion_crossed_module(n);
        auto k = nerve(pcm, 2);
        auto back = truncate_to_precrossed(k);
        CHECK(back.peiffer);
        CHECK(back.boundary.source->order() == n.size());
        CHECK(is_isomorphic(back.boundary.source, pcm.boundary.source));
        CHECK(hom_image(back.boundary) == hom_image(pcm.boundary));
        CHECK(is_isomorphic(pi1_of_precrossed(back), pi1_of_precrossed(pcm)));
    }
}

TEST_CASE("pi1 of a precrossed module with non-normal image is rejected") {
    auto s3 = symmetric_group(3);
    // order-2 subgroups of S3 are not normal; fake a boundary onto one
    Subgroup h = subgroup_generated(s3, {1});
    if (!h.is_normal()) {
        auto r = realize(h);
        GroupHom d{r.group, s3, r.inclusion.images};
        CHECK_THROWS_AS(pi1_of_precrossed(PrecrossedModule{d, conjugation_action(whole_subgroup(r.group)), true}),
                        NotNormal);
    }
}

TEST_CASE("map_levels preserves the simplicial identities on an isomorphic copy") {
    auto z4 = cyclic_group(4);
    auto k = nerve(inclusion_crossed_module(subgroup_generated(z4, {2})), 2);
    auto copy = map_levels(
        k, [](const GroupRef& g) { return g; },
        [](const GroupHom& f) { return f; });
    CHECK(verify_simplicial(copy));
    CHECK(is_isomorphic(homotopy_group(copy, 0), homotopy_group(k, 0)));
}
