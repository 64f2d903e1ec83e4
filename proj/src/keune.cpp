#include "grt/keune.hpp"

#include <map>

namespace grt {

namespace {

void require_same(const GroupRef& a, const GroupRef& b, const char* what) {
    if (a != b && a->order() != b->order()) throw TargetMismatch(what);
}

} // namespace

SplitCoupleEpi make_couple(GroupHom alpha0, GroupHom alpha1, GroupHom section) {
    require_same(alpha0.source, alpha1.source, "couple maps need a common source");
    require_same(alpha0.target, alpha1.target, "couple maps need a common target");
    require_same(section.source, alpha0.target, "section must start at the couple target");
    require_same(section.target, alpha0.source, "section must land in the couple source");
    for (int h = 0; h < alpha0.target->order(); ++h) {
        if (alpha0.images[section.images[h]] != h || alpha1.images[section.images[h]] != h)
            throw Error("section fails the splitting identities at h=" + std::to_string(h));
    }
    if (!alpha0.is_surjective() || !alpha1.is_surjective())
        throw Error("couple maps must be epimorphisms");
    return SplitCoupleEpi{std::move(alpha0), std::move(alpha1), std::move(section)};
}

Subgroup i_of(const SplitCoupleEpi& c, const GroupRef& product) {
    int nh = c.target()->order();
    Subgroup s{product, std::vector<uint8_t>(product->order(), 0)};
    for (int g = 0; g < c.domain()->order(); ++g)
        s.members[c.alpha0.images[g] * nh + c.alpha1.images[g]] = 1;
    return s;
}

Subgroup i_of(const SplitCoupleEpi& c) {
    return i_of(c, direct_product(c.target(), c.target()));
}

Subgroup k_of(const GroupHom& phi, const GroupRef& product) {
    int n = phi.source->order();
    Subgroup s{product, std::vector<uint8_t>(product->order(), 0)};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (phi.images[a] == phi.images[b]) s.members[a * n + b] = 1;
    return s;
}

Subgroup k_of(const GroupHom& phi) {
    return k_of(phi, direct_product(phi.source, phi.source));
}

RightExactCheck check_right_exact(const SplitCoupleEpi& c, const GroupHom& phi) {
    require_same(phi.source, c.target(), "phi must start at the couple target");
    if (!phi.is_surjective()) throw Error("phi must be an epimorphism");
    const GroupRef& g = c.target();
    const GroupRef& gp = c.domain();

    // (1) I(α) = K(φ), both as subsets of G×G
    auto product = direct_product(g, g);
    bool c1 = i_of(c, product).members == k_of(phi, product).members;

    // (2) N --α̃₀--> G --φ--> G'' -> 1 exact, N = Ker α₁
    Subgroup n = hom_kernel(c.alpha1);
    bool c2 = image_of(c.alpha0, n) == hom_kernel(phi) && phi.is_surjective();

    // (3) φ is the coequalizer: φα₀ = φα₁ and Ker φ is the normal
    // closure of the difference elements α₀(g')α₁(g')⁻¹
    bool equalizes = true;
    std::vector<int> diffs;
    for (int x = 0; x < gp->order(); ++x) {
        int d = g->mul(c.alpha0.images[x], g->inv(c.alpha1.images[x]));
        diffs.push_back(d);
        if (phi.images[c.alpha0.images[x]] != phi.images[c.alpha1.images[x]]) equalizes = false;
    }
    bool c3 = equalizes && normal_closure(g, diffs) == hom_kernel(phi);

    // (4) φα₀ = φα₁ and (α₀,α₁): G' -> G ×_{G''} G is onto
    bool c4 = equalizes;
    if (c4) {
        auto pb = pullback(phi, phi);
        std::vector<uint8_t> hit(pb.sub.group->order(), 0);
        int count = 0;
        for (int x = 0; x < gp->order(); ++x) {
            int pair = c.alpha0.images[x] * g->order() + c.alpha1.images[x];
            int idx = pb.sub.index_of[pair];
            if (idx < 0) {
                c4 = false;
                break;
            }
            if (!hit[idx]) {
                hit[idx] = 1;
                ++count;
            }
        }
        c4 = c4 && count == pb.sub.group->order();
    }

    if (c1 != c2 || c1 != c3 || c1 != c4)
        throw Error("right exactness conditions disagree: (1)=" + std::to_string(c1) +
                    " (2)=" + std::to_string(c2) + " (3)=" + std::to_string(c3) +
                    " (4)=" + std::to_string(c4));
    return RightExactCheck{c1, c2, c3, c4};
}

Quotient coequalizer_of_couple(const SplitCoupleEpi& c) {
    Subgroup n = hom_kernel(c.alpha1);
    Subgroup h = image_of(c.alpha0, n);
    if (auto w = h.normality_witness())
        throw NotNormal("Im(α₀|N) not normal, conjugator " + std::to_string(w->first));
    return quotient(c.target(), h);
}

namespace {

PrecrossedModule n_translate_raw(const SplitCoupleEpi& c) {
    const GroupRef& gp = c.domain();
    const GroupRef& h = c.target();
    auto r = realize(hom_kernel(c.alpha1));
    std::vector<int> boundary(r.group->order());
    for (int i = 0; i < r.group->order(); ++i)
        boundary[i] = c.alpha0.images[r.inclusion.images[i]];
    // h acts on N by n^h = n^{α⁰h}
    std::vector<std::vector<int>> act(h->order(), std::vector<int>(r.group->order()));
    for (int x = 0; x < h->order(); ++x)
        for (int i = 0; i < r.group->order(); ++i) {
            int image = gp->conj(r.inclusion.images[i], c.section.images[x]);
            if (r.index_of[image] < 0) throw Error("kernel of α₁ is not section-stable");
            act[x][i] = r.index_of[image];
        }
    return make_precrossed(GroupHom{r.group, h, std::move(boundary)},
                           GroupAction{h, r.group, std::move(act)});
}

SplitCoupleEpi c_translate_raw(const PrecrossedModule& m) {
    const GroupRef& h = m.boundary.target;
    const GroupRef& u = m.boundary.source;
    auto sd = semidirect_product(h, u, m.action);
    std::vector<int> a0(sd.product->order());
    for (int x = 0; x < sd.product->order(); ++x)
        a0[x] = h->mul(sd.left_of(x), m.boundary.images[sd.right_of(x)]);
    return SplitCoupleEpi{hom_from_images(sd.product, h, std::move(a0)), sd.project,
                          sd.embed_group};
}

} // namespace

PrecrossedModule n_translate(const SplitCoupleEpi& c) {
    auto m = n_translate_raw(c);
    // round trip: (h,n) -> α⁰h·n is an isomorphism H⋉N ≅ G' matching the couples
    auto back = c_translate_raw(m);
    const GroupRef& gp = c.domain();
    auto r = realize(hom_kernel(c.alpha1));
    int nn = r.group->order();
    std::vector<int> images(back.domain()->order());
    for (int x = 0; x < back.domain()->order(); ++x)
        images[x] = gp->mul(c.section.images[x / nn], r.inclusion.images[x % nn]);
    auto iso = hom_from_images(back.domain(), gp, std::move(images));
    if (!iso.is_injective() || back.domain()->order() != gp->order())
        throw Error("couple translation round trip is not an isomorphism");
    for (int x = 0; x < back.domain()->order(); ++x)
        if (c.alpha0.images[iso.images[x]] != back.alpha0.images[x] ||
            c.alpha1.images[iso.images[x]] != back.alpha1.images[x])
            throw Error("couple translation round trip does not commute");
    return m;
}

SplitCoupleEpi c_translate(const PrecrossedModule& m) {
    auto c = c_translate_raw(m);
    // round trip: u -> (1,u) identifies U with Ker α₁ compatibly
    auto back = n_translate_raw(c);
    const GroupRef& u = m.boundary.source;
    if (back.boundary.source->order() != u->order())
        throw Error("module translation round trip changes the order");
    auto sd_embed = [&](int x) { return 0 * u->order() + x; };
    auto r = realize(hom_kernel(c.alpha1));
    std::vector<int> iso(u->order());
    for (int x = 0; x < u->order(); ++x) {
        iso[x] = r.index_of[sd_embed(x)];
        if (iso[x] < 0) throw Error("module translation round trip loses elements");
    }
    for (int x = 0; x < u->order(); ++x) {
        if (back.boundary.images[iso[x]] != m.boundary.images[x])
            throw Error("module translation round trip moves the boundary");
        for (int h = 0; h < m.boundary.target->order(); ++h)
            if (back.action.act[h][iso[x]] != iso[m.action.act[h][x]])
                throw Error("module translation round trip moves the action");
    }
    return c;
}

// ---- endofunctor oracles ----

EndofunctorOracle identity_functor() {
    EndofunctorOracle f;
    f.name = "identity";
    f.apply_group = [](const GroupRef& g) { return g; };
    f.apply_hom = [](const GroupHom& h) { return h; };
    f.coaugment = [](const GroupRef& g) { return identity_hom(g); };
    return f;
}

namespace {

EndofunctorOracle quotient_functor(std::string name,
                                   std::function<Subgroup(const GroupRef&)> term) {
    auto memo = std::make_shared<std::map<const FiniteGroup*, Quotient>>();
    auto get = [memo, term = std::move(term)](const GroupRef& g) -> const Quotient& {
        auto it = memo->find(g.get());
        if (it == memo->end()) it = memo->emplace(g.get(), quotient(g, term(g))).first;
        return it->second;
    };
    EndofunctorOracle f;
    f.name = std::move(name);
    f.apply_group = [get](const GroupRef& g) { return get(g).group; };
    f.coaugment = [get](const GroupRef& g) { return get(g).projection; };
    f.apply_hom = [get](const GroupHom& h) {
        const Quotient& qs = get(h.source);
        const Quotient& qt = get(h.target);
        std::vector<int> images(qs.group->order(), -1);
        for (int x = 0; x < h.source->order(); ++x) {
            int from = qs.projection.images[x];
            int to = qt.projection.images[h.images[x]];
            if (images[from] == -1)
                images[from] = to;
            else if (images[from] != to)
                throw NotAHomomorphism("induced quotient map is not well defined");
        }
        return hom_from_images(qs.group, qt.group, std::move(images));
    };
    return f;
}

} // namespace

EndofunctorOracle abelianization_functor() {
    return quotient_functor("abelianization", [](const GroupRef& g) {
        auto whole = whole_subgroup(g);
        return commutator_subgroup(g, whole, whole);
    });
}

EndofunctorOracle nilpotent_quotient_functor(int c) {
    if (c < 2) throw Error("nilpotent quotient needs c >= 2");
    return quotient_functor("mod-gamma" + std::to_string(c), [c](const GroupRef& g) {
        auto series = lower_central_series(g).terms;
        size_t idx = std::min<size_t>(c - 1, series.size() - 1);
        return series[idx];
    });
}

EndofunctorOracle square_functor(int order_cap) {
    auto memo = std::make_shared<std::map<const FiniteGroup*, std::pair<GroupRef, GroupRef>>>();
    auto get = [memo, order_cap](const GroupRef& g) -> const GroupRef& {
        auto it = memo->find(g.get());
        if (it == memo->end()) {
            long sq = static_cast<long>(g->order()) * g->order();
            if (sq > order_cap)
                throw OrderCapExceeded("square of order " + std::to_string(g->order()) +
                                       " exceeds cap " + std::to_string(order_cap));
            it = memo->emplace(g.get(), std::make_pair(g, direct_product(g, g))).first;
        }
        return it->second.second;
    };
    EndofunctorOracle f;
    f.name = "square";
    f.apply_group = get;
    f.apply_hom = [get](const GroupHom& h) {
        const GroupRef& src = get(h.source);
        const GroupRef& dst = get(h.target);
        int n = h.source->order(), m = h.target->order();
        std::vector<int> images(src->order());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) images[a * n + b] = h.images[a] * m + h.images[b];
        return hom_from_images(src, dst, std::move(images));
    };
    f.coaugment = [get](const GroupRef& g) {
        const GroupRef& dst = get(g);
        std::vector<int> images(g->order());
        for (int x = 0; x < g->order(); ++x) images[x] = x * g->order() + x;
        return hom_from_images(g, dst, std::move(images));
    };
    return f;
}

std::vector<EndofunctorOracle> builtin_functors(int order_cap) {
    return {identity_functor(), abelianization_functor(), nilpotent_quotient_functor(3),
            nilpotent_quotient_functor(4), square_functor(order_cap)};
}

bool verify_naturality(const EndofunctorOracle& f, const GroupHom& hom) {
    auto lhs = compose(f.apply_hom(hom), f.coaugment(hom.source));
    auto rhs = compose(f.coaugment(hom.target), hom);
    return lhs.images == rhs.images;
}

PhiSubG phi_sub_g(const EndofunctorOracle& f, const GroupRef& g, const GroupRef& u,
                  const GroupAction& a, int order_cap) {
    auto sd = semidirect_product(g, u, a, order_cap);
    GroupRef fs = f.apply_group(sd.product);
    GroupRef fg = f.apply_group(g);
    auto f_project = f.apply_hom(sd.project);
    auto f_embed = f.apply_hom(sd.embed_group);
    if (compose(f_project, f_embed).images != identity_hom(fg).images)
        throw Error("functor breaks the split retraction");

    auto r = realize(hom_kernel(f_project));
    std::vector<std::vector<int>> act(fg->order(), std::vector<int>(r.group->order()));
    for (int x = 0; x < fg->order(); ++x)
        for (int k = 0; k < r.group->order(); ++k) {
            int image = fs->conj(r.inclusion.images[k], f_embed.images[x]);
            if (r.index_of[image] < 0) throw Error("kernel is not stable under conjugation");
            act[x][k] = r.index_of[image];
        }
    GroupAction action{fg, r.group, act};

    // internal factorization Φ(G⋉U) = ΦG ⋉ Φ_G U
    if (static_cast<long>(fg->order()) * r.group->order() != fs->order())
        throw Error("split decomposition has the wrong order");
    auto check = semidirect_product(fg, r.group, action, order_cap);
    std::vector<int> iso(check.product->order());
    for (int x = 0; x < check.product->order(); ++x)
        iso[x] = fs->mul(f_embed.images[check.left_of(x)],
                         r.inclusion.images[check.right_of(x)]);
    auto iso_hom = hom_from_images(check.product, fs, std::move(iso));
    if (!iso_hom.is_injective()) throw Error("split decomposition is not an isomorphism");

    return PhiSubG{std::move(r), std::move(action), std::move(fs), std::move(f_project),
                   std::move(f_embed), std::move(sd)};
}

PrecrossedModule phi_pcr(const EndofunctorOracle& f, const PrecrossedModule& m, int order_cap) {
    const GroupRef& g = m.boundary.target;
    const GroupRef& u = m.boundary.source;
    auto psg = phi_sub_g(f, g, u, m.action, order_cap);
    std::vector<int> mu(psg.sd.product->order());
    for (int x = 0; x < psg.sd.product->order(); ++x)
        mu[x] = g->mul(psg.sd.left_of(x), m.boundary.images[psg.sd.right_of(x)]);
    auto f_mu = f.apply_hom(hom_from_images(psg.sd.product, g, std::move(mu)));
    std::vector<int> boundary(psg.kernel.group->order());
    for (int k = 0; k < psg.kernel.group->order(); ++k)
        boundary[k] = f_mu.images[psg.kernel.inclusion.images[k]];
    return make_precrossed(GroupHom{psg.kernel.group, f.apply_group(g), std::move(boundary)},
                           psg.action);
}

ConditionResult test_right_exact_condition3(const EndofunctorOracle& f, const Subgroup& u,
                                            int order_cap) {
    auto q = quotient(u.parent, u);
    auto fm = phi_pcr(f, inclusion_crossed_module(u), order_cap);
    auto f_proj = f.apply_hom(q.projection);
    if (!f_proj.is_surjective()) return {false, "induced map onto the quotient is not onto"};
    Subgroup im = hom_image(fm.boundary);
    Subgroup ker = hom_kernel(f_proj);
    if (im.members != ker.members) {
        for (int x = 0; x < static_cast<int>(im.members.size()); ++x)
            if (im.members[x] != ker.members[x])
                return {false, "image/kernel mismatch at element " + std::to_string(x)};
    }
    return {true, ""};
}

ConditionResult test_right_exact_condition6(const EndofunctorOracle& f, const GroupHom& phi,
                                            int order_cap) {
    if (!phi.is_surjective()) throw Error("phi must be an epimorphism");
    (void)order_cap;
    auto pb = pullback(phi, phi);
    GroupRef fg = f.apply_group(phi.source);
    auto fp0 = f.apply_hom(pb.to_left);
    auto fp1 = f.apply_hom(pb.to_right);
    std::vector<int> diffs;
    for (int x = 0; x < fp0.source->order(); ++x)
        diffs.push_back(fg->mul(fp0.images[x], fg->inv(fp1.images[x])));
    Subgroup closure = normal_closure(fg, diffs);
    auto f_phi = f.apply_hom(phi);
    if (!f_phi.is_surjective()) return {false, "functor image of phi is not onto"};
    Subgroup ker = hom_kernel(f_phi);
    if (closure.members != ker.members) {
        for (int x = 0; x < static_cast<int>(ker.members.size()); ++x)
            if (closure.members[x] != ker.members[x])
                return {false, "coequalizer kernel mismatch at element " + std::to_string(x)};
    }
    return {true, ""};
}

ConditionResult test_right_exact_condition5(const EndofunctorOracle& f,
                                            const TruncatedSimplicialGroup& k) {
    auto mapped = map_levels(k, f.apply_group, f.apply_hom);
    if (auto w = simplicial_witness(mapped))
        return {false, "functor breaks simplicial identity " + w->identity};
    auto lhs = homotopy_group(mapped, 0);
    auto rhs = f.apply_group(homotopy_group(k, 0));
    if (!is_isomorphic(lhs, rhs))
        return {false, "pi0 of order " + std::to_string(lhs->order()) +
                           " differs from functor image of order " + std::to_string(rhs->order())};
    return {true, ""};
}

} // namespace grt
