#include "grt/localize.hpp"

#include <algorithm>
#include <numeric>

namespace grt {

PrimeSet make_prime_set(const std::vector<int>& ps) {
    PrimeSet out;
    for (int p : ps) {
        if (p < 2) throw Error(std::to_string(p) + " is not prime");
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) throw Error(std::to_string(p) + " is not prime");
        out.primes.insert(p);
    }
    return out;
}

bool is_uniquely_p_divisible(const GroupRef& g, int p) {
    std::vector<uint8_t> seen(g->order(), 0);
    for (int x = 0; x < g->order(); ++x) {
        int y = g->pow(x, p);
        if (seen[y]) return false;
        seen[y] = 1;
    }
    return true;
}

bool is_p_local(const GroupRef& g, const PrimeSet& p) {
    for (int q : p.primes)
        if (!is_uniquely_p_divisible(g, q)) return false;
    return true;
}

LocalityPredicate p_local_predicate(const PrimeSet& p) {
    std::string name = "P-local{";
    for (int q : p.primes) name += std::to_string(q) + ",";
    if (name.back() == ',') name.pop_back();
    name += "}";
    return {name, [p](const GroupRef& g) { return is_p_local(g, p); }};
}

namespace {
bool has_element_of_order(const GroupRef& g, int n) {
    for (int x = 0; x < g->order(); ++x)
        if (g->element_order(x) == n) return true;
    return false;
}
} // namespace

LocalityPredicate torsion_free_at_2_predicate() {
    return {"torsion-free-at-2", [](const GroupRef& g) { return !has_element_of_order(g, 2); }};
}

LocalityPredicate no_order_4_predicate() {
    return {"no-order-4", [](const GroupRef& g) { return !has_element_of_order(g, 4); }};
}

Localization baumslag_localize(const GroupRef& g, const PrimeSet& p) {
    if (!is_nilpotent(g)) throw NotNilpotent("localization needs a nilpotent group");
    // the P-torsion of a nilpotent group is the product of its Sylow
    // p-subgroups for p in P
    Subgroup torsion{g, std::vector<uint8_t>(g->order(), 0)};
    for (int x = 0; x < g->order(); ++x) {
        int n = g->element_order(x);
        for (int q : p.primes)
            while (n % q == 0) n /= q;
        torsion.members[x] = n == 1;
    }
    // must already be a subgroup; rebuild through generation to verify
    Subgroup generated = subgroup_generated(g, torsion.elements());
    if (!(generated == torsion)) throw Error("P-torsion failed to form a subgroup");
    auto q = quotient(g, torsion);
    if (!is_p_local(q.group, p)) throw Error("localization is not P-local");
    return Localization{q.group, q.projection};
}

std::optional<std::pair<int, int>> power_identity_witness(const GroupRef& a, const GroupRef& u,
                                                          const GroupAction& act, int n) {
    if (n < 1) throw Error("power must be at least 1");
    auto sd = semidirect_product(a, u, act);
    const GroupRef& s = sd.product;
    auto pow_by_mul = [&](int x, int e) {
        int acc = 0;
        for (int i = 0; i < e; ++i) acc = s->mul(acc, x);
        return acc;
    };
    for (int aa = 0; aa < a->order(); ++aa)
        for (int uu = 0; uu < u->order(); ++uu) {
            int x = sd.pair(aa, uu);
            int lhs = pow_by_mul(x, n);
            // a^{-n}(au)^n computed through the embeddings
            int a_n = sd.embed_group.images[a->pow(aa, n)];
            int z = s->mul(s->inv(a_n), pow_by_mul(x, n));
            if (sd.left_of(z) != 0) return std::make_pair(aa, uu);
            int rhs = s->mul(a_n, sd.embed_space.images[sd.right_of(z)]);
            if (lhs != rhs) return std::make_pair(aa, uu);
        }
    return std::nullopt;
}

bool check_power_identity(const GroupRef& a, const GroupRef& u, const GroupAction& act, int n) {
    return !power_identity_witness(a, u, act, n).has_value();
}

bool is_equivariantly_local(const GroupRef& a, const GroupRef& u, const GroupAction& act,
                            const LocalityPredicate& pred) {
    if (!pred.test(a)) throw PredicateFailsOnBase(pred.name + " fails on the acting group");
    return pred.test(semidirect_product(a, u, act).product);
}

HarnessReport harness_theorem35(const LocalityPredicate& pred,
                                const std::vector<std::pair<GroupRef, Subgroup>>& instances) {
    HarnessReport rep{"theorem35/" + pred.name, 0, 0, {}};
    for (const auto& [a, u] : instances) {
        if (!pred.test(a)) continue;
        auto act = conjugation_action(u);
        if (!pred.test(semidirect_product(a, act.space, act).product)) continue;
        ++rep.instances;
        if (!pred.test(quotient(a, u).group)) {
            ++rep.failures;
            rep.counterexamples.push_back("order " + std::to_string(a->order()) +
                                          " with U of order " + std::to_string(u.size()));
        }
    }
    return rep;
}

bool harness_lemma31(const GroupHom& f, const LocalityPredicate& pred) {
    if (!pred.test(f.source) || !pred.test(f.target))
        throw PredicateFailsOnBase(pred.name + " must hold on both ends");
    Subgroup ker = hom_kernel(f);
    auto act = conjugation_action(ker);
    auto sd = semidirect_product(f.source, act.space, act);
    auto r = realize(ker);
    auto pb = pullback(f, f);
    // (a1, a2) -> (a1, a1^{-1} a2)
    std::vector<int> images(pb.sub.group->order());
    for (int x = 0; x < pb.sub.group->order(); ++x) {
        int a1 = pb.to_left.images[x], a2 = pb.to_right.images[x];
        int k = f.source->mul(f.source->inv(a1), a2);
        if (r.index_of[k] < 0) return false;
        images[x] = sd.pair(a1, r.index_of[k]);
    }
    auto iso = hom_from_images(pb.sub.group, sd.product, std::move(images));
    if (!iso.is_injective() || pb.sub.group->order() != sd.product->order()) return false;
    return pred.test(sd.product);
}

HarnessReport harness_section4(const PrimeSet& p, const std::vector<GroupRef>& instances) {
    HarnessReport rep{"section4", 0, 0, {}};
    auto fail = [&rep](const std::string& what) {
        ++rep.failures;
        rep.counterexamples.push_back(what);
    };
    auto cls = [](const GroupRef& g) { return g->order() == 1 ? 0 : nilpotency_class(g); };
    for (const auto& g : instances) {
        ++rep.instances;
        auto tag = "order " + std::to_string(g->order());
        auto l = baumslag_localize(g, p);

        // eta maps the center into the center
        Subgroup zl = center(l.group);
        for (int z : center(g).elements())
            if (!zl.contains(l.eta.images[z])) fail(tag + ": eta(Z(G)) escapes Z(LG)");

        if (cls(l.group) > cls(g)) fail(tag + ": class grew under localization");
        if (!l.eta.is_surjective()) fail(tag + ": eta is not onto");

        // central extensions localize to central extensions
        auto zr = realize(center(g));
        for (const auto& ks : all_subgroups(zr.group)) {
            Subgroup k{g, std::vector<uint8_t>(g->order(), 0)};
            for (int i : ks.elements()) k.members[zr.inclusion.images[i]] = 1;
            auto q = quotient(g, k);
            auto lh = baumslag_localize(q.group, p);
            auto lk = baumslag_localize(realize(k).group, p);

            // induced map LG -> LH
            std::vector<int> lf(l.group->order(), -1);
            bool well_defined = true;
            for (int x = 0; x < g->order(); ++x) {
                int from = l.eta.images[x];
                int to = lh.eta.images[q.projection.images[x]];
                if (lf[from] == -1)
                    lf[from] = to;
                else if (lf[from] != to)
                    well_defined = false;
            }
            if (!well_defined) {
                fail(tag + ": induced localized map is not well defined");
                continue;
            }
            auto lf_hom = hom_from_images(l.group, lh.group, std::move(lf));
            Subgroup lf_ker = hom_kernel(lf_hom);
            for (int x : lf_ker.elements())
                if (!zl.contains(x)) fail(tag + ": localized extension is not central");
            if (!lf_hom.is_surjective()) fail(tag + ": localized quotient map not onto");

            // exactness of LK -> LG -> LH -> 1
            auto rk = realize(k);
            std::vector<int> lk_gens;
            for (int y = 0; y < lk.group->order(); ++y) {
                for (int x = 0; x < rk.group->order(); ++x)
                    if (lk.eta.images[x] == y) {
                        lk_gens.push_back(l.eta.images[rk.inclusion.images[x]]);
                        break;
                    }
            }
            if (!(subgroup_generated(l.group, lk_gens) == lf_ker))
                fail(tag + ": LK -> LG -> LH is not exact");
        }
    }
    return rep;
}

bool satisfies_system(const GroupRef& g, const EquationSystem& sys, long cap) {
    int na = static_cast<int>(sys.parameters.size());
    long total = 1;
    for (int i = 0; i < na + sys.num_variables; ++i) {
        total *= g->order();
        if (total > cap)
            throw SearchCapExceeded("assignment space exceeds cap " + std::to_string(cap));
    }
    std::vector<int> params(na, 0);
    long outer = 1;
    for (int i = 0; i < na; ++i) outer *= g->order();
    long inner = 1;
    for (int i = 0; i < sys.num_variables; ++i) inner *= g->order();
    for (long t = 0; t < outer; ++t) {
        int count = 0;
        std::vector<int> assignment(sys.num_variables, 0);
        for (long s = 0; s < inner && count < 2; ++s) {
            bool ok = true;
            for (const auto& r : sys.relators)
                if (evaluate(r, g, assignment, params) != 0) {
                    ok = false;
                    break;
                }
            if (ok) ++count;
            for (int i = sys.num_variables - 1; i >= 0; --i) {
                if (++assignment[i] < g->order()) break;
                assignment[i] = 0;
            }
        }
        if (count != 1) return false;
        for (int i = na - 1; i >= 0; --i) {
            if (++params[i] < g->order()) break;
            params[i] = 0;
        }
    }
    return true;
}

PresentationData translate_system(const EquationSystem& sys) {
    PresentationData out;
    out.source_generators = sys.parameters;
    out.target_generators = sys.parameters;
    for (int i = 0; i < sys.num_variables; ++i)
        out.target_generators.push_back("x" + std::to_string(i + 1));
    for (const auto& r : sys.relators) out.relators.push_back(word_to_string(r, sys.parameters));
    return out;
}

bool is_ns_map(const GroupHom& f) {
    const GroupRef& g = f.target;
    auto whole = whole_subgroup(g);
    return commutator_subgroup(g, whole, whole) ==
           commutator_subgroup(g, whole, hom_image(f));
}

HarnessReport harness_prop81(const GroupRef& n, const PrimeSet& p) {
    HarnessReport rep{"prop81", 0, 0, {}};
    auto l = baumslag_localize(n, p);
    if (!is_ns_map(l.eta)) {
        ++rep.failures;
        rep.counterexamples.push_back("eta is not an NS-map");
    }
    Subgroup im = hom_image(l.eta);
    int cls = l.group->order() == 1 ? 0 : nilpotency_class(l.group);
    for (const auto& u : normal_subgroups(l.group)) {
        if (!is_p_local(realize(u).group, p)) continue;
        for (int it = 1; it <= cls + 1; ++it) {
            ++rep.instances;
            if (!(commutator_subgroup(l.group, u, whole_subgroup(l.group), it) ==
                  commutator_subgroup(l.group, u, im, it))) {
                ++rep.failures;
                rep.counterexamples.push_back("U of order " + std::to_string(u.size()) +
                                              ", n = " + std::to_string(it));
            }
        }
    }
    return rep;
}

GradedLieRing graded_lie_ring(const GroupRef& g) {
    auto lcs = lower_central_series(g);
    if (!lcs.nilpotent) throw NotNilpotent("graded Lie ring needs a nilpotent group");
    GradedLieRing ring;
    ring.gamma = lcs.terms;
    int c = lcs.nilpotency_class;
    for (int k = 0; k < c; ++k) {
        auto r = realize(ring.gamma[k]);
        Subgroup next{r.group, std::vector<uint8_t>(r.group->order(), 0)};
        for (int x : ring.gamma[k + 1].elements()) next.members[r.index_of[x]] = 1;
        auto q = quotient(r.group, next);
        ring.invariants.push_back(abelian_invariants(q.group));
        ring.realized_gamma.push_back(std::move(r));
        ring.layers.push_back(std::move(q));
    }

    auto coset = [&](int layer, int parent_element) {
        return ring.layers[layer]
            .projection.images[ring.realized_gamma[layer].index_of[parent_element]];
    };

    // tabulate brackets and verify they only depend on the cosets
    ring.bracket.assign(c, std::vector<std::vector<std::vector<int>>>(c));
    for (int m = 0; m < c; ++m)
        for (int n = 0; n < c; ++n) {
            int t = m + n + 1;
            int rows = ring.layers[m].group->order();
            int cols = ring.layers[n].group->order();
            auto& table = ring.bracket[m][n];
            table.assign(rows, std::vector<int>(cols, -1));
            for (int x : ring.gamma[m].elements())
                for (int y : ring.gamma[n].elements()) {
                    int cm = g->comm(x, y);
                    int val;
                    if (t >= c) {
                        if (cm != 0)
                            throw WellDefinednessFailure("commutator exceeds the class");
                        val = 0;
                    } else {
                        if (ring.realized_gamma[t].index_of[cm] < 0)
                            throw WellDefinednessFailure("commutator escapes its layer");
                        val = coset(t, cm);
                    }
                    int a = coset(m, x), b = coset(n, y);
                    if (table[a][b] == -1)
                        table[a][b] = val;
                    else if (table[a][b] != val)
                        throw WellDefinednessFailure("bracket depends on the representative");
                }
            if (t >= c)
                for (auto& row : table)
                    for (int& v : row)
                        if (v == -1) v = 0;
        }

    // Lie axioms on all spanning pairs/triples
    for (int m = 0; m < c; ++m)
        for (int n = 0; n < c; ++n) {
            int t = m + n + 1;
            const GroupRef& lt = t < c ? ring.layers[t].group : trivial_group();
            const GroupRef& lm = ring.layers[m].group;
            const GroupRef& ln = ring.layers[n].group;
            for (int a = 0; a < lm->order(); ++a)
                for (int b = 0; b < ln->order(); ++b) {
                    // antisymmetry
                    if (lt->mul(ring.bracket[m][n][a][b], ring.bracket[n][m][b][a]) != 0)
                        throw Error("bracket is not antisymmetric");
                    // bilinearity in the first slot
                    for (int a2 = 0; a2 < lm->order(); ++a2)
                        if (ring.bracket[m][n][lm->mul(a, a2)][b] !=
                            lt->mul(ring.bracket[m][n][a][b], ring.bracket[m][n][a2][b]))
                            throw Error("bracket is not bilinear");
                }
            if (m == n)
                for (int a = 0; a < lm->order(); ++a)
                    if (ring.bracket[m][n][a][a] != 0) throw Error("bracket violates [x,x]=0");
        }
    for (int m = 0; m < c; ++m)
        for (int n = 0; n < c; ++n)
            for (int k = 0; k < c; ++k) {
                int t2 = m + n + k + 2;
                const GroupRef& lt = t2 < c ? ring.layers[t2].group : trivial_group();
                auto term = [&](int mm, int nn, int kk, int a, int b, int cc) {
                    if (mm + nn + 1 >= c) return 0; // inner bracket already trivial
                    int ab = ring.bracket[mm][nn][a][b];
                    return ring.bracket[mm + nn + 1][kk][ab][cc];
                };
                for (int a = 0; a < ring.layers[m].group->order(); ++a)
                    for (int b = 0; b < ring.layers[n].group->order(); ++b)
                        for (int cc = 0; cc < ring.layers[k].group->order(); ++cc) {
                            int s = lt->mul(term(m, n, k, a, b, cc),
                                            lt->mul(term(n, k, m, b, cc, a),
                                                    term(k, m, n, cc, a, b)));
                            if (s != 0) throw Error("bracket violates the Jacobi identity");
                        }
            }
    return ring;
}

} // namespace grt
