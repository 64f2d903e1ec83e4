#include "grt/simplicial.hpp"

#include <functional>
#include <numeric>

namespace grt {

namespace {

// elements of nerve level n are tuples (g,u1..un), index lexicographic
std::vector<int> decode_tuple(int index, int n, int nu) {
    std::vector<int> t(n + 1);
    for (int i = n; i >= 1; --i) {
        t[i] = index % nu;
        index /= nu;
    }
    t[0] = index;
    return t;
}

int encode_tuple(const std::vector<int>& t, int nu) {
    int index = t[0];
    for (size_t i = 1; i < t.size(); ++i) index = index * nu + t[i];
    return index;
}

} // namespace

std::optional<std::pair<int, int>> peiffer_witness(const GroupHom& boundary,
                                                  const GroupAction& action) {
    const auto& u = *boundary.source;
    for (int u1 = 0; u1 < u.order(); ++u1)
        for (int u2 = 0; u2 < u.order(); ++u2) {
            int via_boundary = action.act[boundary.images[u2]][u1];
            int via_conjugation = u.conj(u1, u2);
            if (via_boundary != via_conjugation) return std::make_pair(u1, u2);
        }
    return std::nullopt;
}

PrecrossedModule make_precrossed(GroupHom boundary, GroupAction action) {
    verify_action(action);
    if (boundary.source != action.space && boundary.source->order() != action.space->order())
        throw TargetMismatch("boundary source must be the acted-on group");
    if (boundary.target != action.group && boundary.target->order() != action.group->order())
        throw TargetMismatch("boundary target must be the acting group");
    const auto& g = *boundary.target;
    for (int x = 0; x < boundary.source->order(); ++x)
        for (int h = 0; h < g.order(); ++h)
            if (boundary.images[action.act[h][x]] != g.conj(boundary.images[x], h))
                throw NotAHomomorphism("boundary is not equivariant at (u=" + std::to_string(x) +
                                       ", g=" + std::to_string(h) + ")");
    bool peiffer = !peiffer_witness(boundary, action).has_value();
    return PrecrossedModule{std::move(boundary), std::move(action), peiffer};
}

PrecrossedModule inclusion_crossed_module(const Subgroup& u) {
    auto act = conjugation_action(u);
    auto r = realize(u);
    // conjugation_action realizes u the same way; reuse its space
    std::vector<int> images(act.space->order());
    for (int i = 0; i < act.space->order(); ++i) images[i] = r.inclusion.images[i];
    GroupHom boundary{act.space, u.parent, std::move(images)};
    return make_precrossed(std::move(boundary), std::move(act));
}

std::optional<SimplicialWitness> simplicial_witness(const TruncatedSimplicialGroup& k) {
    int depth = k.depth();
    auto mismatch = [&](const GroupHom& a, const GroupHom& b, const std::string& what,
                        int level) -> std::optional<SimplicialWitness> {
        for (int x = 0; x < a.source->order(); ++x)
            if (a.images[x] != b.images[x]) return SimplicialWitness{what, level, x};
        return std::nullopt;
    };
    for (int n = 2; n <= depth; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i) {
                auto lhs = compose(k.faces[n - 1][i], k.faces[n][j]);
                auto rhs = compose(k.faces[n - 1][j - 1], k.faces[n][i]);
                if (auto w = mismatch(lhs, rhs, "d" + std::to_string(i) + " d" + std::to_string(j),
                                      n))
                    return w;
            }
    for (int n = 0; n + 2 <= depth; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                auto lhs = compose(k.degeneracies[n + 1][i], k.degeneracies[n][j]);
                auto rhs = compose(k.degeneracies[n + 1][j + 1], k.degeneracies[n][i]);
                if (auto w = mismatch(lhs, rhs, "s" + std::to_string(i) + " s" + std::to_string(j),
                                      n))
                    return w;
            }
    for (int n = 0; n + 1 <= depth; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                auto lhs = compose(k.faces[n + 1][i], k.degeneracies[n][j]);
                std::string what = "d" + std::to_string(i) + " s" + std::to_string(j);
                if (i == j || i == j + 1) {
                    if (auto w = mismatch(lhs, identity_hom(k.levels[n]), what, n)) return w;
                } else if (i < j) {
                    if (n == 0) continue;
                    auto rhs = compose(k.degeneracies[n - 1][j - 1], k.faces[n][i]);
                    if (auto w = mismatch(lhs, rhs, what, n)) return w;
                } else {
                    if (n == 0) continue;
                    auto rhs = compose(k.degeneracies[n - 1][j], k.faces[n][i - 1]);
                    if (auto w = mismatch(lhs, rhs, what, n)) return w;
                }
            }
    return std::nullopt;
}

bool verify_simplicial(const TruncatedSimplicialGroup& k) {
    return !simplicial_witness(k).has_value();
}

TruncatedSimplicialGroup constant_simplicial(const GroupRef& g, int depth) {
    TruncatedSimplicialGroup k;
    k.levels.assign(depth + 1, g);
    k.faces.resize(depth + 1);
    k.degeneracies.resize(depth + 1);
    for (int n = 1; n <= depth; ++n) k.faces[n].assign(n + 1, identity_hom(g));
    for (int n = 0; n < depth; ++n) k.degeneracies[n].assign(n + 1, identity_hom(g));
    return k;
}

MooreComplex moore_complex(const TruncatedSimplicialGroup& k) {
    MooreComplex m;
    int depth = k.depth();
    for (int n = 0; n <= depth; ++n) {
        Subgroup nk = whole_subgroup(k.levels[n]);
        for (int i = 1; i <= n; ++i) {
            Subgroup ker = hom_kernel(k.faces[n][i]);
            for (int x = 0; x < k.levels[n]->order(); ++x)
                nk.members[x] = nk.members[x] && ker.members[x];
        }
        m.levels.push_back(nk);
        m.realized.push_back(realize(nk));
        if (n >= 1) {
            std::vector<int> images(m.realized[n].group->order());
            for (int i = 0; i < m.realized[n].group->order(); ++i)
                images[i] = k.faces[n][0].images[m.realized[n].inclusion.images[i]];
            // the differential lands in the previous Moore level
            for (int x : images)
                if (!m.levels[n - 1].contains(x)) throw Error("moore differential escapes NK");
            m.differentials.push_back(
                hom_from_images(m.realized[n].group, k.levels[n - 1], std::move(images)));
        }
    }
    // d∘d is trivial wherever two differentials compose
    for (size_t n = 1; n + 1 < m.levels.size(); ++n) {
        const auto& upper = m.differentials[n]; // NK_{n+1} -> level n
        for (int x = 0; x < upper.source->order(); ++x) {
            int y = m.realized[n].index_of[upper.images[x]];
            if (m.differentials[n - 1].images[y] != 0) throw Error("d∘d is not trivial");
        }
    }
    return m;
}

GroupRef homotopy_group(const TruncatedSimplicialGroup& k, int n) {
    if (n < 0 || n >= k.depth())
        throw TruncationTooShallow("pi_" + std::to_string(n) + " needs depth > " +
                                   std::to_string(n));
    MooreComplex m = moore_complex(k);
    // cycles inside NK_n
    Subgroup cycles{m.realized[n].group, {}};
    if (n == 0) {
        cycles = whole_subgroup(m.realized[0].group);
    } else {
        cycles = hom_kernel(m.differentials[n - 1]);
    }
    // boundaries: image of d: NK_{n+1} -> NK_n, translated into the realized group
    std::vector<int> boundary_gens;
    const auto& d = m.differentials[n];
    for (int x = 0; x < d.source->order(); ++x)
        boundary_gens.push_back(m.realized[n].index_of[d.images[x]]);
    Subgroup boundaries = subgroup_generated(m.realized[n].group, boundary_gens);
    for (int b : boundaries.elements())
        if (!cycles.contains(b)) throw Error("boundaries escape cycles");
    // quotient inside the realized cycle group
    auto rc = realize(cycles);
    Subgroup b_in_c{rc.group, std::vector<uint8_t>(rc.group->order(), 0)};
    for (int b : boundaries.elements()) b_in_c.members[rc.index_of[b]] = 1;
    if (auto w = b_in_c.normality_witness())
        throw NotNormal("boundary image not normal in cycles (witness g=" +
                        std::to_string(w->first) + ")");
    return quotient(rc.group, b_in_c).group;
}

TruncatedSimplicialGroup nerve(const PrecrossedModule& m, int depth, int order_cap) {
    if (depth < 1) throw Error("nerve depth must be at least 1");
    if (auto w = peiffer_witness(m.boundary, m.action))
        throw PeifferViolated("peiffer identity fails at (u1=" + std::to_string(w->first) +
                              ", u2=" + std::to_string(w->second) + ")");
    const GroupRef& g = m.boundary.target;
    const GroupRef& u = m.boundary.source;
    int nu = u->order();

    TruncatedSimplicialGroup k;
    k.levels.push_back(g);
    k.faces.resize(depth + 1);
    k.degeneracies.resize(depth + 1);

    // total map E_n -> G, (g,u1..un) -> g∂(u1)...∂(un)
    std::vector<std::vector<int>> totals;
    {
        std::vector<int> t0(g->order());
        std::iota(t0.begin(), t0.end(), 0);
        totals.push_back(std::move(t0));
    }
    for (int n = 0; n < depth; ++n) {
        const GroupRef& level = k.levels[n];
        std::vector<std::vector<int>> act(level->order());
        for (int e = 0; e < level->order(); ++e) act[e] = m.action.act[totals[n][e]];
        GroupAction level_action{level, u, std::move(act)};
        auto sd = semidirect_product(level, u, level_action, order_cap);
        k.levels.push_back(sd.product);
        std::vector<int> total(sd.product->order());
        for (int x = 0; x < sd.product->order(); ++x)
            total[x] = g->mul(totals[n][x / nu], m.boundary.images[x % nu]);
        totals.push_back(std::move(total));
    }

    for (int n = 1; n <= depth; ++n) {
        int src = k.levels[n]->order();
        for (int i = 0; i <= n; ++i) {
            std::vector<int> images(src);
            for (int x = 0; x < src; ++x) {
                auto t = decode_tuple(x, n, nu);
                std::vector<int> out;
                if (i == 0) {
                    out.push_back(g->mul(t[0], m.boundary.images[t[1]]));
                    for (int j = 2; j <= n; ++j) out.push_back(t[j]);
                } else if (i < n) {
                    out.push_back(t[0]);
                    for (int j = 1; j <= n; ++j) {
                        if (j == i) {
                            out.push_back(u->mul(t[i], t[i + 1]));
                            ++j;
                        } else {
                            out.push_back(t[j]);
                        }
                    }
                } else {
                    out.assign(t.begin(), t.end() - 1);
                }
                images[x] = encode_tuple(out, nu);
            }
            // hom_from_images re-verifies multiplicativity; with the
            // Peiffer identity this cannot fail
            k.faces[n].push_back(hom_from_images(k.levels[n], k.levels[n - 1], std::move(images)));
        }
    }
    for (int n = 0; n < depth; ++n) {
        int src = k.levels[n]->order();
        for (int i = 0; i <= n; ++i) {
            std::vector<int> images(src);
            for (int x = 0; x < src; ++x) {
                auto t = decode_tuple(x, n, nu);
                std::vector<int> out(t.begin(), t.begin() + i + 1);
                out.push_back(0); // inserted identity of U
                out.insert(out.end(), t.begin() + i + 1, t.end());
                images[x] = encode_tuple(out, nu);
            }
            k.degeneracies[n].push_back(
                hom_from_images(k.levels[n], k.levels[n + 1], std::move(images)));
        }
    }
    if (auto w = simplicial_witness(k))
        throw Error("nerve violates simplicial identity " + w->identity + " at level " +
                    std::to_string(w->level));
    return k;
}

PrecrossedModule truncate_to_precrossed(const TruncatedSimplicialGroup& k) {
    if (k.depth() < 1) throw TruncationTooShallow("need depth >= 1");
    const GroupRef& g0 = k.levels[0];
    const GroupRef& g1 = k.levels[1];
    Subgroup n1 = hom_kernel(k.faces[1][1]);
    auto r = realize(n1);
    std::vector<int> boundary(r.group->order());
    for (int i = 0; i < r.group->order(); ++i)
        boundary[i] = k.faces[1][0].images[r.inclusion.images[i]];
    GroupHom d{r.group, g0, std::move(boundary)};
    // action of G0 on N1: n^h = s0(h)^-1 n s0(h), inside G1
    const auto& s0 = k.degeneracies[0][0];
    std::vector<std::vector<int>> act(g0->order(), std::vector<int>(r.group->order()));
    for (int h = 0; h < g0->order(); ++h)
        for (int i = 0; i < r.group->order(); ++i) {
            int conj = g1->conj(r.inclusion.images[i], s0.images[h]);
            if (r.index_of[conj] < 0) throw Error("kernel of d1 is not s0-stable");
            act[h][i] = r.index_of[conj];
        }
    auto pcm = make_precrossed(std::move(d), GroupAction{g0, r.group, std::move(act)});
    if (!is_isomorphic(pi1_of_precrossed(pcm), homotopy_group(k, 0)))
        throw Error("pi1 of the truncation disagrees with pi0 of the simplicial group");
    return pcm;
}

GroupRef pi1_of_precrossed(const PrecrossedModule& m) {
    Subgroup im = hom_image(m.boundary);
    if (auto w = im.normality_witness())
        throw NotNormal("image of a precrossed boundary must be normal (g=" +
                        std::to_string(w->first) + ")");
    return quotient(m.boundary.target, im).group;
}

TruncatedSimplicialGroup map_levels(const TruncatedSimplicialGroup& k,
                                    const std::function<GroupRef(const GroupRef&)>& on_group,
                                    const std::function<GroupHom(const GroupHom&)>& on_hom) {
    TruncatedSimplicialGroup out;
    for (const auto& level : k.levels) out.levels.push_back(on_group(level));
    out.faces.resize(k.faces.size());
    out.degeneracies.resize(k.degeneracies.size());
    for (size_t n = 0; n < k.faces.size(); ++n)
        for (const auto& f : k.faces[n]) out.faces[n].push_back(on_hom(f));
    for (size_t n = 0; n < k.degeneracies.size(); ++n)
        for (const auto& s : k.degeneracies[n]) out.degeneracies[n].push_back(on_hom(s));
    return out;
}

} // namespace grt
