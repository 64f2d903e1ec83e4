#include "grt/hr.hpp"

#include <algorithm>

namespace grt {

namespace {

GroupHom inclusion_between(const Subgroup& small, const Subgroup& big) {
    auto rs = realize(small);
    auto rb = realize(big);
    std::vector<int> images(rs.group->order());
    for (int i = 0; i < rs.group->order(); ++i) {
        int parent = rs.inclusion.images[i];
        if (!big.contains(parent)) throw Error("inclusion_between: subgroups not nested");
        images[i] = rb.index_of[parent];
    }
    return hom_from_images(rs.group, rb.group, std::move(images));
}

bool stable_under(const GroupAction& act, const Subgroup& s) {
    for (int g = 0; g < act.group->order(); ++g)
        for (int x : s.elements())
            if (!s.contains(act.act[g][x])) return false;
    return true;
}

// the action restricted to a stable subgroup, on its realization
GroupAction restrict_action(const GroupAction& act, const RealizedSubgroup& rs) {
    GroupAction out{act.group, rs.group, {}};
    out.act.assign(act.group->order(), std::vector<int>(rs.group->order()));
    for (int g = 0; g < act.group->order(); ++g)
        for (int i = 0; i < rs.group->order(); ++i)
            out.act[g][i] = rs.index_of[act.act[g][rs.inclusion.images[i]]];
    return out;
}

// H1(V,R)_A -> H1(V',R)_A surjective?
bool induced_coinvariants_epi(const GroupAction& act, const Subgroup& v, const Subgroup& vbig,
                              const CoefficientRing& r) {
    auto rv = realize(v);
    auto rb = realize(vbig);
    auto cb = coinvariants_realized(rb.group, restrict_action(act, rb), r);
    std::vector<int> gens;
    for (int i = 0; i < rv.group->order(); ++i)
        gens.push_back(cb.class_of[rb.index_of[rv.inclusion.images[i]]]);
    return subgroup_generated(cb.group, gens).is_whole();
}

GroupAction conjugation_on_self(const GroupRef& a) {
    GroupAction act{a, a, {}};
    act.act.assign(a->order(), std::vector<int>(a->order()));
    for (int g = 0; g < a->order(); ++g)
        for (int x = 0; x < a->order(); ++x) act.act[g][x] = a->conj(x, g);
    return act;
}

} // namespace

ClosureResult is_hr_closed(const HRContext& ctx, const Subgroup& b, int lattice_cap) {
    if (b.parent != ctx.ambient) throw TargetMismatch("is_hr_closed: subgroup of another group");
    for (const auto& big : all_subgroups(ctx.ambient, b, lattice_cap)) {
        if (big.size() == b.size()) continue;
        if (induced_h1_is_epi(inclusion_between(b, big), ctx.ring)) return {false, big};
    }
    return {true, std::nullopt};
}

ClosureResult is_hr_a_closed(const GroupAction& act, const Subgroup& v, const CoefficientRing& r,
                             bool cross_check, int lattice_cap) {
    if (v.parent != act.space) throw TargetMismatch("is_hr_a_closed: subgroup of another group");
    if (!stable_under(act, v)) throw Error("is_hr_a_closed: subgroup is not stable");

    ClosureResult result{true, std::nullopt};
    for (const auto& big : all_subgroups(act.space, v, lattice_cap)) {
        if (big.size() == v.size() || !stable_under(act, big)) continue;
        if (induced_coinvariants_epi(act, v, big, r)) {
            result = {false, big};
            break;
        }
    }

    if (cross_check) {
        // independent route: A⋉V must be HR-closed in A⋉U
        auto sd = semidirect_product(act.group, act.space, act);
        Subgroup embedded{sd.product, std::vector<uint8_t>(sd.product->order(), 0)};
        for (int g = 0; g < act.group->order(); ++g)
            for (int x : v.elements()) embedded.members[sd.pair(g, x)] = 1;
        auto other = is_hr_closed({sd.product, r}, embedded,
                                  std::max(lattice_cap, sd.product->order()));
        if (other.closed != result.closed)
            throw Error("is_hr_a_closed: coinvariants and semidirect routes disagree");
    }
    return result;
}

std::vector<Subgroup> r_lower_central_series(const GroupRef& g, const CoefficientRing& r) {
    if (std::holds_alternative<RingZ>(r)) return lower_central_series(g).terms;
    if (!std::holds_alternative<RingZmod>(r))
        throw Unsupported("r_lower_central_series: only Z and Z/p coefficients");
    long p = std::get<RingZmod>(r).n;
    bool prime = p >= 2;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
    if (!prime) throw Unsupported("r_lower_central_series: modulus must be prime");

    std::vector<Subgroup> terms{whole_subgroup(g)};
    while (true) {
        const auto& cur = terms.back();
        std::vector<int> gens;
        for (int x : cur.elements()) gens.push_back(g->pow(x, static_cast<int>(p)));
        auto next = join(commutator_subgroup(g, whole_subgroup(g), cur),
                         subgroup_generated(g, gens));
        if (next == cur) break;
        terms.push_back(next);
        if (next.is_trivial()) break;
    }
    return terms;
}

bool r_series_reaches_trivial(const GroupRef& g, const CoefficientRing& r) {
    return r_lower_central_series(g, r).back().is_trivial();
}

HarnessReport harness_lemma54(const GroupRef& a, int p, int lattice_cap) {
    for (int n = a->order(); n > 1; n /= p)
        if (n % p != 0) throw Error("harness_lemma54: ambient group is not a p-group");
    CoefficientRing ring = RingZmod{p};
    auto act = conjugation_on_self(a);

    HarnessReport rep;
    rep.name = "lemma54(p=" + std::to_string(p) + ")";
    for (const auto& u : normal_subgroups(a)) {
        ++rep.instances;
        bool closed = is_hr_a_closed(act, u, ring, a->order() <= 8, lattice_cap).closed;
        bool series = r_series_reaches_trivial(quotient(a, u).group, ring);
        if (!closed || !series) {
            ++rep.failures;
            rep.counterexamples.push_back("|U|=" + std::to_string(u.size()) +
                                          (closed ? " series stalls" : " not closed"));
        }
    }
    return rep;
}

} // namespace grt
