#include "grt/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "grt/rng.hpp"

namespace grt {

// ---- FiniteGroup ----

FiniteGroup::FiniteGroup(std::vector<int> mul_table, int order, std::vector<std::string> labels)
    : n_(order), mul_(std::move(mul_table)), labels_(std::move(labels)) {
    if (n_ <= 0 || static_cast<int>(mul_.size()) != n_ * n_)
        throw NotAGroup("table size does not match order");
    for (int x : mul_)
        if (x < 0 || x >= n_) throw NotAGroup("table entry out of range: " + std::to_string(x));
    for (int x = 0; x < n_; ++x) {
        if (mul(0, x) != x) throw NotAGroup("identity fails on left at " + std::to_string(x));
        if (mul(x, 0) != x) throw NotAGroup("identity fails on right at " + std::to_string(x));
    }
    inv_.assign(n_, -1);
    for (int x = 0; x < n_; ++x) {
        for (int y = 0; y < n_; ++y) {
            if (mul(x, y) == 0 && mul(y, x) == 0) {
                inv_[x] = y;
                break;
            }
        }
        if (inv_[x] < 0) throw NotAGroup("no inverse for element " + std::to_string(x));
    }
    if (n_ <= kExhaustiveAssocCap) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
    } else {
        exhaustive_ = false;
        SplitMix64 rng(0x5ca1ab1eULL + static_cast<uint64_t>(n_));
        for (int t = 0; t < 10 * n_; ++t) {
            int a = rng.pick(n_), b = rng.pick(n_), c = rng.pick(n_);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw NotAGroup("associativity fails at sampled (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
        }
    }
    if (labels_.empty()) {
        labels_.resize(n_);
        for (int i = 0; i < n_; ++i) labels_[i] = "e" + std::to_string(i);
        labels_[0] = "1";
    }
}

int FiniteGroup::pow(int a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    int r = 0;
    int base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

// ---- Subgroup ----

int Subgroup::size() const {
    int c = 0;
    for (uint8_t m : members) c += m;
    return c;
}

std::vector<int> Subgroup::elements() const {
    std::vector<int> e;
    for (int i = 0; i < static_cast<int>(members.size()); ++i)
        if (members[i]) e.push_back(i);
    return e;
}

std::optional<std::pair<int, int>> Subgroup::normality_witness() const {
    const auto& g = *parent;
    for (int x = 0; x < g.order(); ++x) {
        if (!members[x]) continue;
        for (int h = 0; h < g.order(); ++h)
            if (!members[g.conj(x, h)]) return std::make_pair(h, x);
    }
    return std::nullopt;
}

bool GroupHom::is_injective() const {
    std::vector<uint8_t> seen(target->order(), 0);
    for (int x : images) {
        if (seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

bool GroupHom::is_surjective() const {
    std::vector<uint8_t> seen(target->order(), 0);
    for (int x : images) seen[x] = 1;
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

// ---- construction ----

GroupRef trivial_group() {
    static GroupRef t = std::make_shared<FiniteGroup>(std::vector<int>{0}, 1);
    return t;
}

GroupRef from_table(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
        for (int x : row) flat.push_back(x);
    }
    return std::make_shared<FiniteGroup>(std::move(flat), n);
}

namespace {
std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
    // (a then b): result[i] = b[a[i]]
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}
} // namespace

GroupRef from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                           int order_cap) {
    if (degree <= 0) throw NotAGroup("degree must be positive");
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != degree) throw NotAGroup("generator degree mismatch");
        std::vector<uint8_t> seen(degree, 0);
        for (int x : p) {
            if (x < 0 || x >= degree || seen[x]) throw NotAGroup("generator is not a bijection");
            seen[x] = 1;
        }
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);

    // breadth-first closure from the identity; enumeration order is
    // deterministic given generator order
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& gen : generators) {
            auto prod = compose_perm(elems[head], gen);
            if (index.emplace(prod, static_cast<int>(elems.size())).second) {
                elems.push_back(prod);
                if (static_cast<int>(elems.size()) > order_cap)
                    throw OrderCapExceeded("permutation closure exceeds order cap " +
                                           std::to_string(order_cap));
            }
        }
    }
    int n = static_cast<int>(elems.size());
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            flat[a * n + b] = index.at(compose_perm(elems[a], elems[b]));
    return std::make_shared<FiniteGroup>(std::move(flat), n);
}

// ---- subgroup calculus ----

Subgroup trivial_subgroup(const GroupRef& g) {
    Subgroup s{g, std::vector<uint8_t>(g->order(), 0)};
    s.members[0] = 1;
    return s;
}

Subgroup whole_subgroup(const GroupRef& g) {
    return Subgroup{g, std::vector<uint8_t>(g->order(), 1)};
}

Subgroup subgroup_generated(const GroupRef& g, const std::vector<int>& gens) {
    Subgroup s = trivial_subgroup(g);
    std::vector<int> queue{0};
    auto add = [&](int x) {
        if (!s.members[x]) {
            s.members[x] = 1;
            queue.push_back(x);
        }
    };
    for (int x : gens) {
        if (x < 0 || x >= g->order()) throw Error("generator index out of range");
        add(x);
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        int a = queue[head];
        add(g->inv(a));
        for (size_t j = 0; j < queue.size(); ++j) add(g->mul(a, queue[j]));
    }
    return s;
}

Subgroup normal_closure(const GroupRef& g, const std::vector<int>& gens) {
    std::vector<int> conjugates;
    for (int x : gens)
        for (int h = 0; h < g->order(); ++h) conjugates.push_back(g->conj(x, h));
    Subgroup s = subgroup_generated(g, conjugates);
    // closure of conjugates of generators is already normal: conjugation
    // permutes the generating set
    return s;
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
    std::vector<int> gens = a.elements();
    auto be = b.elements();
    gens.insert(gens.end(), be.begin(), be.end());
    return subgroup_generated(a.parent, gens);
}

Subgroup center(const GroupRef& g) {
    Subgroup s{g, std::vector<uint8_t>(g->order(), 0)};
    for (int z = 0; z < g->order(); ++z) {
        bool central = true;
        for (int x = 0; x < g->order() && central; ++x)
            if (g->mul(z, x) != g->mul(x, z)) central = false;
        s.members[z] = central ? 1 : 0;
    }
    return s;
}

Subgroup commutator_subgroup(const GroupRef& g, const Subgroup& h, const Subgroup& k, int n) {
    if (n < 0) throw Error("commutator depth must be nonnegative");
    Subgroup cur = h;
    auto ke = k.elements();
    for (int step = 0; step < n; ++step) {
        std::vector<int> comms;
        for (int x : cur.elements())
            for (int y : ke) comms.push_back(g->comm(x, y));
        cur = subgroup_generated(g, comms);
    }
    return cur;
}

LowerCentralSeries lower_central_series(const GroupRef& g) {
    LowerCentralSeries s;
    s.terms.push_back(whole_subgroup(g));
    while (true) {
        Subgroup next = commutator_subgroup(g, s.terms.back(), whole_subgroup(g), 1);
        if (next == s.terms.back()) break;
        s.terms.push_back(next);
        if (next.is_trivial()) break;
    }
    s.nilpotent = s.terms.back().is_trivial();
    s.nilpotency_class = s.nilpotent ? static_cast<int>(s.terms.size()) - 1 : -1;
    return s;
}

bool is_nilpotent(const GroupRef& g) { return lower_central_series(g).nilpotent; }

int nilpotency_class(const GroupRef& g) {
    auto s = lower_central_series(g);
    if (!s.nilpotent) throw NotNilpotent("group of order " + std::to_string(g->order()));
    return s.nilpotency_class;
}

// ---- quotients, products, homs ----

Quotient quotient(const GroupRef& g, const Subgroup& n) {
    if (auto w = n.normality_witness())
        throw NotNormal("conjugation witness g=" + std::to_string(w->first) +
                        " h=" + std::to_string(w->second));
    int order = g->order();
    // coset of each element; representatives are minimal indices, and the
    // coset containing the identity gets index 0 automatically
    std::vector<int> coset(order, -1);
    std::vector<int> reps;
    for (int x = 0; x < order; ++x) {
        if (coset[x] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int u : n.elements()) coset[g->mul(x, u)] = id;
    }
    int q = static_cast<int>(reps.size());
    std::vector<int> flat(static_cast<size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) flat[a * q + b] = coset[g->mul(reps[a], reps[b])];
    GroupRef qg = std::make_shared<FiniteGroup>(std::move(flat), q);
    GroupHom proj{g, qg, coset};
    return Quotient{qg, std::move(proj)};
}

RealizedSubgroup realize(const Subgroup& s) {
    auto elems = s.elements();
    int m = static_cast<int>(elems.size());
    std::vector<int> index_of(s.parent->order(), -1);
    for (int i = 0; i < m; ++i) index_of[elems[i]] = i;
    std::vector<int> flat(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) flat[a * m + b] = index_of[s.parent->mul(elems[a], elems[b])];
    GroupRef sub = std::make_shared<FiniteGroup>(std::move(flat), m);
    GroupHom incl{sub, s.parent, elems};
    return RealizedSubgroup{sub, std::move(incl), std::move(index_of)};
}

GroupAction trivial_action(const GroupRef& g, const GroupRef& space) {
    std::vector<int> id(space->order());
    std::iota(id.begin(), id.end(), 0);
    return GroupAction{g, space, std::vector<std::vector<int>>(g->order(), id)};
}

GroupAction conjugation_action(const Subgroup& u) {
    if (!u.is_normal()) throw NotNormal("conjugation action needs a normal subgroup");
    auto r = realize(u);
    const GroupRef& g = u.parent;
    std::vector<std::vector<int>> act(g->order(), std::vector<int>(r.group->order()));
    for (int h = 0; h < g->order(); ++h)
        for (int i = 0; i < r.group->order(); ++i)
            act[h][i] = r.index_of[g->conj(r.inclusion.images[i], h)];
    return GroupAction{g, r.group, std::move(act)};
}

void verify_action(const GroupAction& a) {
    const auto& g = *a.group;
    const auto& u = *a.space;
    if (static_cast<int>(a.act.size()) != g.order()) throw Error("action table size mismatch");
    for (int h = 0; h < g.order(); ++h) {
        const auto& p = a.act[h];
        if (static_cast<int>(p.size()) != u.order()) throw Error("action table size mismatch");
        std::vector<uint8_t> seen(u.order(), 0);
        for (int x : p) {
            if (x < 0 || x >= u.order() || seen[x])
                throw NotAHomomorphism("action of " + std::to_string(h) + " is not a bijection");
            seen[x] = 1;
        }
        for (int x = 0; x < u.order(); ++x)
            for (int y = 0; y < u.order(); ++y)
                if (p[u.mul(x, y)] != u.mul(p[x], p[y]))
                    throw NotAHomomorphism("action of " + std::to_string(h) +
                                           " is not an automorphism");
    }
    for (int x = 0; x < u.order(); ++x)
        if (a.act[0][x] != x) throw NotAHomomorphism("identity does not act trivially");
    for (int h = 0; h < g.order(); ++h)
        for (int k = 0; k < g.order(); ++k)
            for (int x = 0; x < u.order(); ++x)
                if (a.act[g.mul(h, k)][x] != a.act[k][a.act[h][x]])
                    throw NotAHomomorphism("right-action law fails at (" + std::to_string(h) +
                                           "," + std::to_string(k) + ")");
}

int SemidirectProduct::pair(int g, int u) const {
    int nu = embed_space.source->order();
    return g * nu + u;
}
int SemidirectProduct::left_of(int x) const { return x / embed_space.source->order(); }
int SemidirectProduct::right_of(int x) const { return x % embed_space.source->order(); }

SemidirectProduct semidirect_product(const GroupRef& g, const GroupRef& u, const GroupAction& a,
                                     int order_cap) {
    verify_action(a);
    long total = static_cast<long>(g->order()) * u->order();
    if (total > order_cap)
        throw OrderCapExceeded("semidirect product order " + std::to_string(total) +
                               " exceeds cap " + std::to_string(order_cap));
    int n = static_cast<int>(total);
    int nu = u->order();
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int g1 = 0; g1 < g->order(); ++g1)
        for (int u1 = 0; u1 < nu; ++u1)
            for (int g2 = 0; g2 < g->order(); ++g2)
                for (int u2 = 0; u2 < nu; ++u2) {
                    // (g1,u1)(g2,u2) = (g1 g2, u1^{g2} u2)
                    int gg = g->mul(g1, g2);
                    int uu = u->mul(a.act[g2][u1], u2);
                    flat[(g1 * nu + u1) * n + (g2 * nu + u2)] = gg * nu + uu;
                }
    GroupRef p = std::make_shared<FiniteGroup>(std::move(flat), n);

    std::vector<int> emb_g(g->order()), emb_u(nu), proj(n);
    for (int x = 0; x < g->order(); ++x) emb_g[x] = x * nu;
    for (int x = 0; x < nu; ++x) emb_u[x] = x;
    for (int x = 0; x < n; ++x) proj[x] = x / nu;
    SemidirectProduct sd{p, hom_from_images(g, p, emb_g), hom_from_images(u, p, emb_u),
                         hom_from_images(p, g, proj)};
    return sd;
}

GroupRef direct_product(const GroupRef& g, const GroupRef& h) {
    return semidirect_product(g, h, trivial_action(g, h),
                              g->order() * h->order())
        .product;
}

Pullback pullback(const GroupHom& f, const GroupHom& g) {
    if (f.target != g.target && f.target->order() != g.target->order())
        throw TargetMismatch("pullback needs a common target");
    GroupRef prod = direct_product(f.source, g.source);
    int nk = g.source->order();
    Subgroup s{prod, std::vector<uint8_t>(prod->order(), 0)};
    for (int a = 0; a < f.source->order(); ++a)
        for (int b = 0; b < nk; ++b)
            if (f.images[a] == g.images[b]) s.members[a * nk + b] = 1;
    auto r = realize(s);
    std::vector<int> left(r.group->order()), right(r.group->order());
    for (int i = 0; i < r.group->order(); ++i) {
        left[i] = r.inclusion.images[i] / nk;
        right[i] = r.inclusion.images[i] % nk;
    }
    return Pullback{r, hom_from_images(r.group, f.source, left),
                    hom_from_images(r.group, g.source, right)};
}

GroupHom identity_hom(const GroupRef& g) {
    std::vector<int> id(g->order());
    std::iota(id.begin(), id.end(), 0);
    return GroupHom{g, g, std::move(id)};
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
    if (first.target->order() != second.source->order())
        throw TargetMismatch("composition target/source mismatch");
    std::vector<int> images(first.source->order());
    for (int x = 0; x < first.source->order(); ++x) images[x] = second.images[first.images[x]];
    return GroupHom{first.source, second.target, std::move(images)};
}

GroupHom hom_from_images(const GroupRef& source, const GroupRef& target, std::vector<int> images) {
    if (static_cast<int>(images.size()) != source->order())
        throw NotAHomomorphism("images table has wrong length");
    for (int x : images)
        if (x < 0 || x >= target->order()) throw NotAHomomorphism("image out of range");
    if (images[0] != 0) throw NotAHomomorphism("identity does not map to identity");
    for (int a = 0; a < source->order(); ++a)
        for (int b = 0; b < source->order(); ++b)
            if (images[source->mul(a, b)] != target->mul(images[a], images[b]))
                throw NotAHomomorphism("multiplicativity fails at (" + std::to_string(a) + "," +
                                       std::to_string(b) + ")");
    return GroupHom{source, target, std::move(images)};
}

GroupHom hom_from_generators(const GroupRef& source, const GroupRef& target,
                             const std::vector<std::pair<int, int>>& generator_images) {
    std::vector<int> images(source->order(), -1);
    images[0] = 0;
    std::vector<int> queue{0};
    auto set_image = [&](int x, int fx) {
        if (images[x] < 0) {
            images[x] = fx;
            queue.push_back(x);
        } else if (images[x] != fx) {
            throw NotAHomomorphism("inconsistent images at element " + std::to_string(x));
        }
    };
    for (auto [g, fg] : generator_images) {
        if (g < 0 || g >= source->order() || fg < 0 || fg >= target->order())
            throw NotAHomomorphism("generator image out of range");
        set_image(g, fg);
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        int a = queue[head];
        for (size_t j = 0; j < queue.size(); ++j) {
            int b = queue[j];
            set_image(source->mul(a, b), target->mul(images[a], images[b]));
            set_image(source->mul(b, a), target->mul(images[b], images[a]));
        }
    }
    for (int x = 0; x < source->order(); ++x)
        if (images[x] < 0)
            throw NotAHomomorphism("generators do not generate the source group");
    return hom_from_images(source, target, std::move(images));
}

Subgroup hom_image(const GroupHom& f) {
    Subgroup s{f.target, std::vector<uint8_t>(f.target->order(), 0)};
    for (int x : f.images) s.members[x] = 1;
    return s;
}

Subgroup hom_kernel(const GroupHom& f) {
    Subgroup s{f.source, std::vector<uint8_t>(f.source->order(), 0)};
    for (int x = 0; x < f.source->order(); ++x)
        if (f.images[x] == 0) s.members[x] = 1;
    return s;
}

Subgroup preimage(const GroupHom& f, const Subgroup& t) {
    Subgroup s{f.source, std::vector<uint8_t>(f.source->order(), 0)};
    for (int x = 0; x < f.source->order(); ++x)
        if (t.members[f.images[x]]) s.members[x] = 1;
    return s;
}

Subgroup image_of(const GroupHom& f, const Subgroup& s) {
    Subgroup t{f.target, std::vector<uint8_t>(f.target->order(), 0)};
    for (int x : s.elements()) t.members[f.images[x]] = 1;
    // the set image of a subgroup under a hom is a subgroup already
    return t;
}

// ---- structure ----

namespace {
std::vector<int> prime_factors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}
bool is_p_power_order(int ord, int p) {
    while (ord % p == 0) ord /= p;
    return ord == 1;
}
} // namespace

std::vector<std::pair<int, Subgroup>> sylow_decomposition(const GroupRef& g) {
    if (!is_nilpotent(g)) throw NotNilpotent("sylow decomposition needs a nilpotent group");
    std::vector<std::pair<int, Subgroup>> out;
    long product = 1;
    for (int p : prime_factors(g->order())) {
        std::vector<int> elems;
        for (int x = 0; x < g->order(); ++x)
            if (is_p_power_order(g->element_order(x), p)) elems.push_back(x);
        Subgroup s = subgroup_generated(g, elems);
        // in a nilpotent group the p-power-order elements form a subgroup
        if (s.size() != static_cast<int>(elems.size()))
            throw Error("p-power elements do not form a subgroup");
        product *= s.size();
        out.emplace_back(p, std::move(s));
    }
    if (product != g->order()) throw Error("sylow parts do not fill the group");
    return out;
}

std::vector<Subgroup> all_subgroups(const GroupRef& g, const std::optional<Subgroup>& containing,
                                    int lattice_cap) {
    if (g->order() > lattice_cap)
        throw OrderCapExceeded("subgroup lattice enumeration capped at order " +
                               std::to_string(lattice_cap));
    Subgroup base = containing ? *containing : trivial_subgroup(g);
    std::set<std::vector<uint8_t>> seen;
    std::vector<Subgroup> out;
    std::vector<Subgroup> queue{base};
    seen.insert(base.members);
    for (size_t head = 0; head < queue.size(); ++head) {
        Subgroup cur = queue[head];
        out.push_back(cur);
        for (int x = 0; x < g->order(); ++x) {
            if (cur.members[x]) continue;
            auto gens = cur.elements();
            gens.push_back(x);
            Subgroup bigger = subgroup_generated(g, gens);
            if (seen.insert(bigger.members).second) queue.push_back(bigger);
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        int sa = a.size(), sb = b.size();
        if (sa != sb) return sa < sb;
        return a.members > b.members; // lower minimal elements first
    });
    return out;
}

std::vector<Subgroup> normal_subgroups(const GroupRef& g, const std::optional<Subgroup>& containing) {
    // every normal subgroup is a join of normal closures of single
    // elements, so closing the base under those joins enumerates all of
    // them without touching the full lattice
    Subgroup base = containing ? *containing : trivial_subgroup(g);
    if (containing && !base.is_normal()) throw NotNormal("base subgroup is not normal");
    std::vector<Subgroup> closures;
    for (int x = 1; x < g->order(); ++x) closures.push_back(normal_closure(g, {x}));
    std::set<std::vector<uint8_t>> seen{base.members};
    std::vector<Subgroup> queue{base};
    for (size_t head = 0; head < queue.size(); ++head) {
        Subgroup cur = queue[head];
        for (const auto& c : closures) {
            Subgroup bigger = join(cur, c);
            if (seen.insert(bigger.members).second) queue.push_back(bigger);
        }
    }
    std::sort(queue.begin(), queue.end(), [](const Subgroup& a, const Subgroup& b) {
        int sa = a.size(), sb = b.size();
        if (sa != sb) return sa < sb;
        return a.members > b.members;
    });
    return queue;
}

std::vector<int> generating_set(const GroupRef& g) {
    std::vector<int> gens;
    Subgroup cur = trivial_subgroup(g);
    for (int x = 1; x < g->order(); ++x) {
        if (cur.members[x]) continue;
        gens.push_back(x);
        auto with = cur.elements();
        with.push_back(x);
        cur = subgroup_generated(g, with);
        if (cur.is_whole()) break;
    }
    return gens;
}

namespace {

// extend generator images to a full map by BFS words; empty on clash
std::optional<std::vector<int>> extend_map(const FiniteGroup& g, const FiniteGroup& h,
                                           const std::vector<int>& gens,
                                           const std::vector<int>& imgs) {
    std::vector<int> images(g.order(), -1);
    images[0] = 0;
    std::vector<int> queue{0};
    auto set_image = [&](int x, int fx) -> bool {
        if (images[x] < 0) {
            images[x] = fx;
            queue.push_back(x);
            return true;
        }
        return images[x] == fx;
    };
    for (size_t i = 0; i < gens.size(); ++i)
        if (!set_image(gens[i], imgs[i])) return std::nullopt;
    for (size_t head = 0; head < queue.size(); ++head) {
        int a = queue[head];
        for (size_t i = 0; i < gens.size(); ++i)
            if (!set_image(g.mul(a, gens[i]), h.mul(images[a], imgs[i]))) return std::nullopt;
    }
    for (int x : images)
        if (x < 0) return std::nullopt;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (images[g.mul(a, b)] != h.mul(images[a], images[b])) return std::nullopt;
    return images;
}

bool search_iso(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gens,
                std::vector<int>& imgs, size_t pos, bool require_bijective,
                std::vector<std::vector<int>>& found, bool all) {
    if (pos == gens.size()) {
        auto m = extend_map(g, h, gens, imgs);
        if (!m) return false;
        if (require_bijective) {
            std::vector<uint8_t> seen(h.order(), 0);
            for (int x : *m) {
                if (seen[x]) return false;
                seen[x] = 1;
            }
        }
        found.push_back(*m);
        return !all;
    }
    int ord = g.element_order(gens[pos]);
    for (int cand = 0; cand < h.order(); ++cand) {
        if (require_bijective ? h.element_order(cand) != ord : ord % h.element_order(cand) != 0)
            continue;
        imgs[pos] = cand;
        if (search_iso(g, h, gens, imgs, pos + 1, require_bijective, found, all) && !all)
            return true;
    }
    return all && !found.empty();
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const GroupRef& g, const GroupRef& h) {
    if (g->order() != h->order()) return std::nullopt;
    auto gens = generating_set(g);
    if (gens.empty()) {
        std::vector<int> id{0};
        return id;
    }
    std::vector<int> imgs(gens.size(), 0);
    std::vector<std::vector<int>> found;
    search_iso(*g, *h, gens, imgs, 0, true, found, false);
    if (found.empty()) return std::nullopt;
    return found.front();
}

bool is_isomorphic(const GroupRef& g, const GroupRef& h) {
    return find_isomorphism(g, h).has_value();
}

std::vector<std::vector<int>> automorphism_list(const GroupRef& g) {
    auto gens = generating_set(g);
    std::vector<std::vector<int>> found;
    if (gens.empty()) {
        found.push_back({0});
        return found;
    }
    std::vector<int> imgs(gens.size(), 0);
    search_iso(*g, *g, gens, imgs, 0, true, found, true);
    std::sort(found.begin(), found.end());
    return found;
}

AutGroup automorphism_group(const GroupRef& g) {
    auto perms = automorphism_list(g);
    // reorder so the identity automorphism sits at index 0
    std::vector<int> id(g->order());
    std::iota(id.begin(), id.end(), 0);
    auto it = std::find(perms.begin(), perms.end(), id);
    std::iter_swap(perms.begin(), it);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    int n = static_cast<int>(perms.size());
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // composition (a then b), matching the right-action law when
            // a hom G -> Aut lands here
            flat[a * n + b] = index.at(compose_perm(perms[a], perms[b]));
        }
    return AutGroup{std::make_shared<FiniteGroup>(std::move(flat), n), std::move(perms)};
}

GroupAction action_from_hom(const GroupHom& to_aut, const AutGroup& aut, const GroupRef& space) {
    std::vector<std::vector<int>> act(to_aut.source->order());
    for (int h = 0; h < to_aut.source->order(); ++h) act[h] = aut.perms[to_aut.images[h]];
    GroupAction a{to_aut.source, space, std::move(act)};
    verify_action(a);
    return a;
}

} // namespace grt
