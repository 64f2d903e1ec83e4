#include "grt/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace grt {

long FGAbelian::torsion_order() const {
    long o = 1;
    for (long d : torsion) o *= d;
    return o;
}

std::string FGAbelian::to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    for (int i = 0; i < rank; ++i) s += (s.empty() ? "Z" : " + Z");
    for (long d : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + std::to_string(d);
    return s;
}

namespace {
std::map<long, int> factorize(long n) {
    std::map<long, int> f;
    for (long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}
} // namespace

FGAbelian FGAbelian::from_factors(int rank, std::vector<long> factors) {
    // split into prime powers, then realign into a divisibility chain
    std::map<long, std::vector<int>> parts; // prime -> exponents, descending
    for (long f : factors) {
        if (f < 0) f = -f;
        if (f <= 1) continue;
        for (auto [p, e] : factorize(f)) parts[p].push_back(e);
    }
    size_t m = 0;
    for (auto& [p, es] : parts) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        m = std::max(m, es.size());
    }
    std::vector<long> chain(m, 1);
    for (auto& [p, es] : parts)
        for (size_t i = 0; i < es.size(); ++i) {
            long pw = 1;
            for (int k = 0; k < es[i]; ++k) pw *= p;
            chain[i] *= pw; // chain[0] largest
        }
    std::reverse(chain.begin(), chain.end());
    return FGAbelian{rank, std::move(chain)};
}

FGAbelian direct_sum(const FGAbelian& a, const FGAbelian& b) {
    std::vector<long> factors = a.torsion;
    factors.insert(factors.end(), b.torsion.begin(), b.torsion.end());
    return FGAbelian::from_factors(a.rank + b.rank, std::move(factors));
}

// ---- Smith normal form ----

namespace {
IntMatrix identity_matrix(int n) {
    IntMatrix m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}
} // namespace

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    int r = static_cast<int>(a.size());
    int k = r ? static_cast<int>(a[0].size()) : 0;
    int c = b.empty() ? 0 : static_cast<int>(b[0].size());
    IntMatrix out(r, std::vector<long>(c, 0));
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

long mat_det(IntMatrix m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    // fraction-free elimination in 128-bit
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * static_cast<long>(a[n - 1][n - 1]);
}

SmithForm smith_normal_form(const IntMatrix& input) {
    int r = static_cast<int>(input.size());
    int c = r ? static_cast<int>(input[0].size()) : 0;
    IntMatrix m = input;
    IntMatrix u = identity_matrix(r);
    IntMatrix v = identity_matrix(c);

    auto row_add = [&](int dst, int src, long q) { // row dst += q * row src
        for (int j = 0; j < c; ++j) m[dst][j] += q * m[src][j];
        for (int j = 0; j < r; ++j) u[dst][j] += q * u[src][j];
    };
    auto col_add = [&](int dst, int src, long q) {
        for (int i = 0; i < r; ++i) m[i][dst] += q * m[i][src];
        for (int i = 0; i < c; ++i) v[i][dst] += q * v[i][src];
    };
    auto row_swap = [&](int i, int j) {
        std::swap(m[i], m[j]);
        std::swap(u[i], u[j]);
    };
    auto col_swap = [&](int i, int j) {
        for (int t = 0; t < r; ++t) std::swap(m[t][i], m[t][j]);
        for (int t = 0; t < c; ++t) std::swap(v[t][i], v[t][j]);
    };
    auto row_negate = [&](int i) {
        for (int j = 0; j < c; ++j) m[i][j] = -m[i][j];
        for (int j = 0; j < r; ++j) u[i][j] = -u[i][j];
    };

    int t = 0;
    while (t < r && t < c) {
        // find a pivot of minimal absolute value in the submatrix
        int pi = -1, pj = -1;
        long best = 0;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j)
                if (m[i][j] != 0 && (pi < 0 || std::abs(m[i][j]) < best)) {
                    pi = i;
                    pj = j;
                    best = std::abs(m[i][j]);
                }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        if (m[t][t] < 0) row_negate(t);

        bool clean = true;
        for (int i = t + 1; i < r; ++i)
            if (m[i][t] != 0) {
                long q = m[i][t] / m[t][t];
                row_add(i, t, -q);
                if (m[i][t] != 0) clean = false;
            }
        for (int j = t + 1; j < c; ++j)
            if (m[t][j] != 0) {
                long q = m[t][j] / m[t][t];
                col_add(j, t, -q);
                if (m[t][j] != 0) clean = false;
            }
        if (!clean) continue; // smaller remainder appeared, pick a new pivot

        // pivot must divide the rest of the submatrix for the chain
        bool divides = true;
        for (int i = t + 1; i < r && divides; ++i)
            for (int j = t + 1; j < c && divides; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    row_add(t, i, 1);
                    divides = false;
                }
        if (!divides) continue;
        ++t;
    }
    return SmithForm{std::move(m), std::move(u), std::move(v)};
}

FGAbelian cokernel(const IntMatrix& relations, int generators) {
    if (generators == 0) return FGAbelian::zero();
    IntMatrix rel = relations;
    if (rel.empty()) rel.push_back(std::vector<long>(generators, 0));
    for (auto& row : rel)
        if (static_cast<int>(row.size()) != generators) throw Error("relation width mismatch");
    SmithForm sf = smith_normal_form(rel);
    int r = static_cast<int>(rel.size());
    int diag = std::min(r, generators);
    int rank = 0;
    std::vector<long> factors;
    for (int i = 0; i < generators; ++i) {
        long d = i < diag ? sf.s[i][i] : 0;
        if (d == 0)
            ++rank;
        else if (d > 1)
            factors.push_back(d);
    }
    return FGAbelian::from_factors(rank, std::move(factors));
}

// ---- abelianization and invariants ----

FGAbelian abelian_invariants(const GroupRef& g) {
    if (!g->is_abelian()) throw Error("abelian_invariants needs an abelian group");
    long n = g->order();
    std::map<long, std::vector<int>> partitions;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        // c_k = #{x : x^{p^k} = 1} = p^{sum min(lambda_i, k)}
        std::vector<int> exps; // e_k
        long pk = 1;
        while (true) {
            pk *= p;
            int count = 0;
            for (int x = 0; x < g->order(); ++x)
                if (g->pow(x, pk) == 0) ++count;
            int ek = 0;
            long cc = count;
            while (cc > 1) {
                cc /= p;
                ++ek;
            }
            if (!exps.empty() && ek == exps.back()) break;
            exps.push_back(ek);
        }
        std::vector<int> parts; // lambda, descending
        int prev = 0;
        std::vector<int> geq; // number of parts >= k
        for (size_t k = 0; k < exps.size(); ++k) {
            geq.push_back(exps[k] - prev);
            prev = exps[k];
        }
        for (size_t k = 0; k < geq.size(); ++k) {
            int with_exactly = geq[k] - (k + 1 < geq.size() ? geq[k + 1] : 0);
            for (int i = 0; i < with_exactly; ++i) parts.push_back(static_cast<int>(k) + 1);
        }
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        partitions[p] = parts;
    }
    std::vector<long> factors;
    for (auto& [p, parts] : partitions)
        for (int e : parts) {
            long pw = 1;
            for (int i = 0; i < e; ++i) pw *= p;
            factors.push_back(pw);
        }
    return FGAbelian::from_factors(0, std::move(factors));
}

Abelianization abelianization(const GroupRef& g) {
    Subgroup derived = commutator_subgroup(g, whole_subgroup(g), whole_subgroup(g), 1);
    Quotient q = quotient(g, derived);
    FGAbelian canon = abelian_invariants(q.group);
    return Abelianization{std::move(canon), q.group, std::move(q.projection)};
}

FGAbelian tensor_with(const FGAbelian& a, const CoefficientRing& r) {
    if (std::holds_alternative<RingZ>(r)) return a;
    if (const auto* zm = std::get_if<RingZmod>(&r)) {
        std::vector<long> factors;
        for (int i = 0; i < a.rank; ++i) factors.push_back(zm->n);
        for (long d : a.torsion) factors.push_back(std::gcd(d, zm->n));
        return FGAbelian::from_factors(0, std::move(factors));
    }
    const auto& zp = std::get<RingZinvP>(r);
    std::vector<long> factors;
    for (long d : a.torsion) {
        for (int p : zp.primes)
            while (d % p == 0) d /= p;
        factors.push_back(d);
    }
    return FGAbelian::from_factors(a.rank, std::move(factors));
}

FGAbelian h1(const GroupRef& g, const CoefficientRing& r) {
    return tensor_with(abelianization(g).canonical, r);
}

FGAbelian coinvariants(const GroupRef& u, const GroupAction& a, const CoefficientRing& r) {
    int n = u->order();
    IntMatrix rel;
    // generators e_u for u in U; relations present U_ab
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::vector<long> row(n, 0);
            row[x] += 1;
            row[y] += 1;
            row[u->mul(x, y)] -= 1;
            rel.push_back(std::move(row));
        }
    for (int g : generating_set(a.group))
        for (int x = 0; x < n; ++x) {
            std::vector<long> row(n, 0);
            row[x] += 1;
            row[a.act[g][x]] -= 1;
            rel.push_back(std::move(row));
        }
    if (const auto* zm = std::get_if<RingZmod>(&r))
        for (int x = 0; x < n; ++x) {
            std::vector<long> row(n, 0);
            row[x] = zm->n;
            rel.push_back(std::move(row));
        }
    FGAbelian over_z = cokernel(rel, n);
    if (std::holds_alternative<RingZinvP>(r)) return tensor_with(over_z, r);
    return over_z;
}

namespace {
// quotient an abelian finite group by the R-reduction subgroup:
// n-th powers for Z/n, elements of P-power order for Z[P^-1]
Subgroup ring_reduction_subgroup(const GroupRef& g, const CoefficientRing& r) {
    if (const auto* zm = std::get_if<RingZmod>(&r)) {
        std::vector<int> gens;
        for (int x = 0; x < g->order(); ++x) gens.push_back(g->pow(x, zm->n));
        return subgroup_generated(g, gens);
    }
    if (const auto* zp = std::get_if<RingZinvP>(&r)) {
        std::vector<int> gens;
        for (int x = 0; x < g->order(); ++x) {
            int ord = g->element_order(x);
            for (int p : zp->primes)
                while (ord % p == 0) ord /= p;
            if (ord == 1) gens.push_back(x);
        }
        return subgroup_generated(g, gens);
    }
    return trivial_subgroup(g);
}
} // namespace

RealizedCoinvariants coinvariants_realized(const GroupRef& u, const GroupAction& a,
                                           const CoefficientRing& r) {
    Abelianization ab = abelianization(u);
    // kill u - u^g on the abelianization
    std::vector<int> gens;
    for (int g : generating_set(a.group))
        for (int x = 0; x < u->order(); ++x)
            gens.push_back(ab.realization->mul(ab.projection.images[x],
                                               ab.realization->inv(ab.projection.images[a.act[g][x]])));
    Quotient q1 = quotient(ab.realization, subgroup_generated(ab.realization, gens));
    Quotient q2 = quotient(q1.group, ring_reduction_subgroup(q1.group, r));
    std::vector<int> cls(u->order());
    for (int x = 0; x < u->order(); ++x)
        cls[x] = q2.projection.images[q1.projection.images[ab.projection.images[x]]];
    return RealizedCoinvariants{q2.group, std::move(cls)};
}

bool induced_h1_is_epi(const GroupHom& incl, const CoefficientRing& r) {
    if (!incl.is_injective()) throw Error("induced_h1_is_epi expects an injective map");
    Abelianization ab = abelianization(incl.target);
    Quotient red = quotient(ab.realization, ring_reduction_subgroup(ab.realization, r));
    std::vector<int> gens;
    for (int b = 0; b < incl.source->order(); ++b)
        gens.push_back(red.projection.images[ab.projection.images[incl.images[b]]]);
    return subgroup_generated(red.group, gens).is_whole();
}

LocalizedAbelian localize_abelian(const FGAbelian& a, const std::set<int>& primes) {
    FGAbelian t = tensor_with(a, RingZinvP{primes});
    return LocalizedAbelian{primes, t.rank, t.torsion};
}

} // namespace grt
