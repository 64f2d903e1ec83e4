#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "grt/group.hpp"

namespace grt {

// Finitely generated abelian group in canonical form: free rank plus
// invariant factors d1 | d2 | ... (each >= 2). The canonical form is the
// single source of truth for isomorphism testing.
struct FGAbelian {
    int rank = 0;
    std::vector<long> torsion;

    bool operator==(const FGAbelian& o) const = default;
    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    long torsion_order() const;
    std::string to_string() const;

    static FGAbelian zero() { return {}; }
    // canonicalize an arbitrary factor list into an invariant chain
    static FGAbelian from_factors(int rank, std::vector<long> factors);
};

FGAbelian direct_sum(const FGAbelian& a, const FGAbelian& b);

// Z, Z/n (n >= 2), or Z[P^-1] for a finite prime set P
struct RingZ {
    bool operator==(const RingZ&) const = default;
};
struct RingZmod {
    long n;
    bool operator==(const RingZmod&) const = default;
};
struct RingZinvP {
    std::set<int> primes;
    bool operator==(const RingZinvP&) const = default;
};
using CoefficientRing = std::variant<RingZ, RingZmod, RingZinvP>;

struct LocalizedAbelian {
    std::set<int> primes;
    int rank = 0;
    std::vector<long> torsion; // coprime to every p in primes
    bool operator==(const LocalizedAbelian& o) const = default;
};

using IntMatrix = std::vector<std::vector<long>>;

struct SmithForm {
    IntMatrix s; // diagonal with d1 | d2 | ...
    IntMatrix u; // unimodular, s = u * m * v
    IntMatrix v; // unimodular
};
SmithForm smith_normal_form(const IntMatrix& m);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
long mat_det(IntMatrix m); // for the unimodularity checks in tests

// cokernel of the column span: Z^cols / rows, in canonical form
FGAbelian cokernel(const IntMatrix& relations, int generators);

struct Abelianization {
    FGAbelian canonical;
    GroupRef realization; // the finite abelian quotient G/[G,G]
    GroupHom projection;
};
Abelianization abelianization(const GroupRef& g);

// canonical invariants of a finite abelian group, via p-power order counts
FGAbelian abelian_invariants(const GroupRef& g);

FGAbelian tensor_with(const FGAbelian& a, const CoefficientRing& r);

// H1(G,R) = G_ab tensor R for finite G and these rings
FGAbelian h1(const GroupRef& g, const CoefficientRing& r);

// H1(U,R)_A: coinvariants of the action, via an integer presentation
FGAbelian coinvariants(const GroupRef& u, const GroupAction& a, const CoefficientRing& r);

// realized coinvariants: a concrete finite abelian group C together with
// the class map U -> C (independent route, used by the HR module)
struct RealizedCoinvariants {
    GroupRef group;
    std::vector<int> class_of; // u index -> C index
};
RealizedCoinvariants coinvariants_realized(const GroupRef& u, const GroupAction& a,
                                           const CoefficientRing& r);

// true iff H1(incl): H1(B,R) -> H1(B',R) is surjective (incl injective)
bool induced_h1_is_epi(const GroupHom& incl, const CoefficientRing& r);

LocalizedAbelian localize_abelian(const FGAbelian& a, const std::set<int>& primes);

} // namespace grt
