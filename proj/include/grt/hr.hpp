#pragma once

#include "grt/localize.hpp"

namespace grt {

struct HRContext {
    GroupRef ambient;
    CoefficientRing ring;
};

struct ClosureResult {
    bool closed;
    std::optional<Subgroup> witness; // overgroup with an epi H1 map

    explicit operator bool() const { return closed; }
};

// B is HR-closed in the ambient group: H1(B,R) -> H1(B',R) is non-epi
// for every strictly larger subgroup B'
ClosureResult is_hr_closed(const HRContext& ctx, const Subgroup& b,
                           int lattice_cap = kDefaultLatticeCap);

// V is HR-A-closed in U (A acting on U, V an A-stable subgroup):
// H1(V,R)_A -> H1(V',R)_A is non-epi for every strictly larger A-stable
// V'. With cross_check the semidirect-product definition (A⋉V HR-closed
// in A⋉U) is evaluated too and a disagreement throws.
ClosureResult is_hr_a_closed(const GroupAction& act, const Subgroup& v, const CoefficientRing& r,
                             bool cross_check = false, int lattice_cap = kDefaultLatticeCap);

// lower R-central series: plain lower central series for R = Z,
// γ_{n+1} = [G,γ_n]·γ_n^p for R = Z/p; other rings are unsupported
std::vector<Subgroup> r_lower_central_series(const GroupRef& g, const CoefficientRing& r);
bool r_series_reaches_trivial(const GroupRef& g, const CoefficientRing& r);

// for a finite p-group A: every normal U is HZ/p-A-closed, and the
// Z/p-lower central series of A/U reaches 1
HarnessReport harness_lemma54(const GroupRef& a, int p, int lattice_cap = kDefaultLatticeCap);

} // namespace grt
