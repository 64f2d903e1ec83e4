#pragma once

#include <functional>

#include "grt/abelian.hpp"
#include "grt/levine.hpp"

namespace grt {

struct PrimeSet {
    std::set<int> primes;

    bool contains(int p) const { return primes.count(p) != 0; }
    bool empty() const { return primes.empty(); }
};
// verifies every entry is prime
PrimeSet make_prime_set(const std::vector<int>& ps);

struct LocalityPredicate {
    std::string name;
    std::function<bool(const GroupRef&)> test;
};
LocalityPredicate p_local_predicate(const PrimeSet& p);
LocalityPredicate torsion_free_at_2_predicate(); // no element of order 2
LocalityPredicate no_order_4_predicate();        // no element of order 4

// x -> x^p is a bijection
bool is_uniquely_p_divisible(const GroupRef& g, int p);
bool is_p_local(const GroupRef& g, const PrimeSet& p);

struct Localization {
    GroupRef group;
    GroupHom eta;
};
// P-localization of a finite nilpotent group: quotient stripping the
// Sylow p-parts for p in P
Localization baumslag_localize(const GroupRef& g, const PrimeSet& p);

// (a,u)^n = (a^n, a^{-n}(au)^n) in A⋉U; returns a violating pair index
std::optional<std::pair<int, int>> power_identity_witness(const GroupRef& a, const GroupRef& u,
                                                          const GroupAction& act, int n);
bool check_power_identity(const GroupRef& a, const GroupRef& u, const GroupAction& act, int n);

// pred(A⋉U); throws PredicateFailsOnBase when pred(A) fails
bool is_equivariantly_local(const GroupRef& a, const GroupRef& u, const GroupAction& act,
                            const LocalityPredicate& pred);

struct HarnessReport {
    std::string name;
    int instances = 0;
    int failures = 0;
    std::vector<std::string> counterexamples;
    bool ok() const { return failures == 0; }
};

// pred(A) and pred(A⋉U) imply pred(A/U); instances failing the
// hypotheses are skipped
HarnessReport harness_theorem35(const LocalityPredicate& pred,
                                const std::vector<std::pair<GroupRef, Subgroup>>& instances);

// A×_B A ≅ A⋉Ker f via (a₁,a₂) -> (a₁, a₁⁻¹a₂), then pred(A⋉Ker f)
bool harness_lemma31(const GroupHom& f, const LocalityPredicate& pred);

// per nilpotent instance: η(Z(G)) ⊆ Z(LG); central extensions localize
// to central extensions with exact LK -> LG -> LH -> 1; class does not
// grow; η is onto
HarnessReport harness_section4(const PrimeSet& p, const std::vector<GroupRef>& instances);

// unique solvability over every parameter assignment, by brute force
bool satisfies_system(const GroupRef& g, const EquationSystem& sys,
                      long cap = kDefaultBruteForceCap);

// symbolic presentation of the localization map attached to a system
struct PresentationData {
    std::vector<std::string> source_generators;
    std::vector<std::string> target_generators;
    std::vector<std::string> relators;
};
PresentationData translate_system(const EquationSystem& sys);

// [G,G] = [G, Im f]
bool is_ns_map(const GroupHom& f);

// for LN = baumslag_localize(N): every normal P-local U of LN satisfies
// [U,_n LN] = [U,_n Im η]; η is an NS-map
HarnessReport harness_prop81(const GroupRef& n, const PrimeSet& p);

struct GradedLieRing {
    std::vector<Subgroup> gamma;        // γ_1 .. γ_{c+1} (last trivial)
    std::vector<Quotient> layers;       // layer k: realized γ_{k+1} / γ_{k+2}
    std::vector<RealizedSubgroup> realized_gamma;
    std::vector<FGAbelian> invariants;
    // bracket[m][n]: layer m × layer n -> layer m+n+1, identity-valued
    // once the target degree exceeds the class
    std::vector<std::vector<std::vector<std::vector<int>>>> bracket;

    int num_layers() const { return static_cast<int>(layers.size()); }
};
// layers, tabulated brackets, well-definedness and Lie axioms verified
GradedLieRing graded_lie_ring(const GroupRef& g);

} // namespace grt
