#pragma once

#include "grt/group.hpp"
#include "grt/rng.hpp"

namespace grt {

inline constexpr long kDefaultBruteForceCap = 10'000'000L;

// One letter of a word in G ∗ F(X) (or F(A) ∗ F(X) for parametric
// systems): a nonidentity constant from the coefficient group, a
// variable letter x_i^{±1}, or a named parameter letter a_i^{±1}.
struct Syllable {
    enum class Kind { Const, Var, Param };
    Kind kind;
    int index;        // element index / variable id / parameter id
    int exponent = 1; // ±1 for Var and Param; ignored for Const

    bool operator==(const Syllable&) const = default;
};

Syllable const_syl(int element);
Syllable var_syl(int var, int exponent = 1);
Syllable param_syl(int param, int exponent = 1);

// Reduced word: no identity constants, no adjacent constants, no
// cancelling adjacent variable/parameter letters.
struct FreeProductWord {
    std::vector<Syllable> syllables;

    bool empty() const { return syllables.empty(); }
    bool operator==(const FreeProductWord&) const = default;
};

// `coefficients` folds adjacent constants; pass nullptr for purely
// symbolic words (no Const syllables allowed then)
FreeProductWord reduce(const std::vector<Syllable>& raw, const GroupRef& coefficients);
FreeProductWord invert(const FreeProductWord& w, const GroupRef& coefficients);
FreeProductWord concat(const FreeProductWord& a, const FreeProductWord& b,
                       const GroupRef& coefficients);

// dies under G∗F(X) -> F(X)
bool is_contractible(const FreeProductWord& w);
// dies under G∗F(X) -> F(X)_ab: every variable has exponent sum 0
bool is_acyclic(const FreeProductWord& w);

// left-to-right product in g; assignment maps variable ids, params maps
// parameter ids, both to element indices
int evaluate(const FreeProductWord& w, const GroupRef& g, const std::vector<int>& assignment,
             const std::vector<int>& params = {});

std::string word_to_string(const FreeProductWord& w,
                           const std::vector<std::string>& parameter_names = {});

// System of equations: relators in coefficients∗F(X) (concrete flavor,
// parameters empty) or F(A)∗F(X) (parametric flavor, coefficients null).
struct EquationSystem {
    std::vector<std::string> parameters;
    int num_variables = 0;
    std::vector<FreeProductWord> relators;
    GroupRef coefficients;
};

// relators x_i·w_i⁻¹; verifies every w_i contractible (resp. acyclic)
EquationSystem make_levine_system(const GroupRef& g, const std::vector<FreeProductWord>& ws);
EquationSystem make_nullhomologous_system(const GroupRef& g,
                                          const std::vector<FreeProductWord>& ws);

// all solutions X -> g by exhaustive search, lexicographic order
std::vector<std::vector<int>> solve(const GroupRef& g, const EquationSystem& sys,
                                    long cap = kDefaultBruteForceCap);

// seeded generators: ≤ max_syllables raw syllables over num_vars
// variables, contractible (resp. acyclic) by construction
FreeProductWord random_contractible_word(SplitMix64& rng, const GroupRef& g, int num_vars,
                                         int max_syllables = 8);
FreeProductWord random_acyclic_word(SplitMix64& rng, const GroupRef& g, int num_vars,
                                    int max_syllables = 8);

// nontrivial normal H with [H,G] = H
std::vector<Subgroup> invisible_subgroups(const GroupRef& g);

struct TwoSolutionWitness {
    EquationSystem system;
    std::vector<int> solution_generators; // x_i -> h_i
    std::vector<int> solution_trivial;    // x_i -> 1
};
// constructive half of the invisible-subgroup equivalence: a Levine
// system with two verified distinct solutions
TwoSolutionWitness build_two_solution_witness(const GroupRef& g, const Subgroup& h,
                                              int factor_bound = 8);

struct LevineReport {
    bool has_invisible = false;
    int systems_checked = 0;
    int failures = 0;
    std::vector<std::string> notes;
    bool ok() const { return failures == 0; }
};

// no invisible subgroups ⟺ sampled systems have ≤ 1 solution; with an
// invisible subgroup the two-solution witness is produced instead
LevineReport harness_prop58(const GroupRef& g, uint64_t seed, int num_systems = 100,
                            long cap = kDefaultBruteForceCap);

// for nilpotent A and normal U: every normal V ⊇ U with V = U·[V,A]
// equals U; cross-checked against invisibles of A/U
LevineReport harness_prop510(const GroupRef& a, const Subgroup& u);

// normal closure of G⋉U inside G⋉V equals G⋉(U·[V,G])
bool check_lemma511(const GroupRef& g, const Subgroup& u, const Subgroup& v,
                    int order_cap = kDefaultOrderCap);

} // namespace grt
