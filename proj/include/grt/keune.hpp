#pragma once

#include <functional>

#include "grt/simplicial.hpp"

namespace grt {

// Split couple of epimorphisms α: G' ⇒ H with a common section α⁰,
// α₀α⁰ = id = α₁α⁰.
struct SplitCoupleEpi {
    GroupHom alpha0; // G' -> H
    GroupHom alpha1; // G' -> H
    GroupHom section; // H -> G'

    const GroupRef& domain() const { return alpha0.source; }
    const GroupRef& target() const { return alpha0.target; }
};

// verifies matching endpoints, the section identities and surjectivity
SplitCoupleEpi make_couple(GroupHom alpha0, GroupHom alpha1, GroupHom section);

// I(α) = Im((α₀,α₁): G' -> H×H); `product` must be H×H with pair index
// a*|H|+b (built if omitted)
Subgroup i_of(const SplitCoupleEpi& c);
Subgroup i_of(const SplitCoupleEpi& c, const GroupRef& product);

// K(φ) = {(g₀,g₁) : φg₀ = φg₁} inside G×G
Subgroup k_of(const GroupHom& phi);
Subgroup k_of(const GroupHom& phi, const GroupRef& product);

// The four conditions of a right exact diagram, each evaluated from its
// own definition. They must agree; a split vote throws.
struct RightExactCheck {
    bool image_equality;   // I(α) = K(φ)
    bool exact_sequence;   // N -> G -> G'' -> 1 exact, N = Ker α₁
    bool coequalizer;      // φ is the coequalizer of (α₀,α₁)
    bool pullback_epi;     // φα₀ = φα₁ and G' -> G ×_{G''} G onto

    bool holds() const { return image_equality; }
};
RightExactCheck check_right_exact(const SplitCoupleEpi& c, const GroupHom& phi);

// G / Im(α₀|_{Ker α₁}), with normality verified
Quotient coequalizer_of_couple(const SplitCoupleEpi& c);

// translations between split couples and precrossed modules; each call
// verifies the round trip through the canonical isomorphism
PrecrossedModule n_translate(const SplitCoupleEpi& c);
SplitCoupleEpi c_translate(const PrecrossedModule& m);

// An endofunctor given by explicit group/hom actions plus a natural map
// G -> F(G). apply_group is memoized so repeated applications hand back
// pointer-identical groups and homs stay composable.
struct EndofunctorOracle {
    std::string name;
    std::function<GroupRef(const GroupRef&)> apply_group;
    std::function<GroupHom(const GroupHom&)> apply_hom;
    std::function<GroupHom(const GroupRef&)> coaugment; // G -> F(G)
};

EndofunctorOracle identity_functor();
EndofunctorOracle abelianization_functor();
// G -> G/γ_c (c >= 2; γ_2 gives the abelianization)
EndofunctorOracle nilpotent_quotient_functor(int c);
EndofunctorOracle square_functor(int order_cap = kDefaultOrderCap);
// identity, abelianization, G/γ₃, G/γ₄, square
std::vector<EndofunctorOracle> builtin_functors(int order_cap = kDefaultOrderCap);

// F(f) ∘ η_G = η_H ∘ f
bool verify_naturality(const EndofunctorOracle& f, const GroupHom& hom);

// Φ_G U = Ker(Φ(G⋉U) -> ΦG) with the ΦG-action by conjugation through
// Φ of the canonical embedding. Verifies Φ(G⋉U) = ΦG ⋉ Φ_G U.
struct PhiSubG {
    RealizedSubgroup kernel; // inside F(G⋉U)
    GroupAction action;      // F(G) acting on the realized kernel
    GroupRef f_semidirect;   // F(G⋉U)
    GroupHom f_project;      // F(G⋉U) -> F(G)
    GroupHom f_embed;        // F(G) -> F(G⋉U)
    SemidirectProduct sd;    // the underlying G⋉U
};
PhiSubG phi_sub_g(const EndofunctorOracle& f, const GroupRef& g, const GroupRef& u,
                  const GroupAction& a, int order_cap = kDefaultOrderCap);

// Φ^PCr(∂) = μ_∂^Φ : Φ_G U -> ΦG
PrecrossedModule phi_pcr(const EndofunctorOracle& f, const PrecrossedModule& m,
                         int order_cap = kDefaultOrderCap);

struct ConditionResult {
    bool ok;
    std::string witness; // empty when ok
};

// Φ_G U -> ΦG -> ΦH -> 1 exact for the short exact sequence U ↣ G ↠ G/U
ConditionResult test_right_exact_condition3(const EndofunctorOracle& f, const Subgroup& u,
                                            int order_cap = kDefaultOrderCap);

// Φ(G ×_H G) ⇉ Φ(G) -> Φ(H) is a coequalizer diagram
ConditionResult test_right_exact_condition6(const EndofunctorOracle& f, const GroupHom& phi,
                                            int order_cap = kDefaultOrderCap);

// π₀(Φ applied levelwise) ≅ Φ(π₀) for a truncated simplicial group
ConditionResult test_right_exact_condition5(const EndofunctorOracle& f,
                                            const TruncatedSimplicialGroup& k);

} // namespace grt
