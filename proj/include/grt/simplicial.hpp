#pragma once

#include <functional>
#include <optional>

#include "grt/group.hpp"

namespace grt {

// Equivariant map ∂: U -> G with a right G-action on U. The peiffer flag
// marks a crossed module: u1^{∂(u2)} = u1^{u2}.
struct PrecrossedModule {
    GroupHom boundary;  // U -> G
    GroupAction action; // G acting on U
    bool peiffer;
};

// Verifies equivariance ∂(u^g) = ∂(u)^g and computes the Peiffer flag.
PrecrossedModule make_precrossed(GroupHom boundary, GroupAction action);
// Peiffer witness (u1, u2) with u1^{∂(u2)} != u1^{u2}, if any.
std::optional<std::pair<int, int>> peiffer_witness(const GroupHom& boundary,
                                                  const GroupAction& action);

// inclusion of a normal subgroup with the conjugation action
PrecrossedModule inclusion_crossed_module(const Subgroup& u);

// Levels 0..N of groups with all face/degeneracy homomorphisms.
// faces[k][i]: G_k -> G_{k-1} (1 <= k <= N, 0 <= i <= k)
// degeneracies[k][i]: G_k -> G_{k+1} (0 <= k < N, 0 <= i <= k)
struct TruncatedSimplicialGroup {
    std::vector<GroupRef> levels;
    std::vector<std::vector<GroupHom>> faces;
    std::vector<std::vector<GroupHom>> degeneracies;

    int depth() const { return static_cast<int>(levels.size()) - 1; }
};

struct SimplicialWitness {
    std::string identity;
    int level;
    int element;
};
std::optional<SimplicialWitness> simplicial_witness(const TruncatedSimplicialGroup& k);
bool verify_simplicial(const TruncatedSimplicialGroup& k);

TruncatedSimplicialGroup constant_simplicial(const GroupRef& g, int depth);

struct MooreComplex {
    std::vector<Subgroup> levels;        // NK_0 .. NK_N inside the simplicial levels
    std::vector<GroupHom> differentials; // d0 restricted: realized NK_n -> level n-1
    std::vector<RealizedSubgroup> realized;
};
MooreComplex moore_complex(const TruncatedSimplicialGroup& k);

// pi_n for 0 <= n < depth (boundaries from level n+1 must exist)
GroupRef homotopy_group(const TruncatedSimplicialGroup& k, int n);

// Nerve of a crossed module: E_0 = G, E_{n+1} = E_n ⋉ U with E_n acting
// on the new U factor through the total map (g,u1..un) -> g∂(u1)...∂(un).
// Faces and degeneracies are re-verified as homomorphisms and the
// simplicial identities are checked before returning.
TruncatedSimplicialGroup nerve(const PrecrossedModule& m, int depth,
                               int order_cap = kDefaultOrderCap);

PrecrossedModule truncate_to_precrossed(const TruncatedSimplicialGroup& k);

GroupRef pi1_of_precrossed(const PrecrossedModule& m);

// apply an endofunctor levelwise (used by the Theorem-2.3-style testers);
// the caller provides group and hom actions
TruncatedSimplicialGroup map_levels(const TruncatedSimplicialGroup& k,
                                    const std::function<GroupRef(const GroupRef&)>& on_group,
                                    const std::function<GroupHom(const GroupHom&)>& on_hom);

} // namespace grt
