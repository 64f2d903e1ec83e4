#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grt/errors.hpp"

namespace grt {

class FiniteGroup;
using GroupRef = std::shared_ptr<const FiniteGroup>;

inline constexpr int kDefaultOrderCap = 2000;
inline constexpr int kDefaultLatticeCap = 64;
inline constexpr int kExhaustiveAssocCap = 512;

// Exact finite group as a validated Cayley table. Elements are dense
// indices 0..order-1 with the identity always at index 0. Immutable
// after construction.
class FiniteGroup {
public:
    // Validates identity, inverses and associativity. Associativity is
    // checked on all triples up to order kExhaustiveAssocCap and on
    // 10*order seeded random triples above it; the mode is recorded.
    explicit FiniteGroup(std::vector<int> mul_table, int order,
                         std::vector<std::string> labels = {});

    int order() const { return n_; }
    int mul(int a, int b) const { return mul_[a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int a, int g) const { return mul(mul(inv(g), a), g); } // a^g
    int comm(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); } // [a,b]
    int pow(int a, long e) const;
    int element_order(int a) const;
    bool is_abelian() const;

    bool validated_exhaustively() const { return exhaustive_; }
    const std::string& label(int a) const { return labels_[a]; }

private:
    int n_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    bool exhaustive_ = true;
};

// Membership bitset over a parent group; always contains the identity
// and is closed under mul and inv.
struct Subgroup {
    GroupRef parent;
    std::vector<uint8_t> members;

    int size() const;
    bool contains(int a) const { return members[a] != 0; }
    std::vector<int> elements() const;
    bool is_trivial() const { return size() == 1; }
    bool is_whole() const { return size() == parent->order(); }
    bool operator==(const Subgroup& o) const { return members == o.members; }

    // conjugation witness (g, h) with h in the subgroup, h^g outside
    std::optional<std::pair<int, int>> normality_witness() const;
    bool is_normal() const { return !normality_witness().has_value(); }
};

// Total map of element indices, verified multiplicative.
struct GroupHom {
    GroupRef source;
    GroupRef target;
    std::vector<int> images;

    int operator()(int a) const { return images[a]; }
    bool is_injective() const;
    bool is_surjective() const;
};

// Right action of `group` on `space` by automorphisms:
// act(gh) = act(h) o act(g), act(1) = id.
struct GroupAction {
    GroupRef group;
    GroupRef space;
    std::vector<std::vector<int>> act; // act[g][u] = u^g

    int apply(int u, int g) const { return act[g][u]; }
};

// A subgroup realized as a FiniteGroup of its own, with the inclusion
// and the index translation table (parent index -> realized index, -1
// outside).
struct RealizedSubgroup {
    GroupRef group;
    GroupHom inclusion;
    std::vector<int> index_of;
};

struct SemidirectProduct {
    GroupRef product;          // pairs (g,u), index g*|U|+u
    GroupHom embed_group;      // G -> G⋉U
    GroupHom embed_space;      // U -> G⋉U
    GroupHom project;          // G⋉U -> G
    int pair(int g, int u) const;
    int left_of(int x) const;
    int right_of(int x) const;
};

struct Pullback {
    RealizedSubgroup sub;      // inside G×K
    GroupHom to_left;          // pullback -> G
    GroupHom to_right;         // pullback -> K
};

// ---- construction ----

GroupRef trivial_group();
GroupRef from_table(const std::vector<std::vector<int>>& table);
GroupRef from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                           int order_cap = kDefaultOrderCap);

// ---- subgroup calculus ----

Subgroup trivial_subgroup(const GroupRef& g);
Subgroup whole_subgroup(const GroupRef& g);
Subgroup subgroup_generated(const GroupRef& g, const std::vector<int>& gens);
Subgroup normal_closure(const GroupRef& g, const std::vector<int>& gens);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup center(const GroupRef& g);

// [H,_n K]; n = 0 returns H, n = 1 the ordinary commutator subgroup.
Subgroup commutator_subgroup(const GroupRef& g, const Subgroup& h, const Subgroup& k, int n = 1);

struct LowerCentralSeries {
    std::vector<Subgroup> terms; // gamma_1, gamma_2, ... until stable
    bool nilpotent;              // true iff the last term is trivial
    int nilpotency_class;        // valid when nilpotent
};
LowerCentralSeries lower_central_series(const GroupRef& g);
bool is_nilpotent(const GroupRef& g);
int nilpotency_class(const GroupRef& g); // throws NotNilpotent

// ---- quotients, products, homs ----

struct Quotient {
    GroupRef group;
    GroupHom projection;
};
Quotient quotient(const GroupRef& g, const Subgroup& n); // throws NotNormal

RealizedSubgroup realize(const Subgroup& s);

GroupRef direct_product(const GroupRef& g, const GroupRef& h);
GroupAction trivial_action(const GroupRef& g, const GroupRef& space);
GroupAction conjugation_action(const Subgroup& u); // parent acts on realized u
SemidirectProduct semidirect_product(const GroupRef& g, const GroupRef& u, const GroupAction& a,
                                     int order_cap = kDefaultOrderCap);

Pullback pullback(const GroupHom& f, const GroupHom& g);

GroupHom identity_hom(const GroupRef& g);
GroupHom compose(const GroupHom& second, const GroupHom& first); // second(first(x))
GroupHom hom_from_images(const GroupRef& source, const GroupRef& target, std::vector<int> images);
GroupHom hom_from_generators(const GroupRef& source, const GroupRef& target,
                             const std::vector<std::pair<int, int>>& generator_images);
Subgroup hom_image(const GroupHom& f);
Subgroup hom_kernel(const GroupHom& f);
Subgroup preimage(const GroupHom& f, const Subgroup& t);
Subgroup image_of(const GroupHom& f, const Subgroup& s);

// ---- structure ----

std::vector<std::pair<int, Subgroup>> sylow_decomposition(const GroupRef& g); // throws NotNilpotent

std::vector<Subgroup> all_subgroups(const GroupRef& g,
                                    const std::optional<Subgroup>& containing = std::nullopt,
                                    int lattice_cap = kDefaultLatticeCap);
std::vector<Subgroup> normal_subgroups(const GroupRef& g,
                                       const std::optional<Subgroup>& containing = std::nullopt);

// small deterministic generating sequence (greedy by index)
std::vector<int> generating_set(const GroupRef& g);

std::optional<std::vector<int>> find_isomorphism(const GroupRef& g, const GroupRef& h);
bool is_isomorphic(const GroupRef& g, const GroupRef& h);

// all automorphisms of g, as permutations; deterministic order
std::vector<std::vector<int>> automorphism_list(const GroupRef& g);
// automorphism group realized as a FiniteGroup over automorphism_list indices
struct AutGroup {
    GroupRef group;
    std::vector<std::vector<int>> perms;
};
AutGroup automorphism_group(const GroupRef& g);
GroupAction action_from_hom(const GroupHom& to_aut, const AutGroup& aut, const GroupRef& space);

void verify_action(const GroupAction& a); // throws NotAHomomorphism on violation

} // namespace grt
