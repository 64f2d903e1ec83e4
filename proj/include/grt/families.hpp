#pragma once

#include "grt/group.hpp"

namespace grt {

GroupRef cyclic_group(int n);
GroupRef dihedral_group(int n);     // order 2n, n >= 1
GroupRef symmetric_group(int n);    // order n!
GroupRef alternating_group(int n);  // order n!/2
GroupRef quaternion_group();        // Q8
GroupRef heisenberg_group(int p);   // order p^3, class 2

// named catalog used by the samplers and the verification suites;
// deterministic order
struct NamedGroup {
    std::string name;
    GroupRef group;
};
std::vector<NamedGroup> nilpotent_catalog(int max_order);
std::vector<NamedGroup> p_group_catalog(int p, int max_order);
std::vector<NamedGroup> mixed_catalog(int max_order); // nilpotent + S3, S4, A4, A5, dihedrals

} // namespace grt
