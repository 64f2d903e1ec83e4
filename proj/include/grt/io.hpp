#pragma once

#include <json.hpp>

#include "grt/families.hpp"
#include "grt/levine.hpp"

namespace grt {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolkitVersion = "1.0.0";

// Validated group document. Families: cyclic{n}, dihedral{n},
// symmetric{n}, alternating{n}, quaternion, heisenberg_p{p},
// direct_product{factors}, semidirect{group,space,action}; or
// permutation{degree,generators}; or table{rows}. May be wrapped as
// {"format_version":1,"group":{...}}.
struct GroupSpec {
    nlohmann::json doc; // the unwrapped spec object
};

GroupSpec parse_group_spec(const std::string& text);
GroupRef build_group(const GroupSpec& spec, int order_cap = kDefaultOrderCap);
GroupRef parse_group(const std::string& text, int order_cap = kDefaultOrderCap);

// Concrete equation system over a coefficient group: syllables are
// {"const":element}, {"var":i,"exp":±1} or {"param":i,"exp":±1};
// parameters are named in "parameters". May be wrapped as
// {"format_version":1,"system":{...}}.
EquationSystem parse_system(const std::string& text, const GroupRef& coefficients);

nlohmann::json system_to_json(const EquationSystem& sys);

} // namespace grt
