#include "grt/io.hpp"

namespace grt {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string(where) + ": missing \"" + key + "\"");
    return *it;
}

int require_int(const json& j, const char* key, const char* where) {
    const auto& v = require_field(j, key, where);
    if (!v.is_number_integer()) throw ParseError(std::string(where) + ": \"" + key + "\" must be an integer");
    return v.get<int>();
}

void check_version(const json& j) {
    if (auto it = j.find("format_version"); it != j.end()) {
        if (!it->is_number_integer() || it->get<int>() != kFormatVersion)
            throw ParseError("unsupported format_version");
    }
}

GroupRef build(const json& j, int order_cap); // forward

GroupRef build_family(const json& j, int order_cap) {
    auto fam = require_field(j, "family", "group").get<std::string>();
    if (fam == "cyclic") return cyclic_group(require_int(j, "n", "cyclic"));
    if (fam == "dihedral") return dihedral_group(require_int(j, "n", "dihedral"));
    if (fam == "symmetric") return symmetric_group(require_int(j, "n", "symmetric"));
    if (fam == "alternating") return alternating_group(require_int(j, "n", "alternating"));
    if (fam == "quaternion") return quaternion_group();
    if (fam == "heisenberg_p") return heisenberg_group(require_int(j, "p", "heisenberg_p"));
    if (fam == "direct_product") {
        const auto& factors = require_field(j, "factors", "direct_product");
        if (!factors.is_array() || factors.empty())
            throw ParseError("direct_product: \"factors\" must be a non-empty array");
        GroupRef acc = build(factors[0], order_cap);
        for (size_t i = 1; i < factors.size(); ++i) {
            auto next = build(factors[i], order_cap);
            if (static_cast<long>(acc->order()) * next->order() > order_cap)
                throw OrderCapExceeded("direct_product exceeds the order cap");
            acc = direct_product(acc, next);
        }
        return acc;
    }
    if (fam == "semidirect") {
        auto g = build(require_field(j, "group", "semidirect"), order_cap);
        auto u = build(require_field(j, "space", "semidirect"), order_cap);
        const auto& table = require_field(j, "action", "semidirect");
        if (!table.is_array()) throw ParseError("semidirect: \"action\" must be an array");
        GroupAction act{g, u, table.get<std::vector<std::vector<int>>>()};
        return semidirect_product(g, u, act, order_cap).product;
    }
    throw ParseError("unknown family \"" + fam + "\"");
}

GroupRef build(const json& j, int order_cap) {
    if (!j.is_object()) throw ParseError("group spec must be an object");
    if (j.contains("family")) return build_family(j, order_cap);
    if (j.contains("permutation")) {
        const auto& p = j["permutation"];
        int degree = require_int(p, "degree", "permutation");
        const auto& gens = require_field(p, "generators", "permutation");
        if (!gens.is_array()) throw ParseError("permutation: \"generators\" must be an array");
        return from_permutations(degree, gens.get<std::vector<std::vector<int>>>(), order_cap);
    }
    if (j.contains("table")) {
        const auto& rows = j["table"];
        if (!rows.is_array()) throw ParseError("table: rows must be an array");
        auto t = rows.get<std::vector<std::vector<int>>>();
        if (static_cast<int>(t.size()) > order_cap)
            throw OrderCapExceeded("table exceeds the order cap");
        return from_table(t);
    }
    throw ParseError("group spec needs \"family\", \"permutation\" or \"table\"");
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what()); // includes the byte position
    }
}

Syllable parse_syllable(const json& j, const GroupRef& coefficients, int num_vars,
                        int num_params) {
    if (!j.is_object()) throw ParseError("syllable must be an object");
    int exp = 1;
    if (auto it = j.find("exp"); it != j.end()) {
        exp = it->get<int>();
        if (exp != 1 && exp != -1) throw ParseError("syllable: \"exp\" must be 1 or -1");
    }
    if (j.contains("const")) {
        int e = j["const"].get<int>();
        if (e < 0 || e >= coefficients->order()) throw ParseError("syllable: constant out of range");
        if (exp == -1) e = coefficients->inv(e);
        return const_syl(e);
    }
    if (j.contains("var")) {
        int v = j["var"].get<int>();
        if (v < 0 || v >= num_vars) throw ParseError("syllable: variable out of range");
        return var_syl(v, exp);
    }
    if (j.contains("param")) {
        int p = j["param"].get<int>();
        if (p < 0 || p >= num_params) throw ParseError("syllable: parameter out of range");
        return param_syl(p, exp);
    }
    throw ParseError("syllable needs \"const\", \"var\" or \"param\"");
}

} // namespace

GroupSpec parse_group_spec(const std::string& text) {
    auto j = parse_document(text);
    if (!j.is_object()) throw ParseError("group document must be an object");
    check_version(j);
    bool bare = j.contains("family") || j.contains("permutation") || j.contains("table");
    if (!bare && j.contains("group")) return {j["group"]};
    return {j};
}

GroupRef build_group(const GroupSpec& spec, int order_cap) {
    auto g = build(spec.doc, order_cap);
    if (g->order() > order_cap) throw OrderCapExceeded("group spec exceeds the order cap");
    return g;
}

GroupRef parse_group(const std::string& text, int order_cap) {
    return build_group(parse_group_spec(text), order_cap);
}

EquationSystem parse_system(const std::string& text, const GroupRef& coefficients) {
    auto j = parse_document(text);
    if (!j.is_object()) throw ParseError("system document must be an object");
    check_version(j);
    const json& s = j.contains("system") ? j["system"] : j;

    EquationSystem sys;
    sys.coefficients = coefficients;
    if (auto it = s.find("parameters"); it != s.end()) {
        if (!it->is_array()) throw ParseError("system: \"parameters\" must be an array");
        sys.parameters = it->get<std::vector<std::string>>();
    }
    sys.num_variables = require_int(s, "variables", "system");
    if (sys.num_variables < 0) throw ParseError("system: negative variable count");
    const auto& relators = require_field(s, "relators", "system");
    if (!relators.is_array()) throw ParseError("system: \"relators\" must be an array");
    for (const auto& rel : relators) {
        if (!rel.is_array()) throw ParseError("system: each relator must be an array");
        std::vector<Syllable> raw;
        for (const auto& syl : rel)
            raw.push_back(parse_syllable(syl, coefficients, sys.num_variables,
                                         static_cast<int>(sys.parameters.size())));
        sys.relators.push_back(reduce(raw, coefficients));
    }
    return sys;
}

json system_to_json(const EquationSystem& sys) {
    json relators = json::array();
    for (const auto& w : sys.relators) {
        json rel = json::array();
        for (const auto& syl : w.syllables) {
            json s = json::object();
            switch (syl.kind) {
            case Syllable::Kind::Const: s["const"] = syl.index; break;
            case Syllable::Kind::Var: s["var"] = syl.index; break;
            case Syllable::Kind::Param: s["param"] = syl.index; break;
            }
            if (syl.kind != Syllable::Kind::Const && syl.exponent != 1) s["exp"] = syl.exponent;
            rel.push_back(s);
        }
        relators.push_back(rel);
    }
    json out{{"format_version", kFormatVersion},
             {"system",
              {{"parameters", sys.parameters},
               {"variables", sys.num_variables},
               {"relators", relators}}}};
    return out;
}

} // namespace grt
