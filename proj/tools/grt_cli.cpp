#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "grt/suites.hpp"

using namespace grt;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void cmd_analyze(const std::string& group_file, int order_cap, int lattice_cap) {
    auto g = parse_group(slurp(group_file), order_cap);
    std::cout << "order: " << g->order() << "\n";
    std::cout << "abelian: " << (g->is_abelian() ? "yes" : "no") << "\n";
    if (is_nilpotent(g))
        std::cout << "nilpotency_class: " << nilpotency_class(g) << "\n";
    else
        std::cout << "nilpotency_class: none\n";
    std::cout << "center_order: " << center(g).size() << "\n";
    std::cout << "derived_order: " << commutator_subgroup(g, whole_subgroup(g), whole_subgroup(g)).size()
              << "\n";
    std::cout << "abelianization: " << abelianization(g).canonical.to_string() << "\n";
    std::cout << "normal_subgroups: " << normal_subgroups(g).size() << "\n";
    if (g->order() <= lattice_cap)
        std::cout << "subgroups: " << all_subgroups(g, std::nullopt, lattice_cap).size() << "\n";
}

void cmd_localize(const std::string& group_file, const std::vector<int>& primes, int order_cap) {
    auto g = parse_group(slurp(group_file), order_cap);
    auto p = make_prime_set(primes);
    auto l = baumslag_localize(g, p);
    std::cout << "order: " << g->order() << "\n";
    std::cout << "localized_order: " << l.group->order() << "\n";
    std::cout << "kernel_order: " << hom_kernel(l.eta).size() << "\n";
    std::cout << "p_local: " << (is_p_local(l.group, p) ? "yes" : "no") << "\n";
    std::cout << "eta_epi: " << (l.eta.is_surjective() ? "yes" : "no") << "\n";
}

int cmd_verify(const std::string& suite, uint64_t seed, const SuiteCaps& caps, bool as_json) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = run_suite(suite, seed, caps);
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (as_json)
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        std::cout << render_report(rep);
    std::cerr << "wall_time_s: " << dt << "\n"; // stderr only: reports stay byte-identical
    return rep.ok() ? 0 : 1;
}

void cmd_solve(const std::string& group_file, const std::string& system_file, int order_cap) {
    auto g = parse_group(slurp(group_file), order_cap);
    auto sys = parse_system(slurp(system_file), g);
    if (!sys.parameters.empty())
        throw ParseError("solve-system expects a concrete system (no parameters)");
    nlohmann::json out = nlohmann::json::array();
    for (const auto& sol : solve(g, sys)) out.push_back(sol);
    std::cout << out.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite-group toolkit"};
    app.require_subcommand(1);
    SuiteCaps caps;

    std::string group_file, system_file, suite;
    std::vector<int> primes;
    uint64_t seed = 1;
    bool as_json = false;

    auto* analyze = app.add_subcommand("analyze", "invariants of a group file");
    analyze->add_option("group", group_file)->required();
    analyze->add_option("--order-cap", caps.order_cap);
    analyze->add_option("--lattice-cap", caps.lattice_cap);

    auto* localize = app.add_subcommand("localize", "Baumslag P-localization of a nilpotent group");
    localize->add_option("group", group_file)->required();
    localize->add_option("--primes", primes, "prime set, e.g. --primes 2 3")->required();
    localize->add_option("--order-cap", caps.order_cap);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite)->required();
    verify->add_option("--seed", seed);
    verify->add_option("--order-cap", caps.order_cap);
    verify->add_option("--lattice-cap", caps.lattice_cap);
    verify->add_flag("--json", as_json);

    auto* solve_cmd = app.add_subcommand("solve-system", "solve an equation system over a group");
    solve_cmd->add_option("group", group_file)->required();
    solve_cmd->add_option("system", system_file)->required();
    solve_cmd->add_option("--order-cap", caps.order_cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) cmd_analyze(group_file, caps.order_cap, caps.lattice_cap);
        if (*localize) cmd_localize(group_file, primes, caps.order_cap);
        if (*verify) return cmd_verify(suite, seed, caps, as_json);
        if (*solve_cmd) cmd_solve(group_file, system_file, caps.order_cap);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
