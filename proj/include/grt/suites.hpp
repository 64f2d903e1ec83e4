#pragma once

#include "grt/hr.hpp"
#include "grt/io.hpp"
#include "grt/keune.hpp"

namespace grt {

struct SuiteCaps {
    int order_cap = kDefaultOrderCap;
    int lattice_cap = kDefaultLatticeCap;
};

// Deterministic verification report: byte-identical for identical
// (suite, seed, caps, version). Wall time is deliberately not a field;
// the CLI reports it on stderr.
struct SuiteReport {
    std::string suite;
    uint64_t seed = 0;
    SuiteCaps caps;
    int instances = 0;
    int passes = 0;
    std::vector<std::string> counterexamples; // serialized failing instances
    std::vector<std::string> notes;           // skips and per-part counts
    std::string version = kToolkitVersion;

    bool ok() const { return counterexamples.empty() && instances > 0; }
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, uint64_t seed, const SuiteCaps& caps = {});

std::string render_report(const SuiteReport& rep);
nlohmann::json report_to_json(const SuiteReport& rep);

} // namespace grt
