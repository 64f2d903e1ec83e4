#include <cstdio>

#include "grt/suites.hpp"

using namespace grt;

// One line per criterion; exit status 0 iff every criterion passes.
int main() {
    struct Criterion {
        int number;
        const char* label;
        const char* suite;
        int min_instances;
    };
    const Criterion criteria[] = {
        {1, "nerve homotopy of crossed modules", "nerve", 8},
        {2, "four-way right-exactness agreement", "lemma21", 200},
        {3, "built-in functor conditions (3)/(5)/(6)", "functors", 100},
        {4, "nilpotent localization suite", "baumslag", 1},
        {5, "locality descent and pullback splitting", "theorem35", 500},
        {6, "equation systems and invisible subgroups", "levine", 1},
        {7, "homology closure on small p-groups", "hr", 1},
        {8, "parametric equations vs divisibility", "equations", 1},
        {9, "graded Lie ring axioms", "grlie", 1},
        {10, "byte-identical report reruns", "reproducibility", 1},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        SuiteReport rep;
        std::string detail;
        try {
            rep = run_suite(c.suite, 1);
        } catch (const Error& e) {
            detail = std::string(" threw: ") + e.what();
        }
        bool ok = detail.empty() && rep.ok() && rep.instances >= c.min_instances;
        all_ok = all_ok && ok;
        std::printf("%s criterion %2d (%s): suite=%s instances=%d passes=%d%s\n",
                    ok ? "PASS" : "FAIL", c.number, c.label, c.suite, rep.instances, rep.passes,
                    detail.c_str());
        if (!ok)
            for (const auto& cx : rep.counterexamples) std::printf("    counterexample: %s\n", cx.c_str());
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
