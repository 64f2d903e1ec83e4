#include "grt/levine.hpp"

#include <algorithm>
#include <map>

namespace grt {

Syllable const_syl(int element) { return Syllable{Syllable::Kind::Const, element, 1}; }
Syllable var_syl(int var, int exponent) { return Syllable{Syllable::Kind::Var, var, exponent}; }
Syllable param_syl(int param, int exponent) {
    return Syllable{Syllable::Kind::Param, param, exponent};
}

FreeProductWord reduce(const std::vector<Syllable>& raw, const GroupRef& coefficients) {
    std::vector<Syllable> out;
    for (Syllable s : raw) {
        for (;;) {
            if (s.kind == Syllable::Kind::Const) {
                if (!coefficients)
                    throw Error("constant syllable in a word without a coefficient group");
                if (s.index == 0) break;
                if (!out.empty() && out.back().kind == Syllable::Kind::Const) {
                    s.index = coefficients->mul(out.back().index, s.index);
                    out.pop_back();
                    continue;
                }
                out.push_back(s);
                break;
            }
            if (s.exponent != 1 && s.exponent != -1)
                throw Error("letter exponents must be ±1");
            if (!out.empty() && out.back().kind == s.kind && out.back().index == s.index &&
                out.back().exponent == -s.exponent) {
                out.pop_back();
                break;
            }
            out.push_back(s);
            break;
        }
    }
    // a cancellation can expose a new constant pair; run to fixpoint
    for (;;) {
        bool dirty = false;
        for (size_t i = 0; i + 1 < out.size(); ++i) {
            if (out[i].kind == Syllable::Kind::Const &&
                out[i + 1].kind == Syllable::Kind::Const) {
                dirty = true;
                break;
            }
            if (out[i].kind != Syllable::Kind::Const && out[i].kind == out[i + 1].kind &&
                out[i].index == out[i + 1].index && out[i].exponent == -out[i + 1].exponent) {
                dirty = true;
                break;
            }
        }
        if (!dirty) break;
        out = reduce(out, coefficients).syllables;
    }
    return FreeProductWord{std::move(out)};
}

FreeProductWord invert(const FreeProductWord& w, const GroupRef& coefficients) {
    std::vector<Syllable> raw;
    for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it) {
        Syllable s = *it;
        if (s.kind == Syllable::Kind::Const)
            s.index = coefficients->inv(s.index);
        else
            s.exponent = -s.exponent;
        raw.push_back(s);
    }
    return reduce(raw, coefficients);
}

FreeProductWord concat(const FreeProductWord& a, const FreeProductWord& b,
                       const GroupRef& coefficients) {
    std::vector<Syllable> raw = a.syllables;
    raw.insert(raw.end(), b.syllables.begin(), b.syllables.end());
    return reduce(raw, coefficients);
}

bool is_contractible(const FreeProductWord& w) {
    std::vector<Syllable> stack;
    for (const Syllable& s : w.syllables) {
        if (s.kind != Syllable::Kind::Var) continue;
        if (!stack.empty() && stack.back().index == s.index &&
            stack.back().exponent == -s.exponent)
            stack.pop_back();
        else
            stack.push_back(s);
    }
    return stack.empty();
}

bool is_acyclic(const FreeProductWord& w) {
    std::map<int, int> sums;
    for (const Syllable& s : w.syllables)
        if (s.kind == Syllable::Kind::Var) sums[s.index] += s.exponent;
    for (const auto& [var, sum] : sums)
        if (sum != 0) return false;
    return true;
}

int evaluate(const FreeProductWord& w, const GroupRef& g, const std::vector<int>& assignment,
             const std::vector<int>& params) {
    int acc = 0;
    for (const Syllable& s : w.syllables) {
        int x;
        switch (s.kind) {
        case Syllable::Kind::Const: x = s.index; break;
        case Syllable::Kind::Var: x = assignment.at(s.index); break;
        default: x = params.at(s.index); break;
        }
        if (s.kind != Syllable::Kind::Const && s.exponent == -1) x = g->inv(x);
        acc = g->mul(acc, x);
    }
    return acc;
}

std::string word_to_string(const FreeProductWord& w,
                           const std::vector<std::string>& parameter_names) {
    if (w.empty()) return "1";
    std::string out;
    for (const Syllable& s : w.syllables) {
        if (!out.empty()) out += "·";
        switch (s.kind) {
        case Syllable::Kind::Const: out += "g" + std::to_string(s.index); break;
        case Syllable::Kind::Var: out += "x" + std::to_string(s.index + 1); break;
        default:
            out += s.index < static_cast<int>(parameter_names.size())
                       ? parameter_names[s.index]
                       : "a" + std::to_string(s.index + 1);
            break;
        }
        if (s.kind != Syllable::Kind::Const && s.exponent == -1) out += "^-1";
    }
    return out;
}

namespace {

EquationSystem xw_system(const GroupRef& g, const std::vector<FreeProductWord>& ws,
                         bool levine) {
    EquationSystem sys;
    sys.num_variables = static_cast<int>(ws.size());
    sys.coefficients = g;
    for (int i = 0; i < sys.num_variables; ++i) {
        if (levine && !is_contractible(ws[i]))
            throw Error("word " + std::to_string(i + 1) + " is not contractible");
        if (!levine && !is_acyclic(ws[i]))
            throw Error("word " + std::to_string(i + 1) + " is not acyclic");
        std::vector<Syllable> raw{var_syl(i)};
        auto inv_w = invert(ws[i], g);
        raw.insert(raw.end(), inv_w.syllables.begin(), inv_w.syllables.end());
        sys.relators.push_back(reduce(raw, g));
    }
    return sys;
}

} // namespace

EquationSystem make_levine_system(const GroupRef& g, const std::vector<FreeProductWord>& ws) {
    return xw_system(g, ws, true);
}

EquationSystem make_nullhomologous_system(const GroupRef& g,
                                          const std::vector<FreeProductWord>& ws) {
    return xw_system(g, ws, false);
}

std::vector<std::vector<int>> solve(const GroupRef& g, const EquationSystem& sys, long cap) {
    if (!sys.parameters.empty()) throw Error("solve needs a system without parameters");
    long total = 1;
    for (int i = 0; i < sys.num_variables; ++i) {
        total *= g->order();
        if (total > cap)
            throw SearchCapExceeded("assignment space exceeds cap " + std::to_string(cap));
    }
    std::vector<std::vector<int>> solutions;
    std::vector<int> assignment(sys.num_variables, 0);
    for (long tick = 0; tick < total; ++tick) {
        bool ok = true;
        for (const auto& r : sys.relators)
            if (evaluate(r, g, assignment) != 0) {
                ok = false;
                break;
            }
        if (ok) solutions.push_back(assignment);
        for (int i = sys.num_variables - 1; i >= 0; --i) {
            if (++assignment[i] < g->order()) break;
            assignment[i] = 0;
        }
    }
    return solutions;
}

FreeProductWord random_contractible_word(SplitMix64& rng, const GroupRef& g, int num_vars,
                                         int max_syllables) {
    int budget = std::max(2, max_syllables);
    std::vector<Syllable> raw;
    std::vector<Syllable> pending; // variable letters to cancel later
    int head = 1 + rng.pick(budget / 2);
    for (int i = 0; i < head; ++i) {
        if (g->order() > 1 && rng.pick(2) == 0) {
            raw.push_back(const_syl(1 + rng.pick(g->order() - 1)));
        } else if (num_vars > 0) {
            auto v = var_syl(rng.pick(num_vars), rng.pick(2) == 0 ? 1 : -1);
            raw.push_back(v);
            pending.push_back(v);
        }
    }
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
        if (g->order() > 1 && rng.pick(3) == 0)
            raw.push_back(const_syl(1 + rng.pick(g->order() - 1)));
        raw.push_back(var_syl(it->index, -it->exponent));
    }
    auto w = reduce(raw, g);
    if (!is_contractible(w)) throw Error("generator produced a non-contractible word");
    return w;
}

FreeProductWord random_acyclic_word(SplitMix64& rng, const GroupRef& g, int num_vars,
                                    int max_syllables) {
    int budget = std::max(2, max_syllables);
    std::vector<Syllable> raw;
    std::vector<int> sums(std::max(num_vars, 1), 0);
    int head = 1 + rng.pick(budget / 2);
    for (int i = 0; i < head; ++i) {
        if (g->order() > 1 && rng.pick(2) == 0) {
            raw.push_back(const_syl(1 + rng.pick(g->order() - 1)));
        } else if (num_vars > 0) {
            int v = rng.pick(num_vars), e = rng.pick(2) == 0 ? 1 : -1;
            raw.push_back(var_syl(v, e));
            sums[v] += e;
        }
    }
    for (int v = 0; v < num_vars; ++v)
        while (sums[v] != 0) {
            int e = sums[v] > 0 ? -1 : 1;
            if (g->order() > 1 && rng.pick(3) == 0)
                raw.push_back(const_syl(1 + rng.pick(g->order() - 1)));
            raw.push_back(var_syl(v, e));
            sums[v] += e;
        }
    auto w = reduce(raw, g);
    if (!is_acyclic(w)) throw Error("generator produced a non-acyclic word");
    return w;
}

std::vector<Subgroup> invisible_subgroups(const GroupRef& g) {
    std::vector<Subgroup> out;
    auto whole = whole_subgroup(g);
    for (const auto& h : normal_subgroups(g)) {
        if (h.is_trivial()) continue;
        if (commutator_subgroup(g, h, whole) == h) out.push_back(h);
    }
    return out;
}

namespace {

struct PathStep {
    int prev;
    int edge;
};

// BFS over subgroup elements along a labelled edge alphabet; returns
// for each reachable element the edge sequence from the identity
std::vector<std::vector<int>> bfs_factorizations(const GroupRef& g,
                                                 const std::vector<int>& edges, int depth_cap) {
    std::vector<int> dist(g->order(), -1);
    std::vector<PathStep> from(g->order(), {-1, -1});
    std::vector<int> frontier{0};
    dist[0] = 0;
    for (int d = 0; d < depth_cap && !frontier.empty(); ++d) {
        std::vector<int> next;
        for (int s : frontier)
            for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
                int t = g->mul(s, edges[e]);
                if (dist[t] == -1) {
                    dist[t] = d + 1;
                    from[t] = {s, e};
                    next.push_back(t);
                }
            }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> paths(g->order());
    for (int x = 0; x < g->order(); ++x) {
        if (dist[x] == -1) {
            paths[x] = {-1}; // unreachable marker
            continue;
        }
        std::vector<int> seq;
        for (int cur = x; cur != 0; cur = from[cur].prev) seq.push_back(from[cur].edge);
        std::reverse(seq.begin(), seq.end());
        paths[x] = std::move(seq);
    }
    return paths;
}

} // namespace

TwoSolutionWitness build_two_solution_witness(const GroupRef& g, const Subgroup& h,
                                              int factor_bound) {
    if (h.is_trivial()) throw Error("witness needs a nontrivial subgroup");
    if (!h.is_normal()) throw NotNormal("witness needs a normal subgroup");
    if (!(commutator_subgroup(g, h, whole_subgroup(g)) == h))
        throw Error("subgroup is not invisible: [H,G] != H");

    auto r = realize(h);
    std::vector<int> gens;
    for (int i : generating_set(r.group)) gens.push_back(r.inclusion.images[i]);
    int n = static_cast<int>(gens.size());

    // alphabet 1: commutators [a, c]^±1 with a in H, c in G
    std::vector<int> comm_edges;
    struct CommLabel {
        int a, c, eps;
    };
    std::vector<CommLabel> comm_labels;
    std::vector<uint8_t> seen_edge(g->order(), 0);
    for (int a : h.elements()) {
        if (a == 0) continue;
        for (int c = 0; c < g->order(); ++c) {
            int e = g->comm(a, c);
            for (int eps : {1, -1}) {
                int v = eps == 1 ? e : g->inv(e);
                if (v == 0 || seen_edge[v]) continue;
                seen_edge[v] = 1;
                comm_edges.push_back(v);
                comm_labels.push_back({a, c, eps});
            }
        }
    }
    auto comm_paths = bfs_factorizations(g, comm_edges, factor_bound);
    for (int hi : gens)
        if (comm_paths[hi] == std::vector<int>{-1})
            throw ExpressionSearchExceeded("no commutator factorization within " +
                                           std::to_string(factor_bound) + " factors");

    // alphabet 2: conjugated generators (h_k^±1)^c, to lift H-elements
    // into the normal closure of the variables
    std::vector<int> lift_edges;
    struct LiftLabel {
        int k, eps, c;
    };
    std::vector<LiftLabel> lift_labels;
    std::fill(seen_edge.begin(), seen_edge.end(), 0);
    for (int k = 0; k < n; ++k)
        for (int eps : {1, -1})
            for (int c = 0; c < g->order(); ++c) {
                int base = eps == 1 ? gens[k] : g->inv(gens[k]);
                int v = g->conj(base, c);
                if (v == 0 || seen_edge[v]) continue;
                seen_edge[v] = 1;
                lift_edges.push_back(v);
                lift_labels.push_back({k, eps, c});
            }
    auto lift_paths = bfs_factorizations(g, lift_edges, g->order());

    // u: monomial in the normal closure of the x's evaluating to a
    auto lift_word = [&](int a) {
        std::vector<Syllable> raw;
        for (int e : lift_paths[a]) {
            if (e == -1) throw ExpressionSearchExceeded("element has no conjugate-generator lift");
            const auto& l = lift_labels[e];
            raw.push_back(const_syl(g->inv(l.c)));
            raw.push_back(var_syl(l.k, l.eps));
            raw.push_back(const_syl(l.c));
        }
        return reduce(raw, g);
    };

    std::vector<FreeProductWord> ws;
    for (int i = 0; i < n; ++i) {
        FreeProductWord w; // empty
        for (int e : comm_paths[gens[i]]) {
            const auto& l = comm_labels[e];
            auto u = lift_word(l.a);
            // [u, c] = u^-1 c^-1 u c
            std::vector<Syllable> raw = invert(u, g).syllables;
            raw.push_back(const_syl(g->inv(l.c)));
            raw.insert(raw.end(), u.syllables.begin(), u.syllables.end());
            raw.push_back(const_syl(l.c));
            auto factor = reduce(raw, g);
            if (l.eps == -1) factor = invert(factor, g);
            w = concat(w, factor, g);
        }
        ws.push_back(w);
    }

    TwoSolutionWitness out;
    out.system = make_levine_system(g, ws);
    out.solution_generators = gens;
    out.solution_trivial.assign(n, 0);
    for (const auto& rel : out.system.relators) {
        if (evaluate(rel, g, out.solution_generators) != 0)
            throw Error("witness system rejects the generator solution");
        if (evaluate(rel, g, out.solution_trivial) != 0)
            throw Error("witness system rejects the trivial solution");
    }
    if (out.solution_generators == out.solution_trivial)
        throw Error("witness solutions coincide");
    return out;
}

LevineReport harness_prop58(const GroupRef& g, uint64_t seed, int num_systems, long cap) {
    LevineReport rep;
    auto invisible = invisible_subgroups(g);
    rep.has_invisible = !invisible.empty();
    if (rep.has_invisible) {
        auto w = build_two_solution_witness(g, invisible.front());
        rep.systems_checked = 1;
        rep.notes.push_back("two-solution witness in " +
                            std::to_string(w.system.num_variables) + " variable(s)");
        return rep;
    }
    SplitMix64 rng(seed);
    for (int t = 0; t < num_systems; ++t) {
        int nv = 1 + rng.pick(3);
        std::vector<FreeProductWord> ws;
        for (int i = 0; i < nv; ++i) ws.push_back(random_acyclic_word(rng, g, nv));
        auto sols = solve(g, make_nullhomologous_system(g, ws), cap);
        ++rep.systems_checked;
        if (sols.size() > 1) {
            ++rep.failures;
            rep.notes.push_back("system " + std::to_string(t) + " has " +
                                std::to_string(sols.size()) + " solutions");
        }
    }
    return rep;
}

LevineReport harness_prop510(const GroupRef& a, const Subgroup& u) {
    if (!is_nilpotent(a)) throw NotNilpotent("harness needs a nilpotent group");
    LevineReport rep;
    auto whole = whole_subgroup(a);
    for (const auto& v : normal_subgroups(a, u)) {
        ++rep.systems_checked;
        Subgroup rebuilt = join(u, commutator_subgroup(a, v, whole));
        if (rebuilt == v && !(v == u)) {
            ++rep.failures;
            rep.notes.push_back("V of order " + std::to_string(v.size()) +
                                " satisfies V = U[V,A] but V != U");
        }
    }
    auto q = quotient(a, u);
    if (!invisible_subgroups(q.group).empty()) {
        ++rep.failures;
        rep.notes.push_back("quotient has an invisible subgroup");
    }
    return rep;
}

bool check_lemma511(const GroupRef& g, const Subgroup& u, const Subgroup& v, int order_cap) {
    for (int x = 0; x < g->order(); ++x)
        if (u.contains(x) && !v.contains(x)) throw Error("U must be contained in V");
    auto act = conjugation_action(v);
    auto sd = semidirect_product(g, act.space, act, order_cap);
    auto r = realize(v);
    std::vector<int> closure_gens;
    for (int a = 0; a < g->order(); ++a)
        for (int x : u.elements()) closure_gens.push_back(sd.pair(a, r.index_of[x]));
    Subgroup closure = normal_closure(sd.product, closure_gens);

    Subgroup w = join(u, commutator_subgroup(g, v, whole_subgroup(g)));
    Subgroup expected{sd.product, std::vector<uint8_t>(sd.product->order(), 0)};
    for (int a = 0; a < g->order(); ++a)
        for (int x : w.elements()) expected.members[sd.pair(a, r.index_of[x])] = 1;
    return closure.members == expected.members;
}

} // namespace grt
