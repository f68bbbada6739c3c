#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "spdec/errors.hpp"
#include "spdec/rng.hpp"

namespace spdec {

// A literal: 1-based variable index and a sign in {+1,-1}.
struct Literal {
    int var = 0;
    int sign = +1;

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
    std::vector<Literal> literals;

    std::size_t size() const { return literals.size(); }
    bool empty() const { return literals.empty(); }
};

enum class ModelKind { UniformTuple, Binomial };

// Random k-CNF model. UniformTuple draws exactly m clauses of k i.i.d.
// uniform literals (repeats allowed), matching the (2n)^{km} count of equally
// likely formulas. Binomial approximates independent inclusion of each of the
// (2n)^k ordered tuples with probability m/(2n)^k.
struct RandomModel {
    ModelKind kind = ModelKind::UniformTuple;
    int k = 3;
    std::uint64_t m = 0;
};

struct Provenance {
    std::string origin;  // "uniform-tuple", "binomial", "decimated", "file", "adhoc"
    int k = 0;
    std::uint64_t m = 0;
    std::uint64_t seed = 0;
};

struct CnfFormula {
    int n = 0;
    std::vector<Clause> clauses;
    Provenance provenance;

    std::size_t clause_count() const { return clauses.size(); }
};

// A partial assignment with a stable assignment order.
struct PartialAssignment {
    std::unordered_map<int, int> values;  // var -> {+1,-1}
    std::vector<int> order;

    bool contains(int var) const { return values.count(var) != 0; }
    void assign(int var, int value) {
        if (values.emplace(var, value).second) order.push_back(var);
    }
    std::size_t size() const { return order.size(); }
};

inline CnfFormula generate(const RandomModel& model, int n, std::uint64_t seed) {
    if (n < 1) throw DomainError("generate: n must be >= 1");
    if (model.k < 2) throw DomainError("generate: k must be >= 2");
    const std::uint64_t two_n = 2ULL * static_cast<std::uint64_t>(n);

    // Overflow guard for literal-count arithmetic.
    if (model.m > (1ULL << 40) || static_cast<std::uint64_t>(model.k) * std::max<std::uint64_t>(model.m, 1) > (1ULL << 44))
        throw DomainError("generate: m*k too large");

    Rng gen = Rng(seed).split("generation");
    CnfFormula f;
    f.n = n;

    auto draw_clause = [&]() {
        Clause c;
        c.literals.reserve(model.k);
        for (int i = 0; i < model.k; ++i) {
            int var = static_cast<int>(gen.next_below(static_cast<std::uint64_t>(n))) + 1;
            int sign = gen.next_sign();
            c.literals.push_back({var, sign});
        }
        return c;
    };

    if (model.kind == ModelKind::UniformTuple) {
        f.provenance = {"uniform-tuple", model.k, model.m, seed};
        f.clauses.reserve(model.m);
        for (std::uint64_t i = 0; i < model.m; ++i) f.clauses.push_back(draw_clause());
        return f;
    }

    // Binomial: Poisson(m)-many tuples; duplicates rejected only when the
    // tuple universe (2n)^k fits in 64-bit range, where a tuple can be keyed
    // exactly.
    f.provenance = {"binomial", model.k, model.m, seed};
    bool universe_fits = true;
    {
        long double total = 1.0L;
        for (int i = 0; i < model.k; ++i) {
            total *= static_cast<long double>(two_n);
            if (total > 1.8e19L) {
                universe_fits = false;
                break;
            }
        }
    }
    if (universe_fits && static_cast<std::uint64_t>(model.k) > two_n)
        throw DomainError("generate: binomial exhaustive mode rejects k > 2n");

    std::uint64_t count = gen.next_poisson(static_cast<double>(model.m));
    if (universe_fits) {
        long double total = std::pow(static_cast<long double>(two_n), model.k);
        if (static_cast<long double>(count) > total)
            throw DomainError("generate: binomial draw exceeds tuple universe");
        std::unordered_set<std::uint64_t> seen;
        while (f.clauses.size() < count) {
            Clause c = draw_clause();
            std::uint64_t key = 0;
            for (const Literal& lit : c.literals) {
                std::uint64_t code = 2ULL * static_cast<std::uint64_t>(lit.var - 1) + (lit.sign > 0 ? 1 : 0);
                key = key * two_n + code;
            }
            if (seen.insert(key).second) f.clauses.push_back(std::move(c));
        }
    } else {
        for (std::uint64_t i = 0; i < count; ++i) f.clauses.push_back(draw_clause());
    }
    return f;
}

struct DecimationResult {
    CnfFormula formula;
    std::size_t empty_clauses_removed = 0;
};

// Simplification under a partial assignment, rule by rule: drop satisfied
// clauses, erase falsified literal occurrences, then drop empty clauses
// (counted as the contradiction witness). In strict mode an empty clause
// raises Contradiction instead.
inline DecimationResult decimate_counting(const CnfFormula& f, const PartialAssignment& pa,
                                          bool strict = false) {
    for (int var : pa.order)
        if (var < 1 || var > f.n) throw DomainError("decimate: assigned variable outside [1..n]");

    DecimationResult out;
    out.formula.n = f.n;
    out.formula.provenance = f.provenance;
    out.formula.provenance.origin = "decimated";
    out.formula.clauses.reserve(f.clauses.size());

    for (const Clause& c : f.clauses) {
        bool satisfied = false;
        for (const Literal& lit : c.literals) {
            auto it = pa.values.find(lit.var);
            if (it != pa.values.end() && it->second == lit.sign) {
                satisfied = true;
                break;
            }
        }
        if (satisfied) continue;
        Clause kept;
        kept.literals.reserve(c.literals.size());
        for (const Literal& lit : c.literals)
            if (!pa.contains(lit.var)) kept.literals.push_back(lit);
        if (kept.empty()) {
            ++out.empty_clauses_removed;
            if (strict) throw Contradiction("decimate: empty clause produced");
            continue;
        }
        out.formula.clauses.push_back(std::move(kept));
    }
    return out;
}

inline CnfFormula decimate(const CnfFormula& f, const PartialAssignment& pa) {
    return decimate_counting(f, pa).formula;
}

struct TamenessReport {
    bool verdict = true;
    std::size_t redundant_count = 0;
    std::size_t heavy_var_count = 0;
};

// A clause is redundant if it shares >= 2 distinct variables with another
// clause; a variable is heavy if it occurs in more than ln(n) clauses.
inline TamenessReport is_tame(const CnfFormula& f) {
    TamenessReport rep;
    const double log_n = std::log(std::max(f.n, 2));

    std::vector<std::vector<int>> vars_of(f.clauses.size());
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> pair_to_clauses;
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
        auto& vars = vars_of[ci];
        for (const Literal& lit : f.clauses[ci].literals) vars.push_back(lit.var);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j) {
                std::uint64_t key = (static_cast<std::uint64_t>(vars[i]) << 32) |
                                    static_cast<std::uint64_t>(vars[j]);
                pair_to_clauses[key].push_back(ci);
            }
    }
    std::vector<bool> redundant(f.clauses.size(), false);
    for (const auto& [key, cs] : pair_to_clauses)
        if (cs.size() >= 2)
            for (std::size_t ci : cs) redundant[ci] = true;
    for (bool r : redundant)
        if (r) ++rep.redundant_count;

    std::unordered_map<int, std::size_t> clause_occurrences;
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci)
        for (int v : vars_of[ci]) ++clause_occurrences[v];
    for (const auto& [var, cnt] : clause_occurrences)
        if (static_cast<double>(cnt) > log_n) ++rep.heavy_var_count;

    rep.verdict = static_cast<double>(rep.redundant_count) <= log_n &&
                  static_cast<double>(rep.heavy_var_count) <= log_n;
    return rep;
}

// Full assignment as sigma[var-1] in {+1,-1}.
inline bool evaluate(const CnfFormula& f, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != f.n) throw DomainError("evaluate: assignment size != n");
    for (const Clause& c : f.clauses) {
        bool sat = false;
        for (const Literal& lit : c.literals) {
            if (lit.sign * sigma[lit.var - 1] > 0) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

inline std::uint64_t count_satisfying_bruteforce(const CnfFormula& f, int cap = 24) {
    if (f.n > cap) throw CapExceeded("count_satisfying_bruteforce: n exceeds cap");
    const std::uint64_t total = 1ULL << f.n;

    // Bitmask encoding: clause falsified iff (assignment & mask) == falsepat,
    // restricted to clauses without a tautological or duplicate-compatible
    // literal set; duplicates of the same polarity fold into the mask.
    struct Pat {
        std::uint64_t mask = 0, want = 0;
    };
    std::vector<Pat> pats;
    pats.reserve(f.clauses.size());
    for (const Clause& c : f.clauses) {
        Pat p;
        bool tautology = false;
        for (const Literal& lit : c.literals) {
            std::uint64_t bit = 1ULL << (lit.var - 1);
            std::uint64_t want_bit = lit.sign > 0 ? 0ULL : bit;  // falsified when sign*sigma = -1
            if (p.mask & bit) {
                if ((p.want & bit) != want_bit) {
                    tautology = true;  // x and -x in one clause: never falsified
                    break;
                }
            } else {
                p.mask |= bit;
                p.want |= want_bit;
            }
        }
        if (!tautology) {
            if (c.literals.empty()) return 0;  // empty clause: unsatisfiable
            pats.push_back(p);
        }
    }

    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < total; ++a) {
        bool ok = true;
        for (const Pat& p : pats) {
            if ((a & p.mask) == p.want) {
                ok = false;
                break;
            }
        }
        count += ok ? 1 : 0;
    }
    return count;
}

struct ExpectedSatCount {
    double value = 0.0;
    double log2_value = 0.0;
};

// E|S(Phi)| = 2^n (1 - 2^{-k})^m for i.i.d.-literal clause models, computed
// in log space.
inline ExpectedSatCount expected_sat_count(int k, int n, std::uint64_t m) {
    if (k < 1 || n < 0) throw DomainError("expected_sat_count: bad parameters");
    ExpectedSatCount out;
    double log2_term = std::log2(1.0 - std::pow(2.0, -k));
    out.log2_value = static_cast<double>(n) + static_cast<double>(m) * log2_term;
    out.value = std::exp2(out.log2_value);
    return out;
}

// Canonical text serialization; identical formulas produce identical bytes.
inline std::string canonical_serialize(const CnfFormula& f) {
    std::string out = "spcnf 1 " + std::to_string(f.n) + " " + std::to_string(f.clauses.size()) + "\n";
    for (const Clause& c : f.clauses) {
        for (std::size_t i = 0; i < c.literals.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(c.literals[i].sign * c.literals[i].var);
        }
        out += "\n";
    }
    return out;
}

}  // namespace spdec
