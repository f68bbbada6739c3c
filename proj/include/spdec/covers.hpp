#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "spdec/errors.hpp"
#include "spdec/formula.hpp"
#include "spdec/message_passing.hpp"
#include "spdec/parallel.hpp"

namespace spdec {

// sigma in {-1,0,+1}^n; 0 marks a locally free variable.
struct GeneralizedAssignment {
    std::vector<int> values;

    int size() const { return static_cast<int>(values.size()); }
};

// Cover conditions:
//  (1) each clause has a true literal (sign*sigma = +1) or at least two
//      literal occurrences on 0-valued variables,
//  (2) each variable with sigma != 0 has a supporting clause a in N(x) whose
//      other literals are all false: sign(y,a)*sigma(y) = -1.
// 0-valued variables never count as true literals; duplicate occurrences
// count as distinct 0-literals (N(a) is a multiset under the tuple model).
inline bool is_cover(const CnfFormula& f, const GeneralizedAssignment& sigma) {
    if (sigma.size() != f.n) throw DomainError("is_cover: |sigma| != n");

    for (const Clause& c : f.clauses) {
        bool has_true = false;
        int zero_occurrences = 0;
        for (const Literal& lit : c.literals) {
            int v = sigma.values[lit.var - 1];
            if (v == 0) ++zero_occurrences;
            else if (lit.sign * v > 0) has_true = true;
        }
        if (!has_true && zero_occurrences < 2) return false;
    }

    for (int x = 1; x <= f.n; ++x) {
        if (sigma.values[x - 1] == 0) continue;
        bool supported = false;
        for (const Clause& c : f.clauses) {
            bool contains_x = false;
            bool others_false = true;
            for (const Literal& lit : c.literals) {
                if (lit.var == x) {
                    contains_x = true;
                    continue;
                }
                if (lit.sign * sigma.values[lit.var - 1] != -1) {
                    others_false = false;
                    break;
                }
            }
            if (contains_x && others_false) {
                supported = true;
                break;
            }
        }
        if (!supported) return false;
    }
    return true;
}

struct CoverSet {
    std::vector<GeneralizedAssignment> covers;
    // per variable: fraction of covers assigning -1 / 0 / +1
    std::vector<std::array<double, 3>> marginals;
};

// Exhaustive 3^n scan filtered by is_cover.
inline CoverSet enumerate_covers(const CnfFormula& f, int cap = 16, unsigned threads = 0) {
    if (f.n > cap) throw CapExceeded("enumerate_covers: n exceeds cap");
    CoverSet out;
    const int n = f.n;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;

    const unsigned nthreads = threads == 0 ? hardware_threads() : threads;
    std::vector<std::vector<GeneralizedAssignment>> found(nthreads);
    const std::uint64_t chunk = (total + nthreads - 1) / nthreads;
    parallel_for(
        nthreads,
        [&](std::size_t ti) {
            std::uint64_t begin = ti * chunk;
            std::uint64_t end = begin + chunk < total ? begin + chunk : total;
            if (begin >= total) return;
            GeneralizedAssignment sigma;
            sigma.values.assign(n, -1);
            std::uint64_t code = begin;
            for (int i = 0; i < n; ++i) {
                sigma.values[i] = static_cast<int>(code % 3) - 1;
                code /= 3;
            }
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                if (is_cover(f, sigma)) found[ti].push_back(sigma);
                // odometer step in base 3 over digits -1,0,+1
                for (int i = 0; i < n; ++i) {
                    if (sigma.values[i] < 1) {
                        ++sigma.values[i];
                        break;
                    }
                    sigma.values[i] = -1;
                }
            }
        },
        nthreads);
    for (auto& part : found)
        for (auto& s : part) out.covers.push_back(std::move(s));

    out.marginals.assign(n, {0.0, 0.0, 0.0});
    if (!out.covers.empty()) {
        for (const auto& s : out.covers)
            for (int i = 0; i < n; ++i) ++out.marginals[i][s.values[i] + 1];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < 3; ++j) out.marginals[i][j] /= static_cast<double>(out.covers.size());
    }
    return out;
}

struct CoverComparison {
    std::vector<std::array<double, 3>> sp_triples;     // mu(-1), mu(0), mu(+1)
    std::vector<std::array<double, 3>> cover_triples;  // same layout
    std::vector<double> per_var_deviation;             // max over the three masses
    double max_deviation = 0.0;
    double final_residual = 0.0;
    bool converged = false;
    std::size_t cover_count = 0;
};

// SP fixed point vs the enumerated cover marginals; report only, no
// threshold — the Fig. 1 caption asserts SP = BP on covers but proves no
// finite-instance exactness statement.
inline CoverComparison compare_sp_to_covers(const CnfFormula& f, const IterationPolicy& policy,
                                            int cap = 16) {
    CoverSet covers = enumerate_covers(f, cap);
    FactorGraph g = FactorGraph::build(f);
    IterateResult res = iterate(g, policy, Engine::SP);

    CoverComparison cmp;
    cmp.cover_count = covers.covers.size();
    cmp.converged = res.converged;
    cmp.final_residual = res.residual_trace.empty() ? 0.0 : res.residual_trace.back();
    cmp.sp_triples.resize(f.n);
    cmp.cover_triples.resize(f.n);
    cmp.per_var_deviation.resize(f.n);
    for (int v = 1; v <= f.n; ++v) {
        MarginalEstimate m = sp_marginal(g, res.state, v);
        cmp.sp_triples[v - 1] = {m.mu_minus, m.mu_zero, m.mu_plus};
        cmp.cover_triples[v - 1] = covers.marginals.empty() ? std::array<double, 3>{0, 0, 0}
                                                            : covers.marginals[v - 1];
        double d = 0.0;
        for (int j = 0; j < 3; ++j) {
            double diff = std::fabs(cmp.sp_triples[v - 1][j] - cmp.cover_triples[v - 1][j]);
            if (diff > d) d = diff;
        }
        cmp.per_var_deviation[v - 1] = d;
        if (d > cmp.max_deviation) cmp.max_deviation = d;
    }
    return cmp;
}

// One sigma per line, symbols -/0/+.
inline void write_cover_set(std::ostream& os, const CoverSet& covers) {
    for (const auto& sigma : covers.covers) {
        for (int v : sigma.values) os << (v < 0 ? '-' : (v > 0 ? '+' : '0'));
        os << '\n';
    }
}

}  // namespace spdec
