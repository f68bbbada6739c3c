#pragma once

#include <string>
#include <vector>

#include "spdec/formula.hpp"
#include "spdec/rng.hpp"

namespace testutil {

// Builds a formula from signed integers, e.g. {{1,-2,3},{-1,2}}.
inline spdec::CnfFormula make_formula(int n, const std::vector<std::vector<int>>& clauses) {
    spdec::CnfFormula f;
    f.n = n;
    f.provenance.origin = "adhoc";
    for (const auto& c : clauses) {
        spdec::Clause cl;
        for (int lit : c) cl.literals.push_back({lit < 0 ? -lit : lit, lit < 0 ? -1 : +1});
        f.clauses.push_back(cl);
    }
    return f;
}

// Random tree-shaped CNF: every clause takes one already-used variable and
// width-1 fresh ones, so the factor graph is acyclic. Widths in {2,3}.
inline spdec::CnfFormula make_random_tree(int max_vars, spdec::Rng& rng) {
    spdec::CnfFormula f;
    f.provenance.origin = "adhoc";
    int used = 1;
    std::vector<std::vector<int>> clauses;
    while (used < max_vars) {
        int width = 2 + static_cast<int>(rng.next_below(2));
        if (used + width - 1 > max_vars) width = max_vars - used + 1;
        if (width < 2) break;
        std::vector<int> c;
        int anchor = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(used)));
        c.push_back(rng.next_sign() * anchor);
        for (int i = 1; i < width; ++i) {
            ++used;
            c.push_back(rng.next_sign() * used);
        }
        clauses.push_back(c);
    }
    auto built = make_formula(max_vars, clauses);
    return built;
}

}  // namespace testutil
