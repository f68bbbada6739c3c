#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "spdec/errors.hpp"
#include "spdec/formula.hpp"

namespace spdec {

// Standard DIMACS CNF. Duplicate and tautological literals are preserved
// verbatim in both directions.
inline void write_dimacs(std::ostream& os, const CnfFormula& f) {
    os << "p cnf " << f.n << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Literal& lit : c.literals) os << lit.sign * lit.var << ' ';
        os << "0\n";
    }
}

inline std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream os;
    write_dimacs(os, f);
    return os.str();
}

inline CnfFormula read_dimacs(std::istream& is) {
    CnfFormula f;
    f.provenance.origin = "file";
    std::string line;
    bool header_seen = false;
    std::size_t declared_clauses = 0;
    Clause current;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, cnf;
            long long n = 0, m = 0;
            hs >> p >> cnf >> n >> m;
            if (cnf != "cnf" || n < 0 || m < 0) throw ParseError("dimacs: bad problem line: " + line);
            f.n = static_cast<int>(n);
            declared_clauses = static_cast<std::size_t>(m);
            header_seen = true;
            continue;
        }
        if (!header_seen) throw ParseError("dimacs: clause before problem line");
        std::istringstream ls(line);
        long long v;
        while (ls >> v) {
            if (v == 0) {
                f.clauses.push_back(current);
                current = Clause{};
            } else {
                int var = static_cast<int>(v < 0 ? -v : v);
                if (var > f.n) throw ParseError("dimacs: literal exceeds declared variable count");
                current.literals.push_back({var, v > 0 ? +1 : -1});
            }
        }
    }
    if (!current.literals.empty()) throw ParseError("dimacs: unterminated clause");
    if (!header_seen) throw ParseError("dimacs: missing problem line");
    if (f.clauses.size() != declared_clauses)
        throw ParseError("dimacs: clause count mismatch with header");
    return f;
}

inline CnfFormula read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_dimacs(in);
}

inline void write_dimacs_file(const std::string& path, const CnfFormula& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_dimacs(out, f);
}

}  // namespace spdec
