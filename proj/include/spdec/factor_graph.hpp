#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "spdec/formula.hpp"

namespace spdec {

// An edge is one literal occurrence: (clause, position). Duplicate
// occurrences of a variable in a clause are distinct edges, because messages
// travel per ordered pair and the tuple model permits repeats.
struct EdgeId {
    std::uint32_t clause = 0;
    std::uint32_t pos = 0;
};

// Bipartite incidence over a CnfFormula with O(1) access to N(x), N(x,zeta),
// N(b) and sign(x,a). Immutable after build.
class FactorGraph {
  public:
    static FactorGraph build(const CnfFormula& f) {
        FactorGraph g;
        g.n_ = f.n;
        g.clause_offset_.reserve(f.clauses.size() + 1);
        g.clause_offset_.push_back(0);
        std::size_t edges = 0;
        for (const Clause& c : f.clauses) edges += c.size();
        g.edge_var_.reserve(edges);
        g.edge_sign_.reserve(edges);
        for (const Clause& c : f.clauses) {
            for (const Literal& lit : c.literals) {
                g.edge_var_.push_back(lit.var);
                g.edge_sign_.push_back(static_cast<std::int8_t>(lit.sign));
            }
            g.clause_offset_.push_back(static_cast<std::uint32_t>(g.edge_var_.size()));
        }

        // Variable adjacency, positive-sign edges first per variable.
        std::vector<std::uint32_t> pos_deg(f.n + 1, 0), neg_deg(f.n + 1, 0);
        for (std::size_t e = 0; e < g.edge_var_.size(); ++e)
            (g.edge_sign_[e] > 0 ? pos_deg : neg_deg)[g.edge_var_[e]]++;
        g.var_offset_.assign(f.n + 2, 0);
        g.var_pos_count_.assign(f.n + 1, 0);
        for (int v = 1; v <= f.n; ++v) {
            g.var_pos_count_[v] = pos_deg[v];
            g.var_offset_[v + 1] = g.var_offset_[v] + pos_deg[v] + neg_deg[v];
        }
        g.var_edges_.resize(edges);
        std::vector<std::uint32_t> fill_pos(f.n + 1), fill_neg(f.n + 1);
        for (int v = 1; v <= f.n; ++v) {
            fill_pos[v] = g.var_offset_[v];
            fill_neg[v] = g.var_offset_[v] + pos_deg[v];
        }
        for (std::uint32_t e = 0; e < edges; ++e) {
            int v = g.edge_var_[e];
            if (g.edge_sign_[e] > 0) g.var_edges_[fill_pos[v]++] = e;
            else g.var_edges_[fill_neg[v]++] = e;
        }
        return g;
    }

    int num_vars() const { return n_; }
    std::size_t num_clauses() const { return clause_offset_.size() - 1; }
    std::size_t num_edges() const { return edge_var_.size(); }

    std::uint32_t clause_begin(std::size_t c) const { return clause_offset_[c]; }
    std::uint32_t clause_end(std::size_t c) const { return clause_offset_[c + 1]; }
    std::uint32_t clause_len(std::size_t c) const { return clause_end(c) - clause_begin(c); }

    int edge_var(std::uint32_t e) const { return edge_var_[e]; }
    int edge_sign(std::uint32_t e) const { return edge_sign_[e]; }
    std::uint32_t edge_clause(std::uint32_t e) const {
        // Binary search over clause offsets.
        std::size_t lo = 0, hi = clause_offset_.size() - 1;
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            if (clause_offset_[mid] <= e) lo = mid;
            else hi = mid;
        }
        return static_cast<std::uint32_t>(lo);
    }

    // Edges incident to variable v: [var_begin, var_pos_end) carry sign +1,
    // [var_pos_end, var_end) carry sign -1.
    std::uint32_t var_begin(int v) const { return var_offset_[v]; }
    std::uint32_t var_pos_end(int v) const { return var_offset_[v] + var_pos_count_[v]; }
    std::uint32_t var_end(int v) const { return var_offset_[v + 1]; }
    std::uint32_t var_degree(int v) const { return var_end(v) - var_begin(v); }
    std::uint32_t var_degree(int v, int zeta) const {
        return zeta > 0 ? var_pos_count_[v] : var_end(v) - var_pos_end(v);
    }
    std::uint32_t var_edge(std::uint32_t slot) const { return var_edges_[slot]; }

    std::map<std::uint32_t, std::size_t> clause_length_histogram() const {
        std::map<std::uint32_t, std::size_t> hist;
        for (std::size_t c = 0; c < num_clauses(); ++c) ++hist[clause_len(c)];
        return hist;
    }

    // Reconstructs the formula edge by edge (round-trip check support).
    CnfFormula to_formula() const {
        CnfFormula f;
        f.n = n_;
        f.provenance.origin = "adhoc";
        f.clauses.resize(num_clauses());
        for (std::size_t c = 0; c < num_clauses(); ++c)
            for (std::uint32_t e = clause_begin(c); e < clause_end(c); ++e)
                f.clauses[c].literals.push_back({edge_var_[e], edge_sign_[e]});
        return f;
    }

    void dump_edges(std::ostream& os) const {
        for (std::size_t c = 0; c < num_clauses(); ++c)
            for (std::uint32_t e = clause_begin(c); e < clause_end(c); ++e)
                os << "c" << c << " x" << edge_var_[e] << ' ' << (edge_sign_[e] > 0 ? '+' : '-')
                   << '\n';
    }

  private:
    int n_ = 0;
    std::vector<std::uint32_t> clause_offset_;
    std::vector<int> edge_var_;
    std::vector<std::int8_t> edge_sign_;
    std::vector<std::uint32_t> var_offset_;
    std::vector<std::uint32_t> var_pos_count_;
    std::vector<std::uint32_t> var_edges_;
};

}  // namespace spdec
