#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <vector>

#include "spdec/factor_graph.hpp"
#include "spdec/parallel.hpp"
#include "spdec/psi.hpp"

namespace spdec {

// Log-space product with exact-zero short-circuit: thousands of factors
// underflow in linear space, and a single zero factor must stay an exact
// zero after exclusion of another factor.
struct ZeroLogProduct {
    int zeros = 0;
    double logsum = 0.0;

    void mul(double f) {
        if (f <= 0.0) ++zeros;
        else logsum += std::log(f);
    }
    double value() const { return zeros > 0 ? 0.0 : clamp01(std::exp(logsum)); }
    double value_excluding(double f) const {
        if (f <= 0.0) return zeros > 1 ? 0.0 : clamp01(std::exp(logsum));
        return zeros > 0 ? 0.0 : clamp01(std::exp(logsum - std::log(f)));
    }
    // log of the product excluding one factor; meaningful when that product
    // is nonzero.
    double log_excluding(double f, bool* is_zero) const {
        if (f <= 0.0) {
            *is_zero = zeros > 1;
            return logsum;
        }
        *is_zero = zeros > 0;
        return logsum - std::log(f);
    }

  private:
    static double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }
};

enum class Engine { SP, BP, CoinFlip };

struct IterationPolicy {
    int omega = 0;
    double residual_tol = 1e-9;
};

inline IterationPolicy default_policy(int n) {
    IterationPolicy p;
    p.omega = static_cast<int>(std::ceil(4.0 * std::log(std::max(n, 2))));
    p.residual_tol = 1e-9;
    return p;
}

// Per-edge message state. var_to_clause holds the distribution
// (mu(-1), mu(0), mu(+1)); clause_to_var holds
//   1 - prod_{y in N(b)\{x}} mu_{y->b}(-sign(y,b)),
// which is mu_{b->x}(0) for SP and the unsatisfied-side factor message for
// BP. Both arrays are indexed by the factor graph's global edge id.
struct MessageState {
    int round = 0;
    std::vector<std::array<double, 3>> var_to_clause;  // [0]: -1, [1]: 0, [2]: +1
    std::vector<double> clause_to_var;

    static int slot(int zeta) { return zeta < 0 ? 0 : (zeta > 0 ? 2 : 1); }
    double v2c(std::uint32_t e, int zeta) const { return var_to_clause[e][slot(zeta)]; }
    double c2v0(std::uint32_t e) const { return clause_to_var[e]; }
};

namespace detail {

// clause_to_var refresh from the current var_to_clause messages.
inline void update_clause_to_var(const FactorGraph& g, MessageState& s, unsigned threads = 1) {
    parallel_for(
        g.num_clauses(),
        [&](std::size_t c) {
            ZeroLogProduct prod;
            const std::uint32_t begin = g.clause_begin(c), end = g.clause_end(c);
            for (std::uint32_t e = begin; e < end; ++e) prod.mul(s.v2c(e, -g.edge_sign(e)));
            for (std::uint32_t e = begin; e < end; ++e) {
                bool zero;
                double lg = prod.log_excluding(s.v2c(e, -g.edge_sign(e)), &zero);
                // 1 - exp(lg) with the exclusion product in [0,1].
                double m = zero ? 1.0 : -std::expm1(lg > 0.0 ? 0.0 : lg);
                s.clause_to_var[e] = m < 0.0 ? 0.0 : (m > 1.0 ? 1.0 : m);
            }
        },
        threads);
}

}  // namespace detail

// Initial state: mu_{x->a}^{[0]}(+-1) = 1/2, mu^{[0]}(0) = 0, clause side
// computed from those.
inline MessageState init_messages(const FactorGraph& g, unsigned threads = 1) {
    MessageState s;
    s.round = 0;
    s.var_to_clause.assign(g.num_edges(), {0.5, 0.0, 0.5});
    s.clause_to_var.assign(g.num_edges(), 0.0);
    detail::update_clause_to_var(g, s, threads);
    return s;
}

// One synchronous SP round: fresh variable-to-clause messages from the psi
// image of the pi products of the previous clause-to-var messages, then fresh
// clause-to-var messages. Pure function of the input state.
inline MessageState sp_round(const FactorGraph& g, const MessageState& s, unsigned threads = 1) {
    MessageState out;
    out.round = s.round + 1;
    out.var_to_clause.resize(g.num_edges());
    out.clause_to_var.assign(g.num_edges(), 0.0);

    parallel_for(
        static_cast<std::size_t>(g.num_vars()),
        [&](std::size_t vi) {
            const int v = static_cast<int>(vi) + 1;
            ZeroLogProduct pos, neg;
            for (std::uint32_t slot = g.var_begin(v); slot < g.var_pos_end(v); ++slot)
                pos.mul(s.c2v0(g.var_edge(slot)));
            for (std::uint32_t slot = g.var_pos_end(v); slot < g.var_end(v); ++slot)
                neg.mul(s.c2v0(g.var_edge(slot)));
            for (std::uint32_t slot = g.var_begin(v); slot < g.var_end(v); ++slot) {
                const std::uint32_t e = g.var_edge(slot);
                const bool edge_positive = g.edge_sign(e) > 0;
                const double pi_plus =
                    edge_positive ? pos.value_excluding(s.c2v0(e)) : pos.value();
                const double pi_minus =
                    edge_positive ? neg.value() : neg.value_excluding(s.c2v0(e));
                PsiTriple t = psi_triple(pi_plus, pi_minus);
                out.var_to_clause[e] = {t.minus, t.zero, t.plus};
            }
        },
        threads);

    detail::update_clause_to_var(g, out, threads);
    return out;
}

// One synchronous BP round (two-state sum-product over satisfying-assignment
// semantics; baseline, not one of the SP equations). The stored clause
// message 1-q is the unsatisfied-side factor value; a variable multiplies it
// over neighbors of the *opposite* sign of the target value.
inline MessageState bp_round(const FactorGraph& g, const MessageState& s, unsigned threads = 1) {
    MessageState out;
    out.round = s.round + 1;
    out.var_to_clause.resize(g.num_edges());
    out.clause_to_var.assign(g.num_edges(), 0.0);

    parallel_for(
        static_cast<std::size_t>(g.num_vars()),
        [&](std::size_t vi) {
            const int v = static_cast<int>(vi) + 1;
            ZeroLogProduct pos, neg;  // over N(v,+1) resp. N(v,-1)
            for (std::uint32_t slot = g.var_begin(v); slot < g.var_pos_end(v); ++slot)
                pos.mul(s.c2v0(g.var_edge(slot)));
            for (std::uint32_t slot = g.var_pos_end(v); slot < g.var_end(v); ++slot)
                neg.mul(s.c2v0(g.var_edge(slot)));
            for (std::uint32_t slot = g.var_begin(v); slot < g.var_end(v); ++slot) {
                const std::uint32_t e = g.var_edge(slot);
                const bool edge_positive = g.edge_sign(e) > 0;
                // unnormalized mu(+1): product over N(v,-1)\{a}; mu(-1) over N(v,+1)\{a}
                const double up = edge_positive ? neg.value() : neg.value_excluding(s.c2v0(e));
                const double un = edge_positive ? pos.value_excluding(s.c2v0(e)) : pos.value();
                const double z = up + un;
                double mp = 0.5, mn = 0.5;
                if (z > 0.0) {
                    mp = up / z;
                    mn = un / z;
                }
                out.var_to_clause[e] = {mn, 0.0, mp};
            }
        },
        threads);

    detail::update_clause_to_var(g, out, threads);
    return out;
}

inline double state_residual(const MessageState& a, const MessageState& b) {
    double r = 0.0;
    for (std::size_t e = 0; e < a.var_to_clause.size(); ++e) {
        for (int i = 0; i < 3; ++i) {
            double d = std::fabs(a.var_to_clause[e][i] - b.var_to_clause[e][i]);
            if (d > r) r = d;
        }
        double d = std::fabs(a.clause_to_var[e] - b.clause_to_var[e]);
        if (d > r) r = d;
    }
    return r;
}

struct IterateResult {
    MessageState state;
    std::vector<double> residual_trace;
    bool converged = false;
};

// Runs rounds until omega is reached or the max edge change drops below
// residual_tol. Non-convergence is reported through `converged`, never as an
// error.
inline IterateResult iterate(const FactorGraph& g, const IterationPolicy& policy, Engine engine,
                             unsigned threads = 1) {
    IterateResult out;
    out.state = init_messages(g, threads);
    for (int round = 0; round < policy.omega; ++round) {
        MessageState next = engine == Engine::BP ? bp_round(g, out.state, threads)
                                                 : sp_round(g, out.state, threads);
        double r = state_residual(out.state, next);
        out.residual_trace.push_back(r);
        out.state = std::move(next);
        if (r < policy.residual_tol) {
            out.converged = true;
            break;
        }
    }
    return out;
}

struct MarginalEstimate {
    double mu_minus = 0.0;
    double mu_zero = 0.0;
    double mu_plus = 0.0;
    double p_true = 0.5;
    // mu(1)/(mu(1)+mu(-1)), the alternative expression of the marginal; kept
    // for diagnostics, NaN when mu(1)+mu(-1) = 0.
    double ratio_form = 0.5;
};

// SP marginal of x from the full-neighborhood pi products. p_true is
// mu(1) + mu(0)/2, which stays defined even when mu(1)+mu(-1) = 0.
inline MarginalEstimate sp_marginal(const FactorGraph& g, const MessageState& s, int v) {
    ZeroLogProduct pos, neg;
    for (std::uint32_t slot = g.var_begin(v); slot < g.var_pos_end(v); ++slot)
        pos.mul(s.c2v0(g.var_edge(slot)));
    for (std::uint32_t slot = g.var_pos_end(v); slot < g.var_end(v); ++slot)
        neg.mul(s.c2v0(g.var_edge(slot)));
    PsiTriple t = psi_triple(pos.value(), neg.value());
    MarginalEstimate m;
    m.mu_minus = t.minus;
    m.mu_zero = t.zero;
    m.mu_plus = t.plus;
    m.p_true = t.plus + 0.5 * t.zero;
    double denom = t.plus + t.minus;
    m.ratio_form = denom > 0.0 ? t.plus / denom : std::nan("");
    return m;
}

inline MarginalEstimate bp_marginal(const FactorGraph& g, const MessageState& s, int v) {
    ZeroLogProduct pos, neg;
    for (std::uint32_t slot = g.var_begin(v); slot < g.var_pos_end(v); ++slot)
        pos.mul(s.c2v0(g.var_edge(slot)));
    for (std::uint32_t slot = g.var_pos_end(v); slot < g.var_end(v); ++slot)
        neg.mul(s.c2v0(g.var_edge(slot)));
    const double up = neg.value();  // +1 dislikes clauses where v occurs negatively
    const double un = pos.value();
    MarginalEstimate m;
    const double z = up + un;
    m.mu_plus = z > 0.0 ? up / z : 0.5;
    m.mu_minus = z > 0.0 ? un / z : 0.5;
    m.mu_zero = 0.0;
    m.p_true = m.mu_plus;
    m.ratio_form = m.mu_plus;
    return m;
}

inline MarginalEstimate marginal(const FactorGraph& g, const MessageState& s, int v, Engine engine) {
    return engine == Engine::BP ? bp_marginal(g, s, v) : sp_marginal(g, s, v);
}

// Snapshot export: edge id, the three variable-side masses, clause-side 0-message.
inline void write_message_csv(std::ostream& os, const FactorGraph& g, const MessageState& s) {
    os << "edge,clause,var,sign,mu_minus,mu_zero,mu_plus,c2v0\r\n";
    for (std::size_t c = 0; c < g.num_clauses(); ++c)
        for (std::uint32_t e = g.clause_begin(c); e < g.clause_end(c); ++e) {
            os << e << ',' << c << ',' << g.edge_var(e) << ',' << g.edge_sign(e);
            for (int i = 0; i < 3; ++i) os << ',' << s.var_to_clause[e][i];
            os << ',' << s.clause_to_var[e] << "\r\n";
        }
}

}  // namespace spdec
