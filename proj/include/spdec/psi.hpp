#pragma once

#include <array>
#include <cmath>

#include "spdec/errors.hpp"

namespace spdec {

// psi_zeta(x,y) for x = pi(+1), y = pi(-1):
//   psi_0  = x*y * Psi,   psi_{+1} = (1-x)*y * Psi,   psi_{-1} = (1-y)*x * Psi,
// with Psi = 1/(x+y-xy); at x = y = 0 the convention is (0, 1/2, 1/2).
struct PsiTriple {
    double minus = 0.0;  // zeta = -1
    double zero = 0.0;   // zeta = 0
    double plus = 0.0;   // zeta = +1

    double operator[](int zeta) const { return zeta < 0 ? minus : (zeta > 0 ? plus : zero); }
    double sum() const { return minus + zero + plus; }
};

inline PsiTriple psi_triple(double x, double y) {
    if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
        throw DomainError("psi: arguments must lie in [0,1]");
    PsiTriple t;
    if (x == 0.0 && y == 0.0) {
        t.zero = 0.0;
        t.plus = 0.5;
        t.minus = 0.5;
        return t;
    }
    const double big_psi = 1.0 / (x + y - x * y);
    t.zero = x * y * big_psi;
    t.plus = (1.0 - x) * y * big_psi;
    t.minus = (1.0 - y) * x * big_psi;
    return t;
}

inline double psi(int zeta, double x, double y) { return psi_triple(x, y)[zeta]; }

// Shorthand psi_zeta(p) = psi_zeta(p,p), the paper's single-argument usage.
inline double psi0_sym(double p) { return psi(0, p, p); }

// tau(p) = 1 - psi_0(p,p) = 1 - p/(2-p).
inline double tau_of(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("tau: p must lie in [0,1]");
    return 1.0 - p / (2.0 - p);
}

// Margins of the psi perturbation bounds, used as a property-test oracle:
//  (1) |psi_0(x1,x2) - psi_0(p1,p2)|      <= eps1 + eps2,
//  (2) |psi_z(x1,x2) - psi_z(p1,p2)|      <= 2 (eps1/p1 + eps2/p2)
//      for z in {-1,+1}, valid when eps_i <= p_i/2.
// Margins are RHS - LHS; nonnegative margins mean the bound holds.
struct PsiPerturbationMargins {
    double zero_margin = 0.0;
    double signed_margin = 0.0;  // min over zeta in {-1,+1}
    bool signed_precondition = false;
};

inline PsiPerturbationMargins psi_perturbation_check(double x1, double x2, double p1, double p2) {
    if (!(x1 > 0.0 && x1 <= 1.0 && x2 > 0.0 && x2 <= 1.0 && p1 > 0.0 && p1 <= 1.0 && p2 > 0.0 &&
          p2 <= 1.0))
        throw DomainError("psi_perturbation_check: arguments must lie in (0,1]");
    const double eps1 = std::fabs(x1 - p1), eps2 = std::fabs(x2 - p2);
    PsiTriple a = psi_triple(x1, x2), b = psi_triple(p1, p2);
    PsiPerturbationMargins m;
    m.zero_margin = (eps1 + eps2) - std::fabs(a.zero - b.zero);
    m.signed_precondition = eps1 <= p1 / 2.0 && eps2 <= p2 / 2.0;
    const double rhs = 2.0 * (eps1 / p1 + eps2 / p2);
    const double lhs_plus = std::fabs(a.plus - b.plus);
    const double lhs_minus = std::fabs(a.minus - b.minus);
    m.signed_margin = rhs - (lhs_plus > lhs_minus ? lhs_plus : lhs_minus);
    return m;
}

}  // namespace spdec
