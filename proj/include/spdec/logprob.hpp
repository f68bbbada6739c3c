#pragma once

#include <cmath>
#include <limits>

#include "spdec/errors.hpp"

namespace spdec {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

inline double log_binomial_coeff(long long n, long long k) {
    if (k < 0 || k > n) return kNegInf;
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

// log Pr[Bin(n,p) = k], exact via lgamma. Degenerate p handled explicitly so
// the theta = 1 and T = empty corners come out sharp.
inline double log_binomial_pmf(long long n, double p, long long k) {
    if (p < 0.0 || p > 1.0) throw DomainError("binomial pmf: p outside [0,1]");
    if (n < 0) throw DomainError("binomial pmf: n < 0");
    if (k < 0 || k > n) return kNegInf;
    if (p == 0.0) return k == 0 ? 0.0 : kNegInf;
    if (p == 1.0) return k == n ? 0.0 : kNegInf;
    return log_binomial_coeff(n, k) + static_cast<double>(k) * std::log(p) +
           static_cast<double>(n - k) * std::log1p(-p);
}

inline double binomial_pmf(long long n, double p, long long k) {
    double lp = log_binomial_pmf(n, p, k);
    return lp == kNegInf ? 0.0 : std::exp(lp);
}

// Pr[Bin(n,p) < 2] = pmf(0) + pmf(1).
inline double binomial_cdf_below_two(long long n, double p) {
    double p0 = binomial_pmf(n, p, 0);
    double p1 = binomial_pmf(n, p, 1);
    double s = p0 + p1;
    return s > 1.0 ? 1.0 : s;
}

// log(a+b) given la=log a, lb=log b.
inline double log_add(double la, double lb) {
    if (la == kNegInf) return lb;
    if (lb == kNegInf) return la;
    double hi = la > lb ? la : lb;
    double lo = la > lb ? lb : la;
    return hi + std::log1p(std::exp(lo - hi));
}

// Wilson score interval for a binomial proportion.
struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

inline WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.96) {
    if (trials == 0) return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = phat + z2 / (2.0 * n);
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    WilsonInterval w;
    w.lo = (center - half) / denom;
    w.hi = (center + half) / denom;
    if (w.lo < 0.0) w.lo = 0.0;
    if (w.hi > 1.0) w.hi = 1.0;
    return w;
}

}  // namespace spdec
