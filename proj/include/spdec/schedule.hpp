#pragma once

#include <cmath>
#include <vector>

#include "spdec/errors.hpp"

namespace spdec {

// The delta/Delta/t-hat schedule:
//   rho = k r / 2^k,  theta = 1 - t/n,  delta_t = exp(-c theta k),
//   Delta_t = sum_{s<=t} delta_s,  t_hat = (1 - ln(rho)/(c^2 k)) n.
// c is "a small enough absolute constant" in the source analysis; it is a
// config parameter here (default 0.1) and every report records it.
struct BiasSchedule {
    int k = 0;
    double r = 0.0;
    int n = 0;
    double c = 0.1;
    double rho = 0.0;
    double t_hat = 0.0;

    double theta(int t) const {
        if (t < 0 || t > n) throw DomainError("schedule: t outside [0,n]");
        return 1.0 - static_cast<double>(t) / static_cast<double>(n);
    }
    double delta(int t) const { return std::exp(-c * theta(t) * k); }
    double big_delta(int t) const {
        double sum = 0.0;
        for (int s = 1; s <= t; ++s) sum += delta(s);
        return sum;
    }
    // Asymptotic comparator Delta_t ~ delta_t n/(ck), kept for diagnostics.
    double big_delta_approx(int t) const { return delta(t) * n / (c * k); }

    double k1(int t) const { return std::sqrt(c) * theta(t) * k; }
    bool admissible(int t) const { return theta(t) * k >= std::log(rho) / (c * c); }
};

inline BiasSchedule make_schedule(int k, double r, int n, double c = 0.1) {
    if (k < 2) throw DomainError("schedule: k must be >= 2");
    if (!(r > 0.0)) throw DomainError("schedule: r must be positive");
    if (!(c > 0.0)) throw DomainError("schedule: c must be positive");
    if (n < 1) throw DomainError("schedule: n must be >= 1");
    BiasSchedule s;
    s.k = k;
    s.r = r;
    s.n = n;
    s.c = c;
    s.rho = k * r / std::exp2(k);
    // raw value exceeds n when rho < 1; the decimation horizon is capped at n
    double raw = (1.0 - std::log(s.rho) / (c * c * k)) * n;
    s.t_hat = raw > n ? static_cast<double>(n) : raw;
    return s;
}

}  // namespace spdec
