#include <catch2/catch_amalgamated.hpp>

#include "spdec/logprob.hpp"
#include "spdec/rng.hpp"

using namespace spdec;

TEST_CASE("rng streams are reproducible and independent") {
    Rng a(42), b(42);
    REQUIRE(a.next_u64() == b.next_u64());

    Rng s1 = Rng(42).split("generation", 0);
    Rng s2 = Rng(42).split("generation", 0);
    Rng s3 = Rng(42).split("generation", 1);
    Rng s4 = Rng(42).split("decimation-draws", 0);
    REQUIRE(s1.next_u64() == s2.next_u64());
    REQUIRE(s1.next_u64() != s3.next_u64());
    REQUIRE(s2.next_u64() != s4.next_u64());
}

TEST_CASE("next_below is within range and roughly uniform") {
    Rng r(7);
    int counts[10] = {0};
    for (int i = 0; i < 100000; ++i) {
        auto v = r.next_below(10);
        REQUIRE(v < 10);
        counts[v]++;
    }
    for (int c : counts) {
        REQUIRE(c > 9000);
        REQUIRE(c < 11000);
    }
}

TEST_CASE("poisson sampler matches mean and variance") {
    Rng r(11);
    const double mean = 37.5;
    const int trials = 20000;
    double sum = 0, sumsq = 0;
    for (int i = 0; i < trials; ++i) {
        double v = static_cast<double>(r.next_poisson(mean));
        sum += v;
        sumsq += v * v;
    }
    double m = sum / trials;
    double var = sumsq / trials - m * m;
    REQUIRE(m == Catch::Approx(mean).margin(4.0 * std::sqrt(mean / trials)));
    REQUIRE(var == Catch::Approx(mean).epsilon(0.05));
}

TEST_CASE("binomial pmf and cdf in log space") {
    // Pr[Bin(3,0.5)=1] = 3/8
    REQUIRE(binomial_pmf(3, 0.5, 1) == Catch::Approx(0.375).epsilon(1e-12));
    // Degenerate p
    REQUIRE(binomial_pmf(5, 1.0, 5) == 1.0);
    REQUIRE(binomial_pmf(5, 1.0, 4) == 0.0);
    REQUIRE(binomial_pmf(5, 0.0, 0) == 1.0);
    // Pr[Bin(n,p) < 2]
    REQUIRE(binomial_cdf_below_two(6, 0.25) ==
            Catch::Approx(std::pow(0.75, 6) + 6 * 0.25 * std::pow(0.75, 5)).epsilon(1e-12));
    REQUIRE(binomial_cdf_below_two(0, 0.3) == 1.0);
}

TEST_CASE("wilson interval basics") {
    auto w = wilson_interval(50, 50);
    REQUIRE(w.lo == Catch::Approx(50.0 / (50.0 + 1.96 * 1.96)).epsilon(1e-9));
    REQUIRE(w.hi == 1.0);
    auto half = wilson_interval(25, 50);
    REQUIRE(half.lo < 0.5);
    REQUIRE(half.hi > 0.5);
    auto zero = wilson_interval(0, 10);
    REQUIRE(zero.lo == 0.0);
}
