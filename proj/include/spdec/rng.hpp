#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace spdec {

// Splittable counter-based generator (SplitMix64 core). Every consumer of
// randomness derives its own named stream from one root seed, so trials can
// run in parallel and still reproduce bit-for-bit.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) by rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) return 0;
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bernoulli(double p) { return next_double() < p; }

    int next_sign() { return (next_u64() & 1ULL) ? +1 : -1; }

    // Poisson by chunked inversion: a Poisson(m) variate is the sum of
    // independent Poisson variates over pieces of mean <= 16, so only the
    // small-mean inversion sampler is needed.
    std::uint64_t next_poisson(double mean) {
        std::uint64_t total = 0;
        while (mean > 16.0) {
            total += poisson_inversion(16.0);
            mean -= 16.0;
        }
        if (mean > 0.0) total += poisson_inversion(mean);
        return total;
    }

    // Fisher-Yates permutation of {0,..,n-1}.
    template <typename Vec>
    void shuffle(Vec& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Child stream: mixes a label and an index into a fresh seed.
    Rng split(std::string_view label, std::uint64_t index = 0) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : label) {
            h ^= static_cast<std::uint8_t>(c);
            h *= 0x100000001b3ULL;
        }
        Rng child(state_ ^ 0x5851f42d4c957f2dULL);
        child.state_ += h;
        child.next_u64();
        child.state_ += index * 0xda942042e4dd58b5ULL;
        child.next_u64();
        return child;
    }

  private:
    std::uint64_t poisson_inversion(double mean) {
        double p = std::exp(-mean), cdf = p, u = next_double();
        std::uint64_t k = 0;
        while (u > cdf && k < 400) {
            ++k;
            p *= mean / static_cast<double>(k);
            cdf += p;
        }
        return k;
    }

    std::uint64_t state_;
};

}  // namespace spdec
