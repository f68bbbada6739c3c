#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "spdec/psi.hpp"
#include "spdec/rng.hpp"

using namespace spdec;

TEST_CASE("psi convention at the origin") {
    PsiTriple t = psi_triple(0.0, 0.0);
    REQUIRE(t.zero == 0.0);
    REQUIRE(t.plus == 0.5);
    REQUIRE(t.minus == 0.5);
}

TEST_CASE("psi hand values") {
    PsiTriple half = psi_triple(0.5, 0.5);
    REQUIRE(half.zero == Catch::Approx(1.0 / 3.0).epsilon(1e-14));
    REQUIRE(half.plus == Catch::Approx(1.0 / 3.0).epsilon(1e-14));
    REQUIRE(half.minus == Catch::Approx(1.0 / 3.0).epsilon(1e-14));

    PsiTriple forced = psi_triple(1.0, 0.0);
    REQUIRE(forced.plus == 0.0);
    REQUIRE(forced.minus == 1.0);
    REQUIRE(forced.zero == 0.0);
}

TEST_CASE("psi domain errors") {
    REQUIRE_THROWS_AS(psi_triple(-0.1, 0.5), DomainError);
    REQUIRE_THROWS_AS(psi_triple(0.5, 1.5), DomainError);
}

TEST_CASE("psi normalization over random inputs (property)") {
    Rng rng(314);
    for (int i = 0; i < 100000; ++i) {
        double x = rng.next_double();
        double y = rng.next_double();
        if (x == 0.0) x = 0.5;
        if (y == 0.0) y = 0.25;
        PsiTriple t = psi_triple(x, y);
        REQUIRE(std::fabs(t.sum() - 1.0) <= 1e-12);
        REQUIRE(t.zero >= 0.0);
        REQUIRE(t.plus >= 0.0);
        REQUIRE(t.minus >= 0.0);
    }
}

TEST_CASE("tau closed form equals 1 - psi_0(p,p)") {
    for (int i = 0; i <= 100; ++i) {
        double p = i / 100.0;
        REQUIRE(std::fabs(tau_of(p) - (1.0 - psi0_sym(p))) <= 1e-14);
    }
    REQUIRE(tau_of(0.0) == 1.0);
    REQUIRE(tau_of(1.0) == 0.0);
}

TEST_CASE("psi perturbation margins") {
    // zero difference
    auto same = psi_perturbation_check(0.3, 0.4, 0.3, 0.4);
    REQUIRE(same.zero_margin >= 0.0);
    REQUIRE(same.signed_margin >= 0.0);

    // worked example: eps = (0.1, 0.1)
    auto ex = psi_perturbation_check(0.5, 0.5, 0.4, 0.6);
    double lhs = std::fabs(psi(0, 0.5, 0.5) - psi(0, 0.4, 0.6));
    REQUIRE(lhs <= 0.2);
    REQUIRE(ex.zero_margin == Catch::Approx(0.2 - lhs).margin(1e-14));

    REQUIRE_THROWS_AS(psi_perturbation_check(0.0, 0.5, 0.5, 0.5), DomainError);
}

TEST_CASE("psi perturbation bounds hold over random samples (property)") {
    Rng rng(2718);
    for (int i = 0; i < 1000000; ++i) {
        double p1 = 1e-6 + (1.0 - 1e-6) * rng.next_double();
        double p2 = 1e-6 + (1.0 - 1e-6) * rng.next_double();
        // eps_i <= p_i/2 so both bounds apply
        double x1 = p1 + (rng.next_double() - 0.5) * p1 * 0.999;
        double x2 = p2 + (rng.next_double() - 0.5) * p2 * 0.999;
        if (x1 <= 0.0 || x1 > 1.0 || x2 <= 0.0 || x2 > 1.0) continue;
        auto m = psi_perturbation_check(x1, x2, p1, p2);
        REQUIRE(m.signed_precondition);
        REQUIRE(m.zero_margin >= -1e-12);
        REQUIRE(m.signed_margin >= -1e-12);
    }
}
