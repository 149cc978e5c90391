#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qdecoh/bath.hpp"
#include "qdecoh/errors.hpp"
#include "support/generators.hpp"

using namespace qdecoh;
using qdecoh::testing::Gen;

namespace {

// Mode sum written out term by term.
double g_sum(const std::vector<BathMode>& modes, double beta, double t) {
    double total = 0.0;
    for (const auto& m : modes) {
        const double s = std::sin(0.5 * m.omega * t);
        const double coth = beta > 0.0 ? 1.0 / std::tanh(0.5 * beta * m.omega) : 1.0;
        total += 2.0 * std::norm(m.g) / (m.omega * m.omega) * s * s * coth;
    }
    return total;
}

} // namespace

TEST_CASE("g_discrete examples") {
    const DiscreteBath one(std::vector<BathMode>{{1.0, {1.0, 0.0}}});
    CHECK(g_discrete(one, Temperature::zero(), 0.0) == 0.0);
    CHECK(g_discrete(DiscreteBath(std::vector<BathMode>{{1.0, 0.0}}), Temperature::zero(), 2.7) == 0.0);
    CHECK(g_discrete(one, Temperature::zero(), std::numbers::pi) == doctest::Approx(2.0).epsilon(1e-15));
    // Only |g| enters.
    const DiscreteBath rotated(std::vector<BathMode>{{1.0, std::polar(1.0, 0.7)}});
    CHECK(g_discrete(rotated, Temperature::zero(), 1.1) == doctest::Approx(g_discrete(one, Temperature::zero(), 1.1)));
    CHECK_THROWS_AS(g_discrete(one, Temperature::zero(), -1.0), std::invalid_argument);
}

TEST_CASE("bath type invariants") {
    CHECK_THROWS_AS(DiscreteBath(std::vector<BathMode>{}), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteBath(std::vector<BathMode>{{0.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteBath(std::vector<BathMode>{{-1.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(OhmicBath(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(OhmicBath(1e-5, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(Temperature::finite(0.0), std::invalid_argument);
    CHECK(Temperature::zero().is_zero());
    CHECK(Temperature::zero().coth_factor(3.0) == 1.0);
    CHECK(Temperature::finite(2.0).coth_factor(0.5) == doctest::Approx(1.0 / std::tanh(0.5)).epsilon(1e-15));
}

TEST_CASE("property: g_discrete equals the term-by-term sum") {
    Gen gen(31);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<BathMode> modes(1 + gen.index(40));
        for (auto& m : modes) m = {gen.log_uniform(1e-2, 1e2), gen.complex_normal()};
        const double beta = gen.uniform() < 0.3 ? 0.0 : gen.log_uniform(1e-2, 1e2);
        const Temperature temp = beta > 0.0 ? Temperature::finite(beta) : Temperature::zero();
        const double t = gen.uniform(0.0, 50.0);
        const double g = g_discrete(DiscreteBath(modes), temp, t);
        CHECK(g >= 0.0);
        CHECK(g == doctest::Approx(g_sum(modes, beta, t)).epsilon(1e-12));
    }
}

TEST_CASE("g_ohmic examples") {
    const OhmicBath bath(1e-5, 1e12);
    CHECK(g_ohmic(bath, Temperature::zero(), 0.0) == 0.0);
    CHECK(g_ohmic(bath, Temperature::zero(), 1e-12) == doctest::Approx(0.5e-5 * std::log(2.0)).epsilon(1e-10));
    CHECK(g_ohmic(bath, Temperature::zero(), 1e-12) == doctest::Approx(3.46574e-6).epsilon(1e-5));
    CHECK(g_ohmic(bath, Temperature::zero(), 1e-11) == doctest::Approx(2.30756e-5).epsilon(1e-5));
}

TEST_CASE("property: zero-temperature g_ohmic matches the closed form") {
    Gen gen(32);
    for (int trial = 0; trial < 100; ++trial) {
        const OhmicBath bath(gen.log_uniform(1e-6, 1.0), gen.log_uniform(1e9, 1e14));
        const double t = gen.log_uniform(1e-4, 1e3) / bath.omega_c;
        const double expected = 0.5 * bath.eta * std::log1p(std::pow(bath.omega_c * t, 2));
        CHECK(g_ohmic(bath, Temperature::zero(), t) == doctest::Approx(expected).epsilon(1e-10));
        CHECK(g_ohmic_zero_temperature_closed_form(bath, t) == doctest::Approx(expected).epsilon(1e-15));
    }
}

TEST_CASE("finite temperature: dominance and the high-temperature limit") {
    const OhmicBath bath(1e-5, 1e12);
    Gen gen(33);
    for (int trial = 0; trial < 50; ++trial) {
        const double t = gen.log_uniform(1e-15, 1e-10);
        const double beta = gen.log_uniform(1e-14, 1e-9);
        const double g0 = g_ohmic(bath, Temperature::zero(), t);
        const double gb = g_ohmic(bath, Temperature::finite(beta), t);
        CHECK(gb >= g0);
    }
    // Very low temperature collapses onto the zero-temperature curve.
    const double t = 3e-12;
    CHECK(g_ohmic(bath, Temperature::finite(1e-6), t) ==
          doctest::Approx(g_ohmic(bath, Temperature::zero(), t)).epsilon(1e-10));
    // Independent evaluation of the finite-temperature integral with coth written out.
    const double beta = 2e-12;
    QuadratureSpec spec;
    spec.upper = std::numeric_limits<double>::infinity();
    const double a = bath.omega_c * t;
    const double b = beta * bath.omega_c;
    const double direct = 2.0 * bath.eta * adaptive_quadrature(
                                               [&](double x) {
                                                   if (x == 0.0) return 0.0;
                                                   const double s = std::sin(0.5 * a * x);
                                                   return std::exp(-x) * s * s / x / std::tanh(0.5 * b * x);
                                               },
                                               spec);
    CHECK(g_ohmic(bath, Temperature::finite(beta), t) == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("property: zero-temperature G strictly increases with t") {
    const OhmicBath bath(1e-5, 1e12);
    double prev = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double g = g_ohmic(bath, Temperature::zero(), 1e-14 * i);
        CHECK(g > prev);
        prev = g;
    }
}

TEST_CASE("property: discretized Ohmic bath converges to the continuum") {
    const double eta = 1e-5;
    const double wc = 1e12;
    const auto bath = DiscreteBath::ohmic_grid(eta, wc, 10000, 60.0 * wc);
    const DiscreteExponent discrete(bath, Temperature::zero());
    const OhmicBath continuum(eta, wc);
    for (int i = 1; i <= 20; ++i) {
        const double t = 0.5 * i / wc;
        const double gc = g_ohmic(continuum, Temperature::zero(), t);
        CAPTURE(t);
        CHECK(std::abs(discrete(t) - gc) < 1e-3 * gc);
    }
    CHECK(discrete(0.0) == 0.0);
}

TEST_CASE("decoherence_exponent dispatches on the bath kind") {
    const BathSpec ohmic = OhmicBath(1e-3, 1.0);
    const BathSpec discrete = DiscreteBath(std::vector<BathMode>{{1.0, 1.0}});
    CHECK(decoherence_exponent(ohmic, Temperature::zero(), 2.0) == doctest::Approx(0.5e-3 * std::log(5.0)));
    CHECK(decoherence_exponent(discrete, Temperature::zero(), std::numbers::pi) == doctest::Approx(2.0));
}

TEST_CASE("suppression_factor") {
    CHECK(suppression_factor(0.0) == 1.0);
    CHECK(suppression_factor(0.25) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(suppression_factor(3.46574e-6) == doctest::Approx(0.99998614).epsilon(1e-8));
    CHECK_THROWS_AS(suppression_factor(-1e-3), std::invalid_argument);
    double prev = 1.0;
    for (int i = 1; i < 100; ++i) {
        const double d = suppression_factor(0.05 * i);
        CHECK(d < prev);
        CHECK(d > 0.0);
        prev = d;
    }
}
