#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qdecoh/bath.hpp"
#include "qdecoh/channel.hpp"
#include "qdecoh/entanglement.hpp"
#include "qdecoh/errors.hpp"
#include "support/generators.hpp"

using namespace qdecoh;
using qdecoh::testing::Gen;

namespace {

TwoQubitState projector(const ComplexMatrix& ket) { return TwoQubitState::from_matrix(ket * ket.adjoint()); }

ComplexMatrix ket4(cplx a, cplx b, cplx c, cplx d) { return ComplexMatrix::from_rows({{a}, {b}, {c}, {d}}); }

// Pure-state concurrence 2|ad - bc|.
double pure_concurrence(const ComplexMatrix& v) { return 2.0 * std::abs(v(0, 0) * v(3, 0) - v(1, 0) * v(2, 0)); }

TwoQubitState werner(double p) {
    const double s = std::numbers::sqrt2 / 2.0;
    const auto phi = ket4(s, 0, 0, s);
    return TwoQubitState::from_matrix(p * (phi * phi.adjoint()) + (0.25 * (1 - p)) * ComplexMatrix::identity(4));
}

} // namespace

TEST_CASE("initial_state examples") {
    const auto product = initial_state(InitialStateSpec(0.0));
    CHECK(product(1, 1) == cplx{1, 0});
    CHECK(concurrence(product) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(concurrence(initial_state(InitialStateSpec(1.0))) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(concurrence(initial_state(InitialStateSpec(2.0))) - 0.8) < 1e-12);
    CHECK(std::abs(concurrence(initial_state(InitialStateSpec(3.0))) - 0.6) < 1e-12);
    CHECK_THROWS_AS(InitialStateSpec(cplx{std::nan(""), 0}), std::invalid_argument);
}

TEST_CASE("property: initial-state concurrence is 2|alpha|/(1+|alpha|^2)") {
    Gen gen(51);
    for (int trial = 0; trial < 100; ++trial) {
        const cplx alpha = gen.log_uniform(1e-3, 1e3) * std::polar(1.0, gen.uniform(0, 2 * std::numbers::pi));
        const double expected = 2 * std::abs(alpha) / (1 + std::norm(alpha));
        CHECK(std::abs(concurrence(initial_state(InitialStateSpec(alpha))) - expected) < 1e-10);
        CHECK(initial_concurrence(alpha) == doctest::Approx(expected).epsilon(1e-15));
    }
}

TEST_CASE("spin_flip examples") {
    const auto mixed = TwoQubitState::from_matrix(0.25 * ComplexMatrix::identity(4));
    CHECK(max_abs_diff(spin_flip(mixed), mixed.matrix()) < 1e-16);
    const auto bell = initial_state(InitialStateSpec(1.0));
    CHECK(max_abs_diff(spin_flip(bell), bell.matrix()) < 1e-15);
    const auto zz = projector(ket4(1, 0, 0, 0));
    CHECK(max_abs_diff(spin_flip(zz), projector(ket4(0, 0, 0, 1)).matrix()) < 1e-16);

    Gen gen(52);
    for (int trial = 0; trial < 100; ++trial) {
        const auto rho = gen.pair();
        const auto flipped = TwoQubitState::from_matrix(spin_flip(rho));
        CHECK(max_abs_diff(spin_flip(flipped), rho.matrix()) < 1e-12);
        CHECK(testing::is_valid_density(flipped.matrix(), 1e-12, 1e-12));
    }
}

TEST_CASE("concurrence unit cases") {
    const double s = std::numbers::sqrt2 / 2.0;
    for (const auto& bell : {ket4(s, 0, 0, s), ket4(s, 0, 0, -s), ket4(0, s, s, 0), ket4(0, s, -s, 0)}) {
        CHECK(std::abs(concurrence(projector(bell)) - 1.0) < 1e-10);
        CHECK(std::abs(concurrence_from_spin_flip_spectrum(projector(bell)) - 1.0) < 1e-10);
    }
    Gen gen(53);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = gen.ket(2);
        const auto b = gen.ket(2);
        CHECK(concurrence(projector(kron(a, b))) < 1e-10);
    }
    for (double p : {0.2, 1.0 / 3.0, 0.5, 0.9}) {
        const double expected = std::max(0.0, (3 * p - 1) / 2);
        CHECK(std::abs(concurrence(werner(p)) - expected) < 1e-10);
        CHECK(std::abs(concurrence_from_spin_flip_spectrum(werner(p)) - expected) < 1e-10);
    }
    CHECK(std::abs(concurrence(werner(0.5)) - 0.25) < 1e-10);
}

TEST_CASE("property: concurrence of random pure states equals 2|ad - bc|") {
    Gen gen(54);
    for (int trial = 0; trial < 200; ++trial) {
        const auto v = gen.ket(4);
        CHECK(std::abs(concurrence(projector(v)) - pure_concurrence(v)) < 1e-10);
    }
}

TEST_CASE("property: concurrence agrees with the spin-flip spectrum route on mixed states") {
    Gen gen(55);
    for (int trial = 0; trial < 300; ++trial) {
        // Full-rank mixtures keep the spectrum away from zero, where the
        // square-root route is accurate.
        const auto rho = TwoQubitState::from_matrix(gen.density(4, 4 + gen.index(4)));
        const double c = concurrence(rho);
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
        CHECK(std::abs(c - concurrence_from_spin_flip_spectrum(rho)) < 1e-9);
    }
}

TEST_CASE("property: concurrence stays in [0, 1] on 1000 random states") {
    Gen gen(56);
    for (int trial = 0; trial < 1000; ++trial) {
        const double c = concurrence(gen.pair());
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
    }
}

TEST_CASE("property: local unitary invariance") {
    Gen gen(57);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rho = gen.pair();
        const auto u = kron(gen.unitary(2), gen.unitary(2));
        const auto rotated = TwoQubitState::from_matrix(u * rho.matrix() * u.adjoint());
        CHECK(std::abs(concurrence(rotated) - concurrence(rho)) < 1e-10);
    }
    // alpha = -1 and alpha = +-i are local-unitary images of the alpha = 1 state.
    for (cplx alpha : {cplx{-1, 0}, cplx{0, 1}, cplx{0, -1}}) {
        CHECK(std::abs(concurrence(initial_state(InitialStateSpec(alpha))) - 1.0) < 1e-10);
    }
}

TEST_CASE("analytic_bell_state examples") {
    const auto bell = analytic_bell_state(0.0, 0.0, 1e10, 0.0);
    CHECK(max_abs_diff(bell.matrix(), initial_state(InitialStateSpec(1.0)).matrix()) < 1e-15);
    const auto dephased = analytic_bell_state(20.0, 20.0, 1e10, 1e-12);
    CHECK(max_abs_diff(dephased.matrix(), 0.25 * ComplexMatrix::from_rows({{1, 0, 0, 1.0 * std::polar(1.0, -0.01)},
                                                                          {0, 1, 1, 0},
                                                                          {0, 1, 1, 0},
                                                                          {std::polar(1.0, 0.01), 0, 0, 1}})) < 1e-15);
    CHECK(std::abs(concurrence(analytic_bell_state(0.125, 0.125, 1e10, 2e-12)) - std::exp(-1.0)) < 1e-10);
    CHECK_THROWS_AS(analytic_bell_state(-0.1, 0.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("analytic_bell_state spectrum of rho * spin_flip(rho)") {
    for (double gs : {0.0, 0.01, 0.3, 1.1}) {
        const auto rho = analytic_bell_state(gs, 0.5 * gs, 7.0, 0.3);
        const double e = std::exp(-4 * 1.5 * gs);
        const double mu1 = 0.25 * (1 + 2 * e + e * e);
        const double mu2 = 0.25 * (1 - 2 * e + e * e);
        auto mu = general_eigenvalues(rho.matrix() * spin_flip(rho));
        std::sort(mu.begin(), mu.end(), [](cplx a, cplx b) { return a.real() > b.real(); });
        CHECK(std::abs(mu[0] - mu1) < 1e-12);
        CHECK(std::abs(mu[1] - mu2) < 1e-12);
        CHECK(std::abs(mu[2]) < 1e-12);
        CHECK(std::abs(mu[3]) < 1e-12);
    }
}

TEST_CASE("analytic_bell_concurrence") {
    CHECK(analytic_bell_concurrence(0, 0) == 1.0);
    CHECK(analytic_bell_concurrence(0.25, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(analytic_bell_concurrence(0.125, 0.125) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(analytic_bell_concurrence(0.3, 0.7) == doctest::Approx(suppression_factor(0.3) * suppression_factor(0.7)));
}

TEST_CASE("property: closed-form state concurrence on a grid, independent of phase") {
    for (int i = 0; i <= 20; ++i)
        for (int j = 0; j <= 20; ++j) {
            const double g1 = 0.1 * i, g2 = 0.1 * j;
            const double expected = analytic_bell_concurrence(g1, g2);
            for (double phase_t : {0.0, 1e-12, 7e-12}) {
                CHECK(std::abs(concurrence(analytic_bell_state(g1, g2, 1e10, phase_t)) - expected) < 1e-10);
            }
            CHECK(std::abs(concurrence(analytic_bell_state(g1, g2, -3e11, 5e-12)) - expected) < 1e-10);
        }
}

TEST_CASE("property: concurrence after the pair channel on the alpha = 1 input is delta1 * delta2") {
    Gen gen(58);
    const auto bell = initial_state(InitialStateSpec(1.0));
    for (int trial = 0; trial < 200; ++trial) {
        const double g1 = gen.uniform(0, 2), g2 = gen.uniform(0, 2);
        const double e_j = gen.uniform(-2e10, 2e10), t = gen.uniform(0, 1e-11);
        const auto out = evolve_pair(bell, QubitParams(e_j), QubitParams(e_j), g1, g2, t);
        CHECK(std::abs(concurrence(out) - suppression_factor(g1) * suppression_factor(g2)) < 1e-10);
    }
}

TEST_CASE("property: for real alpha != 1 the concurrence stays strictly below C(0) delta1 delta2") {
    Gen gen(59);
    for (int trial = 0; trial < 200; ++trial) {
        double alpha = gen.uniform(0.05, 10.0);
        if (std::abs(alpha - 1.0) < 1e-2) alpha = 2.0;
        const double g = gen.log_uniform(1e-6, 0.5);
        const auto out = evolve_pair(initial_state(InitialStateSpec(alpha)), QubitParams(1e10), QubitParams(1e10), g,
                                     g, gen.uniform(1e-13, 1e-11));
        const double d = suppression_factor(g);
        const double s = initial_concurrence(alpha) * d * d;
        // Closed form for equal E_J and real alpha.
        const double closed = 2 * ((1 + d * d) * alpha / (2 * (1 + alpha * alpha)) - (1 - d * d) / 4);
        CHECK(concurrence(out) < s);
        CHECK(std::abs(concurrence(out) - std::max(0.0, closed)) < 1e-10);
    }
}
