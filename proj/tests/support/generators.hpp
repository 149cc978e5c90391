#pragma once

// Seeded random inputs for the property tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "qdecoh/qmath/complex_matrix.hpp"
#include "qdecoh/qmath/linalg.hpp"
#include "qdecoh/states.hpp"

namespace qdecoh::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
    cplx complex_normal() { return {normal(), normal()}; }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

    ComplexMatrix matrix(std::size_t r, std::size_t c) {
        ComplexMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = complex_normal();
        return m;
    }

    ComplexMatrix hermitian(std::size_t n) {
        const ComplexMatrix a = matrix(n, n);
        return 0.5 * (a + a.adjoint());
    }

    ComplexMatrix unitary(std::size_t n) { return matrix_exponential(hermitian(n), uniform(0.0, 3.0)); }

    /// Normalized column vector.
    ComplexMatrix ket(std::size_t n) {
        ComplexMatrix v = matrix(n, 1);
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += std::norm(v(i, 0));
        v *= cplx{1.0 / std::sqrt(norm), 0.0};
        return v;
    }

    /// Mixture of `rank` random pure states with random weights.
    ComplexMatrix density(std::size_t n, std::size_t rank) {
        ComplexMatrix rho(n, n);
        double total = 0.0;
        std::vector<double> w(rank);
        for (auto& x : w) total += (x = uniform(0.05, 1.0));
        for (std::size_t k = 0; k < rank; ++k) {
            const ComplexMatrix v = ket(n);
            rho += cplx{w[k] / total, 0.0} * (v * v.adjoint());
        }
        return rho;
    }

    QubitState pure_qubit() {
        return QubitState::pure_bloch(std::acos(1.0 - 2.0 * uniform()), 2.0 * std::numbers::pi * uniform());
    }

    QubitState qubit() { return QubitState::from_matrix(density(2, 1 + index(2))); }
    TwoQubitState pair() { return TwoQubitState::from_matrix(density(4, 1 + index(4))); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline bool is_valid_density(const ComplexMatrix& m, double trace_tol, double psd_tol) {
    if (m.hermiticity_defect() > 1e-12) return false;
    if (std::abs(m.trace() - cplx{1.0, 0.0}) > trace_tol) return false;
    return hermitian_eigenvalues(m).front() >= -psd_tol;
}

} // namespace qdecoh::testing
