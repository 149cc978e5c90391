#pragma once

// Short-time reduced dynamics of a qubit with Hamiltonian -E_J/2 sigma_x
// dephasing through sigma_z in its own bath. In the energy eigenbasis the
// map is
//
//   rho00(t) = 1/2 (1+d) rho00 + 1/2 (1-d) rho11
//   rho11(t) = 1/2 (1-d) rho00 + 1/2 (1+d) rho11
//   rho01(t) = 1/2 (1+d) e^{-i E_J t} rho01 + 1/2 (1-d) rho10
//   rho10(t) = conj(rho01(t))
//
// with d = exp(-4 G(t)). The mixing term carries no phase: this is what the
// symmetric split propagator yields when the bath trace is done exactly, and
// it is the only placement that keeps the output Hermitian. The map is the
// mixture 1/2(1+d) U rho U^dagger + 1/2(1-d) X rho X with U = e^{-i H_s t} and
// X the swap of the two eigenstates (sigma_z in this basis).

#include <string>

#include "qdecoh/kernels/kernels.hpp"
#include "qdecoh/qmath/complex_matrix.hpp"
#include "qdecoh/states.hpp"

namespace qdecoh {

struct QubitParams {
    double e_j;  // tunneling energy E_J, rad/s

    explicit QubitParams(double e_j_);
};

/// Linear map on 2x2 matrices parameterized by the coherence factor d and
/// the free-precession phase E_J t. d is not range-checked so unphysical
/// maps can be built for testing cptp_check.
class DephasingChannel {
public:
    DephasingChannel(double suppression, double phase);
    static DephasingChannel from_exponent(const QubitParams& params, double g_value, double t);

    double suppression() const noexcept { return suppression_; }
    double phase() const noexcept { return phase_; }

    /// Applies the map to an arbitrary (not necessarily Hermitian) 2x2 matrix.
    ComplexMatrix apply(const ComplexMatrix& m) const;
    /// 4x4 matrix S with vec(out) = S vec(in), vec row-major: index 2*i + j.
    ComplexMatrix superoperator() const;
    kernels::QubitChannelCoefficients coefficients() const;

private:
    double suppression_;
    double phase_;
};

/// Sigma = rho_real - rho_ideal. Hermitian and traceless.
class DeviationOperator {
public:
    DeviationOperator(double s00, cplx s01, double s11);

    double s00() const noexcept { return s00_; }
    double s11() const noexcept { return s11_; }
    cplx s01() const noexcept { return s01_; }
    cplx s10() const noexcept { return std::conj(s01_); }
    ComplexMatrix matrix() const;

private:
    double s00_;
    double s11_;
    cplx s01_;
};

QubitState evolve_single(const QubitState& rho0, const QubitParams& params, double g_value, double t);

/// Batch form of evolve_single over a structure-of-arrays set of states;
/// runs on the active SIMD kernel.
kernels::QubitBatch evolve_single_batch(const kernels::QubitBatch& rho0, const QubitParams& params, double g_value,
                                        double t);

/// Tensor product of the two single-qubit channels acting on the joint state.
TwoQubitState evolve_pair(const TwoQubitState& rho0, const QubitParams& p1, const QubitParams& p2, double g1,
                          double g2, double t);

DeviationOperator deviation(const QubitState& rho_real, const QubitState& rho_ideal);

/// sqrt(|sigma10|^2 + |sigma11|^2).
double lambda_norm(const DeviationOperator& sigma);

/// 1/2 (1 - exp(-4 G)).
double max_decoherence_analytic(double g_value);

/// Maximum of lambda_norm(deviation(evolve_single(rho0, G), evolve_single(rho0, 0)))
/// over pure initial states: a grid_size x grid_size Bloch-sphere grid plus
/// the two poles. grid_size >= 8.
double max_decoherence_numeric(const QubitParams& params, double g_value, double t, std::size_t grid_size);

struct CptpReport {
    bool ok = false;
    double min_choi_eigenvalue = 0.0;
    double trace_defect = 0.0;
    std::string diagnostic;

    explicit operator bool() const noexcept { return ok; }
};

/// Choi matrix sum_kl E_kl (x) Phi(E_kl) must be PSD (eigenvalues >= -1e-10)
/// and Tr Phi(E_kl) = delta_kl.
CptpReport cptp_check(const DephasingChannel& channel);
CptpReport cptp_check(const QubitParams& params, double g_value, double t);

} // namespace qdecoh
