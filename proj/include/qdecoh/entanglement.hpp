#pragma once

#include <complex>
#include <vector>

#include "qdecoh/qmath/complex_matrix.hpp"
#include "qdecoh/states.hpp"

namespace qdecoh {

struct InitialStateSpec {
    std::complex<double> alpha;

    explicit InitialStateSpec(std::complex<double> alpha_);
};

/// |psi> = (|01> + alpha |10>) / sqrt(1 + |alpha|^2), returned as |psi><psi|.
TwoQubitState initial_state(const InitialStateSpec& spec);

/// 2|alpha| / (1 + |alpha|^2).
double initial_concurrence(std::complex<double> alpha);

/// (sigma_y x sigma_y) rho^* (sigma_y x sigma_y).
ComplexMatrix spin_flip(const TwoQubitState& rho);

/// Wootters concurrence. The lambda_i are obtained as singular values of
/// tau = W^T (sigma_y x sigma_y) W with rho = W W^dagger; they coincide with
/// the square roots of the eigenvalues of rho * spin_flip(rho) but stay
/// accurate when some of those eigenvalues vanish.
double concurrence(const TwoQubitState& rho);

/// Descending lambda_i used by concurrence().
std::vector<double> concurrence_lambdas(const TwoQubitState& rho);

/// Concurrence from the spectrum mu_i of rho * spin_flip(rho), lambda_i =
/// sqrt(max(Re mu_i, 0)). Independent cross-check of concurrence(); loses
/// accuracy (~sqrt(eps)) when some mu_i are zero. Throws NumericalError if
/// any |Im mu_i| > 1e-8.
double concurrence_from_spin_flip_spectrum(const TwoQubitState& rho);

/// Closed-form state reached from the alpha = 1 input when both qubits share
/// tunneling energy e_j:
///   1/4 [[A, 0, 0, A e^{-i t e_j}], [0, B, B, 0], [0, B, B, 0], [A e^{i t e_j}, 0, 0, A]]
/// with A = 1 - e^{-4(g1+g2)}, B = 1 + e^{-4(g1+g2)}.
TwoQubitState analytic_bell_state(double g1, double g2, double e_j, double t);

/// e^{-4(g1+g2)} = delta1 * delta2.
double analytic_bell_concurrence(double g1, double g2);

} // namespace qdecoh
