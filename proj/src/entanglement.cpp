#include "qdecoh/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qdecoh/errors.hpp"
#include "qdecoh/qmath/linalg.hpp"

namespace qdecoh {

namespace {

const ComplexMatrix& sigma_yy() {
    static const ComplexMatrix yy = kron(pauli::y(), pauli::y());
    return yy;
}

double combine(const std::vector<double>& descending) {
    const double rest = std::accumulate(descending.begin() + 1, descending.end(), 0.0);
    return std::clamp(descending.front() - rest, 0.0, 1.0);
}

void require_nonnegative(double g1, double g2) {
    if (!(g1 >= 0.0) || !(g2 >= 0.0)) throw std::invalid_argument("decoherence exponents must be >= 0");
}

} // namespace

InitialStateSpec::InitialStateSpec(std::complex<double> alpha_) : alpha(alpha_) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
        throw std::invalid_argument("InitialStateSpec: alpha must be finite");
    }
}

TwoQubitState initial_state(const InitialStateSpec& spec) {
    const double norm = 1.0 / std::sqrt(1.0 + std::norm(spec.alpha));
    const cplx psi[4] = {0.0, norm, spec.alpha * norm, 0.0};
    ComplexMatrix rho(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
    return TwoQubitState::from_matrix(rho);
}

double initial_concurrence(std::complex<double> alpha) {
    const double a = std::abs(alpha);
    return 2.0 * a / (1.0 + a * a);
}

ComplexMatrix spin_flip(const TwoQubitState& rho) { return sigma_yy() * rho.matrix().conj() * sigma_yy(); }

std::vector<double> concurrence_lambdas(const TwoQubitState& rho) {
    const auto eig = hermitian_eigensystem(rho.matrix());
    ComplexMatrix w(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        const double amp = std::sqrt(std::max(eig.values[j], 0.0));
        for (std::size_t i = 0; i < 4; ++i) w(i, j) = amp * eig.vectors(i, j);
    }
    const ComplexMatrix tau = w.transpose() * sigma_yy() * w;
    return singular_values(tau);
}

double concurrence(const TwoQubitState& rho) { return combine(concurrence_lambdas(rho)); }

double concurrence_from_spin_flip_spectrum(const TwoQubitState& rho) {
    const auto mu = general_eigenvalues(rho.matrix() * spin_flip(rho));
    std::vector<double> lambda;
    lambda.reserve(mu.size());
    for (const auto& m : mu) {
        if (std::abs(m.imag()) > 1e-8) {
            std::ostringstream os;
            os.precision(17);
            os << "concurrence: eigenvalue of rho*rho~ has imaginary part " << m.imag();
            throw NumericalError(os.str());
        }
        lambda.push_back(std::sqrt(std::max(m.real(), 0.0)));
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return combine(lambda);
}

TwoQubitState analytic_bell_state(double g1, double g2, double e_j, double t) {
    require_nonnegative(g1, g2);
    const double e = std::exp(-4.0 * (g1 + g2));
    const double a = 0.25 * (1.0 - e);
    const double b = 0.25 * (1.0 + e);
    const cplx corner = a * std::polar(1.0, -t * e_j);
    ComplexMatrix m(4, 4);
    m(0, 0) = a;
    m(3, 3) = a;
    m(0, 3) = corner;
    m(3, 0) = std::conj(corner);
    m(1, 1) = b;
    m(1, 2) = b;
    m(2, 1) = b;
    m(2, 2) = b;
    return TwoQubitState::from_matrix(m);
}

double analytic_bell_concurrence(double g1, double g2) {
    require_nonnegative(g1, g2);
    return std::exp(-4.0 * (g1 + g2));
}

} // namespace qdecoh
