#include "qdecoh/states.hpp"

#include <cmath>
#include <sstream>

#include "qdecoh/errors.hpp"
#include "qdecoh/qmath/linalg.hpp"

namespace qdecoh {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

QubitState QubitState::from_entries(double p00, cplx p01, double p11) {
    if (!std::isfinite(p00) || !std::isfinite(p11) || !std::isfinite(p01.real()) || !std::isfinite(p01.imag())) {
        throw InvalidState("QubitState: non-finite entry");
    }
    const double trace = p00 + p11;
    if (std::abs(trace - 1.0) > kTraceTolerance) {
        throw InvalidState("QubitState: trace " + fmt(trace) + " differs from 1");
    }
    const double half_gap = 0.5 * (p00 - p11);
    const double lowest = 0.5 * trace - std::sqrt(half_gap * half_gap + std::norm(p01));
    if (lowest < -kQubitPsdTolerance) {
        throw InvalidState("QubitState: negative eigenvalue " + fmt(lowest));
    }
    return QubitState(p00, p01, p11);
}

QubitState QubitState::from_matrix(const ComplexMatrix& m, double hermitian_tol) {
    if (m.rows() != 2 || m.cols() != 2) throw InvalidState("QubitState: expected a 2x2 matrix");
    if (m.hermiticity_defect() > hermitian_tol) {
        throw InvalidState("QubitState: matrix is not Hermitian (defect " + fmt(m.hermiticity_defect()) + ")");
    }
    return from_entries(m(0, 0).real(), 0.5 * (m(0, 1) + std::conj(m(1, 0))), m(1, 1).real());
}

QubitState QubitState::pure_bloch(double theta, double phi) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    // rho01 = psi0 * conj(psi1)
    return from_entries(c * c, c * s * std::polar(1.0, -phi), s * s);
}

ComplexMatrix QubitState::matrix() const { return ComplexMatrix::from_rows({{p00_, p01_}, {p10(), p11_}}); }

TwoQubitState TwoQubitState::from_matrix(const ComplexMatrix& m, double hermitian_tol) {
    if (m.rows() != 4 || m.cols() != 4) throw InvalidState("TwoQubitState: expected a 4x4 matrix");
    if (!m.all_finite()) throw InvalidState("TwoQubitState: non-finite entry");
    const double defect = m.hermiticity_defect();
    if (defect > hermitian_tol) throw InvalidState("TwoQubitState: matrix is not Hermitian (defect " + fmt(defect) + ")");
    ComplexMatrix h(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        h(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < 4; ++j) {
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
            h(j, i) = std::conj(h(i, j));
        }
    }
    const double trace = h.trace().real();
    if (std::abs(trace - 1.0) > kTraceTolerance) throw InvalidState("TwoQubitState: trace " + fmt(trace) + " differs from 1");
    const auto eig = hermitian_eigenvalues(h);
    if (eig.front() < -kPairPsdTolerance) throw InvalidState("TwoQubitState: negative eigenvalue " + fmt(eig.front()));
    return TwoQubitState(std::move(h));
}

TwoQubitState TwoQubitState::product(const QubitState& a, const QubitState& b) {
    return from_matrix(kron(a.matrix(), b.matrix()));
}

} // namespace qdecoh
