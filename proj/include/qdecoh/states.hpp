#pragma once

#include <complex>

#include "qdecoh/qmath/complex_matrix.hpp"

namespace qdecoh {

inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kQubitPsdTolerance = 1e-12;
inline constexpr double kPairPsdTolerance = 1e-10;

/// Single-qubit density matrix in the eigenbasis of the qubit Hamiltonian
/// -E_J/2 sigma_x: index 0 is the sigma_x = -1 state (energy +E_J/2),
/// index 1 the sigma_x = +1 state (energy -E_J/2). Hermitian by
/// construction; trace and positivity checked on entry (InvalidState).
class QubitState {
public:
    static QubitState from_entries(double p00, cplx p01, double p11);
    /// Accepts matrices Hermitian to within `hermitian_tol`, stores the Hermitian part.
    static QubitState from_matrix(const ComplexMatrix& m, double hermitian_tol = 1e-12);
    /// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
    static QubitState pure_bloch(double theta, double phi);
    static QubitState maximally_mixed() { return from_entries(0.5, 0.0, 0.5); }

    double p00() const noexcept { return p00_; }
    double p11() const noexcept { return p11_; }
    cplx p01() const noexcept { return p01_; }
    cplx p10() const noexcept { return std::conj(p01_); }
    ComplexMatrix matrix() const;

private:
    QubitState(double p00, cplx p01, double p11) : p00_(p00), p11_(p11), p01_(p01) {}
    double p00_;
    double p11_;
    cplx p01_;
};

/// Two-qubit density matrix in the product basis |00>,|01>,|10>,|11>
/// (qubit 1 is the left tensor factor).
class TwoQubitState {
public:
    static TwoQubitState from_matrix(const ComplexMatrix& m, double hermitian_tol = 1e-12);
    static TwoQubitState product(const QubitState& a, const QubitState& b);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    cplx operator()(std::size_t r, std::size_t c) const noexcept { return m_(r, c); }

private:
    explicit TwoQubitState(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

} // namespace qdecoh
