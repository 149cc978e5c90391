#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qdecoh/qmath/complex_matrix.hpp"

namespace qdecoh {

/// Largest dimension accepted by matrix_exponential.
inline constexpr std::size_t kMaxExpDimension = 1024;

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic complex Jacobi.
/// Throws NonHermitian if max|m - m^dagger| > tol, NoConvergence if the
/// sweep budget runs out.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol = 1e-12);

struct HermitianEigensystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column j pairs with values[j]
};

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m, double tol = 1e-12);

/// Eigenvalues of a general square matrix (dimension <= 8), with algebraic
/// multiplicity, in no particular order. Householder reduction to Hessenberg
/// form followed by single-shift complex QR with Wilkinson shifts.
std::vector<std::complex<double>> general_eigenvalues(const ComplexMatrix& m);

/// Singular values, descending. One-sided (Hestenes) Jacobi, which keeps
/// small singular values accurate relative to the column scale instead of
/// going through the squared Gram matrix.
std::vector<double> singular_values(const ComplexMatrix& m);

/// LU with partial pivoting.
std::complex<double> determinant(const ComplexMatrix& m);

/// Solves a * x = b for square a; throws NumericalError if a is singular.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);

/// exp(-i * m * t) by scaling and squaring with a [13/13] Pade approximant.
/// Throws DimensionTooLarge above kMaxExpDimension.
ComplexMatrix matrix_exponential(const ComplexMatrix& m, double t);

/// exp(a) for a general square matrix; the building block of matrix_exponential.
ComplexMatrix expm(const ComplexMatrix& a);

} // namespace qdecoh
