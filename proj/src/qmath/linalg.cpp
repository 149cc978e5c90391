#include "qdecoh/qmath/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qdecoh/errors.hpp"

namespace qdecoh {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_square(const ComplexMatrix& m, const char* who) {
    if (!m.is_square()) throw std::invalid_argument(std::string(who) + ": matrix is not square");
}

double off_diagonal_norm2(const ComplexMatrix& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) acc += std::norm(a(i, j));
    return acc;
}

double frobenius2(const ComplexMatrix& a) {
    double acc = 0.0;
    for (const auto& v : a.data()) acc += std::norm(v);
    return acc;
}

// Cyclic Jacobi on a Hermitian matrix. Each rotation is a phase fix that
// makes a_pq real followed by the classic real-symmetric rotation.
HermitianEigensystem jacobi(ComplexMatrix a, bool want_vectors) {
    const std::size_t n = a.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    constexpr int kMaxSweeps = 100;

    const double scale2 = frobenius2(a);
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        const double off = off_diagonal_norm2(a);
        if (off <= kEps * kEps * scale2 * 1e-4 || off == 0.0) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Skip negligible entries once they cannot move the diagonal.
                if (sweep > 3 && mag < kEps * 1e-2 * (std::abs(app) + std::abs(aqq))) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const cplx phase = apq / mag;  // e^{i phi}
                const double theta = (aqq - app) / (2.0 * mag);
                const double tn = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(tn * tn + 1.0);
                const double s = tn * c;
                const cplx sp = s * std::conj(phase);  // s e^{-i phi}
                const cplx cp = c * std::conj(phase);  // c e^{-i phi}

                // a <- a * J,  J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - sp * akq;
                    a(k, q) = s * akp + cp * akq;
                }
                // a <- J^dagger * a
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk - std::conj(sp) * aqk;
                    a(q, k) = s * apk + std::conj(cp) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                if (want_vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx vkp = v(k, p);
                        const cplx vkq = v(k, q);
                        v(k, p) = c * vkp - sp * vkq;
                        v(k, q) = s * vkp + cp * vkq;
                    }
                }
            }
        }
    }
    if (sweep == kMaxSweeps) {
        throw NoConvergence("hermitian_eigenvalues: Jacobi did not converge in " + std::to_string(kMaxSweeps) +
                            " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEigensystem out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        if (want_vectors)
            for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
    }
    return out;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m, double tol) {
    require_square(m, "hermitian_eigenvalues");
    const double defect = m.hermiticity_defect();
    if (defect > tol) {
        throw NonHermitian("hermitian_eigenvalues: max|m - m^dagger| = " + std::to_string(defect) +
                           " exceeds tolerance " + std::to_string(tol));
    }
    ComplexMatrix h = m;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        h(i, i) = h(i, i).real();
        for (std::size_t j = i + 1; j < h.cols(); ++j) {
            const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            h(i, j) = avg;
            h(j, i) = std::conj(avg);
        }
    }
    return h;
}

struct LuDecomposition {
    ComplexMatrix lu;
    std::vector<std::size_t> perm;
    int sign = 1;
    bool singular = false;
};

LuDecomposition lu_decompose(ComplexMatrix a) {
    const std::size_t n = a.rows();
    LuDecomposition out{std::move(a), std::vector<std::size_t>(n), 1, false};
    auto& lu = out.lu;
    std::iota(out.perm.begin(), out.perm.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(lu(i, k)) > best) {
                best = std::abs(lu(i, k));
                piv = i;
            }
        }
        if (best == 0.0) {
            out.singular = true;
            continue;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            std::swap(out.perm[k], out.perm[piv]);
            out.sign = -out.sign;
        }
        const cplx inv = 1.0 / lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx f = lu(i, k) * inv;
            lu(i, k) = f;
            if (f == cplx{0.0, 0.0}) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return out;
}

void reduce_to_hessenberg(ComplexMatrix& h) {
    const std::size_t n = h.rows();
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(h(i, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) continue;
        const cplx x0 = h(k + 1, k);
        const cplx phase = std::abs(x0) == 0.0 ? cplx{1.0, 0.0} : x0 / std::abs(x0);
        const cplx alpha = -phase * xnorm;

        std::vector<cplx> v(n - k - 1);
        for (std::size_t i = k + 1; i < n; ++i) v[i - k - 1] = h(i, k);
        v[0] -= alpha;
        double vnorm2 = 0.0;
        for (const auto& e : v) vnorm2 += std::norm(e);
        if (vnorm2 == 0.0) continue;

        // h <- (I - 2 v v^dagger / |v|^2) h
        for (std::size_t j = 0; j < n; ++j) {
            cplx dot{0.0, 0.0};
            for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i - k - 1]) * h(i, j);
            const cplx f = 2.0 * dot / vnorm2;
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= f * v[i - k - 1];
        }
        // h <- h (I - 2 v v^dagger / |v|^2)
        for (std::size_t i = 0; i < n; ++i) {
            cplx dot{0.0, 0.0};
            for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * v[j - k - 1];
            const cplx f = 2.0 * dot / vnorm2;
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= f * std::conj(v[j - k - 1]);
        }
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
    const cplx half_diff = 0.5 * (a - d);
    const cplx disc = std::sqrt(half_diff * half_diff + b * c);
    const cplx mid = 0.5 * (a + d);
    const cplx mu1 = mid + disc;
    const cplx mu2 = mid - disc;
    return std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
    return jacobi(hermitian_part(m, tol), false).values;
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m, double tol) {
    return jacobi(hermitian_part(m, tol), true);
}

std::vector<cplx> general_eigenvalues(const ComplexMatrix& m) {
    require_square(m, "general_eigenvalues");
    const std::size_t n = m.rows();
    if (n > 8) throw std::invalid_argument("general_eigenvalues: dimension above 8");
    if (!m.all_finite()) throw std::invalid_argument("general_eigenvalues: non-finite entry");

    ComplexMatrix h = m;
    reduce_to_hessenberg(h);
    std::vector<cplx> eig(n);

    const int budget = 60 * static_cast<int>(n);
    int total_iterations = 0;
    int since_deflation = 0;
    std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
    while (hi >= 0) {
        std::ptrdiff_t l = hi;
        while (l > 0) {
            const double sub = std::abs(h(l, l - 1));
            const double diag = std::abs(h(l, l)) + std::abs(h(l - 1, l - 1));
            if (sub <= kEps * diag || sub < std::numeric_limits<double>::min()) {
                h(l, l - 1) = 0.0;
                break;
            }
            --l;
        }
        if (l == hi) {
            eig[hi] = h(hi, hi);
            --hi;
            since_deflation = 0;
            continue;
        }
        if (++total_iterations > budget) {
            throw NoConvergence("general_eigenvalues: QR iteration budget exhausted");
        }
        ++since_deflation;

        cplx mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
        if (since_deflation % 10 == 0) {
            // exceptional shift to break cycles
            mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
        }

        for (std::ptrdiff_t k = l; k <= hi; ++k) h(k, k) -= mu;
        std::vector<std::pair<cplx, cplx>> rot(static_cast<std::size_t>(hi - l));
        for (std::ptrdiff_t k = l; k < hi; ++k) {
            const cplx x = h(k, k);
            const cplx y = h(k + 1, k);
            const double r = std::hypot(std::abs(x), std::abs(y));
            cplx c{1.0, 0.0};
            cplx s{0.0, 0.0};
            if (r != 0.0) {
                c = x / r;
                s = y / r;
            }
            rot[static_cast<std::size_t>(k - l)] = {c, s};
            for (std::ptrdiff_t j = k; j <= hi; ++j) {
                const cplx u = h(k, j);
                const cplx v = h(k + 1, j);
                h(k, j) = std::conj(c) * u + std::conj(s) * v;
                h(k + 1, j) = -s * u + c * v;
            }
        }
        for (std::ptrdiff_t k = l; k < hi; ++k) {
            const auto [c, s] = rot[static_cast<std::size_t>(k - l)];
            const std::ptrdiff_t last = std::min(k + 2, hi);
            for (std::ptrdiff_t i = l; i <= last; ++i) {
                const cplx u = h(i, k);
                const cplx v = h(i, k + 1);
                h(i, k) = u * c + v * s;
                h(i, k + 1) = -u * std::conj(s) + v * std::conj(c);
            }
        }
        for (std::ptrdiff_t k = l; k <= hi; ++k) h(k, k) += mu;
    }
    return eig;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    ComplexMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t n = a.cols();
    constexpr int kMaxSweeps = 60;

    auto column_dot = [&](std::size_t i, std::size_t j) {
        cplx acc{0.0, 0.0};
        for (std::size_t r = 0; r < rows; ++r) acc += std::conj(a(r, i)) * a(r, j);
        return acc;
    };
    auto column_norm2 = [&](std::size_t i) {
        double acc = 0.0;
        for (std::size_t r = 0; r < rows; ++r) acc += std::norm(a(r, i));
        return acc;
    };

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double alpha = column_norm2(i);
                const double beta = column_norm2(j);
                const cplx gamma = column_dot(i, j);
                const double mag = std::abs(gamma);
                if (mag == 0.0 || mag <= kEps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const cplx phase = gamma / mag;
                const double zeta = (beta - alpha) / (2.0 * mag);
                const double tn = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + tn * tn);
                const double s = tn * c;
                const cplx sp = s * std::conj(phase);
                const cplx cp = c * std::conj(phase);
                for (std::size_t r = 0; r < rows; ++r) {
                    const cplx ai = a(r, i);
                    const cplx aj = a(r, j);
                    a(r, i) = c * ai - sp * aj;
                    a(r, j) = s * ai + cp * aj;
                }
            }
        }
        if (!rotated) break;
    }
    if (sweep == kMaxSweeps) throw NoConvergence("singular_values: one-sided Jacobi did not converge");

    std::vector<double> sv(n);
    for (std::size_t i = 0; i < n; ++i) sv[i] = std::sqrt(column_norm2(i));
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

cplx determinant(const ComplexMatrix& m) {
    require_square(m, "determinant");
    const auto lu = lu_decompose(m);
    if (lu.singular) return {0.0, 0.0};
    cplx det = static_cast<double>(lu.sign);
    for (std::size_t i = 0; i < m.rows(); ++i) det *= lu.lu(i, i);
    return det;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "solve");
    if (b.rows() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong row count");
    const auto dec = lu_decompose(a);
    if (dec.singular) throw NumericalError("solve: matrix is singular");
    const std::size_t n = a.rows();
    const auto& lu = dec.lu;
    ComplexMatrix x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = b(dec.perm[i], j);
    for (std::size_t col = 0; col < b.cols(); ++col) {
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0; k < i; ++k) x(i, col) -= lu(i, k) * x(k, col);
        for (std::size_t ii = n; ii-- > 0;) {
            for (std::size_t k = ii + 1; k < n; ++k) x(ii, col) -= lu(ii, k) * x(k, col);
            x(ii, col) /= lu(ii, ii);
        }
    }
    return x;
}

ComplexMatrix expm(const ComplexMatrix& a_in) {
    require_square(a_in, "expm");
    const std::size_t n = a_in.rows();
    if (n > kMaxExpDimension) {
        throw DimensionTooLarge("matrix exponential: dimension " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxExpDimension));
    }

    // Higham (2005) Pade-13 coefficients and its scaling threshold.
    static constexpr double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                   1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                   670442572800.0,      33522128640.0,       1323241920.0,
                                   40840800.0,          960960.0,            16380.0,
                                   182.0,               1.0};
    constexpr double theta13 = 5.371920351148152;

    double norm1 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < n; ++i) col += std::abs(a_in(i, j));
        norm1 = std::max(norm1, col);
    }
    int squarings = 0;
    if (norm1 > theta13) squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));

    ComplexMatrix a = a_in * cplx{std::ldexp(1.0, -squarings), 0.0};
    const ComplexMatrix id = ComplexMatrix::identity(n);
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix a4 = a2 * a2;
    const ComplexMatrix a6 = a4 * a2;

    ComplexMatrix u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id;
    const ComplexMatrix u = a * u_inner;
    const ComplexMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

    ComplexMatrix r = solve(v - u, v + u);
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

ComplexMatrix matrix_exponential(const ComplexMatrix& m, double t) {
    require_square(m, "matrix_exponential");
    if (m.rows() > kMaxExpDimension) {
        throw DimensionTooLarge("matrix_exponential: dimension " + std::to_string(m.rows()) + " exceeds cap " +
                                std::to_string(kMaxExpDimension));
    }
    return expm(m * cplx{0.0, -t});
}

} // namespace qdecoh
