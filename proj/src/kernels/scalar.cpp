#include "kernels_impl.hpp"

#include <algorithm>
#include <cmath>

namespace qdecoh::kernels::scalar {

double sin2_weighted_sum(const double* omega, const double* weight, std::size_t n, double t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = std::sin(0.5 * omega[i] * t);
        acc += weight[i] * s * s;
    }
    return acc;
}

namespace {

double ohmic_small_x(double x, double a, double b) {
    const double a2 = 0.25 * a * a;
    if (b == 0.0) return a2 * x * (1.0 - x);
    // x*coth(b x / 2) = 2/b + b x^2 / 6 + O(x^4)
    return a2 * (2.0 / b + b * x * x / 6.0) * (1.0 - x);
}

} // namespace

void ohmic_integrand(const double* x, double* out, std::size_t n, double a, double b) {
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        if (xi < kOhmicSmallX) {
            out[i] = ohmic_small_x(xi, a, b);
            continue;
        }
        const double s = std::sin(0.5 * a * xi);
        double v = std::exp(-xi) * s * s / xi;
        if (b != 0.0) {
            const double m = std::expm1(-b * xi);
            v *= (2.0 + m) / (-m);
        }
        out[i] = v;
    }
}

void qubit_channel(const double* in00, const double* in11, const double* inre, const double* inim, double* out00,
                   double* out11, double* outre, double* outim, std::size_t n, QubitChannelCoefficients c) {
    for (std::size_t i = 0; i < n; ++i) {
        const double p00 = in00[i];
        const double p11 = in11[i];
        const double re = inre[i];
        const double im = inim[i];
        out00[i] = c.keep * p00 + c.mix * p11;
        out11[i] = c.mix * p00 + c.keep * p11;
        outre[i] = c.keep * (c.cos_phase * re + c.sin_phase * im) + c.mix * re;
        outim[i] = c.keep * (c.cos_phase * im - c.sin_phase * re) - c.mix * im;
    }
}

double deviation_norm_max(const double* a11, const double* are, const double* aim, const double* b11,
                          const double* bre, const double* bim, std::size_t n) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d11 = a11[i] - b11[i];
        const double dre = are[i] - bre[i];
        const double dim = aim[i] - bim[i];
        best = std::max(best, std::sqrt(dre * dre + dim * dim + d11 * d11));
    }
    return best;
}

void cgemm(const std::complex<double>* a, const std::complex<double>* b, std::complex<double>* c, std::size_t m,
           std::size_t k, std::size_t n) {
    std::fill(c, c + m * n, std::complex<double>{0.0, 0.0});
    for (std::size_t i = 0; i < m; ++i) {
        std::complex<double>* crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const double ar = a[i * k + p].real();
            const double ai = a[i * k + p].imag();
            if (ar == 0.0 && ai == 0.0) continue;
            const std::complex<double>* brow = b + p * n;
            for (std::size_t j = 0; j < n; ++j) {
                const double br = brow[j].real();
                const double bi = brow[j].imag();
                crow[j] = {crow[j].real() + (ar * br - ai * bi), crow[j].imag() + (ar * bi + ai * br)};
            }
        }
    }
}

} // namespace qdecoh::kernels::scalar
