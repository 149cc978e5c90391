#include "kernels_impl.hpp"

#include <algorithm>
#include <cmath>

#include "avx2_math.hpp"

namespace qdecoh::kernels::avx2 {

double sin2_weighted_sum(const double* omega, const double* weight, std::size_t n, double t) {
    const __m256d half_t = _mm256_set1_pd(0.5 * t);
    const __m256d limit = _mm256_set1_pd(kSinReductionLimit);
    __m256d acc = _mm256_setzero_pd();
    double tail = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d u = _mm256_mul_pd(_mm256_loadu_pd(omega + i), half_t);
        const __m256d w = _mm256_loadu_pd(weight + i);
        if (_mm256_movemask_pd(_mm256_cmp_pd(abs_pd(u), limit, _CMP_GT_OQ)) != 0) {
            tail += scalar::sin2_weighted_sum(omega + i, weight + i, 4, t);
            continue;
        }
        acc = _mm256_fmadd_pd(w, sin2_pd(u), acc);
    }
    tail += scalar::sin2_weighted_sum(omega + i, weight + i, n - i, t);
    return hsum_pd(acc) + tail;
}

void ohmic_integrand(const double* x, double* out, std::size_t n, double a, double b) {
    const __m256d half_a = _mm256_set1_pd(0.5 * a);
    const __m256d neg_b = _mm256_set1_pd(-b);
    const __m256d small = _mm256_set1_pd(kOhmicSmallX);
    const __m256d limit = _mm256_set1_pd(kSinReductionLimit);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d a2 = _mm256_set1_pd(0.25 * a * a);
    const bool finite_temperature = b != 0.0;
    const __m256d two_over_b = _mm256_set1_pd(finite_temperature ? 2.0 / b : 0.0);
    const __m256d b_over_6 = _mm256_set1_pd(b / 6.0);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d u = _mm256_mul_pd(xv, half_a);
        if (_mm256_movemask_pd(_mm256_cmp_pd(abs_pd(u), limit, _CMP_GT_OQ)) != 0) {
            scalar::ohmic_integrand(x + i, out + i, 4, a, b);
            continue;
        }
        const __m256d is_small = _mm256_cmp_pd(xv, small, _CMP_LT_OQ);
        // Keep the generic branch finite on small lanes; they are replaced below.
        const __m256d xs = _mm256_blendv_pd(xv, one, is_small);

        __m256d v = _mm256_div_pd(_mm256_mul_pd(exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), xs)), sin2_pd(u)), xs);
        __m256d lim;
        const __m256d one_minus_x = _mm256_sub_pd(one, xv);
        if (finite_temperature) {
            const __m256d m = expm1_neg_pd(_mm256_mul_pd(neg_b, xs));
            v = _mm256_mul_pd(v, _mm256_div_pd(_mm256_add_pd(two, m), _mm256_sub_pd(_mm256_setzero_pd(), m)));
            const __m256d xcoth = _mm256_fmadd_pd(b_over_6, _mm256_mul_pd(xv, xv), two_over_b);
            lim = _mm256_mul_pd(_mm256_mul_pd(a2, xcoth), one_minus_x);
        } else {
            lim = _mm256_mul_pd(_mm256_mul_pd(a2, xv), one_minus_x);
        }
        _mm256_storeu_pd(out + i, _mm256_blendv_pd(v, lim, is_small));
    }
    scalar::ohmic_integrand(x + i, out + i, n - i, a, b);
}

void qubit_channel(const double* in00, const double* in11, const double* inre, const double* inim, double* out00,
                   double* out11, double* outre, double* outim, std::size_t n, QubitChannelCoefficients c) {
    const __m256d keep = _mm256_set1_pd(c.keep);
    const __m256d mix = _mm256_set1_pd(c.mix);
    const __m256d cp = _mm256_set1_pd(c.cos_phase);
    const __m256d sp = _mm256_set1_pd(c.sin_phase);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d p00 = _mm256_loadu_pd(in00 + i);
        const __m256d p11 = _mm256_loadu_pd(in11 + i);
        const __m256d re = _mm256_loadu_pd(inre + i);
        const __m256d im = _mm256_loadu_pd(inim + i);
        _mm256_storeu_pd(out00 + i, _mm256_fmadd_pd(keep, p00, _mm256_mul_pd(mix, p11)));
        _mm256_storeu_pd(out11 + i, _mm256_fmadd_pd(mix, p00, _mm256_mul_pd(keep, p11)));
        const __m256d rot_re = _mm256_fmadd_pd(cp, re, _mm256_mul_pd(sp, im));
        const __m256d rot_im = _mm256_fmsub_pd(cp, im, _mm256_mul_pd(sp, re));
        _mm256_storeu_pd(outre + i, _mm256_fmadd_pd(keep, rot_re, _mm256_mul_pd(mix, re)));
        _mm256_storeu_pd(outim + i, _mm256_fmsub_pd(keep, rot_im, _mm256_mul_pd(mix, im)));
    }
    scalar::qubit_channel(in00 + i, in11 + i, inre + i, inim + i, out00 + i, out11 + i, outre + i, outim + i, n - i,
                          c);
}

double deviation_norm_max(const double* a11, const double* are, const double* aim, const double* b11,
                          const double* bre, const double* bim, std::size_t n) {
    __m256d best = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d11 = _mm256_sub_pd(_mm256_loadu_pd(a11 + i), _mm256_loadu_pd(b11 + i));
        const __m256d dre = _mm256_sub_pd(_mm256_loadu_pd(are + i), _mm256_loadu_pd(bre + i));
        const __m256d dim = _mm256_sub_pd(_mm256_loadu_pd(aim + i), _mm256_loadu_pd(bim + i));
        const __m256d sq = _mm256_fmadd_pd(dre, dre, _mm256_fmadd_pd(dim, dim, _mm256_mul_pd(d11, d11)));
        best = _mm256_max_pd(best, _mm256_sqrt_pd(sq));
    }
    const double rest = scalar::deviation_norm_max(a11 + i, are + i, aim + i, b11 + i, bre + i, bim + i, n - i);
    return std::max(hmax_pd(best), rest);
}

void cgemm(const std::complex<double>* a, const std::complex<double>* b, std::complex<double>* c, std::size_t m,
           std::size_t k, std::size_t n) {
    std::fill(c, c + m * n, std::complex<double>{0.0, 0.0});
    // std::complex<double> is layout-compatible with double[2].
    const double* bd = reinterpret_cast<const double*>(b);
    double* cd = reinterpret_cast<double*>(c);
    const std::size_t pairs = n / 2;
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = cd + 2 * i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const double ar = a[i * k + p].real();
            const double ai = a[i * k + p].imag();
            if (ar == 0.0 && ai == 0.0) continue;
            const __m256d vr = _mm256_set1_pd(ar);
            const __m256d vi = _mm256_set1_pd(ai);
            const double* brow = bd + 2 * p * n;
            for (std::size_t j = 0; j < pairs; ++j) {
                const __m256d bv = _mm256_loadu_pd(brow + 4 * j);
                const __m256d bswap = _mm256_permute_pd(bv, 0b0101);
                // (ar*br - ai*bi, ar*bi + ai*br) for two complex entries
                const __m256d prod = _mm256_fmaddsub_pd(vr, bv, _mm256_mul_pd(vi, bswap));
                _mm256_storeu_pd(crow + 4 * j, _mm256_add_pd(_mm256_loadu_pd(crow + 4 * j), prod));
            }
            if (n % 2 != 0) {
                const std::size_t j = n - 1;
                const double br = brow[2 * j];
                const double bi = brow[2 * j + 1];
                crow[2 * j] += ar * br - ai * bi;
                crow[2 * j + 1] += ar * bi + ai * br;
            }
        }
    }
}

} // namespace qdecoh::kernels::avx2
