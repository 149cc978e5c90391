#pragma once

// Vector elementary functions for the AVX2 kernels. Only compiled into
// translation units built with -mavx2 -mfma.

#include <immintrin.h>

namespace qdecoh::kernels::avx2 {

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

inline double hsum_pd(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double hmax_pd(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d m = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(m, _mm_unpackhi_pd(m, m)));
}

/// Arguments with |u| above this lose accuracy in the three-term reduction;
/// callers fall back to the scalar path.
inline constexpr double kSinReductionLimit = 1e5;

/// sin^2(u). Cody-Waite reduction by pi/2, fdlibm sin/cos kernels on [-pi/4, pi/4].
inline __m256d sin2_pd(__m256d u) {
    const __m256d pio2_1 = _mm256_set1_pd(1.57079632673412561417e+00);
    const __m256d pio2_2 = _mm256_set1_pd(6.07710050630396597660e-11);
    const __m256d pio2_3 = _mm256_set1_pd(2.02226624871116645580e-21);
    const __m256d two_over_pi = _mm256_set1_pd(6.36619772367581382433e-01);

    u = abs_pd(u);
    const __m256d k = _mm256_round_pd(_mm256_mul_pd(u, two_over_pi), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, pio2_1, u);
    r = _mm256_fnmadd_pd(k, pio2_2, r);
    r = _mm256_fnmadd_pd(k, pio2_3, r);

    const __m256d z = _mm256_mul_pd(r, r);

    __m256d ps = _mm256_set1_pd(1.58969099521155010221e-10);
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-2.50507602534068634195e-08));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(2.75573137070700676789e-06));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-1.98412698298579493134e-04));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(8.33333333332248946124e-03));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-1.66666666666666324348e-01));
    const __m256d s = _mm256_fmadd_pd(_mm256_mul_pd(r, z), ps, r);

    __m256d pc = _mm256_set1_pd(-1.13596475577881948265e-11);
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(2.08757232129817482790e-09));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(-2.75573143513906633035e-07));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(2.48015872894767294178e-05));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(-1.38888888888741095749e-03));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(4.16666666666666019037e-02));
    const __m256d z2 = _mm256_mul_pd(z, z);
    const __m256d c = _mm256_fmadd_pd(z2, pc, _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, _mm256_set1_pd(1.0)));

    const __m256d half_k = _mm256_mul_pd(k, _mm256_set1_pd(0.5));
    const __m256d odd = _mm256_cmp_pd(half_k, _mm256_floor_pd(half_k), _CMP_NEQ_OQ);
    const __m256d chosen = _mm256_blendv_pd(s, c, odd);
    return _mm256_mul_pd(chosen, chosen);
}

/// e^x for x in [-745, 709]; results below 2^-1022 flush to zero.
inline __m256d exp_pd(__m256d x) {
    const __m256d log2e = _mm256_set1_pd(1.44269504088896338700e+00);
    const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
    const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);

    const __m256d underflow = _mm256_cmp_pd(x, _mm256_set1_pd(-708.0), _CMP_LT_OQ);
    x = _mm256_max_pd(x, _mm256_set1_pd(-708.0));
    x = _mm256_min_pd(x, _mm256_set1_pd(709.0));

    const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, ln2_hi, x);
    r = _mm256_fnmadd_pd(k, ln2_lo, r);

    // Taylor polynomial through r^13 on |r| <= ln2/2.
    static constexpr double inv_fact[] = {
        1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0, 1.0 / 362880.0,
        1.0 / 40320.0,      1.0 / 5040.0,      1.0 / 720.0,      1.0 / 120.0,     1.0 / 24.0,
        1.0 / 6.0,          0.5,               1.0,              1.0};
    __m256d p = _mm256_set1_pd(inv_fact[0]);
    for (int i = 1; i < 14; ++i) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_fact[i]));

    const __m128i ki = _mm256_cvtpd_epi32(k);
    __m256i bits = _mm256_cvtepi32_epi64(ki);
    bits = _mm256_add_epi64(bits, _mm256_set1_epi64x(1023));
    bits = _mm256_slli_epi64(bits, 52);
    const __m256d scale = _mm256_castsi256_pd(bits);
    return _mm256_andnot_pd(underflow, _mm256_mul_pd(p, scale));
}

/// e^y - 1 for y <= 0, accurate near zero.
inline __m256d expm1_neg_pd(__m256d y) {
    // Taylor series y * (1 + y/2 * (1 + y/3 * (... (1 + y/17)))) on |y| < 1/2.
    __m256d series = _mm256_set1_pd(1.0);
    for (int j = 17; j >= 2; --j) {
        series = _mm256_fmadd_pd(_mm256_mul_pd(y, _mm256_set1_pd(1.0 / j)), series, _mm256_set1_pd(1.0));
    }
    series = _mm256_mul_pd(y, series);
    const __m256d direct = _mm256_sub_pd(exp_pd(y), _mm256_set1_pd(1.0));
    const __m256d small = _mm256_cmp_pd(abs_pd(y), _mm256_set1_pd(0.5), _CMP_LT_OQ);
    return _mm256_blendv_pd(direct, series, small);
}

} // namespace qdecoh::kernels::avx2
