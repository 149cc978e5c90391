#pragma once

#include "qdecoh/kernels/kernels.hpp"

namespace qdecoh::kernels {

namespace scalar {
double sin2_weighted_sum(const double* omega, const double* weight, std::size_t n, double t);
void ohmic_integrand(const double* x, double* out, std::size_t n, double a, double b);
void qubit_channel(const double* in00, const double* in11, const double* inre, const double* inim, double* out00,
                   double* out11, double* outre, double* outim, std::size_t n, QubitChannelCoefficients coeff);
double deviation_norm_max(const double* a11, const double* are, const double* aim, const double* b11,
                          const double* bre, const double* bim, std::size_t n);
void cgemm(const std::complex<double>* a, const std::complex<double>* b, std::complex<double>* c, std::size_t m,
           std::size_t k, std::size_t n);
} // namespace scalar

#if QDECOH_HAVE_AVX2
namespace avx2 {
double sin2_weighted_sum(const double* omega, const double* weight, std::size_t n, double t);
void ohmic_integrand(const double* x, double* out, std::size_t n, double a, double b);
void qubit_channel(const double* in00, const double* in11, const double* inre, const double* inim, double* out00,
                   double* out11, double* outre, double* outim, std::size_t n, QubitChannelCoefficients coeff);
double deviation_norm_max(const double* a11, const double* are, const double* aim, const double* b11,
                          const double* bre, const double* bim, std::size_t n);
void cgemm(const std::complex<double>* a, const std::complex<double>* b, std::complex<double>* c, std::size_t m,
           std::size_t k, std::size_t n);
} // namespace avx2
#endif

} // namespace qdecoh::kernels
