#pragma once

// Data-parallel inner loops with a scalar reference implementation and an
// AVX2/FMA variant. The variant is chosen once at runtime from CPUID; the
// environment variable QDECOH_ISA=scalar forces the reference path.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace qdecoh::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;
/// Best ISA the host supports, honoring QDECOH_ISA.
Isa detect_isa() noexcept;
Isa active_isa() noexcept;
/// Throws std::invalid_argument if the host lacks `isa`.
void set_active_isa(Isa isa);

/// Ohmic integrand arguments below this value (in units of the cutoff) use
/// the analytic small-argument limit.
inline constexpr double kOhmicSmallX = 1e-8;

/// Coefficients of the single-qubit dephasing map on Hermitian 2x2 input:
///   out00 = keep*in00 + mix*in11
///   out01 = keep*e^{-i phase}*in01 + mix*conj(in01)
struct QubitChannelCoefficients {
    double keep;
    double mix;
    double cos_phase;
    double sin_phase;
};

/// Structure-of-arrays batch of 2x2 Hermitian matrices.
struct QubitBatch {
    std::vector<double> p00, p11, re01, im01;

    QubitBatch() = default;
    explicit QubitBatch(std::size_t n) : p00(n), p11(n), re01(n), im01(n) {}
    std::size_t size() const noexcept { return p00.size(); }
};

struct KernelTable {
    Isa isa;
    /// sum_k weight[k] * sin^2(omega[k] * t / 2)
    double (*sin2_weighted_sum)(const double* omega, const double* weight, std::size_t n, double t);
    /// out[i] = e^{-x} sin^2(a x / 2) / x * coth(b x / 2), coth factor 1 when b == 0.
    void (*ohmic_integrand)(const double* x, double* out, std::size_t n, double a, double b);
    void (*qubit_channel)(const double* in00, const double* in11, const double* inre, const double* inim,
                          double* out00, double* out11, double* outre, double* outim, std::size_t n,
                          QubitChannelCoefficients coeff);
    /// max_i sqrt(|a01 - b01|^2 + (a11 - b11)^2)
    double (*deviation_norm_max)(const double* a11, const double* are, const double* aim, const double* b11,
                                 const double* bre, const double* bim, std::size_t n);
    /// c (m x n) = a (m x k) * b (k x n), all row-major.
    void (*cgemm)(const std::complex<double>* a, const std::complex<double>* b, std::complex<double>* c,
                  std::size_t m, std::size_t k, std::size_t n);
};

const KernelTable& kernel_table(Isa isa);
const KernelTable& active_kernels();

// Convenience wrappers over the active table.

double sin2_weighted_sum(std::span<const double> omega, std::span<const double> weight, double t);
void ohmic_integrand(std::span<const double> x, std::span<double> out, double a, double b);
QubitBatch qubit_channel(const QubitBatch& in, QubitChannelCoefficients coeff);
double deviation_norm_max(const QubitBatch& a, const QubitBatch& b);
void cgemm(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b,
           std::span<std::complex<double>> c, std::size_t m, std::size_t k, std::size_t n);

} // namespace qdecoh::kernels
