#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kernels_impl.hpp"

namespace qdecoh::kernels {

namespace {

constexpr KernelTable kScalarTable{
    Isa::scalar,
    &scalar::sin2_weighted_sum,
    &scalar::ohmic_integrand,
    &scalar::qubit_channel,
    &scalar::deviation_norm_max,
    &scalar::cgemm,
};

#if QDECOH_HAVE_AVX2
constexpr KernelTable kAvx2Table{
    Isa::avx2,
    &avx2::sin2_weighted_sum,
    &avx2::ohmic_integrand,
    &avx2::qubit_channel,
    &avx2::deviation_norm_max,
    &avx2::cgemm,
};
#endif

std::atomic<const KernelTable*>& active_slot() {
    static std::atomic<const KernelTable*> slot{&kernel_table(detect_isa())};
    return slot;
}

} // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if QDECOH_HAVE_AVX2
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

Isa detect_isa() noexcept {
    if (const char* env = std::getenv("QDECOH_ISA")) {
        const std::string_view want{env};
        if (want == "scalar") return Isa::scalar;
        if (want == "avx2" && isa_supported(Isa::avx2)) return Isa::avx2;
    }
    return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

const KernelTable& kernel_table(Isa isa) {
#if QDECOH_HAVE_AVX2
    if (isa == Isa::avx2) return kAvx2Table;
#endif
    if (isa != Isa::scalar) {
        throw std::invalid_argument("kernel_table: ISA '" + std::string(isa_name(isa)) + "' not compiled in");
    }
    return kScalarTable;
}

Isa active_isa() noexcept { return active_slot().load(std::memory_order_acquire)->isa; }

void set_active_isa(Isa isa) {
    if (!isa_supported(isa)) {
        throw std::invalid_argument("set_active_isa: host does not support '" + std::string(isa_name(isa)) + "'");
    }
    active_slot().store(&kernel_table(isa), std::memory_order_release);
}

const KernelTable& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

double sin2_weighted_sum(std::span<const double> omega, std::span<const double> weight, double t) {
    if (omega.size() != weight.size()) throw std::invalid_argument("sin2_weighted_sum: size mismatch");
    return active_kernels().sin2_weighted_sum(omega.data(), weight.data(), omega.size(), t);
}

void ohmic_integrand(std::span<const double> x, std::span<double> out, double a, double b) {
    if (x.size() != out.size()) throw std::invalid_argument("ohmic_integrand: size mismatch");
    active_kernels().ohmic_integrand(x.data(), out.data(), x.size(), a, b);
}

QubitBatch qubit_channel(const QubitBatch& in, QubitChannelCoefficients coeff) {
    QubitBatch out(in.size());
    active_kernels().qubit_channel(in.p00.data(), in.p11.data(), in.re01.data(), in.im01.data(), out.p00.data(),
                                   out.p11.data(), out.re01.data(), out.im01.data(), in.size(), coeff);
    return out;
}

double deviation_norm_max(const QubitBatch& a, const QubitBatch& b) {
    if (a.size() != b.size()) throw std::invalid_argument("deviation_norm_max: size mismatch");
    return active_kernels().deviation_norm_max(a.p11.data(), a.re01.data(), a.im01.data(), b.p11.data(),
                                               b.re01.data(), b.im01.data(), a.size());
}

void cgemm(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b,
           std::span<std::complex<double>> c, std::size_t m, std::size_t k, std::size_t n) {
    if (a.size() != m * k || b.size() != k * n || c.size() != m * n) {
        throw std::invalid_argument("cgemm: span sizes do not match m, k, n");
    }
    active_kernels().cgemm(a.data(), b.data(), c.data(), m, k, n);
}

} // namespace qdecoh::kernels
