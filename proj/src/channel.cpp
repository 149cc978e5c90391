#include "qdecoh/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qdecoh/bath.hpp"
#include "qdecoh/errors.hpp"
#include "qdecoh/qmath/linalg.hpp"

namespace qdecoh {

namespace {

constexpr double kChoiTolerance = 1e-10;

void require_exponent_and_time(double g_value, double t) {
    if (!(g_value >= 0.0) || !std::isfinite(g_value)) throw std::invalid_argument("channel: G must be finite and >= 0");
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("channel: t must be finite and >= 0");
}

} // namespace

QubitParams::QubitParams(double e_j_) : e_j(e_j_) {
    if (!std::isfinite(e_j)) throw std::invalid_argument("QubitParams: E_J must be finite");
}

DephasingChannel::DephasingChannel(double suppression, double phase) : suppression_(suppression), phase_(phase) {
    if (!std::isfinite(suppression) || !std::isfinite(phase)) {
        throw std::invalid_argument("DephasingChannel: parameters must be finite");
    }
}

DephasingChannel DephasingChannel::from_exponent(const QubitParams& params, double g_value, double t) {
    require_exponent_and_time(g_value, t);
    return DephasingChannel(suppression_factor(g_value), params.e_j * t);
}

kernels::QubitChannelCoefficients DephasingChannel::coefficients() const {
    return {0.5 * (1.0 + suppression_), 0.5 * (1.0 - suppression_), std::cos(phase_), std::sin(phase_)};
}

ComplexMatrix DephasingChannel::apply(const ComplexMatrix& m) const {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("DephasingChannel::apply: expected 2x2 input");
    const auto c = coefficients();
    const cplx rot = std::polar(1.0, -phase_);
    ComplexMatrix out(2, 2);
    out(0, 0) = c.keep * m(0, 0) + c.mix * m(1, 1);
    out(1, 1) = c.mix * m(0, 0) + c.keep * m(1, 1);
    out(0, 1) = c.keep * rot * m(0, 1) + c.mix * m(1, 0);
    out(1, 0) = c.keep * std::conj(rot) * m(1, 0) + c.mix * m(0, 1);
    return out;
}

ComplexMatrix DephasingChannel::superoperator() const {
    ComplexMatrix s(4, 4);
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
            ComplexMatrix e(2, 2);
            e(k, l) = 1.0;
            const ComplexMatrix img = apply(e);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) s(2 * i + j, 2 * k + l) = img(i, j);
        }
    return s;
}

DeviationOperator::DeviationOperator(double s00, cplx s01, double s11) : s00_(s00), s11_(s11), s01_(s01) {}

ComplexMatrix DeviationOperator::matrix() const { return ComplexMatrix::from_rows({{s00_, s01_}, {s10(), s11_}}); }

QubitState evolve_single(const QubitState& rho0, const QubitParams& params, double g_value, double t) {
    const auto channel = DephasingChannel::from_exponent(params, g_value, t);
    const auto c = channel.coefficients();
    const cplx rot = std::polar(1.0, -channel.phase());
    const double p00 = c.keep * rho0.p00() + c.mix * rho0.p11();
    const double p11 = c.mix * rho0.p00() + c.keep * rho0.p11();
    const cplx p01 = c.keep * rot * rho0.p01() + c.mix * rho0.p10();
    return QubitState::from_entries(p00, p01, p11);
}

kernels::QubitBatch evolve_single_batch(const kernels::QubitBatch& rho0, const QubitParams& params, double g_value,
                                        double t) {
    return kernels::qubit_channel(rho0, DephasingChannel::from_exponent(params, g_value, t).coefficients());
}

TwoQubitState evolve_pair(const TwoQubitState& rho0, const QubitParams& p1, const QubitParams& p2, double g1,
                          double g2, double t) {
    const ComplexMatrix s1 = DephasingChannel::from_exponent(p1, g1, t).superoperator();
    const ComplexMatrix s2 = DephasingChannel::from_exponent(p2, g2, t).superoperator();
    const ComplexMatrix& in = rho0.matrix();
    ComplexMatrix out(4, 4);
    // out[(i1 i2),(j1 j2)] = sum S1[(i1 j1),(k1 l1)] S2[(i2 j2),(k2 l2)] in[(k1 k2),(l1 l2)]
    for (std::size_t i1 = 0; i1 < 2; ++i1)
        for (std::size_t j1 = 0; j1 < 2; ++j1)
            for (std::size_t k1 = 0; k1 < 2; ++k1)
                for (std::size_t l1 = 0; l1 < 2; ++l1) {
                    const cplx a = s1(2 * i1 + j1, 2 * k1 + l1);
                    if (a == cplx{0.0, 0.0}) continue;
                    for (std::size_t i2 = 0; i2 < 2; ++i2)
                        for (std::size_t j2 = 0; j2 < 2; ++j2) {
                            cplx acc{0.0, 0.0};
                            for (std::size_t k2 = 0; k2 < 2; ++k2)
                                for (std::size_t l2 = 0; l2 < 2; ++l2)
                                    acc += s2(2 * i2 + j2, 2 * k2 + l2) * in(2 * k1 + k2, 2 * l1 + l2);
                            out(2 * i1 + i2, 2 * j1 + j2) += a * acc;
                        }
                }
    return TwoQubitState::from_matrix(out);
}

DeviationOperator deviation(const QubitState& rho_real, const QubitState& rho_ideal) {
    return DeviationOperator(rho_real.p00() - rho_ideal.p00(), rho_real.p01() - rho_ideal.p01(),
                             rho_real.p11() - rho_ideal.p11());
}

double lambda_norm(const DeviationOperator& sigma) {
    return std::sqrt(std::norm(sigma.s10()) + sigma.s11() * sigma.s11());
}

double max_decoherence_analytic(double g_value) { return 0.5 * (1.0 - suppression_factor(g_value)); }

double max_decoherence_numeric(const QubitParams& params, double g_value, double t, std::size_t grid_size) {
    if (grid_size < 8) throw std::invalid_argument("max_decoherence_numeric: grid_size must be >= 8");
    const std::size_t n = grid_size * grid_size + 2;
    kernels::QubitBatch states(n);
    auto put = [&states](std::size_t idx, const QubitState& s) {
        states.p00[idx] = s.p00();
        states.p11[idx] = s.p11();
        states.re01[idx] = s.p01().real();
        states.im01[idx] = s.p01().imag();
    };
    std::size_t idx = 0;
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double theta = std::numbers::pi * static_cast<double>(i + 1) / static_cast<double>(grid_size + 1);
        for (std::size_t j = 0; j < grid_size; ++j) {
            const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_size);
            put(idx++, QubitState::pure_bloch(theta, phi));
        }
    }
    put(idx++, QubitState::pure_bloch(0.0, 0.0));
    put(idx++, QubitState::pure_bloch(std::numbers::pi, 0.0));

    const auto real = evolve_single_batch(states, params, g_value, t);
    const auto ideal = evolve_single_batch(states, params, 0.0, t);
    return kernels::deviation_norm_max(real, ideal);
}

CptpReport cptp_check(const DephasingChannel& channel) {
    CptpReport report;
    ComplexMatrix choi(4, 4);
    double trace_defect = 0.0;
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
            ComplexMatrix e(2, 2);
            e(k, l) = 1.0;
            const ComplexMatrix img = channel.apply(e);
            const cplx expected_trace = (k == l) ? 1.0 : 0.0;
            trace_defect = std::max(trace_defect, std::abs(img.trace() - expected_trace));
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) choi(2 * k + i, 2 * l + j) = img(i, j);
        }
    report.trace_defect = trace_defect;
    const auto eig = hermitian_eigenvalues(choi, 1e-12);
    report.min_choi_eigenvalue = eig.front();

    std::ostringstream diag;
    diag.precision(17);
    const bool psd = eig.front() >= -kChoiTolerance;
    const bool tp = trace_defect <= kTraceTolerance;
    if (!psd) diag << "Choi matrix has negative eigenvalue " << eig.front() << "; ";
    if (!tp) diag << "trace not preserved (defect " << trace_defect << "); ";
    report.ok = psd && tp;
    report.diagnostic = report.ok ? "completely positive and trace preserving" : diag.str();
    return report;
}

CptpReport cptp_check(const QubitParams& params, double g_value, double t) {
    return cptp_check(DephasingChannel::from_exponent(params, g_value, t));
}

} // namespace qdecoh
