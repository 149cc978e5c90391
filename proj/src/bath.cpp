#include "qdecoh/bath.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qdecoh/kernels/kernels.hpp"

namespace qdecoh {

DiscreteBath::DiscreteBath(std::vector<BathMode> modes) : modes_(std::move(modes)) {
    if (modes_.empty()) throw std::invalid_argument("DiscreteBath: mode list is empty");
    for (const auto& m : modes_) {
        if (!(m.omega > 0.0) || !std::isfinite(m.omega)) {
            throw std::invalid_argument("DiscreteBath: mode frequency must be finite and > 0");
        }
        if (!std::isfinite(m.g.real()) || !std::isfinite(m.g.imag())) {
            throw std::invalid_argument("DiscreteBath: coupling must be finite");
        }
    }
}

DiscreteBath DiscreteBath::ohmic_grid(double eta, double omega_c, std::size_t n_modes, double omega_max) {
    const OhmicBath spectrum(eta, omega_c);
    if (n_modes == 0) throw std::invalid_argument("ohmic_grid: need at least one mode");
    if (!(omega_max > 0.0)) throw std::invalid_argument("ohmic_grid: omega_max must be > 0");
    const double dw = omega_max / static_cast<double>(n_modes);
    std::vector<BathMode> modes;
    modes.reserve(n_modes);
    for (std::size_t k = 0; k < n_modes; ++k) {
        const double w = (static_cast<double>(k) + 0.5) * dw;
        modes.push_back({w, std::sqrt(spectrum.spectral_density(w) * dw)});
    }
    return DiscreteBath(std::move(modes));
}

OhmicBath::OhmicBath(double eta_, double omega_c_) : eta(eta_), omega_c(omega_c_) {
    if (!(eta > 0.0) || !std::isfinite(eta)) throw std::invalid_argument("OhmicBath: eta must be finite and > 0");
    if (!(omega_c > 0.0) || !std::isfinite(omega_c)) {
        throw std::invalid_argument("OhmicBath: omega_c must be finite and > 0");
    }
}

double OhmicBath::spectral_density(double omega) const { return eta * omega * std::exp(-omega / omega_c); }

Temperature Temperature::finite(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("Temperature: beta must be finite and > 0");
    return Temperature(beta);
}

double Temperature::coth_factor(double omega) const {
    if (is_zero()) return 1.0;
    const double m = std::expm1(-beta_ * omega);
    return (2.0 + m) / (-m);
}

DiscreteExponent::DiscreteExponent(const DiscreteBath& bath, const Temperature& temp) {
    omega_.reserve(bath.modes().size());
    weight_.reserve(bath.modes().size());
    for (const auto& m : bath.modes()) {
        omega_.push_back(m.omega);
        weight_.push_back(2.0 * std::norm(m.g) / (m.omega * m.omega) * temp.coth_factor(m.omega));
    }
}

double DiscreteExponent::operator()(double t) const {
    if (t < 0.0) throw std::invalid_argument("decoherence exponent: t must be >= 0");
    return kernels::sin2_weighted_sum(omega_, weight_, t);
}

double g_discrete(const DiscreteBath& bath, const Temperature& temp, double t) {
    return DiscreteExponent(bath, temp)(t);
}

double g_ohmic(const OhmicBath& bath, const Temperature& temp, double t, const QuadratureTolerances& quad) {
    if (t < 0.0) throw std::invalid_argument("g_ohmic: t must be >= 0");
    if (t == 0.0) return 0.0;
    const double a = bath.omega_c * t;
    const double b = temp.is_zero() ? 0.0 : temp.beta() * bath.omega_c;
    const BatchIntegrand integrand = [a, b](std::span<const double> x, std::span<double> out) {
        kernels::ohmic_integrand(x, out, a, b);
    };
    const QuadratureSpec spec{0.0, std::numeric_limits<double>::infinity(), quad, 1.0};
    return 2.0 * bath.eta * adaptive_quadrature(integrand, spec).value;
}

double g_ohmic_zero_temperature_closed_form(const OhmicBath& bath, double t) {
    const double a = bath.omega_c * t;
    return 0.5 * bath.eta * std::log1p(a * a);
}

double decoherence_exponent(const BathSpec& bath, const Temperature& temp, double t, const QuadratureTolerances& quad) {
    return std::visit(
        [&](const auto& b) -> double {
            using B = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<B, DiscreteBath>) {
                return g_discrete(b, temp, t);
            } else {
                return g_ohmic(b, temp, t, quad);
            }
        },
        bath);
}

double suppression_factor(double g_value) {
    if (!(g_value >= 0.0)) throw std::invalid_argument("suppression_factor: G must be >= 0");
    return std::exp(-4.0 * g_value);
}

} // namespace qdecoh
