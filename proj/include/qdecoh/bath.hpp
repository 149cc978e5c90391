#pragma once

// Decoherence exponent G(t) of a qubit dephasing in a bosonic bath and the
// derived suppression factor delta = exp(-4 G). Units: hbar = k_B = 1,
// angular frequencies in rad/s, times in seconds, beta in seconds.

#include <complex>
#include <span>
#include <variant>
#include <vector>

#include "qdecoh/qmath/quadrature.hpp"

namespace qdecoh {

struct BathMode {
    double omega;               // rad/s, > 0
    std::complex<double> g;     // rad/s; only |g|^2 enters G(t)
};

class DiscreteBath {
public:
    explicit DiscreteBath(std::vector<BathMode> modes);

    /// Uniform midpoint discretization of J(w) = eta w e^{-w/omega_c} on
    /// (0, omega_max] with |g_k|^2 = J(w_k) dw, so the mode sum is a
    /// Riemann sum of the continuum integral.
    static DiscreteBath ohmic_grid(double eta, double omega_c, std::size_t n_modes, double omega_max);

    std::span<const BathMode> modes() const noexcept { return modes_; }

private:
    std::vector<BathMode> modes_;
};

struct OhmicBath {
    double eta;
    double omega_c;

    OhmicBath(double eta_, double omega_c_);
    double spectral_density(double omega) const;
};

class Temperature {
public:
    static Temperature zero() { return Temperature(0.0); }
    static Temperature finite(double beta);

    bool is_zero() const noexcept { return beta_ == 0.0; }
    /// Inverse temperature in seconds; only meaningful when !is_zero().
    double beta() const noexcept { return beta_; }
    /// coth(beta * omega / 2), or 1 at zero temperature.
    double coth_factor(double omega) const;

    friend bool operator==(const Temperature&, const Temperature&) = default;

private:
    explicit Temperature(double beta) : beta_(beta) {}
    double beta_;
};

using BathSpec = std::variant<DiscreteBath, OhmicBath>;

/// Precomputed weights 2|g_k|^2/w_k^2 * coth(beta w_k / 2) for repeated
/// evaluation of the discrete-bath exponent on a time grid.
class DiscreteExponent {
public:
    DiscreteExponent(const DiscreteBath& bath, const Temperature& temp);
    double operator()(double t) const;

private:
    std::vector<double> omega_;
    std::vector<double> weight_;
};

/// G(t) = 2 sum_k |g_k|^2/w_k^2 sin^2(w_k t/2) coth(beta w_k/2).
double g_discrete(const DiscreteBath& bath, const Temperature& temp, double t);

/// G(t) = 2 eta int_0^inf dw e^{-w/wc} w^{-1} sin^2(w t/2) coth(beta w/2),
/// integrated in x = w/wc. Throws ToleranceNotMet from the quadrature.
double g_ohmic(const OhmicBath& bath, const Temperature& temp, double t, const QuadratureTolerances& quad = {});

/// Zero-temperature closed form (eta/2) ln(1 + wc^2 t^2).
double g_ohmic_zero_temperature_closed_form(const OhmicBath& bath, double t);

double decoherence_exponent(const BathSpec& bath, const Temperature& temp, double t,
                            const QuadratureTolerances& quad = {});

/// delta = exp(-4 G).
double suppression_factor(double g_value);

} // namespace qdecoh
