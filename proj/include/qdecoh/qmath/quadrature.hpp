#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>

namespace qdecoh {

struct QuadratureTolerances {
    double rel_tol = 1e-12;
    double abs_tol = 1e-15;
    std::size_t max_subdivisions = 4000;
};

/// Integration interval plus tolerances. `upper` may be +infinity, in which
/// case the integrand must carry an exponential envelope e^{-(x - lower)/decay_scale};
/// the range is truncated at lower + decay_scale * (ln(1/abs_tol) + 40).
struct QuadratureSpec {
    double lower = 0.0;
    double upper = 1.0;
    QuadratureTolerances tol{};
    double decay_scale = 1.0;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t subdivisions = 0;
    std::size_t evaluations = 0;
};

/// Fills out[i] = f(x[i]).
using BatchIntegrand = std::function<void(std::span<const double> x, std::span<double> out)>;

/// Finite upper bound actually integrated to for `spec`.
double effective_upper_bound(const QuadratureSpec& spec);

/// Globally adaptive Gauss-Kronrod 7/15 with bisection of the interval
/// carrying the largest error. Throws ToleranceNotMet when
/// max_subdivisions is exhausted before error <= max(abs_tol, rel_tol*|I|).
QuadratureResult adaptive_quadrature(const BatchIntegrand& f, const QuadratureSpec& spec);

double adaptive_quadrature(const std::function<double(double)>& f, const QuadratureSpec& spec);

} // namespace qdecoh
