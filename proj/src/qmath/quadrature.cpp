#include "qdecoh/qmath/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdecoh/errors.hpp"

namespace qdecoh {

namespace {

// Kronrod 15-point abscissae (positive half, descending) and weights;
// the odd-indexed abscissae are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

class Kronrod15 {
public:
    explicit Kronrod15(const BatchIntegrand& f) : f_(f) {}

    Segment operator()(double a, double b) {
        const double center = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        nodes_[0] = center;
        for (std::size_t j = 0; j < 7; ++j) {
            nodes_[1 + 2 * j] = center - half * kXgk[j];
            nodes_[2 + 2 * j] = center + half * kXgk[j];
        }
        f_(nodes_, values_);
        ++calls_;

        const double fc = values_[0];
        double kronrod = kWgk[7] * fc;
        double gauss = kWg[3] * fc;
        double abs_sum = std::abs(kronrod);
        for (std::size_t j = 0; j < 7; ++j) {
            const double pair = values_[1 + 2 * j] + values_[2 + 2 * j];
            kronrod += kWgk[j] * pair;
            abs_sum += kWgk[j] * (std::abs(values_[1 + 2 * j]) + std::abs(values_[2 + 2 * j]));
            if (j % 2 == 1) gauss += kWg[j / 2] * pair;
        }
        for (double v : values_) {
            if (!std::isfinite(v)) throw NumericalError("adaptive_quadrature: integrand returned a non-finite value");
        }
        kronrod *= half;
        gauss *= half;
        abs_sum *= std::abs(half);
        // Rounding floor so the estimate never undercuts accumulated roundoff.
        const double error = std::max(std::abs(kronrod - gauss), 50.0 * std::numeric_limits<double>::epsilon() * abs_sum);
        return {a, b, kronrod, error};
    }

    std::size_t calls() const { return calls_; }

private:
    const BatchIntegrand& f_;
    std::array<double, 15> nodes_{};
    std::array<double, 15> values_{};
    std::size_t calls_ = 0;
};

void validate(const QuadratureSpec& spec) {
    if (!(spec.tol.rel_tol > 0.0) || !(spec.tol.abs_tol > 0.0)) {
        throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
    }
    if (spec.tol.max_subdivisions == 0) throw std::invalid_argument("QuadratureSpec: max_subdivisions must be positive");
    if (!std::isfinite(spec.lower)) throw std::invalid_argument("QuadratureSpec: lower bound must be finite");
    if (!(spec.lower < spec.upper)) throw std::invalid_argument("QuadratureSpec: lower must be < upper");
    if (std::isinf(spec.upper) && !(spec.decay_scale > 0.0)) {
        throw std::invalid_argument("QuadratureSpec: semi-infinite range needs a positive decay_scale");
    }
}

} // namespace

double effective_upper_bound(const QuadratureSpec& spec) {
    validate(spec);
    if (std::isfinite(spec.upper)) return spec.upper;
    return spec.lower + spec.decay_scale * (std::log(1.0 / spec.tol.abs_tol) + 40.0);
}

QuadratureResult adaptive_quadrature(const BatchIntegrand& f, const QuadratureSpec& spec) {
    const double upper = effective_upper_bound(spec);
    Kronrod15 rule(f);

    std::priority_queue<Segment> work;
    Segment first = rule(spec.lower, upper);
    double value = first.value;
    double error = first.error;
    work.push(first);
    std::size_t subdivisions = 1;

    auto converged = [&] { return error <= std::max(spec.tol.abs_tol, spec.tol.rel_tol * std::abs(value)); };
    while (!converged()) {
        if (subdivisions >= spec.tol.max_subdivisions) {
            throw ToleranceNotMet("adaptive_quadrature: " + std::to_string(subdivisions) +
                                  " subdivisions exhausted with error estimate " + std::to_string(error) +
                                  " for value " + std::to_string(value));
        }
        const Segment worst = work.top();
        work.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = rule(worst.a, mid);
        const Segment right = rule(mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
        ++subdivisions;
    }

    // Re-sum from the leaves to shed drift from the running updates.
    double total = 0.0;
    double total_error = 0.0;
    std::vector<Segment> leaves;
    leaves.reserve(work.size());
    while (!work.empty()) {
        leaves.push_back(work.top());
        work.pop();
    }
    std::sort(leaves.begin(), leaves.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
    for (const auto& s : leaves) {
        total += s.value;
        total_error += s.error;
    }
    return {total, total_error, subdivisions, rule.calls() * 15};
}

double adaptive_quadrature(const std::function<double(double)>& f, const QuadratureSpec& spec) {
    const BatchIntegrand batch = [&f](std::span<const double> x, std::span<double> out) {
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = f(x[i]);
    };
    return adaptive_quadrature(batch, spec).value;
}

} // namespace qdecoh
