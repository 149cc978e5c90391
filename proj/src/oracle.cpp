#include "qdecoh/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qdecoh/channel.hpp"
#include "qdecoh/errors.hpp"
#include "qdecoh/qmath/linalg.hpp"

namespace qdecoh::oracle {

namespace {

ComplexMatrix annihilation(std::size_t n_max) {
    ComplexMatrix b(n_max + 1, n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) b(n - 1, n) = std::sqrt(static_cast<double>(n));
    return b;
}

// Embeds a single-mode operator at position k of the bath tensor product.
ComplexMatrix embed(const std::vector<FockMode>& modes, std::size_t k, const ComplexMatrix& op) {
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (std::size_t j = 0; j < modes.size(); ++j) {
        out = kron(out, j == k ? op : ComplexMatrix::identity(modes[j].n_max + 1));
    }
    return out;
}

ComplexMatrix free_bath(const OracleSystem& sys) {
    ComplexMatrix h(sys.bath_dim(), sys.bath_dim());
    for (std::size_t k = 0; k < sys.modes().size(); ++k) {
        const auto& m = sys.modes()[k];
        ComplexMatrix number(m.n_max + 1, m.n_max + 1);
        for (std::size_t n = 0; n <= m.n_max; ++n) number(n, n) = m.omega * static_cast<double>(n);
        h += embed(sys.modes(), k, number);
    }
    return h;
}

ComplexMatrix coupling(const OracleSystem& sys) {
    ComplexMatrix c(sys.bath_dim(), sys.bath_dim());
    for (std::size_t k = 0; k < sys.modes().size(); ++k) {
        const auto& m = sys.modes()[k];
        const ComplexMatrix b = annihilation(m.n_max);
        c += embed(sys.modes(), k, std::conj(m.g) * b + m.g * b.adjoint());
    }
    return c;
}

const ComplexMatrix& coupling_pauli(Model model) {
    static const ComplexMatrix z = pauli::z();
    static const ComplexMatrix x = pauli::x();
    return model == Model::primary ? z : x;
}

void require_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("oracle: t must be finite and >= 0");
}

} // namespace

FockMode::FockMode(double omega_, std::complex<double> g_, std::size_t n_max_) : omega(omega_), g(g_), n_max(n_max_) {
    if (!(omega > 0.0) || !std::isfinite(omega)) throw ConfigError("FockMode: omega must be finite and > 0");
    if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) throw ConfigError("FockMode: coupling must be finite");
    if (n_max < 1) throw ConfigError("FockMode: n_max must be >= 1");
}

double FockMode::thermal_tail(const Temperature& temp) const {
    if (temp.is_zero()) return 0.0;
    return std::exp(-temp.beta() * omega * static_cast<double>(n_max + 1));
}

OracleSystem::OracleSystem(double e_j, std::vector<FockMode> modes) : e_j_(e_j), modes_(std::move(modes)), bath_dim_(1) {
    if (!std::isfinite(e_j_)) throw ConfigError("OracleSystem: E_J must be finite");
    if (modes_.size() > kMaxModes) throw ConfigError("OracleSystem: at most 4 bath modes");
    for (const auto& m : modes_) {
        bath_dim_ *= m.n_max + 1;
        if (2 * bath_dim_ > kMaxExpDimension) {
            throw DimensionTooLarge("OracleSystem: total dimension exceeds " + std::to_string(kMaxExpDimension));
        }
    }
}

void OracleSystem::require_truncation(const Temperature& temp) const {
    for (std::size_t k = 0; k < modes_.size(); ++k) {
        const double tail = modes_[k].thermal_tail(temp);
        if (tail > kThermalTailTolerance) {
            std::ostringstream os;
            os.precision(6);
            os << "oracle: mode " << k << " thermal weight beyond n_max = " << modes_[k].n_max << " is " << tail
               << " > 1e-6; raise n_max";
            throw ConfigError(os.str());
        }
    }
}

double OracleSystem::exponent(const Temperature& temp, double t) const {
    if (modes_.empty()) return 0.0;
    std::vector<BathMode> modes;
    modes.reserve(modes_.size());
    for (const auto& m : modes_) modes.push_back({m.omega, m.g});
    return g_discrete(DiscreteBath(std::move(modes)), temp, t);
}

ComplexMatrix system_hamiltonian(const OracleSystem& sys, Model model) {
    return (-0.5 * sys.e_j()) * (model == Model::primary ? pauli::x() : pauli::z());
}

ComplexMatrix bath_coupling_hamiltonian(const OracleSystem& sys, Model model) {
    return kron(ComplexMatrix::identity(2), free_bath(sys)) + kron(coupling_pauli(model), coupling(sys));
}

ComplexMatrix build_hamiltonian(const OracleSystem& sys) {
    return kron(system_hamiltonian(sys), ComplexMatrix::identity(sys.bath_dim())) + bath_coupling_hamiltonian(sys);
}

ComplexMatrix dual_model_hamiltonian(const OracleSystem& sys) {
    return kron(system_hamiltonian(sys, Model::dual), ComplexMatrix::identity(sys.bath_dim())) +
           bath_coupling_hamiltonian(sys, Model::dual);
}

namespace {

std::vector<double> thermal_weights(const OracleSystem& sys, const Temperature& temp) {
    std::vector<double> w{1.0};
    for (const auto& m : sys.modes()) {
        std::vector<double> single(m.n_max + 1, 0.0);
        if (temp.is_zero()) {
            single[0] = 1.0;
        } else {
            double norm = 0.0;
            for (std::size_t n = 0; n <= m.n_max; ++n) {
                single[n] = std::exp(-temp.beta() * m.omega * static_cast<double>(n));
                norm += single[n];
            }
            for (auto& s : single) s /= norm;
        }
        std::vector<double> next;
        next.reserve(w.size() * single.size());
        for (double a : w)
            for (double b : single) next.push_back(a * b);
        w = std::move(next);
    }
    return w;
}

} // namespace

ComplexMatrix thermal_bath_state(const OracleSystem& sys, const Temperature& temp) {
    const auto w = thermal_weights(sys, temp);
    std::vector<cplx> diag(w.begin(), w.end());
    return ComplexMatrix::diagonal(diag);
}

ComplexMatrix eigenbasis(Model model) {
    const double s = std::numbers::sqrt2 / 2.0;
    if (model == Model::primary) return ComplexMatrix::from_rows({{s, s}, {-s, s}});
    return pauli::x();
}

ReducedDynamics::ReducedDynamics(const OracleSystem& sys, const Temperature& temp, double t, Propagator prop,
                                 Model model)
    : weights_(thermal_weights(sys, temp)), basis_(eigenbasis(model)), bath_dim_(sys.bath_dim()) {
    require_time(t);
    sys.require_truncation(temp);
    if (prop == Propagator::exact) {
        const ComplexMatrix h = kron(system_hamiltonian(sys, model), ComplexMatrix::identity(bath_dim_)) +
                                bath_coupling_hamiltonian(sys, model);
        u_ = matrix_exponential(h, t);
    } else {
        const ComplexMatrix half =
            kron(matrix_exponential(system_hamiltonian(sys, model), 0.5 * t), ComplexMatrix::identity(bath_dim_));
        u_ = half * matrix_exponential(bath_coupling_hamiltonian(sys, model), t) * half;
    }
    u_dag_ = u_.adjoint();
}

QubitState ReducedDynamics::operator()(const QubitState& rho0) const {
    const ComplexMatrix rho_z = basis_ * rho0.matrix() * basis_.adjoint();
    const std::size_t n = 2 * bath_dim_;
    ComplexMatrix joint(n, n);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t b = 0; b < bath_dim_; ++b) joint(i * bath_dim_ + b, j * bath_dim_ + b) = rho_z(i, j) * weights_[b];
    const ComplexMatrix evolved = u_ * joint * u_dag_;
    ComplexMatrix reduced(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t b = 0; b < bath_dim_; ++b) reduced(i, j) += evolved(i * bath_dim_ + b, j * bath_dim_ + b);
    return QubitState::from_matrix(basis_.adjoint() * reduced * basis_);
}

QubitState exact_evolve(const OracleSystem& sys, const QubitState& rho0, const Temperature& temp, double t) {
    return ReducedDynamics(sys, temp, t, Propagator::exact)(rho0);
}

QubitState split_evolve(const OracleSystem& sys, const QubitState& rho0, const Temperature& temp, double t) {
    return ReducedDynamics(sys, temp, t, Propagator::split)(rho0);
}

double max_entry_deviation(const QubitState& a, const QubitState& b) {
    return std::max({std::abs(a.p00() - b.p00()), std::abs(a.p11() - b.p11()), std::abs(a.p01() - b.p01())});
}

std::vector<QubitState> random_pure_states(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<QubitState> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double theta = std::acos(1.0 - 2.0 * unit(rng));
        const double phi = 2.0 * std::numbers::pi * unit(rng);
        out.push_back(QubitState::pure_bloch(theta, phi));
    }
    return out;
}

double channel_discrepancy(const OracleSystem& sys, const Temperature& temp, double t, std::size_t samples,
                           std::uint64_t seed) {
    if (samples < 4) throw std::invalid_argument("channel_discrepancy: samples must be >= 4");
    const ReducedDynamics split(sys, temp, t, Propagator::split);
    const QubitParams params(sys.e_j());
    const double g_value = sys.exponent(temp, t);
    double worst = 0.0;
    for (const auto& rho0 : random_pure_states(samples, seed)) {
        worst = std::max(worst, max_entry_deviation(split(rho0), evolve_single(rho0, params, g_value, t)));
    }
    return worst;
}

double split_deviation(const OracleSystem& sys, const Temperature& temp, double t,
                       const std::vector<QubitState>& states) {
    const ReducedDynamics exact(sys, temp, t, Propagator::exact);
    const ReducedDynamics split(sys, temp, t, Propagator::split);
    double worst = 0.0;
    for (const auto& rho0 : states) worst = std::max(worst, max_entry_deviation(split(rho0), exact(rho0)));
    return worst;
}

double split_error_ratio(const OracleSystem& sys, const Temperature& temp, double t,
                         const std::vector<QubitState>& states) {
    const double full = split_deviation(sys, temp, t, states);
    const double half = split_deviation(sys, temp, 0.5 * t, states);
    if (!(half > 0.0)) throw NumericalError("split_error_ratio: deviation at t/2 vanished; ratio undefined");
    return full / half;
}

DualComparison dual_model_check(const OracleSystem& sys, const Temperature& temp, double t,
                                const std::vector<QubitState>& states) {
    const ReducedDynamics primary_exact(sys, temp, t, Propagator::exact);
    const ReducedDynamics primary_split(sys, temp, t, Propagator::split);
    const ReducedDynamics dual_split(sys, temp, t, Propagator::split, Model::dual);
    DualComparison out;
    for (const auto& rho0 : states) {
        const QubitState reference = primary_exact(rho0);
        out.dual_vs_primary = std::max(out.dual_vs_primary, max_entry_deviation(dual_split(rho0), reference));
        out.split_bound = std::max(out.split_bound, max_entry_deviation(primary_split(rho0), reference));
    }
    return out;
}

} // namespace qdecoh::oracle
