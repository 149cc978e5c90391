#pragma once

// Brute-force reference dynamics: one qubit coupled to a few truncated
// boson modes, H = -E_J/2 sigma_x + sum w b^dagger b + sigma_z sum (g^* b + g b^dagger).
// Operators act on C^2 (x) Fock_1 (x) ... with the qubit as the left factor
// and the qubit written in the sigma_z basis. Reduced states come back in
// the energy eigenbasis used by QubitState.

#include <complex>
#include <cstdint>
#include <vector>

#include "qdecoh/bath.hpp"
#include "qdecoh/qmath/complex_matrix.hpp"
#include "qdecoh/states.hpp"

namespace qdecoh::oracle {

inline constexpr std::size_t kMaxModes = 4;
inline constexpr double kThermalTailTolerance = 1e-6;
inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct FockMode {
    double omega;               // rad/s, > 0
    std::complex<double> g;     // rad/s
    std::size_t n_max;          // highest kept occupation, >= 1

    FockMode(double omega_, std::complex<double> g_, std::size_t n_max_);

    /// Thermal weight beyond n_max, exp(-beta w (n_max + 1)); 0 at T = 0.
    double thermal_tail(const Temperature& temp) const;
};

class OracleSystem {
public:
    OracleSystem(double e_j, std::vector<FockMode> modes);

    double e_j() const noexcept { return e_j_; }
    const std::vector<FockMode>& modes() const noexcept { return modes_; }
    std::size_t bath_dim() const noexcept { return bath_dim_; }
    std::size_t total_dim() const noexcept { return 2 * bath_dim_; }

    /// Throws ConfigError when some mode's thermal tail exceeds 1e-6.
    void require_truncation(const Temperature& temp) const;

    /// G(t) of the same modes, 0 without modes.
    double exponent(const Temperature& temp, double t) const;

private:
    double e_j_;
    std::vector<FockMode> modes_;
    std::size_t bath_dim_;
};

enum class Model { primary, dual };
enum class Propagator { exact, split };

ComplexMatrix build_hamiltonian(const OracleSystem& sys);
/// -E_J/2 sigma_z + sum w b^dagger b + sigma_x sum (g^* b + g b^dagger).
ComplexMatrix dual_model_hamiltonian(const OracleSystem& sys);

/// Qubit part alone (2x2) and the bath-plus-coupling part (total_dim).
ComplexMatrix system_hamiltonian(const OracleSystem& sys, Model model = Model::primary);
ComplexMatrix bath_coupling_hamiltonian(const OracleSystem& sys, Model model = Model::primary);

/// Product of truncated Gibbs states, renormalized; vacuum at T = 0.
ComplexMatrix thermal_bath_state(const OracleSystem& sys, const Temperature& temp);

/// Columns are the qubit energy eigenstates written in the computational basis.
ComplexMatrix eigenbasis(Model model);

/// Reduced dynamics for a fixed (system, temperature, t). Propagator and bath
/// state are built once and reused across initial states.
class ReducedDynamics {
public:
    ReducedDynamics(const OracleSystem& sys, const Temperature& temp, double t, Propagator prop,
                    Model model = Model::primary);

    /// rho0 and the result are in the model's qubit energy eigenbasis.
    QubitState operator()(const QubitState& rho0) const;

private:
    ComplexMatrix u_;
    ComplexMatrix u_dag_;
    std::vector<double> weights_;
    ComplexMatrix basis_;
    std::size_t bath_dim_;
};

QubitState exact_evolve(const OracleSystem& sys, const QubitState& rho0, const Temperature& temp, double t);
QubitState split_evolve(const OracleSystem& sys, const QubitState& rho0, const Temperature& temp, double t);

/// Largest entrywise |a - b|.
double max_entry_deviation(const QubitState& a, const QubitState& b);

/// Uniform pure states on the Bloch sphere from a fixed seed.
std::vector<QubitState> random_pure_states(std::size_t count, std::uint64_t seed);

/// Max entrywise gap between split_evolve and evolve_single fed with
/// G = g_discrete of the same modes, over `samples` >= 4 random pure states.
double channel_discrepancy(const OracleSystem& sys, const Temperature& temp, double t, std::size_t samples,
                           std::uint64_t seed = kDefaultSeed);

/// Max entrywise gap between split and exact reduced dynamics over the states.
double split_deviation(const OracleSystem& sys, const Temperature& temp, double t,
                       const std::vector<QubitState>& states);

/// split_deviation(t) / split_deviation(t/2); about 8 for a third-order local error.
double split_error_ratio(const OracleSystem& sys, const Temperature& temp, double t,
                         const std::vector<QubitState>& states);

struct DualComparison {
    double dual_vs_primary = 0.0;   // split dual dynamics vs exact primary dynamics
    double split_bound = 0.0;       // split vs exact, primary model
};

/// Runs the dual model (with initial states expressed in its own energy
/// eigenbasis, i.e. Hadamard-rotated) under the split propagator and
/// compares with the exact primary reduced dynamics.
DualComparison dual_model_check(const OracleSystem& sys, const Temperature& temp, double t,
                                const std::vector<QubitState>& states);

} // namespace qdecoh::oracle
