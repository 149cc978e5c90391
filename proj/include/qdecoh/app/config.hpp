#pragma once

// Flat `key = value` configuration. `#` starts a comment; blank lines are
// ignored; unknown keys and malformed numbers raise ConfigError. Units are
// rad/s for frequencies and couplings, seconds for times and beta.
//
//   eta, omega_c, beta (omit for T = 0), e_j1, e_j2, alpha, alpha_im,
//   t_start, t_end, n_points, output,
//   oracle_e_j, oracle_omega, oracle_g, oracle_n_max, oracle_t_min,
//   oracle_t_max, oracle_points, oracle_samples, seed

#include <complex>
#include <cstdint>
#include <string>

#include "qdecoh/bath.hpp"

namespace qdecoh::app {

/// Display unit of the time axis: 1 ks = 1519.29 ps.
inline constexpr double kSecondsPerKs = 1.51929e-9;

struct ExperimentConfig {
    double eta = 1e-5;
    double omega_c = 1e12;
    Temperature temperature = Temperature::zero();
    double e_j1 = 1e10;
    double e_j2 = 1e10;
    std::complex<double> alpha{1.0, 0.0};
    double t_start = 0.0;
    double t_end = 12.15e-12;
    std::size_t n_points = 200;
    std::string output_path = "qdecoh.csv";

    /// Throws ConfigError on a broken invariant.
    void validate() const;
    double time_at(std::size_t i) const;
};

struct OracleCheckConfig {
    double e_j = 1e10;
    double omega = 1e11;
    double g = 1e10;
    std::size_t n_max = 8;
    double t_min = 1.25e-13;
    double t_max = 1e-12;
    std::size_t points = 4;
    std::size_t samples = 16;
    std::uint64_t seed = 20240917;

    void validate() const;
};

struct Config {
    ExperimentConfig experiment;
    OracleCheckConfig oracle;
};

Config parse_config(const std::string& text);
Config load_config(const std::string& path);
/// Every key written with %.17g, so parse_config(serialize_config(c)) == c.
std::string serialize_config(const Config& cfg);

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);
bool operator==(const OracleCheckConfig& a, const OracleCheckConfig& b);
bool operator==(const Config& a, const Config& b);

} // namespace qdecoh::app
