#include "qdecoh/app/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "qdecoh/errors.hpp"

namespace qdecoh::app {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
        throw ConfigError("config: key '" + key + "' expects a finite number, got '" + value + "'");
    }
    return out;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const char* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("config: key '" + key + "' expects a non-negative integer, got '" + value + "'");
    }
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError("config: " + what);
}

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

} // namespace

void ExperimentConfig::validate() const {
    require(positive(eta), "eta must be > 0");
    require(positive(omega_c), "omega_c must be > 0");
    require(std::isfinite(e_j1) && std::isfinite(e_j2), "e_j1, e_j2 must be finite");
    require(std::isfinite(alpha.real()) && std::isfinite(alpha.imag()), "alpha must be finite");
    require(t_start >= 0.0 && std::isfinite(t_start), "t_start must be >= 0");
    require(t_end > t_start && std::isfinite(t_end), "t_end must exceed t_start");
    require(n_points >= 2, "n_points must be >= 2");
    require(!output_path.empty(), "output must not be empty");
}

double ExperimentConfig::time_at(std::size_t i) const {
    if (i + 1 == n_points) return t_end;
    return t_start + (t_end - t_start) * static_cast<double>(i) / static_cast<double>(n_points - 1);
}

void OracleCheckConfig::validate() const {
    require(std::isfinite(e_j), "oracle_e_j must be finite");
    require(positive(omega), "oracle_omega must be > 0");
    require(std::isfinite(g), "oracle_g must be finite");
    require(n_max >= 1, "oracle_n_max must be >= 1");
    require(positive(t_min) && t_max >= t_min && std::isfinite(t_max), "need 0 < oracle_t_min <= oracle_t_max");
    require(points >= 1, "oracle_points must be >= 1");
    require(samples >= 4, "oracle_samples must be >= 4");
}

Config parse_config(const std::string& text) {
    Config cfg;
    auto& e = cfg.experiment;
    auto& o = cfg.oracle;
    using Setter = std::function<void(const std::string&, const std::string&)>;
    auto num = [](double& field) -> Setter {
        return [&field](const std::string& k, const std::string& v) { field = parse_double(k, v); };
    };
    auto count = [](std::size_t& field) -> Setter {
        return [&field](const std::string& k, const std::string& v) { field = parse_unsigned(k, v); };
    };
    double alpha_re = e.alpha.real();
    double alpha_im = e.alpha.imag();
    const std::map<std::string, Setter> setters{
        {"eta", num(e.eta)},
        {"omega_c", num(e.omega_c)},
        {"beta", [&e](const std::string& k, const std::string& v) {
             const double beta = parse_double(k, v);
             require(beta > 0.0, "beta must be > 0 (omit the key for zero temperature)");
             e.temperature = Temperature::finite(beta);
         }},
        {"e_j1", num(e.e_j1)},
        {"e_j2", num(e.e_j2)},
        {"alpha", num(alpha_re)},
        {"alpha_im", num(alpha_im)},
        {"t_start", num(e.t_start)},
        {"t_end", num(e.t_end)},
        {"n_points", count(e.n_points)},
        {"output", [&e](const std::string&, const std::string& v) { e.output_path = v; }},
        {"oracle_e_j", num(o.e_j)},
        {"oracle_omega", num(o.omega)},
        {"oracle_g", num(o.g)},
        {"oracle_n_max", count(o.n_max)},
        {"oracle_t_min", num(o.t_min)},
        {"oracle_t_max", num(o.t_max)},
        {"oracle_points", count(o.points)},
        {"oracle_samples", count(o.samples)},
        {"seed", [&o](const std::string& k, const std::string& v) { o.seed = parse_unsigned(k, v); }},
    };

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (value.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty value for '" + key + "'");
        it->second(key, value);
    }
    e.alpha = {alpha_re, alpha_im};
    e.validate();
    o.validate();
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const Config& cfg) {
    const auto& e = cfg.experiment;
    const auto& o = cfg.oracle;
    std::ostringstream out;
    out << "# qdecoh configuration\n";
    out << "eta = " << fmt(e.eta) << '\n';
    out << "omega_c = " << fmt(e.omega_c) << '\n';
    if (!e.temperature.is_zero()) out << "beta = " << fmt(e.temperature.beta()) << '\n';
    out << "e_j1 = " << fmt(e.e_j1) << '\n';
    out << "e_j2 = " << fmt(e.e_j2) << '\n';
    out << "alpha = " << fmt(e.alpha.real()) << '\n';
    out << "alpha_im = " << fmt(e.alpha.imag()) << '\n';
    out << "t_start = " << fmt(e.t_start) << '\n';
    out << "t_end = " << fmt(e.t_end) << '\n';
    out << "n_points = " << e.n_points << '\n';
    out << "output = " << e.output_path << '\n';
    out << "oracle_e_j = " << fmt(o.e_j) << '\n';
    out << "oracle_omega = " << fmt(o.omega) << '\n';
    out << "oracle_g = " << fmt(o.g) << '\n';
    out << "oracle_n_max = " << o.n_max << '\n';
    out << "oracle_t_min = " << fmt(o.t_min) << '\n';
    out << "oracle_t_max = " << fmt(o.t_max) << '\n';
    out << "oracle_points = " << o.points << '\n';
    out << "oracle_samples = " << o.samples << '\n';
    out << "seed = " << o.seed << '\n';
    return out.str();
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
    return a.eta == b.eta && a.omega_c == b.omega_c && a.temperature == b.temperature && a.e_j1 == b.e_j1 &&
           a.e_j2 == b.e_j2 && a.alpha == b.alpha && a.t_start == b.t_start && a.t_end == b.t_end &&
           a.n_points == b.n_points && a.output_path == b.output_path;
}

bool operator==(const OracleCheckConfig& a, const OracleCheckConfig& b) {
    return a.e_j == b.e_j && a.omega == b.omega && a.g == b.g && a.n_max == b.n_max && a.t_min == b.t_min &&
           a.t_max == b.t_max && a.points == b.points && a.samples == b.samples && a.seed == b.seed;
}

bool operator==(const Config& a, const Config& b) { return a.experiment == b.experiment && a.oracle == b.oracle; }

} // namespace qdecoh::app
