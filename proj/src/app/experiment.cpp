#include "qdecoh/app/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "qdecoh/channel.hpp"
#include "qdecoh/entanglement.hpp"
#include "qdecoh/errors.hpp"

namespace qdecoh::app {

namespace {

constexpr double kFig1Equality = 1e-10;
constexpr double kFig1Slack = 1e-12;
constexpr double kChannelThreshold = 1e-6;
constexpr double kRatioLow = 6.0;
constexpr double kRatioHigh = 10.0;

std::string row_context(std::size_t i, double t) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "row %zu (t = %.6e s): ", i, t);
    return buf;
}

void put(std::ostream& out, double v, bool last) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    out << buf << (last ? '\n' : ',');
}

} // namespace

std::vector<TimeSeriesRecord> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const OhmicBath bath(cfg.eta, cfg.omega_c);
    const QubitParams q1(cfg.e_j1);
    const QubitParams q2(cfg.e_j2);
    const TwoQubitState rho0 = initial_state(InitialStateSpec(cfg.alpha));
    const double c0 = initial_concurrence(cfg.alpha);

    std::vector<TimeSeriesRecord> rows;
    rows.reserve(cfg.n_points);
    for (std::size_t i = 0; i < cfg.n_points; ++i) {
        const double t = cfg.time_at(i);
        try {
            TimeSeriesRecord r;
            r.t_seconds = t;
            r.t_ks = t / kSecondsPerKs;
            r.g1 = r.g2 = g_ohmic(bath, cfg.temperature, t);
            r.delta1 = r.delta2 = suppression_factor(r.g1);
            r.d1 = r.d2 = max_decoherence_analytic(r.g1);
            r.concurrence = concurrence(evolve_pair(rho0, q1, q2, r.g1, r.g2, t));
            r.s_reference = c0 * r.delta1 * r.delta2;
            rows.push_back(r);
        } catch (const NumericalError& e) {
            throw NumericalError(row_context(i, t) + e.what());
        }
    }
    return rows;
}

void write_csv(const std::vector<TimeSeriesRecord>& rows, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        put(out, r.t_seconds, false);
        put(out, r.t_ks, false);
        put(out, r.g1, false);
        put(out, r.g2, false);
        put(out, r.delta1, false);
        put(out, r.delta2, false);
        put(out, r.concurrence, false);
        put(out, r.s_reference, false);
        put(out, r.d1, false);
        put(out, r.d2, true);
    }
}

void emit_csv(const std::vector<TimeSeriesRecord>& rows, const std::string& path) {
    if (rows.empty()) throw std::invalid_argument("emit_csv: no rows");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_csv(rows, out);
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<TimeSeriesRecord> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw IoError("'" + path + "': unexpected CSV header");
    std::vector<TimeSeriesRecord> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        TimeSeriesRecord r;
        double* fields[] = {&r.t_seconds, &r.t_ks,        &r.g1,          &r.g2, &r.delta1,
                            &r.delta2,    &r.concurrence, &r.s_reference, &r.d1, &r.d2};
        std::istringstream ls(line);
        std::string cell;
        std::size_t k = 0;
        while (std::getline(ls, cell, ',')) {
            if (k >= 10) throw IoError("'" + path + "': too many columns");
            *fields[k++] = std::strtod(cell.c_str(), nullptr);
        }
        if (k != 10) throw IoError("'" + path + "': too few columns");
        rows.push_back(r);
    }
    return rows;
}

Fig1Check check_fig1_rows(const std::vector<TimeSeriesRecord>& rows, std::complex<double> alpha) {
    Fig1Check check;
    std::ostringstream diag;
    diag.precision(17);
    auto fail = [&](std::size_t i, const std::string& what) {
        check.ok = false;
        diag << "row " << i << ": " << what << '\n';
    };
    const bool bell = std::abs(std::abs(alpha) - 1.0) <= 1e-15;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (i > 0 && r.concurrence > rows[i - 1].concurrence) fail(i, "concurrence increased");
        if (i > 0 && r.s_reference > rows[i - 1].s_reference) fail(i, "s_reference increased");
        if (r.concurrence > r.s_reference + kFig1Slack) fail(i, "concurrence exceeds s_reference");
        const double gap = std::abs(r.concurrence - r.s_reference);
        if (bell && gap > kFig1Equality) fail(i, "alpha = 1 but |C - S| > 1e-10");
        if (!bell && r.t_seconds > 0.0 && !(r.concurrence < r.s_reference)) fail(i, "C < S does not hold strictly");
    }
    check.diagnostic = diag.str();
    return check;
}

OracleReport run_oracle_check(const OracleCheckConfig& cfg) {
    cfg.validate();
    const oracle::OracleSystem sys(cfg.e_j, {oracle::FockMode(cfg.omega, cfg.g, cfg.n_max)});
    const Temperature temp = Temperature::zero();
    const auto states = oracle::random_pure_states(cfg.samples, cfg.seed);
    const double small_t = 0.1 / cfg.omega;

    OracleReport report;
    for (std::size_t i = 0; i < cfg.points; ++i) {
        const double frac = cfg.points == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(cfg.points - 1);
        const double t = cfg.t_min * std::pow(cfg.t_max / cfg.t_min, frac);
        OracleRow row;
        row.t = t;
        row.split_vs_exact = oracle::split_deviation(sys, temp, t, states);
        row.channel_vs_split = oracle::channel_discrepancy(sys, temp, t, cfg.samples, cfg.seed);
        const double half = oracle::split_deviation(sys, temp, 0.5 * t, states);
        row.error_ratio = half > kSplitRoundingFloor ? row.split_vs_exact / half : std::numeric_limits<double>::quiet_NaN();
        report.rows.push_back(row);

        char buf[160];
        if (t <= small_t * (1.0 + 1e-12) && row.channel_vs_split > kChannelThreshold) {
            std::snprintf(buf, sizeof buf, "t = %.6e s: channel-vs-split %.3e > 1e-6", t, row.channel_vs_split);
            report.violations.emplace_back(buf);
        }
        if (t <= small_t * (1.0 + 1e-12) && !std::isnan(row.error_ratio) &&
            (row.error_ratio < kRatioLow || row.error_ratio > kRatioHigh)) {
            std::snprintf(buf, sizeof buf, "t = %.6e s: split error ratio %.4f outside [6, 10]", t, row.error_ratio);
            report.violations.emplace_back(buf);
        }
    }
    report.ok = report.violations.empty();
    return report;
}

void write_oracle_csv(const OracleReport& report, std::ostream& out) {
    out << "t_seconds,split_vs_exact,channel_vs_split,error_ratio_half\n";
    for (const auto& r : report.rows) {
        put(out, r.t, false);
        put(out, r.split_vs_exact, false);
        put(out, r.channel_vs_split, false);
        put(out, r.error_ratio, true);
    }
}

void write_oracle_summary(const OracleReport& report, const OracleCheckConfig& cfg, std::ostream& out) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "oracle: E_J = %.4e, omega = %.4e, g = %.4e, n_max = %zu, samples = %zu, seed = %llu\n",
                  cfg.e_j, cfg.omega, cfg.g, cfg.n_max, cfg.samples, static_cast<unsigned long long>(cfg.seed));
    out << buf;
    for (const auto& r : report.rows) {
        std::snprintf(buf, sizeof buf, "  t = %.4e s  split-vs-exact = %.3e  channel-vs-split = %.3e  ratio = %.4f\n", r.t,
                      r.split_vs_exact, r.channel_vs_split, r.error_ratio);
        out << buf;
    }
    for (const auto& v : report.violations) out << "  VIOLATION " << v << '\n';
    out << (report.ok ? "oracle-check: all thresholds met\n" : "oracle-check: threshold violated\n");
}

} // namespace qdecoh::app
