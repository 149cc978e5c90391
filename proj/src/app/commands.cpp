#include "qdecoh/app/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>

#include "qdecoh/app/config.hpp"
#include "qdecoh/app/experiment.hpp"
#include "qdecoh/channel.hpp"
#include "qdecoh/entanglement.hpp"
#include "qdecoh/errors.hpp"

namespace qdecoh::app {

namespace {

struct Overrides {
    std::string config_path;
    std::string out;
    std::optional<double> alpha;
    std::optional<double> eta;
    std::optional<double> omega_c;
    std::optional<double> beta;
    std::optional<double> t_end_ps;
    std::optional<std::size_t> points;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config_path, "key = value configuration file");
    cmd->add_option("--out", o.out, "output path");
    cmd->add_option("--alpha", o.alpha, "initial-state amplitude ratio (real)");
    cmd->add_option("--eta", o.eta, "dimensionless dissipation strength");
    cmd->add_option("--omega-c", o.omega_c, "bath cutoff frequency, rad/s");
    cmd->add_option("--beta", o.beta, "inverse temperature, s (omit for T = 0)");
    cmd->add_option("--t-end-ps", o.t_end_ps, "end of the time grid, ps");
    cmd->add_option("--points", o.points, "number of time points");
    cmd->add_option("--seed", o.seed, "oracle sampling seed");
}

Config resolve(const Overrides& o) {
    Config cfg = o.config_path.empty() ? Config{} : load_config(o.config_path);
    auto& e = cfg.experiment;
    if (o.alpha) e.alpha = {*o.alpha, 0.0};
    if (o.eta) e.eta = *o.eta;
    if (o.omega_c) e.omega_c = *o.omega_c;
    if (o.beta) {
        if (!(*o.beta > 0.0)) throw ConfigError("--beta must be > 0");
        e.temperature = Temperature::finite(*o.beta);
    }
    if (o.t_end_ps) e.t_end = *o.t_end_ps * 1e-12;
    if (o.points) e.n_points = *o.points;
    if (o.seed) cfg.oracle.seed = *o.seed;
    if (!o.out.empty()) e.output_path = o.out;
    e.validate();
    cfg.oracle.validate();
    return cfg;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

void close_output(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

int cmd_gfactor(const Config& cfg, std::ostream& log) {
    const auto& e = cfg.experiment;
    const OhmicBath bath(e.eta, e.omega_c);
    auto out = open_output(e.output_path);
    out << "t_seconds,t_ks,g,delta,d\n";
    for (std::size_t i = 0; i < e.n_points; ++i) {
        const double t = e.time_at(i);
        const double g = g_ohmic(bath, e.temperature, t);
        out << num(t) << ',' << num(t / kSecondsPerKs) << ',' << num(g) << ',' << num(suppression_factor(g)) << ','
            << num(max_decoherence_analytic(g)) << '\n';
    }
    close_output(out, e.output_path);
    log << "gfactor: " << e.n_points << " rows -> " << e.output_path << '\n';
    return kOk;
}

int cmd_evolve(const Config& cfg, const std::string& mode, double theta, double phi, std::ostream& log) {
    const auto& e = cfg.experiment;
    const OhmicBath bath(e.eta, e.omega_c);
    auto out = open_output(e.output_path);
    if (mode == "single") {
        const QubitParams params(e.e_j1);
        const QubitState rho0 = QubitState::pure_bloch(theta, phi);
        out << "t_seconds,t_ks,g,rho00,rho11,re_rho01,im_rho01,lambda\n";
        for (std::size_t i = 0; i < e.n_points; ++i) {
            const double t = e.time_at(i);
            const double g = g_ohmic(bath, e.temperature, t);
            const QubitState rho = evolve_single(rho0, params, g, t);
            const double lam = lambda_norm(deviation(rho, evolve_single(rho0, params, 0.0, t)));
            out << num(t) << ',' << num(t / kSecondsPerKs) << ',' << num(g) << ',' << num(rho.p00()) << ','
                << num(rho.p11()) << ',' << num(rho.p01().real()) << ',' << num(rho.p01().imag()) << ',' << num(lam)
                << '\n';
        }
    } else {
        const QubitParams p1(e.e_j1);
        const QubitParams p2(e.e_j2);
        const TwoQubitState rho0 = initial_state(InitialStateSpec(e.alpha));
        out << "t_seconds,t_ks,g1,g2,concurrence";
        for (int r = 0; r < 4; ++r)
            for (int c = r; c < 4; ++c) out << ",re_rho" << r << c << ",im_rho" << r << c;
        out << '\n';
        for (std::size_t i = 0; i < e.n_points; ++i) {
            const double t = e.time_at(i);
            const double g = g_ohmic(bath, e.temperature, t);
            const TwoQubitState rho = evolve_pair(rho0, p1, p2, g, g, t);
            out << num(t) << ',' << num(t / kSecondsPerKs) << ',' << num(g) << ',' << num(g) << ','
                << num(concurrence(rho));
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = r; c < 4; ++c) out << ',' << num(rho(r, c).real()) << ',' << num(rho(r, c).imag());
            out << '\n';
        }
    }
    close_output(out, e.output_path);
    log << "evolve (" << mode << "): " << e.n_points << " rows -> " << e.output_path << '\n';
    return kOk;
}

int cmd_experiment(const Config& cfg, std::ostream& log) {
    const auto rows = run_experiment(cfg.experiment);
    emit_csv(rows, cfg.experiment.output_path);
    log << "experiment: " << rows.size() << " rows -> " << cfg.experiment.output_path << '\n';
    return kOk;
}

int cmd_fig1(Config cfg, const std::string& out_dir, std::ostream& log, std::ostream& err) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create directory '" + out_dir + "': " + ec.message());
    bool ok = true;
    for (int a : {1, 2, 3}) {
        cfg.experiment.alpha = {static_cast<double>(a), 0.0};
        const auto rows = run_experiment(cfg.experiment);
        const std::string path = (fs::path(out_dir) / ("fig1_alpha" + std::to_string(a) + ".csv")).string();
        emit_csv(rows, path);
        const auto check = check_fig1_rows(rows, cfg.experiment.alpha);
        log << "fig1: alpha = " << a << ", C(0) = " << num(rows.front().concurrence) << ", C(end) = "
            << num(rows.back().concurrence) << ", S(end) = " << num(rows.back().s_reference) << " -> " << path
            << (check.ok ? "" : "  [INVARIANT VIOLATED]") << '\n';
        if (!check.ok) {
            err << check.diagnostic;
            ok = false;
        }
    }
    return ok ? kOk : kNumericalFailure;
}

int cmd_oracle_check(const Config& cfg, const std::string& out_path, std::ostream& log) {
    const auto report = run_oracle_check(cfg.oracle);
    auto out = open_output(out_path);
    write_oracle_csv(report, out);
    close_output(out, out_path);
    write_oracle_summary(report, cfg.oracle, log);
    log << "oracle-check: CSV -> " << out_path << '\n';
    return report.ok ? kOk : kNumericalFailure;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Short-time decoherence and disentanglement of two qubits in independent boson baths", "qdecoh"};
    app.require_subcommand(1);

    Overrides o_gfactor, o_evolve, o_experiment, o_fig1, o_oracle;
    auto* gfactor = app.add_subcommand("gfactor", "tabulate G(t), delta(t) and D(t) for the Ohmic bath");
    add_common(gfactor, o_gfactor);

    auto* evolve = app.add_subcommand("evolve", "single- or two-qubit state trajectory");
    add_common(evolve, o_evolve);
    std::string mode = "pair";
    double theta = std::numbers::pi / 2.0;
    double phi = 0.0;
    evolve->add_option("--mode", mode, "single or pair")->check(CLI::IsMember({"single", "pair"}));
    evolve->add_option("--theta", theta, "Bloch polar angle of the single-qubit initial state");
    evolve->add_option("--phi", phi, "Bloch azimuth of the single-qubit initial state");

    auto* experiment = app.add_subcommand("experiment", "concurrence time series for one alpha");
    add_common(experiment, o_experiment);

    auto* fig1 = app.add_subcommand("fig1", "concurrence vs time for alpha = 1, 2, 3; --out is a directory");
    add_common(fig1, o_fig1);

    auto* oracle_check = app.add_subcommand("oracle-check", "validate the channel against brute-force dynamics");
    add_common(oracle_check, o_oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*gfactor) return cmd_gfactor(resolve(o_gfactor), out);
        if (*evolve) return cmd_evolve(resolve(o_evolve), mode, theta, phi, out);
        if (*experiment) return cmd_experiment(resolve(o_experiment), out);
        if (*fig1) {
            const std::string dir = o_fig1.out.empty() ? "." : o_fig1.out;
            Overrides o = o_fig1;
            o.out.clear();
            return cmd_fig1(resolve(o), dir, out, err);
        }
        if (*oracle_check) {
            const std::string path = o_oracle.out.empty() ? "oracle_check.csv" : o_oracle.out;
            return cmd_oracle_check(resolve(o_oracle), path, out);
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const DimensionTooLarge& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIoFailure;
    }
    return kConfigError;
}

} // namespace qdecoh::app
