// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qdecoh/app/experiment.hpp"
#include "qdecoh/bath.hpp"
#include "qdecoh/channel.hpp"
#include "qdecoh/entanglement.hpp"
#include "qdecoh/kernels/kernels.hpp"
#include "qdecoh/oracle.hpp"
#include "qdecoh/qmath/linalg.hpp"

using namespace qdecoh;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Outcome bell_identity() {
    app::ExperimentConfig cfg;
    cfg.alpha = 1.0;
    double worst = 0.0;
    for (const auto& r : app::run_experiment(cfg)) worst = std::max(worst, std::abs(r.concurrence - r.delta1 * r.delta2));
    return {worst <= 1e-10, fmt("max |C - d1 d2| = %.3e over 200 points", worst)};
}

Outcome sub_maximal() {
    bool ok = true;
    std::string detail;
    for (bool warm : {false, true}) {
        for (double alpha : {2.0, 3.0}) {
            app::ExperimentConfig cfg;
            cfg.alpha = alpha;
            if (warm) cfg.temperature = Temperature::finite(1e-12);
            const auto rows = app::run_experiment(cfg);
            const double c0_err = std::abs(rows.front().concurrence - 2 * alpha / (1 + alpha * alpha));
            double min_gap = INFINITY;
            for (const auto& r : rows) {
                if (r.t_seconds > 0.0) min_gap = std::min(min_gap, r.s_reference - r.concurrence);
            }
            ok = ok && c0_err <= 1e-10 && min_gap > 0.0;
            detail += fmt("alpha=%g: |C(0)-C0| = %.1e, min(S-C) = %.2e", alpha, c0_err, min_gap);
            detail += warm ? " at beta = 1e-12 s; " : " at T = 0; ";
        }
    }
    return {ok, detail};
}

Outcome closed_form_g() {
    const OhmicBath bath(1e-5, 1e12);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double t = 1e-14 * std::pow(1e3, i / 49.0);
        const double exact = 0.5 * bath.eta * std::log1p(std::pow(bath.omega_c * t, 2));
        worst = std::max(worst, std::abs(g_ohmic(bath, Temperature::zero(), t) - exact) / exact);
    }
    return {worst <= 1e-8, fmt("max relative error = %.3e on 50 log-spaced t", worst)};
}

Outcome decoherence_measure() {
    double worst = 0.0;
    for (double g : {1e-5, 1e-2, 0.25, 1.0}) {
        const double numeric = max_decoherence_numeric(QubitParams(1e10), g, 5e-12, 128);
        worst = std::max(worst, std::abs(numeric - max_decoherence_analytic(g)));
    }
    return {worst <= 1e-4, fmt("max |D_grid - D| = %.3e at grid 128", worst)};
}

Outcome oracle_convergence() {
    const double omega = 1e11;
    const oracle::OracleSystem sys(1e10, {oracle::FockMode(omega, 1e10, 8)});
    const auto states = oracle::random_pure_states(16, oracle::kDefaultSeed);
    double worst_disc = 0.0, lo = INFINITY, hi = 0.0;
    for (const Temperature& temp : {Temperature::zero(), Temperature::finite(2.0 / omega)}) {
        sys.require_truncation(temp);
        for (double t : {0.1 / omega, 0.05 / omega, 0.025 / omega}) {
            worst_disc = std::max(worst_disc, oracle::channel_discrepancy(sys, temp, t, 16));
            const double ratio = oracle::split_error_ratio(sys, temp, t, states);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
    }
    const bool ok = worst_disc <= 1e-6 && lo >= 6.0 && hi <= 10.0;
    return {ok, fmt("max discrepancy = %.2e, split ratio in [%.4f, %.4f], dim 18", worst_disc, lo, hi)};
}

TwoQubitState projector(const ComplexMatrix& v) { return TwoQubitState::from_matrix(v * v.adjoint()); }

Outcome concurrence_suite() {
    const double s = std::numbers::sqrt2 / 2.0;
    double worst = 0.0;
    double worst_oracle = 0.0;
    // The brute-force spectrum of rho * rho~ is only used where its square roots are well conditioned.
    auto check = [&](const TwoQubitState& rho, double expected, bool with_oracle) {
        worst = std::max(worst, std::abs(concurrence(rho) - expected));
        if (with_oracle) worst_oracle = std::max(worst_oracle, std::abs(concurrence_from_spin_flip_spectrum(rho) - expected));
    };
    for (const auto& v : {ComplexMatrix::from_rows({{s}, {0}, {0}, {s}}), ComplexMatrix::from_rows({{s}, {0}, {0}, {-s}}),
                          ComplexMatrix::from_rows({{0}, {s}, {s}, {0}}), ComplexMatrix::from_rows({{0}, {s}, {-s}, {0}})}) {
        check(projector(v), 1.0, true);
    }
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n01;
    for (int i = 0; i < 20; ++i) {
        auto ket = [&] {
            ComplexMatrix k(2, 1);
            k(0, 0) = {n01(rng), n01(rng)};
            k(1, 0) = {n01(rng), n01(rng)};
            const double norm = std::sqrt(std::norm(k(0, 0)) + std::norm(k(1, 0)));
            return (1.0 / norm) * k;
        };
        check(projector(kron(ket(), ket())), 0.0, false);
    }
    const auto phi = ComplexMatrix::from_rows({{s}, {0}, {0}, {s}});
    for (double p : {0.2, 1.0 / 3.0, 0.5, 0.9}) {
        const auto w = TwoQubitState::from_matrix(p * (phi * phi.adjoint()) + (0.25 * (1 - p)) * ComplexMatrix::identity(4));
        check(w, std::max(0.0, (3 * p - 1) / 2), true);
    }
    return {worst <= 1e-10 && worst_oracle <= 1e-10,
            fmt("max error = %.3e (Bell, product, Werner); brute-force oracle on Bell and Werner = %.3e", worst,
                worst_oracle)};
}

Outcome channel_physicality() {
    bool ok = true;
    for (double g : {0.0, 1e-5, 0.25, 2.0}) ok = ok && cptp_check(QubitParams(1e10), g, 1e-12).ok;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::normal_distribution<double> n01;
    auto density = [&](std::size_t dim) {
        ComplexMatrix rho(dim, dim);
        const std::size_t rank = 1 + static_cast<std::size_t>(u(rng) * dim);
        for (std::size_t k = 0; k < rank; ++k) {
            ComplexMatrix v(dim, 1);
            double norm = 0.0;
            for (std::size_t i = 0; i < dim; ++i) norm += std::norm(v(i, 0) = {n01(rng), n01(rng)});
            rho += (1.0 / (norm * static_cast<double>(rank))) * (v * v.adjoint());
        }
        return rho;
    };
    double worst_trace = 0.0, worst_herm = 0.0, min_eig = INFINITY;
    for (int i = 0; i < 1000; ++i) {
        const double g1 = 2.0 * u(rng), g2 = 2.0 * u(rng), t = 1e-11 * u(rng);
        const QubitParams p1(2e10 * (u(rng) - 0.5)), p2(2e10 * (u(rng) - 0.5));
        const auto single = evolve_single(QubitState::from_matrix(density(2)), p1, g1, t).matrix();
        const auto pair = evolve_pair(TwoQubitState::from_matrix(density(4)), p1, p2, g1, g2, t).matrix();
        for (const auto* m : {&single, &pair}) {
            worst_trace = std::max(worst_trace, std::abs(m->trace() - 1.0));
            worst_herm = std::max(worst_herm, m->hermiticity_defect());
            min_eig = std::min(min_eig, hermitian_eigenvalues(*m).front());
        }
    }
    ok = ok && worst_trace <= 1e-12 && worst_herm == 0.0 && min_eig >= -1e-10;
    return {ok, fmt("CPTP at 4 G values; trace defect %.1e, min eigenvalue %.1e over 1000 inputs", worst_trace, min_eig)};
}

Outcome dual_model() {
    const double omega = 1e11;
    const oracle::OracleSystem sys(1e10, {oracle::FockMode(omega, 1e10, 8)});
    const auto had = kron(pauli::hadamard(), ComplexMatrix::identity(sys.bath_dim()));
    const double h_gap = max_abs_diff(oracle::dual_model_hamiltonian(sys), had * oracle::build_hamiltonian(sys) * had);
    const auto states = oracle::random_pure_states(16, oracle::kDefaultSeed);
    bool ok = h_gap <= 1e-14 * oracle::build_hamiltonian(sys).max_abs();
    double worst_ratio = 0.0;
    for (double t : {0.1 / omega, 0.05 / omega}) {
        const auto cmp = oracle::dual_model_check(sys, Temperature::zero(), t, states);
        ok = ok && cmp.split_bound > 0.0 && cmp.dual_vs_primary <= cmp.split_bound * (1 + 1e-6) + 1e-14;
        worst_ratio = std::max(worst_ratio, cmp.dual_vs_primary / cmp.split_bound);
    }
    return {ok, fmt("|H_dual - (H x I) H (H x I)| = %.1e; dual/split-error ratio <= %.6f", h_gap, worst_ratio)};
}

} // namespace

int main() {
    std::printf("kernels: %s\n", std::string(kernels::isa_name(kernels::active_isa())).c_str());
    const std::vector<Criterion> criteria{
        {1, "Bell identity C = d1 d2 (alpha = 1)", 10, bell_identity},
        {2, "sub-maximal entanglement C < S (alpha = 2, 3)", 20, sub_maximal},
        {3, "closed-form Ohmic G at T = 0", 5, closed_form_g},
        {4, "decoherence measure D = (1 - e^{-4G})/2", 30, decoherence_measure},
        {5, "oracle convergence and split-operator order", 60, oracle_convergence},
        {6, "concurrence unit suite", 1, concurrence_suite},
        {7, "channel physicality", 10, channel_physicality},
        {8, "dual model agreement", 60, dual_model},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome res;
        try {
            res = c.run();
        } catch (const std::exception& e) {
            res = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = res.ok && secs < c.budget_seconds;
        failures += ok ? 0 : 1;
        std::printf("%s [%d] %s: %s (%.2f s, budget %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.name, res.detail.c_str(),
                    secs, c.budget_seconds);
    }
    return failures;
}
