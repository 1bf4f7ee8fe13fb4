// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "resinfo/info/descent.hpp"
#include "resinfo/info/gibbs.hpp"
#include "resinfo/info/ib.hpp"
#include "resinfo/oracle/exact.hpp"
#include "resinfo/oracle/instance.hpp"
#include "resinfo/oracle/posterior.hpp"
#include "resinfo/spectral/marchenko_pastur.hpp"
#include "resinfo/sweep/config.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace resinfo;
using info::ProblemParams;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failures; the first few go into the detail text.
struct Checker {
    Outcome out;
    int failures = 0;
    std::ostringstream notes;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        out.pass = false;
        if (failures++ < 4) notes << (failures > 1 ? "; " : "") << what;
    }

    Outcome finish(const std::string& summary) {
        out.detail = summary;
        if (failures) out.detail += " | " + std::to_string(failures) + " failed: " + notes.str();
        return out;
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

spectral::PopulationSpectrum population(double r) {
    return r == 1.0 ? spectral::PopulationSpectrum::isotropic() : spectral::TwoScale(r).population();
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Outcome closed_form_mp() {
    Checker c;
    const auto m = spectral::mp_isotropic(1.0);
    const double d = m.density(2.0);
    c.require(std::abs(d - 1.0 / (2.0 * std::numbers::pi)) <= 1e-12, "density(2) = " + fmt(d));
    c.require(m.bands().size() == 1 && m.bands()[0].lower() == 0.0 && m.bands()[0].upper() == 4.0, "edges not (0, 4)");
    const double atom = spectral::mp_isotropic(0.5).atom_at_zero();
    c.require(atom == 0.5, "atom at n=0.5 is " + fmt(atom));
    return c.finish("density(2) - 1/(2 pi) = " + fmt(d - 1.0 / (2.0 * std::numbers::pi)) + ", atom " + fmt(atom));
}

Outcome silverstein() {
    Checker c;
    const auto pop = spectral::PopulationSpectrum::isotropic();
    const auto p = spectral::solve_silverstein({-1.0, 0.0}, pop, 1.0);
    const double root = (std::sqrt(5.0) - 1.0) / 2.0;
    c.require(std::abs(p.v - spectral::cplx(root, 0.0)) <= 1e-10, "v(-1) = " + fmt(p.v.real()));
    double worst = 0.0;
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            const spectral::cplx z{-2.0 + 8.0 * i / 15.0, std::pow(10.0, -6.0 + 8.0 * j / 15.0)};
            const auto q = spectral::solve_silverstein(z, pop, 1.0);
            const double r = spectral::silverstein_residual(z, q.v, pop, 1.0);
            worst = std::max(worst, r);
            c.require(r < 1e-10 && q.v.imag() > 0.0, "z = " + fmt(z.real()) + "+" + fmt(z.imag()) + "i");
        }
    return c.finish("|v - (sqrt5-1)/2| = " + fmt(std::abs(p.v - spectral::cplx(root, 0.0))) + ", max residual " +
                    fmt(worst) + " on 256 points");
}

Outcome spectral_mass() {
    Checker c;
    double worst = 0.0;
    for (double r : {1.0, 0.1, 0.01})
        for (double n : {0.25, 0.5, 1.0, 2.0, 4.0}) {
            const double mass = spectral::total_mass(spectral::limiting_measure(population(r), n));
            worst = std::max(worst, std::abs(mass - 1.0));
            c.require(std::abs(mass - 1.0) <= 1e-3, "r=" + fmt(r) + " n=" + fmt(n) + " mass " + fmt(mass));
        }
    return c.finish("max |mass - 1| = " + fmt(worst) + " over 15 measures");
}

Outcome two_path() {
    Checker c;
    double worst = 0.0;
    for (double r : {1.0, 0.1})
        for (std::size_t N : {256, 512, 1024}) {
            const auto inst = oracle::sample_design(512, N, population(r), 2024 + N);
            const auto m = inst.empirical_measure();
            const ProblemParams p(inst.n(), 1.0);
            auto compare = [&](double a, double b, const std::string& what) {
                worst = std::max(worst, std::abs(a - b));
                c.require(std::abs(a - b) <= 1e-12, what + " differs by " + fmt(std::abs(a - b)));
            };
            for (double psi_c : {1e-4, 1e-2, 0.1, 0.5, 2.0}) {
                const auto a = oracle::exact_ib_info(inst, p, psi_c);
                const auto b = info::ib_point(m, p, psi_c);
                compare(a.relevant / 512, b.relevant, "ib relevant");
                compare(a.residual / 512, b.residual, "ib residual");
            }
            for (double lambda : {1e-6, 0.1, 1.0})
                for (double tau : {1e-3, 0.1, 10.0}) {
                    const auto a = oracle::exact_gibbs_info(inst, p, lambda, tau);
                    const auto b = info::gibbs_point(m, p, {lambda, tau});
                    compare(a.relevant / 512, b.relevant, "gibbs relevant");
                    compare(a.residual / 512, b.residual, "gibbs residual");
                }
        }
    return c.finish("max discrepancy " + fmt(worst) + " (P=512, N in {256, 512, 1024})");
}

Outcome convergence() {
    Checker c;
    const char* names[5] = {"available", "ib relevant", "ib residual", "gibbs relevant", "gibbs residual"};
    double worst = 0.0;
    for (double n : {0.5, 1.0, 2.0}) {
        const ProblemParams p(n, 1.0);
        const auto m = spectral::mp_isotropic(n);
        const auto ib = info::ib_point(m, p, 0.1);
        const auto g = info::gibbs_point(m, p, {1e-6, 0.1});
        const double limit[5] = {info::available_info(m, p), ib.relevant, ib.residual, g.relevant, g.residual};
        double error[2][5];
        const std::size_t sizes[2] = {1024, 4096};
        for (int s = 0; s < 2; ++s) {
            const std::size_t P = sizes[s];
            double sum[5] = {0, 0, 0, 0, 0};
            for (std::uint64_t seed = 1; seed <= 8; ++seed) {
                const auto inst = oracle::sample_isotropic_spectrum(P, static_cast<std::size_t>(n * P), 7919 * seed + P);
                const auto a = oracle::exact_ib_info(inst, p, 0.1);
                const auto b = oracle::exact_gibbs_info(inst, p, 1e-6, 0.1);
                const double v[5] = {oracle::exact_available_info(inst, p), a.relevant, a.residual, b.relevant,
                                     b.residual};
                for (int q = 0; q < 5; ++q) sum[q] += v[q] / static_cast<double>(P);
            }
            for (int q = 0; q < 5; ++q) error[s][q] = std::abs(sum[q] / 8.0 - limit[q]);
        }
        for (int q = 0; q < 5; ++q) {
            worst = std::max(worst, error[1][q]);
            c.require(error[1][q] <= 2e-2, std::string(names[q]) + " n=" + fmt(n) + " error " + fmt(error[1][q]));
            c.require(error[1][q] < error[0][q], std::string(names[q]) + " n=" + fmt(n) + " error grew " +
                                                     fmt(error[0][q]) + " -> " + fmt(error[1][q]));
        }
    }
    return c.finish("max error at P=4096 " + fmt(worst) + " nats");
}

Outcome dominance() {
    Checker c;
    int matched = 0;
    for (double n : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const auto m = spectral::mp_isotropic(n);
        const ProblemParams p(n, 1.0);
        const double avail = info::available_info(m, p);
        for (double x : {1e-3, 1e-2, 0.1, 1.0, 10.0}) {
            const auto ib = info::ib_point(m, p, x);
            c.require(ib.relevant <= avail + 1e-9, "ib relevant above available at n=" + fmt(n));
            for (double lambda : {1e-6, 1e-2, 1.0}) {
                const auto g = info::gibbs_point(m, p, {lambda, x});
                c.require(g.relevant <= avail + 1e-9, "gibbs relevant above available at n=" + fmt(n));
                const double mu = g.relevant / avail;
                if (!(mu > 0.0 && mu < 1.0)) continue;
                const double ib_res = info::ib_point(m, p, info::solve_cutoff(m, p, mu)).residual;
                ++matched;
                c.require(g.residual >= ib_res - 1e-9, "gibbs below IB at n=" + fmt(n) + " tau=" + fmt(x) +
                                                           " lambda=" + fmt(lambda));
            }
        }
    }
    return c.finish(std::to_string(matched) + " matched-mu comparisons over the 5x5x3 grid");
}

Outcome zero_temperature() {
    Checker c;
    const double mu = 0.999;
    double worst = 0.0;
    for (double n : {0.5, 1.0, 2.0}) {
        const auto m = spectral::mp_isotropic(n);
        const ProblemParams p(n, 1.0);
        const double cut = info::solve_cutoff(m, p, mu).psi_c;
        const double a_cut = info::asymptotic_cutoff(m, p, mu);
        worst = std::max(worst, rel(a_cut, cut));
        c.require(rel(a_cut, cut) <= 0.02, "cutoff n=" + fmt(n) + " off by " + fmt(100 * rel(a_cut, cut)) + "%");
        for (double lambda : {1e-6, 1.0}) {
            const double tau = info::solve_temperature(m, p, lambda, mu).tau;
            const double a_tau = info::asymptotic_temperature(m, p, lambda, mu);
            worst = std::max(worst, rel(a_tau, tau));
            c.require(rel(a_tau, tau) <= 0.02, "temperature n=" + fmt(n) + " lambda=" + fmt(lambda) + " off by " +
                                                    fmt(100 * (a_tau - tau) / tau) + "%");
            const double eta = info::efficiency(m, p, lambda, mu).eta;
            const double a_eta = info::asymptotic_efficiency(m, p, lambda, mu);
            worst = std::max(worst, rel(a_eta, eta));
            c.require(rel(a_eta, eta) <= 0.02, "efficiency n=" + fmt(n) + " lambda=" + fmt(lambda) + " off by " +
                                                   fmt(100 * rel(a_eta, eta)) + "%");
        }
        const double at_star = info::asymptotic_efficiency(m, p, p.lambda_star(), mu);
        c.require(std::abs(at_star - 1.0) <= 1e-12, "efficiency at lambda* = " + fmt(at_star));
        for (double lambda : {1e-6, 1e-3, 0.1, p.lambda_star(), 1.0, 10.0}) {
            const double gap = info::jensen_gap(m, p, lambda);
            c.require(gap >= -1e-12, "Jensen gap " + fmt(gap) + " at n=" + fmt(n));
        }
    }
    return c.finish("max relative deviation " + fmt(100 * worst) + "%");
}

std::vector<double> residual_curve(double r, const std::vector<double>& ns) {
    const auto pop = population(r);
    const auto sweep = info::residual_sweep([&](double n) { return spectral::limiting_measure(pop, n); }, 1.0,
                                            1e-6, 0.8, ns);
    std::vector<double> out;
    for (const auto& pt : sweep) out.push_back(pt.ib.residual);
    return out;
}

Outcome double_descent() {
    Checker c;
    const auto ns = sweep::log_grid(0.05, 100.0, 64);
    const auto maxima = info::interior_maxima(ns, residual_curve(1.0, ns));
    std::string where;
    for (const auto& e : maxima) where += " n=" + fmt(e.x);
    c.require(maxima.size() == 1, std::to_string(maxima.size()) + " interior maxima");
    c.require(!maxima.empty() && maxima[0].x >= 0.7 && maxima[0].x <= 1.5, "maximum outside [0.7, 1.5]");
    return c.finish("isotropic IB residual maxima at" + where);
}

Outcome triple_descent() {
    Checker c;
    const auto ns = sweep::log_grid(0.1, 100.0, 64);
    const auto aniso = info::interior_maxima(ns, residual_curve(0.01, ns));
    const auto iso = info::interior_maxima(ns, residual_curve(1.0, ns));
    std::string where;
    for (const auto& e : aniso) where += " n=" + fmt(e.x);
    c.require(aniso.size() >= 2, std::to_string(aniso.size()) + " interior maxima");
    c.require(!iso.empty(), "no isotropic maximum");
    if (!aniso.empty() && !iso.empty())
        c.require(aniso[0].x < iso[0].x, "first maximum not before the isotropic one at n=" + fmt(iso[0].x));
    return c.finish("r=0.01 maxima at" + where + "; isotropic at n=" + (iso.empty() ? "?" : fmt(iso[0].x)));
}

Outcome band_structure() {
    Checker c;
    const auto pop = spectral::TwoScale(0.01).population();
    const auto high = spectral::support_bands(spectral::limiting_measure(pop, 4.0));
    const auto low = spectral::support_bands(spectral::limiting_measure(pop, 0.25));
    c.require(high.size() == 2, std::to_string(high.size()) + " bands at n=4");
    c.require(low.size() == 1, std::to_string(low.size()) + " bands at n=0.25");
    return c.finish(std::to_string(high.size()) + " bands at n=4, " + std::to_string(low.size()) + " at n=0.25");
}

Outcome posterior_mc() {
    Checker c;
    const auto inst = oracle::sample_design(64, 64, 20240);
    const ProblemParams p(1.0, 1.0);
    const auto good = oracle::mc_posterior_check(inst, p, 0.1, 1.0, 10000, 11);
    c.require(good.mean_ok(), "mean z " + fmt(good.mean_max_z));
    c.require(good.conditional_ok(), "conditional covariance z " + fmt(good.conditional_cov_z));
    c.require(good.marginal_ok(), "marginal covariance z " + fmt(good.marginal_cov_z));
    oracle::PosteriorCheckOptions wrong;
    wrong.lambda_star_scale = 10.0;
    const auto bad = oracle::mc_posterior_check(inst, p, 0.1, 1.0, 10000, 11, wrong);
    c.require(!bad.passed(), "negative control passed");
    return c.finish("z: mean " + fmt(good.mean_max_z) + ", cond " + fmt(good.conditional_cov_z) + ", marg " +
                    fmt(good.marginal_cov_z) + "; wrong lambda* cond z " + fmt(bad.conditional_cov_z));
}

Outcome efficiency_shape() {
    Checker c;
    const auto ns = sweep::log_grid(0.05, 100.0, 64);
    std::vector<double> eta;
    for (double n : ns) eta.push_back(info::efficiency(spectral::mp_isotropic(n), ProblemParams(n, 1.0), 1e-6, 0.8).eta);
    const std::size_t best = static_cast<std::size_t>(std::min_element(eta.begin(), eta.end()) - eta.begin());
    c.require(ns[best] >= 0.7 && ns[best] <= 1.4, "minimum at n=" + fmt(ns[best]));
    c.require(eta.back() > 0.95, "eta(100) = " + fmt(eta.back()));
    c.require(eta.front() > 0.95, "eta(0.05) = " + fmt(eta.front()));
    return c.finish("minimum eta " + fmt(eta[best]) + " at n=" + fmt(ns[best]) + "; eta(0.05) " + fmt(eta.front()) +
                    ", eta(100) " + fmt(eta.back()));
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "closed-form Marchenko-Pastur", 1, closed_form_mp},
        {2, "Silverstein correctness", 5, silverstein},
        {3, "spectral mass", 30, spectral_mass},
        {4, "two-path equality", 10, two_path},
        {5, "asymptotic convergence", 120, convergence},
        {6, "IB dominance and data processing", 60, dominance},
        {7, "zero-temperature asymptotics", 30, zero_temperature},
        {8, "double descent (isotropic)", 30, double_descent},
        {9, "triple descent (anisotropic)", 60, triple_descent},
        {10, "band structure", 30, band_structure},
        {11, "posterior Monte Carlo", 30, posterior_mc},
        {12, "efficiency shape", 60, efficiency_shape},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > cr.budget_seconds) {
            o.pass = false;
            o.detail += " | over the " + fmt(cr.budget_seconds) + " s budget";
        }
        failed += !o.pass;
        std::printf("criterion %2d %s: %s (%.2f s) %s\n", cr.id, o.pass ? "PASS" : "FAIL", cr.name, seconds,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu of %zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed ? 1 : 0;
}
