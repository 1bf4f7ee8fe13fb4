// gibbs.hpp: information content of Gibbs-posterior ridge regression,
// T | X, Y ~ N(ridge estimate, (1/2 beta)(Psi + lambda I)^{-1}).
//
// The temperature enters only through tau = N / (2 beta sigma^2). Per unit
// mass of F^Psi:
//
//     relevant: 1/2 ln(1 + (psi^2/lambda*) / (psi + tau (psi + lambda)))
//     residual: 1/2 ln(1 + psi / (tau (psi + lambda)))

#pragma once

#include "resinfo/errors.hpp"
#include "resinfo/info/ib.hpp"
#include "resinfo/info/params.hpp"
#include "resinfo/spectral/measure.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace resinfo::info {

struct GibbsControl {
    double lambda;
    double tau;

    GibbsControl(double ridge, double temperature) : lambda(ridge), tau(temperature) {
        if (!std::isfinite(lambda) || lambda <= 0.0) throw DomainError("lambda must be finite and > 0");
        if (!std::isfinite(tau) || tau <= 0.0) throw DomainError("tau must be finite and > 0");
    }

    // beta = N / (2 sigma^2 tau) for a concrete sample size and noise variance.
    static GibbsControl from_beta(double ridge, double beta, double samples, double noise_variance) {
        if (!(beta > 0.0) || !(samples > 0.0) || !(noise_variance > 0.0))
            throw DomainError("beta, N and sigma^2 must be > 0");
        return GibbsControl(ridge, samples / (2.0 * noise_variance * beta));
    }

    double beta(double samples, double noise_variance) const {
        return samples / (2.0 * noise_variance * tau);
    }
};

namespace detail {

inline double gibbs_relevant(const spectral::SpectralMeasure& measure, double ls, double lambda,
                             double tau) {
    return 0.5 * spectral::integrate(measure, [=](double psi) {
               return std::log1p((psi * psi / ls) / (psi + tau * (psi + lambda)));
           });
}

inline double gibbs_residual(const spectral::SpectralMeasure& measure, double lambda, double tau) {
    return 0.5 * spectral::integrate(measure,
                                     [=](double psi) { return std::log1p(psi / (tau * (psi + lambda))); });
}

}  // namespace detail

inline InfoPair gibbs_point(const spectral::SpectralMeasure& measure, const ProblemParams& params,
                            const GibbsControl& ctrl) {
    return {detail::gibbs_relevant(measure, params.lambda_star(), ctrl.lambda, ctrl.tau),
            detail::gibbs_residual(measure, ctrl.lambda, ctrl.tau)};
}

// tau such that relevant / available = mu. The bracket starts at [1e-3, 1e3]
// and widens by three decades per side as needed.
inline GibbsControl solve_temperature(const spectral::SpectralMeasure& measure,
                                      const ProblemParams& params, double lambda, double mu) {
    if (!(mu > 0.0) || !(mu < 1.0)) throw DomainError("relevance level mu must lie in (0, 1)");
    if (!std::isfinite(lambda) || lambda <= 0.0) throw DomainError("lambda must be finite and > 0");
    const double available = available_info(measure, params);
    if (!(available > 0.0)) throw DomainError("measure carries no available information");
    const double ls = params.lambda_star();
    auto ratio = [&](double tau) { return detail::gibbs_relevant(measure, ls, lambda, tau) / available; };

    double lo = 1e-3, hi = 1e3;
    while (ratio(lo) < mu) {
        lo *= 1e-3;
        if (lo < 1e-60) throw NumericalError("no temperature reaches the relevance level", lo);
    }
    while (ratio(hi) > mu) {
        hi *= 1e3;
        if (hi > 1e60) throw NumericalError("no temperature lowers relevance to the target", hi);
    }
    return GibbsControl(lambda, detail::log_bisect(ratio, mu, lo, hi));
}

struct EfficiencyResult {
    double mu;
    double eta;             // ib_residual / gibbs_residual
    double ib_residual;
    double gibbs_residual;
    double psi_c;
    double tau;
};

// IB-optimal residual over Gibbs residual at the same relevance level.
inline EfficiencyResult efficiency(const spectral::SpectralMeasure& measure, const ProblemParams& params,
                                   double lambda, double mu) {
    const auto cut = solve_cutoff(measure, params, mu);
    const auto temp = solve_temperature(measure, params, lambda, mu);
    const double ib = ib_point(measure, params, cut).residual;
    const double gibbs = gibbs_point(measure, params, temp).residual;
    return {mu, ib / gibbs, ib, gibbs, cut.psi_c, temp.tau};
}

// ---- mu -> 1 expansions ----------------------------------------------------

namespace detail {

inline void check_near_one(double mu) {
    if (!(mu > 0.9 && mu <= 1.0)) throw DomainError("asymptotic formulas need mu in (0.9, 1]");
}

}  // namespace detail

// psi_c ~ lambda* (1 - mu) <ln(1 + psi/lambda*)> / <1>, averages over psi > 0.
inline double asymptotic_cutoff(const spectral::SpectralMeasure& measure, const ProblemParams& params,
                                double mu) {
    detail::check_near_one(mu);
    if (mu == 1.0) return 0.0;
    const double ls = params.lambda_star();
    const double log_term = spectral::integrate(measure, [ls](double psi) { return std::log1p(psi / ls); });
    return ls * (1.0 - mu) * log_term / spectral::positive_mass(measure);
}

// tau ~ (1 - mu) <ln(1 + psi/lambda*)> / <(psi + lambda)/(psi + lambda*)>.
inline double asymptotic_temperature(const spectral::SpectralMeasure& measure,
                                     const ProblemParams& params, double lambda, double mu) {
    detail::check_near_one(mu);
    if (!std::isfinite(lambda) || lambda <= 0.0) throw DomainError("lambda must be finite and > 0");
    if (mu == 1.0) return 0.0;
    const double ls = params.lambda_star();
    const double log_term = spectral::integrate(measure, [ls](double psi) { return std::log1p(psi / ls); });
    const double ratio_term =
        spectral::integrate(measure, [=](double psi) { return (psi + lambda) / (psi + ls); });
    return (1.0 - mu) * log_term / ratio_term;
}

// ln <r> - <ln r> for r = (psi + lambda)/(psi + lambda*), averages over psi > 0.
inline double jensen_gap(const spectral::SpectralMeasure& measure, const ProblemParams& params,
                         double lambda) {
    const double ls = params.lambda_star();
    const double mass = spectral::positive_mass(measure);
    const double mean_ratio =
        spectral::integrate(measure, [=](double psi) { return (psi + lambda) / (psi + ls); }) / mass;
    const double mean_log =
        spectral::integrate(measure, [=](double psi) { return std::log((psi + lambda) / (psi + ls)); }) / mass;
    return std::log(mean_ratio) - mean_log;
}

// eta ~ 1 - gap / (-ln(1 - mu)).
inline double asymptotic_efficiency(const spectral::SpectralMeasure& measure,
                                    const ProblemParams& params, double lambda, double mu) {
    detail::check_near_one(mu);
    if (!std::isfinite(lambda) || lambda <= 0.0) throw DomainError("lambda must be finite and > 0");
    if (mu == 1.0) return 1.0;
    return 1.0 - jensen_gap(measure, params, lambda) / (-std::log1p(-mu));
}

// ---- sweeps over the measurement density -----------------------------------

struct ResidualSweepPoint {
    double n;
    double available;
    double psi_c;
    double tau;
    InfoPair ib;
    InfoPair gibbs;
};

using MeasureFamily = std::function<spectral::SpectralMeasure(double n)>;

inline ResidualSweepPoint residual_point(const MeasureFamily& family, double snr, double lambda,
                                         double mu, double n) {
    const ProblemParams params(n, snr);
    const auto measure = family(n);
    const auto cut = solve_cutoff(measure, params, mu);
    const auto temp = solve_temperature(measure, params, lambda, mu);
    return {n, available_info(measure, params), cut.psi_c, temp.tau, ib_point(measure, params, cut),
            gibbs_point(measure, params, temp)};
}

// IB and Gibbs residuals at matched mu along n_grid.
inline std::vector<ResidualSweepPoint> residual_sweep(const MeasureFamily& family, double snr,
                                                      double lambda, double mu,
                                                      const std::vector<double>& n_grid) {
    if (n_grid.empty()) throw DomainError("n grid must be non-empty");
    std::vector<ResidualSweepPoint> out;
    out.reserve(n_grid.size());
    for (double n : n_grid) out.push_back(residual_point(family, snr, lambda, mu, n));
    return out;
}

}  // namespace resinfo::info
