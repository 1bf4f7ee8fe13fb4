// posterior.hpp: Monte Carlo checks of the generative model and of the Gibbs
// posterior channel at finite (P, N).
//
// Model: W ~ N(0, omega^2 I_P), Y = X^T W + eps with eps ~ N(0, sigma^2 I_N),
// omega^2 = 1 and sigma^2 = 1/snr. Posterior:
//   T | X, Y ~ N(M Y, C),  M = (1/N)(Psi + lambda I)^{-1} X,
//                          C = (1/(2 beta))(Psi + lambda I)^{-1}.
// Closed-form covariances used by the checks:
//   Cov(T | W) = C + (sigma^2/N) R Psi R,                      R = (Psi + lambda I)^{-1}
//   Cov(T)     = C + R (omega^2 Psi^2 + (sigma^2/N) Psi) R

#pragma once

#include "resinfo/errors.hpp"
#include "resinfo/info/params.hpp"
#include "resinfo/oracle/instance.hpp"
#include "resinfo/oracle/rng.hpp"

#include <Eigen/Dense>
#include <boost/math/special_functions/digamma.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace resinfo::oracle {

struct SampledTriple {
    Eigen::VectorXd W;
    Eigen::VectorXd Y;
    Eigen::VectorXd epsilon;
    std::vector<Eigen::VectorXd> T_samples;
};

namespace detail {

// Posterior operators for one instance.
struct PosteriorModel {
    Eigen::MatrixXd psi;        // X X^T / N
    Eigen::MatrixXd mean_map;   // M = (1/N) R X
    Eigen::MatrixXd cov;        // C
    Eigen::MatrixXd cov_sqrt;   // C^{1/2}
    Eigen::MatrixXd resolvent;  // R
};

inline PosteriorModel posterior_model(const FiniteInstance& inst, double lambda, double beta) {
    if (!inst.has_design()) throw DomainError("posterior checks need the design matrix");
    if (!(lambda > 0.0)) throw DomainError("lambda must be > 0");
    if (!(beta > 0.0)) throw DomainError("beta must be > 0");
    const double N = static_cast<double>(inst.N);
    PosteriorModel m;
    m.psi = inst.X * inst.X.transpose() / N;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m.psi);
    const Eigen::MatrixXd& U = eig.eigenvectors();
    const Eigen::VectorXd shifted = eig.eigenvalues().array().max(0.0) + lambda;
    m.resolvent = U * shifted.cwiseInverse().asDiagonal() * U.transpose();
    m.mean_map = m.resolvent * inst.X / N;
    m.cov = m.resolvent / (2.0 * beta);
    m.cov_sqrt = U * (2.0 * beta * shifted.array()).rsqrt().matrix().asDiagonal() * U.transpose();
    return m;
}

inline Eigen::VectorXd normal_vector(Eigen::Index size, Rng& rng, double scale = 1.0) {
    Eigen::VectorXd v(size);
    for (Eigen::Index i = 0; i < size; ++i) v(i) = scale * rng.normal();
    return v;
}

// Standardized Frobenius discrepancy of a sample covariance S (k draws with
// known mean) from its expectation Sigma: with S~ = Sigma^{-1/2} S Sigma^{-1/2},
// ||S~ - I||_F^2 has mean P(P+1)/k and standard deviation 2 sqrt(P(P+1))/k.
inline double covariance_z(const Eigen::MatrixXd& sample, const Eigen::MatrixXd& expected, double draws) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(expected);
    const Eigen::MatrixXd inv_sqrt = eig.operatorInverseSqrt();
    const Eigen::MatrixXd whitened = inv_sqrt * sample * inv_sqrt;
    const double p = static_cast<double>(expected.rows());
    const double stat = (whitened - Eigen::MatrixXd::Identity(expected.rows(), expected.cols())).squaredNorm();
    return (stat - p * (p + 1.0) / draws) / (2.0 * std::sqrt(p * (p + 1.0)) / draws);
}

}  // namespace detail

// One draw of (W, eps, Y) and n_samples posterior draws of T.
inline SampledTriple sample_triple(const FiniteInstance& inst, const info::ProblemParams& params, double lambda,
                                   double beta, std::size_t n_samples, std::uint64_t seed) {
    const auto model = detail::posterior_model(inst, lambda, beta);
    Rng rng(seed);
    SampledTriple s;
    const auto P = static_cast<Eigen::Index>(inst.P), N = static_cast<Eigen::Index>(inst.N);
    s.W = detail::normal_vector(P, rng);
    s.epsilon = detail::normal_vector(N, rng, std::sqrt(1.0 / params.snr));
    s.Y = inst.X.transpose() * s.W + s.epsilon;
    const Eigen::VectorXd mean = model.mean_map * s.Y;
    s.T_samples.reserve(n_samples);
    for (std::size_t k = 0; k < n_samples; ++k)
        s.T_samples.push_back(mean + model.cov_sqrt * detail::normal_vector(P, rng));
    return s;
}

struct PosteriorCheckOptions {
    double threshold = 5.0;          // standard errors
    double lambda_star_scale = 1.0;  // != 1 checks against a deliberately wrong lambda*
};

struct PosteriorReport {
    double mean_max_z = 0.0;          // max over coordinates of |mean - ridge| / SE
    double conditional_cov_z = 0.0;   // Cov(T | W) discrepancy, standardized
    double marginal_cov_z = 0.0;      // Cov(T) discrepancy, standardized
    double max_coordinate_spread = 0.0;
    double posterior_mean_norm = 0.0;
    double ridge_norm = 0.0;
    double threshold = 5.0;

    bool mean_ok() const { return mean_max_z <= threshold; }
    bool conditional_ok() const { return std::abs(conditional_cov_z) <= threshold; }
    bool marginal_ok() const { return std::abs(marginal_cov_z) <= threshold; }
    bool passed() const { return mean_ok() && conditional_ok() && marginal_ok(); }
};

// (a) posterior mean vs the ridge estimate (X X^T + lambda N I)^{-1} X Y for
// one (W, Y); (b) Cov(T | W) with fresh noise per draw; (c) Cov(T) with fresh
// W and noise per draw. The expected covariances use sigma^2 implied by
// lambda* (times lambda_star_scale), omega^2 = 1.
inline PosteriorReport mc_posterior_check(const FiniteInstance& inst, const info::ProblemParams& params,
                                          double lambda, double beta, std::size_t n_draws, std::uint64_t seed,
                                          const PosteriorCheckOptions& opt = {}) {
    if (n_draws < 1000) throw DomainError("posterior checks need at least 1000 draws");
    const auto model = detail::posterior_model(inst, lambda, beta);
    const auto P = static_cast<Eigen::Index>(inst.P), N = static_cast<Eigen::Index>(inst.N);
    const double Nd = static_cast<double>(inst.N);
    const double draws = static_cast<double>(n_draws);
    const double sigma2_true = 1.0 / params.snr;
    const double sigma2_model = Nd / static_cast<double>(inst.P) * params.lambda_star() * opt.lambda_star_scale;
    PosteriorReport rep;
    rep.threshold = opt.threshold;
    const Rng root(seed);

    {  // (a)
        Rng rng = root.split(0);
        const Eigen::VectorXd W = detail::normal_vector(P, rng);
        const Eigen::VectorXd Y = inst.X.transpose() * W + detail::normal_vector(N, rng, std::sqrt(sigma2_true));
        const Eigen::MatrixXd gram = inst.X * inst.X.transpose() + lambda * Nd * Eigen::MatrixXd::Identity(P, P);
        const Eigen::VectorXd ridge = gram.ldlt().solve(inst.X * Y);
        const Eigen::VectorXd center = model.mean_map * Y;
        Eigen::VectorXd sum = Eigen::VectorXd::Zero(P), sumsq = Eigen::VectorXd::Zero(P);
        for (std::size_t k = 0; k < n_draws; ++k) {
            const Eigen::VectorXd t = center + model.cov_sqrt * detail::normal_vector(P, rng);
            sum += t;
            sumsq += (t - center).cwiseAbs2();
        }
        const Eigen::VectorXd mean = sum / draws;
        const Eigen::VectorXd se = (model.cov.diagonal() / draws).cwiseSqrt();
        rep.mean_max_z = ((mean - ridge).cwiseAbs().array() / se.array()).maxCoeff();
        rep.max_coordinate_spread = (sumsq / draws).cwiseSqrt().maxCoeff();
        rep.posterior_mean_norm = mean.norm();
        rep.ridge_norm = ridge.norm();
    }
    {  // (b)
        Rng rng = root.split(1);
        // T - E[T | W] does not depend on W.
        Eigen::MatrixXd S = Eigen::MatrixXd::Zero(P, P);
        for (std::size_t k = 0; k < n_draws; ++k) {
            const Eigen::VectorXd eps = detail::normal_vector(N, rng, std::sqrt(sigma2_true));
            const Eigen::VectorXd d = model.mean_map * eps + model.cov_sqrt * detail::normal_vector(P, rng);
            S.selfadjointView<Eigen::Lower>().rankUpdate(d);
        }
        S = S.selfadjointView<Eigen::Lower>();
        S /= draws;
        const Eigen::MatrixXd expected =
            model.cov + (sigma2_model / Nd) * model.resolvent * model.psi * model.resolvent;
        rep.conditional_cov_z = detail::covariance_z(S, expected, draws);
    }
    {  // (c)
        Rng rng = root.split(2);
        Eigen::MatrixXd S = Eigen::MatrixXd::Zero(P, P);
        for (std::size_t k = 0; k < n_draws; ++k) {
            const Eigen::VectorXd W = detail::normal_vector(P, rng);
            const Eigen::VectorXd Y =
                inst.X.transpose() * W + detail::normal_vector(N, rng, std::sqrt(sigma2_true));
            const Eigen::VectorXd t = model.mean_map * Y + model.cov_sqrt * detail::normal_vector(P, rng);
            S.selfadjointView<Eigen::Lower>().rankUpdate(t);
        }
        S = S.selfadjointView<Eigen::Lower>();
        S /= draws;
        const Eigen::MatrixXd expected =
            model.cov +
            model.resolvent * (model.psi * model.psi + (sigma2_model / Nd) * model.psi) * model.resolvent;
        rep.marginal_cov_z = detail::covariance_z(S, expected, draws);
    }
    return rep;
}

struct MonteCarloEstimate {
    double estimate;
    double standard_error;
};

// Monte Carlo estimate of I(T;Y|W) (total nats) from sample covariances of
// T | W. Each batch forms the sample covariance S of T - E[T | W] (known
// mean, k draws, so k S ~ Wishart(Cov(T|W), k)) and returns
//   1/2 [ln det(S C^{-1}) - sum_{i=1}^{P} digamma((k - i + 1)/2) - P ln(2/k)],
// which is unbiased for 1/2 ln det(Cov(T|W) C^{-1}). The standard error is
// from the spread across batches.
inline MonteCarloEstimate mc_residual_info(const FiniteInstance& inst, const info::ProblemParams& params,
                                           double lambda, double beta, std::size_t n_draws, std::size_t batches,
                                           std::uint64_t seed) {
    if (batches < 2 || n_draws / batches <= inst.P + 1)
        throw DomainError("each batch needs more draws than the dimension");
    const auto model = detail::posterior_model(inst, lambda, beta);
    const auto P = static_cast<Eigen::Index>(inst.P), N = static_cast<Eigen::Index>(inst.N);
    const double k = static_cast<double>(n_draws / batches);
    const double sigma = std::sqrt(1.0 / params.snr);
    const double log_det_c = model.cov.ldlt().vectorD().array().log().sum();
    double bias = static_cast<double>(inst.P) * std::log(2.0 / k);
    for (Eigen::Index i = 1; i <= P; ++i) bias += boost::math::digamma((k - static_cast<double>(i) + 1.0) / 2.0);

    const Rng root(seed);
    std::vector<double> values;
    for (std::size_t b = 0; b < batches; ++b) {
        Rng rng = root.split(b);
        Eigen::MatrixXd S = Eigen::MatrixXd::Zero(P, P);
        for (std::size_t j = 0; j < n_draws / batches; ++j) {
            const Eigen::VectorXd eps = detail::normal_vector(N, rng, sigma);
            const Eigen::VectorXd d = model.mean_map * eps + model.cov_sqrt * detail::normal_vector(P, rng);
            S.selfadjointView<Eigen::Lower>().rankUpdate(d);
        }
        S = S.selfadjointView<Eigen::Lower>();
        S /= k;
        const double log_det_s = S.ldlt().vectorD().array().log().sum();
        values.push_back(0.5 * (log_det_s - log_det_c - bias));
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size() - 1);
    return {mean, std::sqrt(var / static_cast<double>(values.size()))};
}

}  // namespace resinfo::oracle
