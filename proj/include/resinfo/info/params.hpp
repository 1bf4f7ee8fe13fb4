// params.hpp: problem parameters and information pairs shared by the IB and
// Gibbs computations. All information values are nats per parameter.

#pragma once

#include "resinfo/errors.hpp"

#include <cmath>
#include <functional>

namespace resinfo::info {

struct ProblemParams {
    double n;    // N / P
    double snr;  // omega^2 / sigma^2

    ProblemParams(double measurement_density, double signal_to_noise)
        : n(measurement_density), snr(signal_to_noise) {
        if (!std::isfinite(n) || n <= 0.0) throw DomainError("n must be finite and > 0");
        if (!std::isfinite(snr) || snr <= 0.0) throw DomainError("snr must be finite and > 0");
    }

    // lambda* = (P/N)(sigma^2/omega^2)
    double lambda_star() const noexcept { return 1.0 / (n * snr); }
};

struct InfoPair {
    double relevant = 0.0;
    double residual = 0.0;

    bool operator==(const InfoPair&) const = default;
};

namespace detail {

// Bisection on ln x for a strictly decreasing ratio(x), stopping once
// |ratio - target| <= rel * target. The bracket must satisfy
// ratio(lo) >= target >= ratio(hi).
inline double log_bisect(const std::function<double(double)>& ratio, double target, double lo,
                         double hi, double rel = 1e-9, int max_iterations = 400) {
    double a = std::log(lo), b = std::log(hi);
    double best = std::exp(0.5 * (a + b));
    for (int it = 0; it < max_iterations; ++it) {
        const double mid = 0.5 * (a + b);
        best = std::exp(mid);
        const double r = ratio(best);
        if (std::abs(r - target) <= rel * target) return best;
        if (r > target) a = mid;
        else b = mid;
        if (b - a < 1e-15 * std::max(1.0, std::abs(mid))) break;
    }
    const double r = ratio(best);
    if (std::abs(r - target) <= rel * target) return best;
    throw SolverError("bisection stalled before reaching the relevance target", std::abs(r - target));
}

}  // namespace detail

}  // namespace resinfo::info
