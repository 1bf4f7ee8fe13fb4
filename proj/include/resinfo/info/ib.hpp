// ib.hpp: information content of the IB-optimal algorithm from a spectral
// measure. Directions with psi <= psi_c are discarded; each retained
// direction contributes
//
//     relevant: 1/2 ln(1 + (psi - psi_c)/(psi_c + lambda*))
//     residual: 1/2 ln(psi/psi_c) - relevant
//
// per unit mass of F^Psi. The available information is the psi_c -> 0 limit
// of the relevant part, 1/2 ln(1 + psi/lambda*).

#pragma once

#include "resinfo/errors.hpp"
#include "resinfo/info/params.hpp"
#include "resinfo/spectral/measure.hpp"

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace resinfo::info {

struct IBControl {
    double psi_c;
    double gamma;  // 1 + lambda*/psi_c, infinite at psi_c = 0

    static IBControl from_cutoff(double psi_c, const ProblemParams& params) {
        if (!(psi_c >= 0.0)) throw DomainError("psi_c must be >= 0");
        const double gamma = psi_c == 0.0 ? std::numeric_limits<double>::infinity()
                                          : 1.0 + params.lambda_star() / psi_c;
        return {psi_c, gamma};
    }

    static IBControl from_gamma(double gamma, const ProblemParams& params) {
        if (!(gamma > 1.0)) throw DomainError("gamma must be > 1");
        return {params.lambda_star() / (gamma - 1.0), gamma};
    }
};

inline double available_info(const spectral::SpectralMeasure& measure, const ProblemParams& params) {
    const double ls = params.lambda_star();
    return 0.5 * spectral::integrate(measure, [ls](double psi) { return std::log1p(psi / ls); });
}

inline InfoPair ib_point(const spectral::SpectralMeasure& measure, const ProblemParams& params,
                         double psi_c) {
    if (std::isnan(psi_c) || psi_c < 0.0) throw DomainError("psi_c must be >= 0");
    if (psi_c == 0.0)
        throw DivergenceError("residual information diverges at psi_c = 0; use available_info");
    const double ls = params.lambda_star();
    const double relevant = 0.5 * spectral::integrate(
        measure, [=](double psi) { return std::log1p((psi - psi_c) / (psi_c + ls)); }, psi_c);
    const double residual = 0.5 * spectral::integrate(
        measure,
        [=](double psi) {
            const double d = psi - psi_c;
            return std::log1p(d / psi_c) - std::log1p(d / (psi_c + ls));
        },
        psi_c);
    return {relevant, residual};
}

inline InfoPair ib_point(const spectral::SpectralMeasure& measure, const ProblemParams& params,
                         const IBControl& ctrl) {
    return ib_point(measure, params, ctrl.psi_c);
}

// psi_c such that relevant / available = mu.
inline IBControl solve_cutoff(const spectral::SpectralMeasure& measure, const ProblemParams& params,
                              double mu) {
    if (!(mu > 0.0)) throw DomainError("relevance level mu must be > 0");
    if (!(mu < 1.0)) throw DomainError("relevance level mu must be < 1 (mu = 1 needs psi_c = 0)");
    const double upper = measure.upper_edge();
    if (!(upper > 0.0)) throw DomainError("measure has no mass on psi > 0");
    const double available = available_info(measure, params);
    const double ls = params.lambda_star();
    auto ratio = [&](double psi_c) {
        const double rel = 0.5 * spectral::integrate(
            measure, [=](double psi) { return std::log1p((psi - psi_c) / (psi_c + ls)); }, psi_c);
        return rel / available;
    };
    const double floor = 1e-14 * upper;
    if (ratio(floor) < mu)
        throw NumericalError("relevance level not reachable above the psi_c floor", floor);
    return IBControl::from_cutoff(detail::log_bisect(ratio, mu, floor, upper), params);
}

// IB points along an ascending, strictly positive cutoff grid.
inline std::vector<std::pair<double, InfoPair>> frontier(const spectral::SpectralMeasure& measure,
                                                         const ProblemParams& params,
                                                         const std::vector<double>& cutoff_grid) {
    for (std::size_t i = 0; i < cutoff_grid.size(); ++i) {
        if (!(cutoff_grid[i] > 0.0)) throw DomainError("cutoff grid must be strictly positive");
        if (i > 0 && !(cutoff_grid[i] > cutoff_grid[i - 1]))
            throw DomainError("cutoff grid must be strictly ascending");
    }
    std::vector<std::pair<double, InfoPair>> out;
    out.reserve(cutoff_grid.size());
    for (double c : cutoff_grid) out.emplace_back(c, ib_point(measure, params, c));
    return out;
}

}  // namespace resinfo::info
