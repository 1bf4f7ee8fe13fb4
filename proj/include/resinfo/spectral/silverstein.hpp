// silverstein.hpp: companion Stieltjes transform of the sample covariance
// Psi = X X^T / N for X = Sigma^{1/2} Z, from the Silverstein equation
//
//     -1/v(z) = z - alpha * sum_k w_k s_k / (1 + s_k v(z)),     alpha = P/N = 1/n,
//
// and the Stieltjes transform m(z) = (v + 1/z)/alpha - 1/z of F^Psi.
//
// The solver works on G(v) = 1 + v (z - alpha S(v)), i.e. the equation
// multiplied through by v, which keeps the residual well scaled for large |z|.

#pragma once

#include "resinfo/errors.hpp"
#include "resinfo/spectral/polynomial.hpp"
#include "resinfo/spectral/population.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

namespace resinfo::spectral {

using cplx = std::complex<double>;

struct StieltjesPoint {
    cplx z;
    cplx v;         // companion transform (N-dimensional spectrum)
    cplx m;         // Stieltjes transform of F^Psi
    double residual;
};

struct SilversteinOptions {
    int max_fixed_point = 400;
    int max_newton = 60;
    double tolerance = 1e-10;
    double newton_switch = 1e-3;
    int max_continuation_levels = 80;
};

// Default Stieltjes-inversion offsets, extrapolated to epsilon -> 0.
inline const std::vector<double>& default_epsilon_ladder() {
    static const std::vector<double> ladder{1e-3, 1e-4, 1e-5};
    return ladder;
}

namespace detail {

struct PopulationSums {
    cplx value;       // S(v)  = sum w s / (1 + s v)
    cplx derivative;  // S'(v) = -sum w s^2 / (1 + s v)^2
};

inline PopulationSums population_sums(cplx v, const PopulationSpectrum& pop) {
    PopulationSums out{0.0, 0.0};
    for (const auto& a : pop.atoms()) {
        const cplx denom = 1.0 + a.eigenvalue * v;
        const cplx term = a.eigenvalue / denom;
        out.value += a.weight * term;
        out.derivative -= a.weight * term * term;
    }
    return out;
}

inline cplx silverstein_g(cplx v, cplx z, const PopulationSpectrum& pop, double alpha) {
    return 1.0 + v * (z - alpha * population_sums(v, pop).value);
}

inline bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

inline StieltjesPoint make_point(cplx z, cplx v, double alpha, double residual) {
    const cplx m = (v + 1.0 / z) / alpha - 1.0 / z;
    return {z, v, m, residual};
}

// Newton on G from a seed. Keeps Im v >= 0 for Im z > 0 by step halving.
inline std::optional<StieltjesPoint> newton(cplx z, cplx v, const PopulationSpectrum& pop,
                                            double alpha, const SilversteinOptions& opt) {
    const bool upper = z.imag() > 0.0;
    double res = std::abs(silverstein_g(v, z, pop, alpha));
    for (int it = 0; it < opt.max_newton && res >= opt.tolerance; ++it) {
        const auto sums = population_sums(v, pop);
        const cplx g = 1.0 + v * (z - alpha * sums.value);
        const cplx dg = z - alpha * sums.value - alpha * v * sums.derivative;
        if (dg == cplx(0.0) || !finite(dg)) return std::nullopt;
        cplx step = g / dg;
        cplx next = v - step;
        for (int h = 0; h < 40 && upper && next.imag() < 0.0; ++h) {
            step *= 0.5;
            next = v - step;
        }
        if (!finite(next)) return std::nullopt;
        v = next;
        res = std::abs(silverstein_g(v, z, pop, alpha));
    }
    if (!(res < opt.tolerance) || (upper && v.imag() < 0.0)) return std::nullopt;
    return make_point(z, v, alpha, res);
}

// Damped fixed point v <- -1/(z - alpha S(v)) from -1/z, handing over to
// Newton once the residual drops below newton_switch. The damping factor is
// halved whenever the residual grows.
inline std::optional<StieltjesPoint> fixed_point_then_newton(cplx z, const PopulationSpectrum& pop,
                                                             double alpha,
                                                             const SilversteinOptions& opt) {
    cplx v = -1.0 / z;
    double damping = 1.0;
    double res = std::abs(silverstein_g(v, z, pop, alpha));
    for (int it = 0; it < opt.max_fixed_point && res >= opt.newton_switch; ++it) {
        const cplx mapped = -1.0 / (z - alpha * population_sums(v, pop).value);
        const cplx next = v + damping * (mapped - v);
        if (!finite(next)) return std::nullopt;
        const double next_res = std::abs(silverstein_g(next, z, pop, alpha));
        if (next_res > res) damping = std::max(damping * 0.5, 1.0 / 1024.0);
        v = next;
        res = next_res;
    }
    if (res >= opt.newton_switch) return std::nullopt;
    return newton(z, v, pop, alpha, opt);
}

}  // namespace detail

// Residual |1 + v (z - alpha S(v))| of a candidate solution.
inline double silverstein_residual(cplx z, cplx v, const PopulationSpectrum& pop, double n) {
    return std::abs(detail::silverstein_g(v, z, pop, 1.0 / n));
}

// Solve for v(z) on the branch continuous from the upper half plane.
//
// z must satisfy Im z > 0, or be real and outside the support closure
// (for real z inside the support the boundary value v(z + i0+) is returned).
// When the direct iteration stalls (close to the real axis) the solution is
// continued downward in Im z from a height where the fixed point converges.
inline StieltjesPoint solve_silverstein(cplx z, const PopulationSpectrum& pop, double n,
                                        std::optional<cplx> seed = std::nullopt,
                                        const SilversteinOptions& opt = {}) {
    if (!std::isfinite(n) || n <= 0.0) throw DomainError("measurement density n must be > 0");
    if (!detail::finite(z)) throw DomainError("z must be finite");
    if (z == cplx(0.0)) throw DomainError("Silverstein equation is singular at z = 0");
    if (z.imag() < 0.0) throw DomainError("z must lie in the closed upper half plane");
    const double alpha = 1.0 / n;

    if (seed) {
        if (auto p = detail::newton(z, *seed, pop, alpha, opt)) return *p;
    }
    if (auto p = detail::fixed_point_then_newton(z, pop, alpha, opt)) return *p;

    // Continuation: heights top, top/10, ... down to Im z.
    const double target = z.imag();
    double height = std::max({1.0, std::abs(z), 10.0 * target});
    auto at = [&](double h) { return cplx(z.real(), h); };
    auto top = detail::fixed_point_then_newton(at(height), pop, alpha, opt);
    if (!top) throw SolverError("Silverstein fixed point failed to converge",
                                std::abs(detail::silverstein_g(-1.0 / at(height), at(height), pop, alpha)));
    cplx v = top->v;
    double last_res = top->residual;
    const double floor_height = std::max(target, 1e-13 * std::max(1.0, std::abs(z.real())));
    int levels = 0;
    double factor = 0.1;
    while (height > floor_height) {
        if (++levels > opt.max_continuation_levels)
            throw SolverError("Silverstein continuation exhausted its budget", last_res);
        const double next_height = std::max(floor_height, height * factor);
        if (auto p = detail::newton(at(next_height), v, pop, alpha, opt)) {
            v = p->v;
            last_res = p->residual;
            height = next_height;
            factor = std::max(factor * factor, 1e-2);
        } else {
            factor = std::sqrt(factor);
            if (factor > 0.99) throw SolverError("Silverstein continuation stalled", last_res);
        }
    }
    if (auto p = detail::newton(z, v, pop, alpha, opt)) return *p;
    throw SolverError("Silverstein Newton failed at target point",
                      std::abs(detail::silverstein_g(v, z, pop, alpha)));
}

// Real-axis form of the Silverstein equation at z = psi, cleared of
// denominators: D(v)(1 + v psi) - alpha v sum_k w_k s_k D_k(v) = 0 with
// D = prod_j (1 + s_j v) and D_k = D / (1 + s_k v). Degree K + 1.
inline std::vector<cplx> real_axis_roots(double psi, const PopulationSpectrum& pop, double n) {
    using detail::Poly;
    const double alpha = 1.0 / n;
    const auto atoms = pop.atoms();
    Poly d{1.0};
    for (const auto& a : atoms) d = detail::poly_mul(d, {1.0, a.eigenvalue});
    Poly coupling{0.0};
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        Poly dk{1.0};
        for (std::size_t j = 0; j < atoms.size(); ++j)
            if (j != k) dk = detail::poly_mul(dk, {1.0, atoms[j].eigenvalue});
        coupling = detail::poly_add(coupling, dk, atoms[k].weight * atoms[k].eigenvalue);
    }
    Poly eq = detail::poly_mul(d, {1.0, psi});
    eq = detail::poly_add(eq, detail::poly_shift(coupling, 1), -alpha);
    return detail::poly_roots(eq);
}

// Boundary value v(psi + i0+) for real psi > 0: the root of the real-axis
// equation in the open upper half plane (the physical branch), or the real
// limit if psi lies outside the support. Density is Im v / (alpha pi).
inline cplx boundary_value(double psi, const PopulationSpectrum& pop, double n) {
    const auto roots = real_axis_roots(psi, pop, n);
    cplx best{0.0, -1.0};
    for (const auto& r : roots)
        if (r.imag() > best.imag()) best = r;
    if (best.imag() > 1e-9 * (1.0 + std::abs(best))) return best;
    return solve_silverstein(cplx(psi, 0.0), pop, n).v;
}

// Exact limiting density of F^Psi at psi > 0.
inline double exact_density(double psi, const PopulationSpectrum& pop, double n) {
    if (!(psi > 0.0)) throw DomainError("density is evaluated at psi > 0");
    const auto roots = real_axis_roots(psi, pop, n);
    double im = 0.0;
    for (const auto& r : roots) im = std::max(im, r.imag());
    if (im <= 1e-9 * (1.0 + std::abs(im))) return 0.0;
    return im * n / std::numbers::pi;
}

// Stieltjes inversion f(psi) = Im m(psi + i eps)/pi evaluated along a ladder
// of offsets and Richardson-extrapolated (polynomial in eps) to eps -> 0;
// clamped at zero from below.
inline double inverted_density(double psi, const PopulationSpectrum& pop, double n,
                               const std::vector<double>& ladder = default_epsilon_ladder()) {
    if (ladder.empty()) throw DomainError("epsilon ladder must be non-empty");
    std::vector<double> eps(ladder);
    std::sort(eps.begin(), eps.end(), std::greater<>());
    std::vector<double> values;
    std::optional<cplx> seed;
    for (double e : eps) {
        if (!(e > 0.0)) throw DomainError("epsilon ladder entries must be > 0");
        const auto p = solve_silverstein(cplx(psi, e), pop, n, seed);
        seed = p.v;
        values.push_back(p.m.imag() / std::numbers::pi);
    }
    double extrapolated = 0.0;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        double weight = 1.0;
        for (std::size_t j = 0; j < eps.size(); ++j)
            if (j != i) weight *= eps[j] / (eps[j] - eps[i]);
        extrapolated += weight * values[i];
    }
    return std::max(0.0, extrapolated);
}

}  // namespace resinfo::spectral
