// marchenko_pastur.hpp: limiting spectral distribution of Psi = X X^T / N.
//
// mp_isotropic: closed-form Marchenko-Pastur law for Sigma = I.
// mp_general:   any finite population spectrum. Band edges come from the
//               critical points of the inverse map
//                   x(v) = -1/v + alpha sum_k w_k s_k / (1 + s_k v)
//               (each support edge is x(v*) with x'(v*) = 0), densities from
//               the upper-half-plane root of the real-axis Silverstein
//               equation, spot-checked against epsilon-ladder inversion.

#pragma once

#include "resinfo/errors.hpp"
#include "resinfo/spectral/measure.hpp"
#include "resinfo/spectral/polynomial.hpp"
#include "resinfo/spectral/population.hpp"
#include "resinfo/spectral/silverstein.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

namespace resinfo::spectral {

struct InversionOptions {
    int grid_resolution = 256;  // initial Chebyshev nodes per band (>= 256)
    int max_resolution = 8192;
    std::vector<double> epsilon_ladder = default_epsilon_ladder();
    double spot_check_tolerance = 5e-2;  // relative to the band's peak density
};

inline SpectralMeasure mp_isotropic(double n) {
    if (!std::isfinite(n) || n <= 0.0) throw DomainError("measurement density n must be finite and > 0");
    const double root = 1.0 / std::sqrt(n);
    const double lower = (1.0 - root) * (1.0 - root);
    const double upper = (1.0 + root) * (1.0 + root);
    const double half_width = 2.0 * root;
    const bool hard_edge = lower == 0.0;

    // g(theta) = n h^2 sin^2(theta) / (2 pi psi), h = (upper - lower)/2; at
    // n = 1 this simplifies to n h cos^2(theta/2)/pi.
    auto g = [n, lower, half_width, hard_edge](double t) {
        if (hard_edge) {
            const double c = std::cos(0.5 * t);
            return n * half_width * c * c / std::numbers::pi;
        }
        const double s = std::sin(0.5 * t);
        const double psi = lower + 2.0 * half_width * s * s;
        const double st = std::sin(t);
        return n * half_width * half_width * st * st / (2.0 * std::numbers::pi * psi);
    };
    std::vector<Band> bands;
    bands.emplace_back(Interval{lower, upper}, g);
    return SpectralMeasure(n, std::max(0.0, 1.0 - n), {}, std::move(bands));
}

namespace detail {

inline double clenshaw(const double* c, std::size_t size, double x) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = size; k-- > 1;) {
        const double b0 = 2.0 * x * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + c[0];
}

// Chebyshev expansion of a function on theta in [0, pi], evaluated by Clenshaw.
// High-degree expansions are also resampled into short local expansions on
// equal slices of phi = acos(x), where a degree-D series has bandwidth D, so
// evaluation costs O(local degree) instead of O(D).
class ChebyshevTheta {
public:
    static constexpr std::size_t local_degree = 24;
    static constexpr std::size_t direct_limit = 256;

    explicit ChebyshevTheta(std::vector<double> coefficients)
        : coefficients_(std::move(coefficients)) {
        const std::size_t d = degree();
        if (d <= direct_limit) return;
        pieces_ = (d + 3) / 4;
        const double width = std::numbers::pi / static_cast<double>(pieces_);
        const std::size_t m = local_degree;
        std::vector<double> cosines(2 * m);
        for (std::size_t i = 0; i < 2 * m; ++i) cosines[i] = std::cos(std::numbers::pi * double(i) / double(m));
        local_.resize(pieces_ * (m + 1));
        std::vector<double> values(m + 1);
        for (std::size_t p = 0; p < pieces_; ++p) {
            const double mid = (static_cast<double>(p) + 0.5) * width;
            for (std::size_t j = 0; j <= m; ++j)
                values[j] = clenshaw(coefficients_.data(), coefficients_.size(),
                                     std::cos(mid + 0.5 * width * cosines[j]));
            double* c = &local_[p * (m + 1)];
            for (std::size_t k = 0; k <= m; ++k) {
                double sum = 0.5 * (values[0] + values[m] * cosines[(k * m) % (2 * m)]);
                for (std::size_t j = 1; j < m; ++j) sum += values[j] * cosines[(k * j) % (2 * m)];
                c[k] = 2.0 * sum / static_cast<double>(m);
            }
            c[0] *= 0.5;
            c[m] *= 0.5;
        }
    }

    double operator()(double theta) const {
        const double x = std::clamp(1.0 - 2.0 * theta / std::numbers::pi, -1.0, 1.0);
        if (pieces_ == 0) return clenshaw(coefficients_.data(), coefficients_.size(), x);
        const double width = std::numbers::pi / static_cast<double>(pieces_);
        const double phi = std::acos(x);
        const std::size_t p = std::min(pieces_ - 1, static_cast<std::size_t>(phi / width));
        const double t = (phi - (static_cast<double>(p) + 0.5) * width) / (0.5 * width);
        return clenshaw(&local_[p * (local_degree + 1)], local_degree + 1, t);
    }

    // Reference evaluation of the full series.
    double direct(double theta) const {
        return clenshaw(coefficients_.data(), coefficients_.size(), 1.0 - 2.0 * theta / std::numbers::pi);
    }

    std::size_t degree() const noexcept { return coefficients_.size() - 1; }

private:
    std::vector<double> coefficients_;
    std::size_t pieces_ = 0;
    std::vector<double> local_;
};

// Chebyshev coefficients from values at Lobatto nodes x_j = cos(j pi / M).
inline std::vector<double> chebyshev_coefficients(const std::vector<double>& values) {
    const std::size_t m = values.size() - 1;
    std::vector<double> cosines(2 * m);
    for (std::size_t i = 0; i < 2 * m; ++i)
        cosines[i] = std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(m));
    std::vector<double> c(m + 1, 0.0);
    for (std::size_t k = 0; k <= m; ++k) {
        double sum = 0.5 * (values[0] + values[m] * cosines[(k * m) % (2 * m)]);
        for (std::size_t j = 1; j < m; ++j) sum += values[j] * cosines[(k * j) % (2 * m)];
        c[k] = 2.0 * sum / static_cast<double>(m);
    }
    c[0] *= 0.5;
    c[m] *= 0.5;
    return c;
}

// x(v) and x'(v) of the inverse map.
inline double inverse_map(double v, const PopulationSpectrum& pop, double alpha) {
    double x = -1.0 / v;
    for (const auto& a : pop.atoms()) x += alpha * a.weight * a.eigenvalue / (1.0 + a.eigenvalue * v);
    return x;
}

inline double inverse_map_slope(double v, const PopulationSpectrum& pop, double alpha) {
    double d = 1.0 / (v * v);
    for (const auto& a : pop.atoms()) {
        const double t = a.eigenvalue / (1.0 + a.eigenvalue * v);
        d -= alpha * a.weight * t * t;
    }
    return d;
}

// Real critical points of x(v): roots of D(v)^2 - alpha v^2 sum_k w_k s_k^2 D_k(v)^2.
inline std::vector<double> critical_points(const PopulationSpectrum& pop, double alpha) {
    const auto atoms = pop.atoms();
    Poly d{1.0};
    for (const auto& a : atoms) d = poly_mul(d, {1.0, a.eigenvalue});
    Poly q = poly_mul(d, d);
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        Poly dk{1.0};
        for (std::size_t j = 0; j < atoms.size(); ++j)
            if (j != k) dk = poly_mul(dk, {1.0, atoms[j].eigenvalue});
        const double s = atoms[k].eigenvalue;
        q = poly_add(q, poly_shift(poly_mul(dk, dk), 2), -alpha * atoms[k].weight * s * s);
    }
    // At alpha = 1 the leading coefficient cancels; drop it rather than let
    // rounding manufacture a root near infinity.
    double scale = 0.0;
    for (double c : q) scale = std::max(scale, std::abs(c));
    while (q.size() > 1 && std::abs(q.back()) <= 1e-13 * scale) q.pop_back();

    std::vector<double> out;
    for (const auto& r : poly_roots(q)) {
        if (std::abs(r.imag()) > 1e-6 * std::max(1.0, std::abs(r.real()))) continue;
        const double v = r.real();
        bool pole = std::abs(v) < 1e-300;
        for (const auto& a : atoms) pole = pole || std::abs(1.0 + a.eigenvalue * v) < 1e-12;
        if (!pole) out.push_back(v);
    }
    return out;
}

inline std::vector<Interval> exact_support(const PopulationSpectrum& pop, double n) {
    const double alpha = 1.0 / n;
    std::vector<double> candidates{0.0};
    for (double v : critical_points(pop, alpha)) {
        const double x = inverse_map(v, pop, alpha);
        if (x > 0.0 && std::isfinite(x)) candidates.push_back(x);
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<double> unique;
    for (double c : candidates)
        if (unique.empty() || c - unique.back() > 1e-12 * std::max(1.0, c)) unique.push_back(c);

    std::vector<Interval> bands;
    for (std::size_t i = 0; i + 1 < unique.size(); ++i) {
        const double mid = 0.5 * (unique[i] + unique[i + 1]);
        if (exact_density(mid, pop, n) <= 0.0) continue;
        if (!bands.empty() && bands.back().upper == unique[i])
            bands.back().upper = unique[i + 1];
        else
            bands.push_back({unique[i], unique[i + 1]});
    }
    if (bands.empty()) throw NumericalError("no support band found for population spectrum", 0.0);
    const double beyond = bands.back().upper * 1.01 + 1e-12;
    if (exact_density(beyond, pop, n) > 0.0)
        throw NumericalError("support extends beyond the last critical value", beyond);
    return bands;
}

// Chebyshev interpolant of g(theta) on one band, doubling the node count until
// the trailing coefficients reach the noise plateau.
inline std::shared_ptr<const ChebyshevTheta> band_interpolant(const Interval& support,
                                                              const PopulationSpectrum& pop,
                                                              double n,
                                                              const InversionOptions& opt) {
    const Band geometry(support, [](double) { return 0.0; });
    const double half_width = 0.5 * support.width();
    const bool hard_edge = support.lower == 0.0;
    auto g = [&](double t) {
        if (t <= 0.0 && !hard_edge) return 0.0;
        if (t >= std::numbers::pi) return 0.0;
        const double tt = std::max(t, 1e-6);
        return exact_density(geometry.psi(tt), pop, n) * half_width * std::sin(tt);
    };

    std::size_t m = static_cast<std::size_t>(opt.grid_resolution);
    std::vector<double> values(m + 1);
    for (std::size_t j = 0; j <= m; ++j)
        values[j] = g(0.5 * std::numbers::pi * (1.0 - std::cos(std::numbers::pi * j / m)));
    while (true) {
        auto c = chebyshev_coefficients(values);
        double peak = 0.0;
        for (double x : c) peak = std::max(peak, std::abs(x));
        double tail = 0.0;
        for (std::size_t k = (9 * m) / 10; k <= m; ++k) tail = std::max(tail, std::abs(c[k]));
        if (tail <= 1e-7 * peak || 2 * m > static_cast<std::size_t>(opt.max_resolution)) {
            std::size_t keep = c.size();
            while (keep > 1 && std::abs(c[keep - 1]) <= 1e-15 * peak) --keep;
            c.resize(keep);
            return std::make_shared<const ChebyshevTheta>(std::move(c));
        }
        // Nested refinement: the old nodes are the even nodes of the 2M grid.
        std::vector<double> refined(2 * m + 1);
        for (std::size_t j = 0; j <= 2 * m; ++j)
            refined[j] = (j % 2 == 0)
                             ? values[j / 2]
                             : g(0.5 * std::numbers::pi * (1.0 - std::cos(std::numbers::pi * j / (2 * m))));
        values = std::move(refined);
        m *= 2;
    }
}

}  // namespace detail

inline SpectralMeasure mp_general(const PopulationSpectrum& pop, double n,
                                  const InversionOptions& opt = {}) {
    if (!std::isfinite(n) || n <= 0.0) throw DomainError("measurement density n must be finite and > 0");
    if (opt.grid_resolution < 256) throw DomainError("grid resolution must be >= 256");
    if (opt.max_resolution < opt.grid_resolution) throw DomainError("max resolution below grid resolution");

    std::vector<Band> bands;
    for (const auto& support : detail::exact_support(pop, n)) {
        auto cheb = detail::band_interpolant(support, pop, n, opt);
        Band band(support, [cheb](double t) { return std::max(0.0, (*cheb)(t)); });

        // Independent spot check of the branch against Stieltjes inversion.
        double peak = 0.0;
        for (int i = 1; i < 64; ++i)
            peak = std::max(peak, band.density(band.psi(std::numbers::pi * i / 64.0)));
        for (double frac : {0.35, 0.5, 0.65}) {
            const double psi = band.psi(std::numbers::pi * frac);
            const double via_ladder = inverted_density(psi, pop, n, opt.epsilon_ladder);
            if (std::abs(via_ladder - band.density(psi)) > opt.spot_check_tolerance * peak)
                throw NumericalError("Stieltjes inversion disagrees with the boundary-value density",
                                     via_ladder);
        }
        bands.push_back(std::move(band));
    }
    return SpectralMeasure(n, std::max(0.0, 1.0 - n), {}, std::move(bands), opt.grid_resolution);
}

// Closed form when Sigma = I, Silverstein inversion otherwise.
inline SpectralMeasure limiting_measure(const PopulationSpectrum& pop, double n,
                                        const InversionOptions& opt = {}) {
    if (pop.is_single_atom() && pop.atoms()[0].eigenvalue == 1.0) return mp_isotropic(n);
    return mp_general(pop, n, opt);
}

}  // namespace resinfo::spectral
