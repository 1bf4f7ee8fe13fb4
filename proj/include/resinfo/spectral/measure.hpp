// measure.hpp: limiting (or empirical) spectral distributions F^Psi and the
// quadrature shared by every information integral.
//
// A SpectralMeasure is an atom at psi = 0, a list of positive point masses
// (used for empirical and single-point measures) and a list of continuous
// bands. Each band [a, b] is parametrized by
//
//     psi(theta) = a + (b - a) sin^2(theta / 2),   theta in [0, pi],
//
// and stores the mass density in theta, g(theta) = f(psi(theta)) dpsi/dtheta.
// Near either edge psi - a ~ theta^2, so square-root edges (and the
// psi^{-1/2} edge at n = 1) become smooth in theta.

#pragma once

#include "resinfo/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <queue>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

namespace resinfo::spectral {

struct Interval {
    double lower;
    double upper;

    double width() const noexcept { return upper - lower; }
    bool operator==(const Interval&) const = default;
};

struct PointMass {
    double location;  // psi > 0
    double weight;
};

// One band of the continuous part with its theta-space mass density.
class Band {
public:
    Band(Interval support, std::function<double(double)> mass_density)
        : support_(support), mass_density_(std::move(mass_density)) {
        if (!(support.lower >= 0.0) || !(support.upper > support.lower))
            throw DomainError("band must satisfy 0 <= lower < upper");
    }

    const Interval& support() const noexcept { return support_; }
    double lower() const noexcept { return support_.lower; }
    double upper() const noexcept { return support_.upper; }

    double psi(double theta) const noexcept {
        if (theta <= 0.5 * std::numbers::pi) {
            const double s = std::sin(0.5 * theta);
            return support_.lower + support_.width() * s * s;
        }
        const double c = std::cos(0.5 * theta);
        return support_.upper - support_.width() * c * c;
    }

    double theta(double psi) const noexcept {
        if (psi <= support_.lower) return 0.0;
        if (psi >= support_.upper) return std::numbers::pi;
        const double w = support_.width();
        if (psi - support_.lower <= support_.upper - psi)
            return 2.0 * std::asin(std::sqrt((psi - support_.lower) / w));
        return std::numbers::pi - 2.0 * std::asin(std::sqrt((support_.upper - psi) / w));
    }

    // g(theta): probability mass per unit theta.
    double mass_density(double theta) const { return mass_density_(theta); }

    // f(psi): probability mass per unit psi; zero outside the band.
    double density(double psi) const {
        if (psi <= support_.lower || psi >= support_.upper) return 0.0;
        const double t = theta(psi);
        const double jacobian = 0.5 * support_.width() * std::sin(t);
        return mass_density_(t) / jacobian;
    }

private:
    Interval support_;
    std::function<double(double)> mass_density_;
};

struct QuadratureOptions {
    double relative_tolerance = 1e-9;   // failure threshold
    double target_tolerance = 1e-12;    // refinement stops here
    int max_segments = 2000;
};

namespace detail {

// Globally adaptive Gauss-Kronrod (31 point) on [a, b]: repeatedly bisect the
// segment with the largest error estimate. Returns (value, error, L1).
template <class F>
std::tuple<double, double, double> gauss_kronrod(F&& f, double a, double b,
                                                 const QuadratureOptions& opt) {
    using rule = boost::math::quadrature::gauss_kronrod<double, 31>;
    struct Segment {
        double a, b, value, error, l1;
        bool operator<(const Segment& o) const { return error < o.error; }
    };
    auto apply = [&](double lo, double hi) {
        Segment s{lo, hi, 0.0, 0.0, 0.0};
        s.value = rule::integrate(f, lo, hi, 0, 0.0, &s.error, &s.l1);
        return s;
    };
    std::priority_queue<Segment> heap;
    heap.push(apply(a, b));
    double value = heap.top().value, error = heap.top().error, l1 = heap.top().l1;
    while (error > opt.target_tolerance * l1 && static_cast<int>(heap.size()) < opt.max_segments) {
        const Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;
        heap.pop();
        const Segment left = apply(worst.a, mid), right = apply(mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        l1 += left.l1 + right.l1 - worst.l1;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    value = error = l1 = 0.0;
    for (; !heap.empty(); heap.pop()) {
        value += heap.top().value;
        error += heap.top().error;
        l1 += heap.top().l1;
    }
    return {value, error, l1};
}

}  // namespace detail

class SpectralMeasure {
public:
    SpectralMeasure(double measurement_density, double atom_at_zero,
                    std::vector<PointMass> point_masses, std::vector<Band> bands,
                    int grid_resolution = 256)
        : n_(measurement_density),
          atom_at_zero_(atom_at_zero),
          point_masses_(std::move(point_masses)),
          bands_(std::move(bands)),
          grid_resolution_(grid_resolution) {
        if (!(atom_at_zero >= 0.0 && atom_at_zero <= 1.0))
            throw DomainError("atom at zero must lie in [0, 1]");
        for (const auto& p : point_masses_)
            if (!(p.location > 0.0) || !(p.weight > 0.0))
                throw DomainError("point masses need location > 0 and weight > 0");
        std::sort(point_masses_.begin(), point_masses_.end(),
                  [](const auto& x, const auto& y) { return x.location < y.location; });
        std::sort(bands_.begin(), bands_.end(),
                  [](const auto& x, const auto& y) { return x.lower() < y.lower(); });
        for (std::size_t k = 1; k < bands_.size(); ++k)
            if (bands_[k].lower() < bands_[k - 1].upper())
                throw DomainError("bands must be disjoint");
    }

    // Point mass of unit weight at psi (atom at zero empty).
    static SpectralMeasure point(double psi, double measurement_density = 1.0) {
        return SpectralMeasure(measurement_density, 0.0, {{psi, 1.0}}, {});
    }

    // Empirical distribution of eigenvalues (each of weight 1/size). Exact
    // zeros go to the zero atom; negative values are rejected.
    static SpectralMeasure empirical(std::span<const double> eigenvalues,
                                     double measurement_density) {
        if (eigenvalues.empty()) throw DomainError("empirical measure needs eigenvalues");
        const double w = 1.0 / static_cast<double>(eigenvalues.size());
        std::vector<PointMass> masses;
        std::size_t zeros = 0;
        for (double e : eigenvalues) {
            if (!(e >= 0.0)) throw DomainError("eigenvalues must be >= 0");
            if (e == 0.0) ++zeros;
            else masses.push_back({e, w});
        }
        return SpectralMeasure(measurement_density, static_cast<double>(zeros) * w,
                               std::move(masses), {});
    }

    double measurement_density() const noexcept { return n_; }
    double atom_at_zero() const noexcept { return atom_at_zero_; }
    std::span<const PointMass> point_masses() const noexcept { return point_masses_; }
    std::span<const Band> bands() const noexcept { return bands_; }
    int grid_resolution() const noexcept { return grid_resolution_; }

    // Largest point of the support (0 for a measure concentrated at zero).
    double upper_edge() const noexcept {
        double edge = 0.0;
        if (!bands_.empty()) edge = bands_.back().upper();
        if (!point_masses_.empty()) edge = std::max(edge, point_masses_.back().location);
        return edge;
    }

    double density(double psi) const {
        for (const auto& b : bands_)
            if (psi > b.lower() && psi < b.upper()) return b.density(psi);
        return 0.0;
    }

private:
    double n_;
    double atom_at_zero_;
    std::vector<PointMass> point_masses_;
    std::vector<Band> bands_;
    int grid_resolution_;
};

// Integral of f over psi > lower_cutoff against F^Psi. The zero atom never
// contributes. Throws NumericalError if the adaptive rule cannot reach the
// relative tolerance; the exception carries the achieved estimate.
template <class F>
double integrate(const SpectralMeasure& measure, F&& f, double lower_cutoff = 0.0,
                 const QuadratureOptions& opt = {}) {
    if (!(lower_cutoff >= 0.0)) throw DomainError("lower cutoff must be >= 0");
    double total = 0.0;
    for (const auto& p : measure.point_masses())
        if (p.location > lower_cutoff) total += p.weight * f(p.location);

    for (const auto& band : measure.bands()) {
        if (band.upper() <= lower_cutoff) continue;
        const double theta0 = band.theta(lower_cutoff);
        auto integrand = [&](double t) { return f(band.psi(t)) * band.mass_density(t); };
        const auto [value, error, l1] =
            detail::gauss_kronrod(integrand, theta0, std::numbers::pi, opt);
        if (!std::isfinite(value) ||
            error > opt.relative_tolerance * l1 + std::numeric_limits<double>::min())
            throw NumericalError("quadrature did not reach relative tolerance", total + value);
        total += value;
    }
    return total;
}

// Total probability on psi > 0.
inline double positive_mass(const SpectralMeasure& measure) {
    return integrate(measure, [](double) { return 1.0; });
}

inline double total_mass(const SpectralMeasure& measure) {
    return measure.atom_at_zero() + positive_mass(measure);
}

// F^Psi(psi) = P(Psi <= psi).
inline double cdf(const SpectralMeasure& measure, double psi) {
    if (psi < 0.0) return 0.0;
    double total = measure.atom_at_zero();
    for (const auto& p : measure.point_masses())
        if (p.location <= psi) total += p.weight;
    for (const auto& band : measure.bands()) {
        if (psi <= band.lower()) continue;
        const double t1 = band.theta(psi);
        auto g = [&](double t) { return band.mass_density(t); };
        total += std::get<0>(detail::gauss_kronrod(g, 0.0, t1, QuadratureOptions{}));
    }
    return total;
}

// Support bands of a continuous measure: maximal intervals where the density
// exceeds 1e-8 of its maximum, with gaps narrower than two grid steps merged.
// The grid step is the support span divided by the measure's grid resolution.
inline std::vector<Interval> support_bands(const SpectralMeasure& measure) {
    std::vector<Interval> out;
    const auto bands = measure.bands();
    if (bands.empty()) return out;

    // Locate the relative threshold crossing inside each band. Band densities
    // vanish only at the edges, so the crossing is found by bisection in theta
    // from each edge toward the interior maximum.
    constexpr int samples = 512;
    double max_density = 0.0;
    for (const auto& b : bands)
        for (int i = 1; i < samples; ++i) {
            const double t = std::numbers::pi * i / samples;
            max_density = std::max(max_density, b.density(b.psi(t)));
        }
    const double threshold = 1e-8 * max_density;

    for (const auto& b : bands) {
        int peak = 1;
        double best = -1.0;
        for (int i = 1; i < samples; ++i) {
            const double d = b.density(b.psi(std::numbers::pi * i / samples));
            if (d > best) {
                best = d;
                peak = i;
            }
        }
        if (best <= threshold) continue;
        const double t_peak = std::numbers::pi * peak / samples;
        auto crossing = [&](double outside, double inside) {
            for (int it = 0; it < 200 && std::abs(inside - outside) > 1e-15; ++it) {
                const double mid = 0.5 * (outside + inside);
                if (b.density(b.psi(mid)) > threshold) inside = mid;
                else outside = mid;
            }
            return b.psi(inside);
        };
        out.push_back({crossing(0.0, t_peak), crossing(std::numbers::pi, t_peak)});
    }

    const double span = bands.back().upper() - bands.front().lower();
    const double merge_gap = 2.0 * span / std::max(1, measure.grid_resolution());
    std::vector<Interval> merged;
    for (const auto& iv : out) {
        if (!merged.empty() && iv.lower - merged.back().upper < merge_gap)
            merged.back().upper = iv.upper;
        else
            merged.push_back(iv);
    }
    return merged;
}

}  // namespace resinfo::spectral
