// descent.hpp: interior extrema of a sampled curve, used to count descent
// peaks in residual-information sweeps.
//
// A sample i is an interior maximum when, on each side, the curve drops by
// more than min_change before it next rises above y[i] (topographic
// prominence), and the lowest point on that side lies at least
// min_points - 1 grid steps away. Ripple below min_change is ignored.

#pragma once

#include "resinfo/errors.hpp"

#include <cstddef>
#include <vector>

namespace resinfo::info {

struct Extremum {
    std::size_t index;
    double x;
    double y;
    double rise;  // y - lowest point to the left
    double fall;  // y - lowest point to the right
};

struct DescentOptions {
    double min_change = 1e-4;
    std::size_t min_points = 3;
};

inline std::vector<Extremum> interior_maxima(const std::vector<double>& xs, const std::vector<double>& ys,
                                             const DescentOptions& opt = {}) {
    if (xs.size() != ys.size()) throw DomainError("x and y must have equal length");
    std::vector<Extremum> out;
    const std::size_t n = ys.size();
    const std::size_t steps = opt.min_points > 0 ? opt.min_points - 1 : 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        // Plateaus count once, at their first sample.
        if (ys[i - 1] >= ys[i] || ys[i + 1] > ys[i]) continue;
        std::size_t end = i;
        while (end + 1 < n && ys[end + 1] == ys[i]) ++end;
        if (end + 1 >= n) continue;

        std::size_t left_min = i;
        for (std::size_t k = i; k-- > 0;) {
            if (ys[k] > ys[i]) break;
            if (ys[k] <= ys[left_min]) left_min = k;
        }
        std::size_t right_min = end;
        for (std::size_t k = end + 1; k < n; ++k) {
            if (ys[k] > ys[i]) break;
            if (ys[k] <= ys[right_min]) right_min = k;
        }
        const double rise = ys[i] - ys[left_min];
        const double fall = ys[i] - ys[right_min];
        if (rise > opt.min_change && fall > opt.min_change && i - left_min >= steps &&
            right_min - end >= steps)
            out.push_back({i, xs[i], ys[i], rise, fall});
    }
    return out;
}

inline std::vector<Extremum> interior_minima(const std::vector<double>& xs, std::vector<double> ys,
                                             const DescentOptions& opt = {}) {
    for (auto& y : ys) y = -y;
    auto out = interior_maxima(xs, ys, opt);
    for (auto& e : out) e.y = -e.y;
    return out;
}

}  // namespace resinfo::info
