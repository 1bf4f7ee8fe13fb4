// population.hpp: population covariance spectra F^Sigma as finite atom mixtures.

#pragma once

#include "resinfo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace resinfo::spectral {

struct PopulationAtom {
    double eigenvalue;  // s > 0
    double weight;      // probability mass

    bool operator==(const PopulationAtom&) const = default;
};

// Discrete population spectrum. Atoms are kept sorted by eigenvalue and
// identical eigenvalues are merged, so every atom is distinct.
class PopulationSpectrum {
public:
    explicit PopulationSpectrum(std::vector<PopulationAtom> atoms) {
        if (atoms.empty()) throw DomainError("population spectrum needs at least one atom");
        double total = 0.0;
        for (const auto& a : atoms) {
            if (!std::isfinite(a.eigenvalue) || a.eigenvalue <= 0.0)
                throw DomainError("population eigenvalues must be finite and > 0");
            if (!std::isfinite(a.weight) || a.weight <= 0.0)
                throw DomainError("population weights must be finite and > 0");
            total += a.weight;
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw DomainError("population weights must sum to 1");

        std::sort(atoms.begin(), atoms.end(),
                  [](const auto& x, const auto& y) { return x.eigenvalue < y.eigenvalue; });
        for (const auto& a : atoms) {
            if (!atoms_.empty() && atoms_.back().eigenvalue == a.eigenvalue)
                atoms_.back().weight += a.weight;
            else
                atoms_.push_back(a);
        }
    }

    // Sigma = I.
    static PopulationSpectrum isotropic() { return PopulationSpectrum({{1.0, 1.0}}); }

    std::span<const PopulationAtom> atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    double max_eigenvalue() const noexcept { return atoms_.back().eigenvalue; }
    double min_eigenvalue() const noexcept { return atoms_.front().eigenvalue; }

    // tr(Sigma)/P
    double mean_eigenvalue() const noexcept {
        double m = 0.0;
        for (const auto& a : atoms_) m += a.weight * a.eigenvalue;
        return m;
    }

    bool is_single_atom() const noexcept { return atoms_.size() == 1; }

    bool operator==(const PopulationSpectrum&) const = default;

private:
    std::vector<PopulationAtom> atoms_;
};

// Two-scale model: equal mixture of s_+ and s_- with (s_+ + s_-)/2 = 1 and
// anisotropy ratio r = s_-/s_+ in (0, 1].
class TwoScale {
public:
    explicit TwoScale(double ratio) : ratio_(ratio) {
        if (!std::isfinite(ratio) || ratio <= 0.0 || ratio > 1.0)
            throw DomainError("two-scale anisotropy ratio must lie in (0, 1]");
    }

    double ratio() const noexcept { return ratio_; }
    double s_plus() const noexcept { return 2.0 / (1.0 + ratio_); }
    double s_minus() const noexcept { return 2.0 * ratio_ / (1.0 + ratio_); }

    PopulationSpectrum population() const {
        return PopulationSpectrum({{s_minus(), 0.5}, {s_plus(), 0.5}});
    }

private:
    double ratio_;
};

}  // namespace resinfo::spectral
