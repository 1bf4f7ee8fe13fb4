// instance.hpp: concrete (P, N) realizations of the fixed-design model
// X = Sigma^{1/2} Z with iid standard normal Z, and their spectra.
//
// Spectra come from the smaller of the two Gram matrices (X X^T/N or
// X^T X/N, formed with BLAS syrk and diagonalized with LAPACK dsyevd); the
// larger one shares its nonzero eigenvalues and is padded with zeros.

#pragma once

#include "resinfo/errors.hpp"
#include "resinfo/oracle/rng.hpp"
#include "resinfo/spectral/measure.hpp"
#include "resinfo/spectral/population.hpp"

#include <Eigen/Dense>
#include <cblas.h>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace resinfo::oracle {

struct FiniteInstance {
    std::size_t P = 0;
    std::size_t N = 0;
    Eigen::MatrixXd X;              // P x N; empty for spectrum-only instances
    std::vector<double> sigma;      // diagonal of Sigma (length P)
    std::vector<double> psi_eigs;   // eigenvalues of X X^T / N, ascending, length P
    std::vector<double> phi_eigs;   // eigenvalues of X^T X / N, ascending, length N

    double n() const noexcept { return static_cast<double>(N) / static_cast<double>(P); }
    bool has_design() const noexcept { return X.size() > 0; }

    // nu_i = 1 / (1 + phi_i / lambda*), one per sample.
    std::vector<double> nu_eigs(double lambda_star) const {
        std::vector<double> nu(phi_eigs.size());
        for (std::size_t i = 0; i < nu.size(); ++i) nu[i] = 1.0 / (1.0 + phi_eigs[i] / lambda_star);
        return nu;
    }

    std::size_t rank() const noexcept {
        return static_cast<std::size_t>(std::count_if(psi_eigs.begin(), psi_eigs.end(),
                                                      [](double e) { return e > 0.0; }));
    }

    spectral::SpectralMeasure empirical_measure() const {
        return spectral::SpectralMeasure::empirical(psi_eigs, n());
    }
};

namespace detail {

// Eigenvalues (ascending) of the m x m matrix scale * A A^T (or A^T A when
// transpose) for column-major A, via dsyrk + dsyevd.
inline std::vector<double> gram_eigenvalues(const Eigen::MatrixXd& a, bool transpose, double scale) {
    const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
    const int m = transpose ? cols : rows;
    const int k = transpose ? rows : cols;
    std::vector<double> gram(static_cast<std::size_t>(m) * m, 0.0);
    cblas_dsyrk(CblasColMajor, CblasLower, transpose ? CblasTrans : CblasNoTrans, m, k, scale, a.data(),
                rows, 0.0, gram.data(), m);
    std::vector<double> w(m);
    const int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', m, gram.data(), m, w.data());
    if (info != 0) throw NumericalError("dsyevd failed with info " + std::to_string(info), info);
    return w;
}

inline void fill_spectra(FiniteInstance& inst, std::vector<double> small) {
    for (auto& e : small) e = std::max(e, 0.0);
    std::sort(small.begin(), small.end());
    auto padded = [&](std::size_t len) {
        std::vector<double> out(len - small.size(), 0.0);
        out.insert(out.end(), small.begin(), small.end());
        return out;
    };
    inst.psi_eigs = padded(inst.P);
    inst.phi_eigs = padded(inst.N);
}

// Atom multiplicities at dimension P: rounded shares, remainder to the
// largest-weight atom.
inline std::vector<std::size_t> atom_counts(const spectral::PopulationSpectrum& pop, std::size_t P) {
    const auto atoms = pop.atoms();
    std::vector<long long> counts(atoms.size());
    long long total = 0;
    std::size_t heaviest = 0;
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        counts[k] = std::llround(atoms[k].weight * static_cast<double>(P));
        total += counts[k];
        if (atoms[k].weight > atoms[heaviest].weight) heaviest = k;
    }
    counts[heaviest] += static_cast<long long>(P) - total;
    std::vector<std::size_t> out(atoms.size());
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        if (counts[k] <= 0)
            throw ConstructionError("population atom " + std::to_string(k) + " gets no coordinate at P = " +
                                    std::to_string(P));
        out[k] = static_cast<std::size_t>(counts[k]);
    }
    return out;
}

}  // namespace detail

// Full design X = Sigma^{1/2} Z; Z filled column by column from the seed.
inline FiniteInstance sample_design(std::size_t P, std::size_t N, const spectral::PopulationSpectrum& pop,
                                    std::uint64_t seed) {
    if (P < 1 || N < 1) throw DomainError("P and N must be >= 1");
    FiniteInstance inst;
    inst.P = P;
    inst.N = N;
    const auto counts = detail::atom_counts(pop, P);
    const auto atoms = pop.atoms();
    inst.sigma.reserve(P);
    for (std::size_t k = 0; k < atoms.size(); ++k) inst.sigma.insert(inst.sigma.end(), counts[k], atoms[k].eigenvalue);

    Rng rng(seed);
    inst.X.resize(static_cast<Eigen::Index>(P), static_cast<Eigen::Index>(N));
    for (Eigen::Index j = 0; j < inst.X.cols(); ++j)
        for (Eigen::Index i = 0; i < inst.X.rows(); ++i)
            inst.X(i, j) = std::sqrt(inst.sigma[static_cast<std::size_t>(i)]) * rng.normal();

    const bool use_samples = N < P;
    detail::fill_spectra(inst, detail::gram_eigenvalues(inst.X, use_samples, 1.0 / static_cast<double>(N)));
    return inst;
}

inline FiniteInstance sample_design(std::size_t P, std::size_t N, std::uint64_t seed) {
    return sample_design(P, N, spectral::PopulationSpectrum::isotropic(), seed);
}

// Spectrum of an isotropic instance without forming X: the singular values of
// the bidiagonal Laguerre model with diagonal chi_{M}, chi_{M-1}, ...,
// chi_{M-m+1} and subdiagonal chi_{m-1}, ..., chi_1 (m = min(P, N),
// M = max(P, N)) are distributed exactly as those of an m x M Gaussian matrix.
inline FiniteInstance sample_isotropic_spectrum(std::size_t P, std::size_t N, std::uint64_t seed) {
    if (P < 1 || N < 1) throw DomainError("P and N must be >= 1");
    FiniteInstance inst;
    inst.P = P;
    inst.N = N;
    inst.sigma.assign(P, 1.0);
    const std::size_t m = std::min(P, N), big = std::max(P, N);
    Rng rng(seed);
    std::vector<double> d(m), e(m > 1 ? m - 1 : 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        d[i] = rng.chi(static_cast<double>(big - i));
        if (i + 1 < m) e[i] = rng.chi(static_cast<double>(m - 1 - i));
    }
    const int info = LAPACKE_dbdsqr(LAPACK_COL_MAJOR, 'L', static_cast<int>(m), 0, 0, 0, d.data(), e.data(),
                                    nullptr, 1, nullptr, 1, nullptr, 1);
    if (info != 0) throw NumericalError("dbdsqr failed with info " + std::to_string(info), info);
    for (auto& s : d) s = s * s / static_cast<double>(N);
    detail::fill_spectra(inst, std::move(d));
    return inst;
}

// Kolmogorov distance between the empirical CDF of sorted samples and a CDF.
template <class Cdf>
double ks_distance(const std::vector<double>& sorted, Cdf&& cdf) {
    const double count = static_cast<double>(sorted.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        worst = std::max({worst, std::abs(static_cast<double>(i + 1) / count - f),
                          std::abs(f - static_cast<double>(i) / count)});
    }
    return worst;
}

// Two-sample Kolmogorov-Smirnov statistic for sorted samples.
inline double ks_two_sample(const std::vector<double>& a, const std::vector<double>& b) {
    std::size_t i = 0, j = 0;
    double worst = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        worst = std::max(worst, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
    }
    return worst;
}

}  // namespace resinfo::oracle
