// polynomial.hpp: small dense polynomial helpers (ascending coefficients).

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace resinfo::spectral::detail {

using Poly = std::vector<double>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Poly poly_add(Poly a, const Poly& b, double scale = 1.0) {
    if (a.size() < b.size()) a.resize(b.size(), 0.0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
    return a;
}

// Multiply by v^k.
inline Poly poly_shift(const Poly& a, std::size_t k) {
    Poly out(a.size() + k, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i + k] = a[i];
    return out;
}

template <class T>
T poly_eval(const Poly& p, T x) {
    T acc{0};
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

template <class T>
T poly_derivative_eval(const Poly& p, T x) {
    T acc{0};
    for (std::size_t i = p.size(); i-- > 1;) acc = acc * x + static_cast<double>(i) * p[i];
    return acc;
}

// All complex roots via companion-matrix eigenvalues, each polished by a few
// Newton steps. Trailing exact zeros in the leading coefficients are dropped.
inline std::vector<std::complex<double>> poly_roots(Poly p) {
    while (p.size() > 1 && p.back() == 0.0) p.pop_back();
    const std::size_t degree = p.size() - 1;
    if (degree == 0) return {};

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
    for (std::size_t i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < degree; ++i) companion(i, degree - 1) = -p[i] / p[degree];

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    std::vector<std::complex<double>> roots(solver.eigenvalues().begin(),
                                            solver.eigenvalues().end());
    for (auto& r : roots) {
        for (int it = 0; it < 4; ++it) {
            const auto value = poly_eval(p, r);
            const auto slope = poly_derivative_eval(p, r);
            if (slope == std::complex<double>(0.0)) break;
            const auto next = r - value / slope;
            if (std::abs(poly_eval(p, next)) >= std::abs(value)) break;
            r = next;
        }
    }
    return roots;
}

}  // namespace resinfo::spectral::detail
