// exact.hpp: exact finite-size informations of a Gaussian instance as
// eigenvalue sums (total nats; divide by P for per-parameter values).
//
// IB optimum, with gamma = 1 + lambda*/psi_c:
//   I(T;W)   = 1/2 sum_i max(0, ln((1 - 1/gamma)(1 + psi_i/lambda*)))
//   I(T;Y|W) = 1/2 sum_i max(0, ln(gamma psi_i/(lambda* + psi_i)))
// or equivalently over the N eigenvalues nu_i of the normalized regression
// matrix (I_N + X^T X/(N lambda*))^{-1}:
//   I(T;W)   = 1/2 sum_i max(0, ln((1 - 1/gamma)/nu_i))
//   I(T;Y|W) = 1/2 sum_i max(0, ln(gamma (1 - nu_i)))
// Gibbs posterior with tau = N/(2 beta sigma^2):
//   I(T;W)   = 1/2 sum_i ln(1 + (psi_i^2/lambda*)/(psi_i + tau(psi_i + lambda)))
//   I(T;Y|W) = 1/2 sum_i ln(1 + psi_i/(tau(psi_i + lambda)))

#pragma once

#include "resinfo/errors.hpp"
#include "resinfo/info/params.hpp"
#include "resinfo/oracle/instance.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace resinfo::oracle {

inline double exact_available_info(const FiniteInstance& inst, const info::ProblemParams& params) {
    const double ls = params.lambda_star();
    double total = 0.0;
    for (double psi : inst.psi_eigs) total += 0.5 * std::log(1.0 + psi / ls);
    return total;
}

inline info::InfoPair exact_ib_info(const FiniteInstance& inst, const info::ProblemParams& params, double psi_c) {
    if (!(psi_c > 0.0)) throw DomainError("psi_c must be > 0");
    const double ls = params.lambda_star();
    const double gamma = 1.0 + ls / psi_c;
    info::InfoPair out;
    for (double psi : inst.psi_eigs) {
        out.relevant += 0.5 * std::max(0.0, std::log((1.0 - 1.0 / gamma) * (1.0 + psi / ls)));
        if (psi > 0.0) out.residual += 0.5 * std::max(0.0, std::log(gamma * psi / (ls + psi)));
    }
    return out;
}

// Same informations from the nu eigenvalues (one per sample).
inline info::InfoPair exact_ib_info_nu(const FiniteInstance& inst, const info::ProblemParams& params,
                                       double psi_c) {
    if (!(psi_c > 0.0)) throw DomainError("psi_c must be > 0");
    const double ls = params.lambda_star();
    const double gamma = 1.0 + ls / psi_c;
    info::InfoPair out;
    for (double nu : inst.nu_eigs(ls)) {
        out.relevant += 0.5 * std::max(0.0, std::log((1.0 - 1.0 / gamma) / nu));
        if (nu < 1.0) out.residual += 0.5 * std::max(0.0, std::log(gamma * (1.0 - nu)));
    }
    return out;
}

inline info::InfoPair exact_gibbs_info(const FiniteInstance& inst, const info::ProblemParams& params,
                                       double lambda, double tau) {
    if (!(lambda > 0.0) || !(tau > 0.0)) throw DomainError("lambda and tau must be > 0");
    const double ls = params.lambda_star();
    info::InfoPair out;
    for (double psi : inst.psi_eigs) {
        out.relevant += 0.5 * std::log(1.0 + (psi * psi / ls) / (psi + tau * (psi + lambda)));
        out.residual += 0.5 * std::log(1.0 + psi / (tau * (psi + lambda)));
    }
    return out;
}

}  // namespace resinfo::oracle
