#include "resinfo/info/ib.hpp"
#include "resinfo/spectral/marchenko_pastur.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace resinfo;
using namespace resinfo::info;
using spectral::SpectralMeasure;
using spectral::mp_isotropic;

// Reference values below come from 30-digit tanh-sinh quadrature of the
// closed-form (isotropic) or polynomial-root (two-scale) densities in psi.

TEST(Params, LambdaStar) {
    const ProblemParams p(2.0, 4.0);
    EXPECT_DOUBLE_EQ(p.lambda_star(), 0.125);
    EXPECT_THROW(ProblemParams(0.0, 1.0), DomainError);
    EXPECT_THROW(ProblemParams(1.0, -1.0), DomainError);
    EXPECT_THROW(ProblemParams(NAN, 1.0), DomainError);
}

TEST(IBControl, Gamma) {
    const ProblemParams p(1.0, 1.0);
    const auto c = IBControl::from_cutoff(0.5, p);
    EXPECT_DOUBLE_EQ(c.gamma, 3.0);
    EXPECT_TRUE(std::isinf(IBControl::from_cutoff(0.0, p).gamma));
    EXPECT_DOUBLE_EQ(IBControl::from_gamma(3.0, p).psi_c, 0.5);
    EXPECT_THROW(IBControl::from_cutoff(-1.0, p), DomainError);
    EXPECT_THROW(IBControl::from_gamma(1.0, p), DomainError);
}

TEST(AvailableInfo, PointMass) {
    EXPECT_NEAR(available_info(SpectralMeasure::point(1.0), ProblemParams(1.0, 1.0)), 0.5 * std::log(2.0), 1e-15);
}

TEST(AvailableInfo, DecaysWithLambdaStar) {
    const auto m = mp_isotropic(1.0);
    double prev = INFINITY;
    for (double snr : {100.0, 10.0, 1.0, 0.1, 1e-3, 1e-6}) {
        const double a = available_info(m, ProblemParams(1.0, snr));
        EXPECT_LT(a, prev);
        prev = a;
    }
    EXPECT_LT(prev, 1e-5);
}

TEST(AvailableInfo, IsotropicReference) {
    EXPECT_NEAR(available_info(mp_isotropic(0.5), ProblemParams(0.5, 1.0)), 0.15838379712007586, 1e-10);
    EXPECT_NEAR(available_info(mp_isotropic(1.0), ProblemParams(1.0, 1.0)), 0.29022881943455087, 1e-10);
    EXPECT_NEAR(available_info(mp_isotropic(2.0), ProblemParams(2.0, 1.0)), 0.49436716497629169, 1e-10);
}

TEST(IBPoint, PointMass) {
    const auto pair = ib_point(SpectralMeasure::point(1.0), ProblemParams(1.0, 1.0), 0.5);
    EXPECT_NEAR(pair.relevant, 0.5 * std::log(4.0 / 3.0), 1e-15);
    EXPECT_NEAR(pair.residual, 0.5 * std::log(1.5), 1e-15);
}

TEST(IBPoint, Errors) {
    const auto m = mp_isotropic(1.0);
    const ProblemParams p(1.0, 1.0);
    EXPECT_THROW(ib_point(m, p, 0.0), DivergenceError);
    EXPECT_THROW(ib_point(m, p, -0.1), DomainError);
}

TEST(IBPoint, BeyondUpperEdgeIsZero) {
    for (double snr : {0.1, 1.0, 10.0}) {
        const auto pair = ib_point(mp_isotropic(1.0), ProblemParams(1.0, snr), 4.0);
        EXPECT_EQ(pair.relevant, 0.0);
        EXPECT_EQ(pair.residual, 0.0);
    }
}

TEST(IBPoint, IsotropicReference) {
    struct Case { double n, rel, res; };
    for (const auto& c : {Case{0.5, 0.14618625607771786, 0.52603360745076621},
                          Case{1.0, 0.24889264265146053, 0.60343651236385693},
                          Case{2.0, 0.40323779630679636, 0.59482374704280155}}) {
        const auto pair = ib_point(mp_isotropic(c.n), ProblemParams(c.n, 1.0), 0.1);
        EXPECT_NEAR(pair.relevant, c.rel, 1e-10) << c.n;
        EXPECT_NEAR(pair.residual, c.res, 1e-10) << c.n;
    }
}

TEST(IBPoint, TwoScaleReference) {
    const auto pop = spectral::TwoScale(0.1).population();
    {
        const auto m = spectral::mp_general(pop, 4.0);
        const ProblemParams p(4.0, 1.0);
        EXPECT_NEAR(available_info(m, p), 0.63821976736519559, 1e-7);
        const auto pair = ib_point(m, p, 0.5);
        EXPECT_NEAR(pair.relevant, 0.24459742331375754, 1e-7);
        EXPECT_NEAR(pair.residual, 0.065791996140775044, 1e-7);
    }
    {
        const auto m = spectral::mp_general(pop, 0.25);
        const ProblemParams p(0.25, 1.0);
        EXPECT_NEAR(available_info(m, p), 0.080438564809562711, 1e-7);
        const auto pair = ib_point(m, p, 0.5);
        EXPECT_NEAR(pair.relevant, 0.065715685352594147, 1e-7);
        EXPECT_NEAR(pair.residual, 0.16460059595942394, 1e-7);
    }
}

TEST(IBPoint, NonNegativeAndDataProcessing) {
    for (double n : {0.25, 1.0, 4.0})
        for (double snr : {0.1, 1.0, 10.0}) {
            const auto m = mp_isotropic(n);
            const ProblemParams p(n, snr);
            const double avail = available_info(m, p);
            for (double c = 1e-6; c < 20.0; c *= 3.0) {
                const auto pair = ib_point(m, p, c);
                EXPECT_GE(pair.relevant, 0.0);
                EXPECT_GE(pair.residual, 0.0);
                EXPECT_LE(pair.relevant, avail + 1e-12);
            }
        }
}

TEST(IBPoint, LimitRecovery) {
    const auto m = mp_isotropic(1.0);
    const ProblemParams p(1.0, 1.0);
    const double avail = available_info(m, p);
    EXPECT_LT((avail - ib_point(m, p, 1e-8).relevant) / avail, 1e-4);
}

TEST(IBPoint, LogarithmicDivergence) {
    for (double n : {0.5, 1.0, 2.0}) {
        const auto m = mp_isotropic(n);
        const ProblemParams p(n, 1.0);
        const double mass = spectral::positive_mass(m);
        const double diff = ib_point(m, p, 1e-8).residual - ib_point(m, p, 1e-6).residual;
        const double expected = mass * 0.5 * std::log(100.0);
        EXPECT_NEAR(diff, expected, 0.01 * expected) << n;
    }
}

TEST(SolveCutoff, PointMassRoot) {
    const auto c = solve_cutoff(SpectralMeasure::point(1.0), ProblemParams(1.0, 1.0), 0.5);
    EXPECT_NEAR(c.psi_c, std::sqrt(2.0) - 1.0, 1e-8);
}

TEST(SolveCutoff, HitsTarget) {
    for (double n : {0.5, 1.0, 2.0})
        for (double mu : {0.1, 0.5, 0.8, 0.95}) {
            const auto m = mp_isotropic(n);
            const ProblemParams p(n, 1.0);
            const auto c = solve_cutoff(m, p, mu);
            const double ratio = ib_point(m, p, c).relevant / available_info(m, p);
            EXPECT_NEAR(ratio, mu, 1e-9 * mu);
        }
}

TEST(SolveCutoff, Errors) {
    const auto m = mp_isotropic(1.0);
    const ProblemParams p(1.0, 1.0);
    EXPECT_THROW(solve_cutoff(m, p, 0.0), DomainError);
    EXPECT_THROW(solve_cutoff(m, p, 1.0), DomainError);
    EXPECT_THROW(solve_cutoff(m, p, -0.5), DomainError);
}

TEST(Frontier, MonotoneAndTrailingZeros) {
    const auto m = mp_isotropic(2.0);
    const ProblemParams p(2.0, 1.0);
    std::vector<double> grid;
    for (double c = 1e-4; c < 10.0; c *= 1.5) grid.push_back(c);
    const auto f = frontier(m, p, grid);
    ASSERT_EQ(f.size(), grid.size());
    for (std::size_t i = 1; i < f.size(); ++i) {
        EXPECT_LE(f[i].second.relevant, f[i - 1].second.relevant);
        EXPECT_LE(f[i].second.residual, f[i - 1].second.residual);
    }
    EXPECT_EQ(f.back().second, InfoPair{});
    EXPECT_THROW(frontier(m, p, {0.1, 0.05}), DomainError);
    EXPECT_THROW(frontier(m, p, {0.0, 0.05}), DomainError);
}

TEST(IBPoint, EmpiricalMeasureProperties) {
    // Random eigenvalue lists: non-negativity, data processing, monotone frontier.
    std::mt19937_64 rng(7);
    std::gamma_distribution<double> g(0.7, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> eig(50);
        for (auto& e : eig) e = g(rng);
        const auto m = SpectralMeasure::empirical(eig, 1.0);
        const ProblemParams p(1.0, 0.5 + trial * 0.2);
        const double avail = available_info(m, p);
        InfoPair prev{INFINITY, INFINITY};
        for (double c = 1e-3; c < 20.0; c *= 1.7) {
            const auto pair = ib_point(m, p, c);
            EXPECT_GE(pair.residual, 0.0);
            EXPECT_LE(pair.relevant, avail + 1e-12);
            EXPECT_LE(pair.relevant, prev.relevant);
            EXPECT_LE(pair.residual, prev.residual);
            prev = pair;
        }
    }
}
