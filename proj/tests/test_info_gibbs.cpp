#include "resinfo/info/descent.hpp"
#include "resinfo/info/gibbs.hpp"
#include "resinfo/spectral/marchenko_pastur.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace resinfo;
using namespace resinfo::info;
using spectral::SpectralMeasure;
using spectral::mp_isotropic;

namespace {

constexpr double tiny_lambda = 1e-14;  // stands in for lambda -> 0+

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i) g[i] = lo * std::pow(hi / lo, double(i) / (count - 1));
    return g;
}

}  // namespace

TEST(GibbsControl, Validation) {
    EXPECT_THROW(GibbsControl(0.0, 1.0), DomainError);
    EXPECT_THROW(GibbsControl(1.0, 0.0), DomainError);
    EXPECT_THROW(GibbsControl(1.0, -1.0), DomainError);
    const auto c = GibbsControl::from_beta(0.1, 2.0, 100.0, 0.5);
    EXPECT_DOUBLE_EQ(c.tau, 50.0);
    EXPECT_DOUBLE_EQ(c.beta(100.0, 0.5), 2.0);
}

TEST(GibbsPoint, PointMass) {
    const auto pair = gibbs_point(SpectralMeasure::point(1.0), ProblemParams(1.0, 1.0), {tiny_lambda, 1.0});
    EXPECT_NEAR(pair.relevant, 0.5 * std::log(1.5), 1e-13);
    EXPECT_NEAR(pair.residual, 0.5 * std::log(2.0), 1e-13);
}

TEST(GibbsPoint, HotLimitVanishes) {
    const auto pair = gibbs_point(mp_isotropic(1.0), ProblemParams(1.0, 1.0), {1e-6, 1e12});
    EXPECT_LT(pair.relevant, 1e-11);
    EXPECT_LT(pair.residual, 1e-11);
}

TEST(GibbsPoint, IsotropicReference) {
    struct Case { double n, rel, res; };
    for (const auto& c : {Case{0.5, 0.14817754601654954, 0.5994735909271133},
                          Case{1.0, 0.27241344553486847, 1.1982493749759657},
                          Case{2.0, 0.46692385217527315, 1.1989467273102596}}) {
        const auto pair = gibbs_point(mp_isotropic(c.n), ProblemParams(c.n, 1.0), {1e-6, 0.1});
        EXPECT_NEAR(pair.relevant, c.rel, 1e-10) << c.n;
        EXPECT_NEAR(pair.residual, c.res, 1e-10) << c.n;
    }
}

TEST(GibbsPoint, DataProcessingOnGrid) {
    for (double n : {0.5, 1.0, 3.0}) {
        const auto m = mp_isotropic(n);
        const ProblemParams p(n, 1.0);
        const double avail = available_info(m, p);
        for (double tau : log_grid(1e-4, 1e2, 10))
            for (double lambda : log_grid(1e-6, 1e2, 10))
                EXPECT_LE(gibbs_point(m, p, {lambda, tau}).relevant, avail + 1e-12);
    }
}

TEST(GibbsPoint, StrictlyDecreasingInTau) {
    const auto m = spectral::mp_general(spectral::TwoScale(0.1).population(), 2.0);
    const ProblemParams p(2.0, 1.0);
    for (double lambda : {1e-6, 0.1, 1.0}) {
        InfoPair prev{INFINITY, INFINITY};
        for (double tau : log_grid(1e-4, 1e3, 30)) {
            const auto pair = gibbs_point(m, p, {lambda, tau});
            EXPECT_LT(pair.relevant, prev.relevant);
            EXPECT_LT(pair.residual, prev.residual);
            prev = pair;
        }
    }
}

TEST(GibbsPoint, ZeroTemperatureRelevantLimit) {
    for (double n : {0.5, 1.0, 2.0}) {
        const auto m = mp_isotropic(n);
        const ProblemParams p(n, 1.0);
        const double avail = available_info(m, p);
        EXPECT_NEAR(gibbs_point(m, p, {1e-6, 1e-8}).relevant, avail, 1e-3 * avail);
    }
}

TEST(GibbsPoint, ResidualLogarithmicGrowth) {
    for (double n : {0.5, 1.0, 2.0}) {
        const auto m = mp_isotropic(n);
        const ProblemParams p(n, 1.0);
        const double mass = spectral::positive_mass(m);
        const double diff = gibbs_point(m, p, {1.0, 1e-8}).residual - gibbs_point(m, p, {1.0, 1e-6}).residual;
        const double expected = mass * 0.5 * std::log(100.0);
        EXPECT_NEAR(diff, expected, 0.01 * expected);
    }
}

TEST(SolveTemperature, PointMassRoundTrip) {
    const double mu = std::log(1.5) / std::log(2.0);
    const auto c = solve_temperature(SpectralMeasure::point(1.0), ProblemParams(1.0, 1.0), tiny_lambda, mu);
    EXPECT_NEAR(c.tau, 1.0, 1e-8);
}

TEST(SolveTemperature, MonotoneInMu) {
    const auto m = mp_isotropic(1.5);
    const ProblemParams p(1.5, 1.0);
    double prev = INFINITY;
    for (double mu : {0.05, 0.2, 0.5, 0.8, 0.95, 0.99}) {
        const double tau = solve_temperature(m, p, 1e-6, mu).tau;
        EXPECT_LT(tau, prev);
        prev = tau;
    }
}

TEST(SolveTemperature, Errors) {
    const auto m = mp_isotropic(1.0);
    const ProblemParams p(1.0, 1.0);
    EXPECT_THROW(solve_temperature(m, p, 1e-6, 0.0), DomainError);
    EXPECT_THROW(solve_temperature(m, p, 1e-6, 1.0), DomainError);
    EXPECT_THROW(solve_temperature(m, p, 0.0, 0.5), DomainError);
}

TEST(Efficiency, BoundedAndDominated) {
    for (double n : {0.3, 1.0, 3.0})
        for (double lambda : {1e-6, 0.1, 10.0})
            for (double mu : {0.2, 0.6, 0.9}) {
                const auto m = mp_isotropic(n);
                const auto e = efficiency(m, ProblemParams(n, 1.0), lambda, mu);
                EXPECT_GE(e.gibbs_residual, e.ib_residual - 1e-9);
                EXPECT_GE(e.eta, 0.0);
                EXPECT_LE(e.eta, 1.0 + 1e-9);
                EXPECT_DOUBLE_EQ(e.eta, e.ib_residual / e.gibbs_residual);
            }
}

TEST(Efficiency, OptimalRidgeNearlyOptimal) {
    // At lambda = lambda* the Gibbs channel is close to the IB frontier.
    const ProblemParams p(2.0, 1.0);
    const auto e = efficiency(mp_isotropic(2.0), p, p.lambda_star(), 0.9);
    EXPECT_GT(e.eta, 0.99);
}

TEST(Asymptotic, TrivialValues) {
    const auto pm = SpectralMeasure::point(1.0);
    const ProblemParams p(1.0, 1.0);
    EXPECT_EQ(asymptotic_cutoff(pm, p, 1.0), 0.0);
    EXPECT_EQ(asymptotic_temperature(pm, p, 1.0, 1.0), 0.0);
    EXPECT_NEAR(asymptotic_cutoff(pm, p, 0.99), 0.01 * std::log(2.0), 1e-15);
    EXPECT_NEAR(asymptotic_temperature(pm, p, 1.0, 0.99), 0.01 * std::log(2.0), 1e-15);
    EXPECT_EQ(asymptotic_efficiency(pm, p, 1e-6, 0.99), 1.0);
    EXPECT_THROW(asymptotic_cutoff(pm, p, 0.5), DomainError);
    EXPECT_THROW(asymptotic_temperature(pm, p, 1.0, 1.01), DomainError);
}

TEST(Asymptotic, OptimalRidgeGivesUnitEfficiency) {
    for (double n : {0.5, 1.0, 2.0})
        for (double mu : {0.95, 0.999}) {
            const ProblemParams p(n, 1.0);
            EXPECT_NEAR(asymptotic_efficiency(mp_isotropic(n), p, p.lambda_star(), mu), 1.0, 1e-12);
        }
}

TEST(Asymptotic, JensenGapNonNegative) {
    for (double n : {0.25, 1.0, 4.0})
        for (double lambda : {1e-6, 1e-2, 1.0, 100.0})
            for (double snr : {0.1, 1.0, 10.0}) {
                EXPECT_GE(jensen_gap(mp_isotropic(n), ProblemParams(n, snr), lambda), -1e-12);
                EXPECT_GE(jensen_gap(spectral::mp_general(spectral::TwoScale(0.1).population(), n),
                                     ProblemParams(n, snr), lambda),
                          -1e-12);
            }
}

TEST(Asymptotic, CutoffNearOneWithinOnePercent) {
    for (double n : {0.5, 1.0, 2.0}) {
        const auto m = mp_isotropic(n);
        const ProblemParams p(n, 1.0);
        const double cut = solve_cutoff(m, p, 0.999).psi_c;
        EXPECT_NEAR(asymptotic_cutoff(m, p, 0.999), cut, 0.01 * cut) << "n = " << n;
    }
}

TEST(Asymptotic, TemperatureNearOneWithinOnePercent) {
    const auto m = mp_isotropic(1.0);
    const ProblemParams p(1.0, 1.0);
    const double tau = solve_temperature(m, p, 1e-6, 0.999).tau;
    EXPECT_NEAR(asymptotic_temperature(m, p, 1e-6, 0.999), tau, 0.01 * tau);
}

TEST(Asymptotic, EfficiencyNearOneWithinTwoPercent) {
    const auto m = mp_isotropic(1.0);
    const ProblemParams p(1.0, 1.0);
    const double eta = efficiency(m, p, 1e-6, 0.999).eta;
    EXPECT_NEAR(asymptotic_efficiency(m, p, 1e-6, 0.999), eta, 0.02 * eta);
}

TEST(ResidualSweep, GibbsAboveIB) {
    const MeasureFamily family = [](double n) { return mp_isotropic(n); };
    const auto sweep = residual_sweep(family, 1.0, 1e-6, 0.8, log_grid(0.1, 10.0, 9));
    ASSERT_EQ(sweep.size(), 9u);
    for (const auto& pt : sweep) {
        EXPECT_GE(pt.gibbs.residual, pt.ib.residual - 1e-9);
        EXPECT_NEAR(pt.ib.relevant / pt.available, 0.8, 1e-8);
        EXPECT_NEAR(pt.gibbs.relevant / pt.available, 0.8, 1e-8);
    }
    EXPECT_THROW(residual_sweep(family, 1.0, 1e-6, 0.8, {}), DomainError);
}

TEST(Descent, SingleAndDoublePeaks) {
    std::vector<double> xs, one, two;
    for (int i = 0; i < 64; ++i) {
        const double x = i / 63.0;
        xs.push_back(x);
        one.push_back(std::exp(-50 * (x - 0.4) * (x - 0.4)));
        two.push_back(std::exp(-200 * (x - 0.2) * (x - 0.2)) + 0.5 * std::exp(-200 * (x - 0.7) * (x - 0.7)));
    }
    auto a = interior_maxima(xs, one);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_NEAR(a[0].x, 0.4, 1.0 / 63);
    auto b = interior_maxima(xs, two);
    ASSERT_EQ(b.size(), 2u);
    EXPECT_LT(b[0].x, b[1].x);
    EXPECT_EQ(interior_minima(xs, two).size(), 1u);
}

TEST(Descent, IgnoresRippleAndEndpoints) {
    std::vector<double> xs, ys;
    for (int i = 0; i < 64; ++i) {
        xs.push_back(i);
        ys.push_back(0.01 * i + ((i % 2) ? 5e-5 : 0.0));  // monotone trend plus sub-threshold ripple
    }
    EXPECT_TRUE(interior_maxima(xs, ys).empty());
    std::vector<double> edge(64);
    for (int i = 0; i < 64; ++i) edge[i] = -i;  // maximum at the first sample only
    EXPECT_TRUE(interior_maxima(xs, edge).empty());
}

TEST(Descent, RequiresSpan) {
    std::vector<double> xs{0, 1, 2, 3, 4}, ys{0, 0, 1, 0, 0};
    DescentOptions strict;
    strict.min_points = 4;
    EXPECT_EQ(interior_maxima(xs, ys).size(), 1u);
    EXPECT_TRUE(interior_maxima(xs, ys, strict).empty());
}
