// run.hpp: experiment drivers. Each kind expands its grids into independent
// points, evaluates them on the pool, and assembles a table whose rows follow
// the sorted grid order.

#pragma once

#include "resinfo/info/descent.hpp"
#include "resinfo/info/gibbs.hpp"
#include "resinfo/info/ib.hpp"
#include "resinfo/oracle/exact.hpp"
#include "resinfo/oracle/instance.hpp"
#include "resinfo/oracle/posterior.hpp"
#include "resinfo/spectral/marchenko_pastur.hpp"
#include "resinfo/sweep/config.hpp"
#include "resinfo/sweep/pool.hpp"
#include "resinfo/sweep/table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace resinfo::sweep {

namespace detail {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

inline std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline std::string fmt(double v, int digits = 6) {
    std::ostringstream s;
    s.precision(digits);
    s << v;
    return s.str();
}

inline spectral::PopulationSpectrum population(double r) {
    if (r == 1.0) return spectral::PopulationSpectrum::isotropic();
    return spectral::TwoScale(r).population();
}

// Limiting measures for every (r, n), built once and shared by all points.
class MeasureCache {
public:
    MeasureCache(const std::vector<double>& rs, const std::vector<double>& ns, const ExperimentConfig& c,
                 unsigned threads)
        : rs_(rs), ns_(ns) {
        spectral::InversionOptions opt;
        opt.grid_resolution = c.grid_resolution;
        opt.max_resolution = c.max_resolution;
        using Slot = std::pair<std::shared_ptr<const spectral::SpectralMeasure>, std::string>;
        slots_ = parallel_map(rs.size() * ns.size(), threads, [&](std::size_t k) -> Slot {
            try {
                return {std::make_shared<const spectral::SpectralMeasure>(
                            spectral::limiting_measure(population(rs[k / ns.size()]), ns[k % ns.size()], opt)),
                        ""};
            } catch (const Error& e) {
                return {nullptr, e.what()};
            }
        });
    }

    // Throws the construction error for failed measures.
    const spectral::SpectralMeasure& get(std::size_t ri, std::size_t ni) const {
        const auto& s = slots_[ri * ns_.size() + ni];
        if (!s.first) throw NumericalError("measure construction failed: " + s.second, nan);
        return *s.first;
    }

private:
    std::vector<double> rs_, ns_;
    std::vector<std::pair<std::shared_ptr<const spectral::SpectralMeasure>, std::string>> slots_;
};

inline std::vector<Column> columns(std::initializer_list<std::pair<const char*, ColumnType>> list) {
    std::vector<Column> out;
    for (const auto& [name, type] : list) out.push_back({name, type});
    return out;
}

constexpr auto num = ColumnType::number;
constexpr auto inf = ColumnType::info;
constexpr auto txt = ColumnType::text;

template <class Key, class F>
std::vector<Row> evaluate(const std::vector<Key>& keys, std::size_t width, unsigned threads, F&& f) {
    auto chunks = parallel_map(keys.size(), threads, [&](std::size_t i) -> std::vector<Row> {
        try {
            return f(keys[i]);
        } catch (const Error& e) {
            return {failed_row(keys[i].cells(), width, e.what())};
        }
    });
    std::vector<Row> rows;
    for (auto& c : chunks)
        for (auto& r : c) rows.push_back(std::move(r));
    return rows;
}

struct MeasureKey {
    std::size_t ri, ni;
    double r, n;
    std::vector<Cell> cells() const { return {r, n}; }
};

struct PointKey {
    std::size_t ri, ni;
    double r, lambda, mu, n;
    std::vector<Cell> cells() const { return {r, lambda, mu, n}; }
};

inline std::vector<MeasureKey> measure_keys(const std::vector<double>& rs, const std::vector<double>& ns) {
    std::vector<MeasureKey> out;
    for (std::size_t ri = 0; ri < rs.size(); ++ri)
        for (std::size_t ni = 0; ni < ns.size(); ++ni) out.push_back({ri, ni, rs[ri], ns[ni]});
    return out;
}

inline std::vector<PointKey> point_keys(const std::vector<double>& rs, const std::vector<double>& lambdas,
                                        const std::vector<double>& mus, const std::vector<double>& ns) {
    std::vector<PointKey> out;
    for (std::size_t ri = 0; ri < rs.size(); ++ri)
        for (double l : lambdas)
            for (double m : mus)
                for (std::size_t ni = 0; ni < ns.size(); ++ni) out.push_back({ri, ni, rs[ri], l, m, ns[ni]});
    return out;
}

// Groups consecutive rows sharing the first `keys` cells (rows are sorted).
template <class F>
void for_each_group(const ResultTable& t, std::size_t keys, F&& f) {
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= t.rows.size(); ++i) {
        bool same = i < t.rows.size();
        for (std::size_t k = 0; same && k < keys; ++k) same = t.rows[i].cells[k] == t.rows[begin].cells[k];
        if (!same) {
            f(begin, i);
            begin = i;
        }
    }
}

inline std::string group_label(const ResultTable& t, std::size_t row, std::size_t keys) {
    std::string out;
    for (std::size_t k = 0; k < keys; ++k)
        out += (k ? " " : "") + t.columns[k].name + "=" + fmt(t.rows[row].number(k));
    return out;
}

inline void extrema_summary(ResultTable& t, const std::string& column, bool maxima) {
    const std::size_t y = t.column(column), x = t.column("n");
    for_each_group(t, 3, [&](std::size_t b, std::size_t e) {
        std::vector<double> xs, ys;
        for (std::size_t i = b; i < e; ++i) {
            xs.push_back(t.rows[i].number(x));
            ys.push_back(t.rows[i].number(y));
        }
        std::string line = group_label(t, b, 3) + " " + column + (maxima ? " interior maxima: " : " interior minima: ");
        if (std::any_of(ys.begin(), ys.end(), [](double v) { return std::isnan(v); })) {
            t.summary.push_back(line + "undetermined (failed points)");
            return;
        }
        const auto ext = maxima ? info::interior_maxima(xs, ys) : info::interior_minima(xs, ys);
        line += std::to_string(ext.size());
        for (const auto& p : ext) line += " [n=" + fmt(p.x) + " " + column + "=" + fmt(p.y) + "]";
        t.summary.push_back(line);
    });
}

}  // namespace detail

// ---- kinds -----------------------------------------------------------------

inline ResultTable run_frontier(const ExperimentConfig& c, unsigned threads) {
    using namespace detail;
    const auto rs = sorted_unique(c.r_list), ns = sorted_unique(c.n_grid), grid = sorted_unique(c.psi_c_grid);
    ResultTable t;
    t.kind = Kind::frontier;
    t.columns = columns({{"r", num}, {"n", num}, {"psi_c", num}, {"gamma", num}, {"mu", num},
                         {"relevant", inf}, {"residual", inf}, {"available", inf}});
    const MeasureCache cache(rs, ns, c, threads);
    t.rows = evaluate(measure_keys(rs, ns), t.columns.size(), threads, [&](const MeasureKey& k) {
        const auto& m = cache.get(k.ri, k.ni);
        const info::ProblemParams p(k.n, c.snr);
        const double avail = info::available_info(m, p);
        auto cutoffs = grid;
        if (cutoffs.empty())
            cutoffs = log_grid(1e-4 * m.upper_edge(), m.upper_edge(), static_cast<std::size_t>(c.curve_points));
        std::vector<Row> rows;
        for (double psi_c : cutoffs) {
            try {
                const auto ctl = info::IBControl::from_cutoff(psi_c, p);
                const auto pt = info::ib_point(m, p, ctl);
                rows.push_back({{k.r, k.n, psi_c, ctl.gamma, pt.relevant / avail, pt.relevant, pt.residual, avail}, ""});
            } catch (const Error& e) {
                rows.push_back(failed_row({k.r, k.n, psi_c}, t.columns.size(), e.what()));
            }
        }
        return rows;
    });
    return t;
}

inline ResultTable run_gibbs_curves(const ExperimentConfig& c, unsigned threads) {
    using namespace detail;
    const auto rs = sorted_unique(c.r_list), ns = sorted_unique(c.n_grid), ls = sorted_unique(c.lambda_grid),
               taus = sorted_unique(c.tau_grid);
    ResultTable t;
    t.kind = Kind::gibbs_curves;
    t.columns = columns({{"r", num}, {"n", num}, {"lambda", num}, {"tau", num}, {"mu", num}, {"relevant", inf},
                         {"residual", inf}, {"available", inf}, {"ib_residual", inf}, {"eta", num}});
    const MeasureCache cache(rs, ns, c, threads);
    struct Key {
        std::size_t ri, ni;
        double r, n, lambda;
        std::vector<Cell> cells() const { return {r, n, lambda}; }
    };
    std::vector<Key> keys;
    for (std::size_t ri = 0; ri < rs.size(); ++ri)
        for (std::size_t ni = 0; ni < ns.size(); ++ni)
            for (double l : ls) keys.push_back({ri, ni, rs[ri], ns[ni], l});
    t.rows = evaluate(keys, t.columns.size(), threads, [&](const Key& k) {
        const auto& m = cache.get(k.ri, k.ni);
        const info::ProblemParams p(k.n, c.snr);
        const double avail = info::available_info(m, p);
        std::vector<Row> rows;
        for (double tau : taus) {
            try {
                const auto g = info::gibbs_point(m, p, {k.lambda, tau});
                const double mu = g.relevant / avail;
                double ib = nan;
                if (mu > 0.0 && mu < 1.0) ib = info::ib_point(m, p, info::solve_cutoff(m, p, mu)).residual;
                rows.push_back({{k.r, k.n, k.lambda, tau, mu, g.relevant, g.residual, avail, ib, ib / g.residual}, ""});
            } catch (const Error& e) {
                rows.push_back(failed_row({k.r, k.n, k.lambda, tau}, t.columns.size(), e.what()));
            }
        }
        return rows;
    });
    return t;
}

inline ResultTable run_efficiency_sweep(const ExperimentConfig& c, unsigned threads) {
    using namespace detail;
    const auto rs = sorted_unique(c.r_list), ns = sorted_unique(c.n_grid), ls = sorted_unique(c.lambda_grid),
               mus = sorted_unique(c.mu_list);
    ResultTable t;
    t.kind = Kind::efficiency_sweep;
    t.columns = columns({{"r", num}, {"lambda", num}, {"mu", num}, {"n", num}, {"psi_c", num}, {"tau", num},
                         {"ib_residual", inf}, {"gibbs_residual", inf}, {"eta", num}});
    const MeasureCache cache(rs, ns, c, threads);
    t.rows = evaluate(point_keys(rs, ls, mus, ns), t.columns.size(), threads, [&](const PointKey& k) {
        const auto& m = cache.get(k.ri, k.ni);
        const auto e = info::efficiency(m, info::ProblemParams(k.n, c.snr), k.lambda, k.mu);
        return std::vector<Row>{
            {{k.r, k.lambda, k.mu, k.n, e.psi_c, e.tau, e.ib_residual, e.gibbs_residual, e.eta}, ""}};
    });
    const std::size_t eta = t.column("eta"), n = t.column("n");
    for_each_group(t, 3, [&](std::size_t b, std::size_t e) {
        std::size_t best = b;
        for (std::size_t i = b; i < e; ++i)
            if (!std::isnan(t.rows[i].number(eta)) &&
                (std::isnan(t.rows[best].number(eta)) || t.rows[i].number(eta) < t.rows[best].number(eta)))
                best = i;
        t.summary.push_back(group_label(t, b, 3) + " eta minimum: n=" + fmt(t.rows[best].number(n)) +
                            " eta=" + fmt(t.rows[best].number(eta)));
    });
    extrema_summary(t, "eta", false);
    return t;
}

inline ResultTable run_residual_sweep(const ExperimentConfig& c, unsigned threads) {
    using namespace detail;
    const auto rs = sorted_unique(c.r_list), ns = sorted_unique(c.n_grid), ls = sorted_unique(c.lambda_grid),
               mus = sorted_unique(c.mu_list);
    ResultTable t;
    t.kind = Kind::residual_sweep;
    t.columns = columns({{"r", num}, {"lambda", num}, {"mu", num}, {"n", num}, {"available", inf}, {"psi_c", num},
                         {"tau", num}, {"ib_relevant", inf}, {"ib_residual", inf}, {"gibbs_relevant", inf},
                         {"gibbs_residual", inf}});
    const MeasureCache cache(rs, ns, c, threads);
    t.rows = evaluate(point_keys(rs, ls, mus, ns), t.columns.size(), threads, [&](const PointKey& k) {
        const auto& m = cache.get(k.ri, k.ni);
        const auto pt = info::residual_point([&](double) { return m; }, c.snr, k.lambda, k.mu, k.n);
        return std::vector<Row>{{{k.r, k.lambda, k.mu, k.n, pt.available, pt.psi_c, pt.tau, pt.ib.relevant,
                                  pt.ib.residual, pt.gibbs.relevant, pt.gibbs.residual},
                                 ""}};
    });
    return t;
}

inline ResultTable run_spectrum(const ExperimentConfig& c, unsigned threads) {
    using namespace detail;
    const auto rs = sorted_unique(c.r_list), ns = sorted_unique(c.n_grid);
    ResultTable t;
    t.kind = Kind::spectrum;
    t.columns = columns({{"r", num}, {"n", num}, {"psi", num}, {"density", num}, {"cdf", num}});
    const MeasureCache cache(rs, ns, c, threads);
    const auto keys = measure_keys(rs, ns);
    t.rows = evaluate(keys, t.columns.size(), threads, [&](const MeasureKey& k) {
        const auto& m = cache.get(k.ri, k.ni);
        std::vector<Row> rows;
        const double top = 1.05 * m.upper_edge();
        for (int i = 1; i <= c.curve_points; ++i) {
            const double psi = top * i / c.curve_points;
            rows.push_back({{k.r, k.n, psi, m.density(psi), spectral::cdf(m, psi)}, ""});
        }
        return rows;
    });
    for (const auto& k : keys) {
        std::string line = "r=" + fmt(k.r) + " n=" + fmt(k.n) + " bands: ";
        try {
            const auto& m = cache.get(k.ri, k.ni);
            const auto bands = spectral::support_bands(m);
            line += std::to_string(bands.size());
            for (const auto& b : bands) line += " [" + fmt(b.lower, 8) + ", " + fmt(b.upper, 8) + "]";
            line += " atom_at_zero=" + fmt(m.atom_at_zero()) + " resolution=" + std::to_string(m.grid_resolution());
        } catch (const Error& e) {
            line += std::string("undetermined (") + e.what() + ")";
        }
        t.summary.push_back(line);
    }
    return t;
}

// ---- validation battery ------------------------------------------------------

struct ValidationTolerances {
    double two_path = 1e-12;
    double duality = 1e-10;
    double convergence = 2e-2;
    double posterior_sigmas = 5.0;
    double cutoff = 0.1;          // probe points for the convergence check
    double lambda = 1e-6;
    double tau = 0.1;
    double posterior_lambda = 0.1;
    double posterior_beta = 1.0;
};

inline ResultTable run_validate(const ExperimentConfig& c, unsigned threads, const ValidationTolerances& tol = {}) {
    using namespace detail;
    const auto ns = sorted_unique(c.n_grid);
    const double r = c.r_list.front();
    const auto pop = population(r);
    ResultTable t;
    t.kind = Kind::validate;
    t.columns = columns({{"check", txt}, {"n", num}, {"P", num}, {"seed", txt}, {"value", num}, {"tolerance", num},
                         {"passed", num}});

    auto sample = [&](std::size_t P, std::size_t N, std::uint64_t seed) {
        return r == 1.0 ? oracle::sample_isotropic_spectrum(P, N, seed) : oracle::sample_design(P, N, pop, seed);
    };
    const std::size_t P_big = static_cast<std::size_t>(c.oracle_P), P_small = std::max<std::size_t>(1, P_big / 4);

    // Per (n, P, seed): per-parameter (available, ib, gibbs residual+relevant) and path discrepancies.
    struct InstanceResult {
        double available = nan, ib_rel = nan, ib_res = nan, gibbs_rel = nan, gibbs_res = nan;
        double two_path = nan, duality = nan;
        std::string error;
    };
    struct InstanceKey {
        double n;
        std::size_t P;
        std::uint64_t seed;
    };
    std::vector<InstanceKey> ikeys;
    for (double n : ns)
        for (std::size_t P : {P_small, P_big})
            for (auto s : c.seeds) ikeys.push_back({n, P, s});
    const auto inst_results = parallel_map(ikeys.size(), threads, [&](std::size_t i) {
        const auto& k = ikeys[i];
        InstanceResult out;
        try {
            const auto N = static_cast<std::size_t>(std::llround(k.n * static_cast<double>(k.P)));
            const auto inst = sample(k.P, std::max<std::size_t>(1, N), k.seed);
            const info::ProblemParams p(inst.n(), c.snr);
            const double Pd = static_cast<double>(k.P);
            out.available = oracle::exact_available_info(inst, p) / Pd;
            const auto ib = oracle::exact_ib_info(inst, p, tol.cutoff);
            const auto g = oracle::exact_gibbs_info(inst, p, tol.lambda, tol.tau);
            out.ib_rel = ib.relevant / Pd;
            out.ib_res = ib.residual / Pd;
            out.gibbs_rel = g.relevant / Pd;
            out.gibbs_res = g.residual / Pd;
            if (k.P == P_big) {
                const auto em = inst.empirical_measure();
                const auto ib2 = info::ib_point(em, p, tol.cutoff);
                const auto g2 = info::gibbs_point(em, p, {tol.lambda, tol.tau});
                out.two_path = std::max({std::abs(out.available - info::available_info(em, p)),
                                         std::abs(out.ib_rel - ib2.relevant), std::abs(out.ib_res - ib2.residual),
                                         std::abs(out.gibbs_rel - g2.relevant),
                                         std::abs(out.gibbs_res - g2.residual)});
                const auto nu = oracle::exact_ib_info_nu(inst, p, tol.cutoff);
                out.duality = std::max(std::abs(nu.relevant / Pd - out.ib_rel), std::abs(nu.residual / Pd - out.ib_res));
            }
        } catch (const Error& e) {
            out.error = e.what();
        }
        return out;
    });

    auto add = [&](const std::string& check, double n, double P, const std::string& seed, double value,
                   double tolerance, bool passed, const std::string& error = "") {
        t.rows.push_back({{check, n, P, seed, value, tolerance, passed ? 1.0 : 0.0}, error});
        if (!passed) t.validation_failed = true;
    };

    // Limiting values at each n.
    spectral::InversionOptions opt;
    opt.grid_resolution = c.grid_resolution;
    opt.max_resolution = c.max_resolution;
    struct Limit {
        double v[5];
        std::string error;
    };
    const auto limits = parallel_map(ns.size(), threads, [&](std::size_t i) {
        Limit l{};
        try {
            const auto m = spectral::limiting_measure(pop, ns[i], opt);
            const info::ProblemParams p(ns[i], c.snr);
            const auto ib = info::ib_point(m, p, tol.cutoff);
            const auto g = info::gibbs_point(m, p, {tol.lambda, tol.tau});
            l = {{info::available_info(m, p), ib.relevant, ib.residual, g.relevant, g.residual}, ""};
        } catch (const Error& e) {
            l.error = e.what();
            std::fill(std::begin(l.v), std::end(l.v), nan);
        }
        return l;
    });

    static const char* quantity[5] = {"available", "ib_relevant", "ib_residual", "gibbs_relevant", "gibbs_residual"};
    const std::size_t S = c.seeds.size();
    for (std::size_t ni = 0; ni < ns.size(); ++ni) {
        const double n = ns[ni];
        const std::size_t base_small = ni * 2 * S, base_big = base_small + S;
        for (std::size_t s = 0; s < S; ++s) {
            const auto& res = inst_results[base_big + s];
            const std::string seed = std::to_string(c.seeds[s]);
            add("two_path", n, double(P_big), seed, res.two_path, tol.two_path, res.two_path <= tol.two_path, res.error);
            add("nu_psi_duality", n, double(P_big), seed, res.duality, tol.duality, res.duality <= tol.duality, res.error);
        }
        for (int q = 0; q < 5; ++q) {
            auto mean_error = [&](std::size_t base) {
                double sum = 0;
                for (std::size_t s = 0; s < S; ++s) {
                    const auto& res = inst_results[base + s];
                    const double v[5] = {res.available, res.ib_rel, res.ib_res, res.gibbs_rel, res.gibbs_res};
                    sum += v[q];
                }
                return std::abs(sum / double(S) - limits[ni].v[q]);
            };
            const double big = mean_error(base_big), small = mean_error(base_small);
            add(std::string("convergence_") + quantity[q], n, double(P_big), "mean", big, tol.convergence,
                big <= tol.convergence, limits[ni].error);
            add(std::string("convergence_shrinks_") + quantity[q], n, double(P_big), "mean", big / small, 1.0,
                big < small, limits[ni].error);
        }
    }

    // Posterior channel at N = P.
    oracle::PosteriorCheckOptions popt;
    popt.threshold = tol.posterior_sigmas;
    if (c.inject_wrong_lambda_star) popt.lambda_star_scale = 10.0;
    const auto P_post = static_cast<std::size_t>(c.posterior_P);
    struct PostResult {
        oracle::PosteriorReport report{};
        std::string error;
    };
    const auto posts = parallel_map(S, threads, [&](std::size_t s) {
        PostResult out;
        try {
            const auto inst = oracle::sample_design(P_post, P_post, pop, c.seeds[s]);
            out.report = oracle::mc_posterior_check(inst, info::ProblemParams(1.0, c.snr), tol.posterior_lambda,
                                                    tol.posterior_beta, c.mc_draws, oracle::splitmix64(c.seeds[s]),
                                                    popt);
        } catch (const Error& e) {
            out.error = e.what();
        }
        return out;
    });
    for (std::size_t s = 0; s < S; ++s) {
        const auto& pr = posts[s];
        const std::string seed = std::to_string(c.seeds[s]);
        const bool ok = pr.error.empty();
        add("posterior_mean", 1.0, double(P_post), seed, ok ? pr.report.mean_max_z : nan, popt.threshold,
            ok && pr.report.mean_ok(), pr.error);
        add("posterior_conditional_cov", 1.0, double(P_post), seed, ok ? pr.report.conditional_cov_z : nan,
            popt.threshold, ok && pr.report.conditional_ok(), pr.error);
        add("posterior_marginal_cov", 1.0, double(P_post), seed, ok ? pr.report.marginal_cov_z : nan,
            popt.threshold, ok && pr.report.marginal_ok(), pr.error);
    }

    std::size_t passed = 0;
    for (const auto& row : t.rows) passed += row.number(6) == 1.0;
    t.summary.push_back(std::to_string(passed) + " of " + std::to_string(t.rows.size()) + " checks passed" +
                        (c.inject_wrong_lambda_star ? " (wrong lambda* injected)" : ""));
    return t;
}

// Runs the configured experiment and converts informations to the configured
// unit and normalization. Descent summaries are computed after conversion.
inline ResultTable run(const ExperimentConfig& c, unsigned threads = 1) {
    ResultTable t;
    switch (c.kind) {
        case Kind::frontier: t = run_frontier(c, threads); break;
        case Kind::gibbs_curves: t = run_gibbs_curves(c, threads); break;
        case Kind::efficiency_sweep: t = run_efficiency_sweep(c, threads); break;
        case Kind::residual_sweep: t = run_residual_sweep(c, threads); break;
        case Kind::spectrum: t = run_spectrum(c, threads); break;
        case Kind::validate: t = run_validate(c, threads); break;
    }
    convert_units(t, c.unit, c.norm);
    if (c.kind == Kind::residual_sweep) {
        detail::extrema_summary(t, "ib_residual", true);
        detail::extrema_summary(t, "gibbs_residual", true);
    }
    return t;
}

inline std::string column_help() {
    return R"(Columns by kind (informations in the chosen unit and normalization; every
table ends with an error column, empty on success):
  frontier          r, n, psi_c, gamma, mu, relevant, residual, available
  gibbs-curves      r, n, lambda, tau, mu, relevant, residual, available,
                    ib_residual (IB optimum at the same mu), eta
  efficiency-sweep  r, lambda, mu, n, psi_c, tau, ib_residual, gibbs_residual, eta
  residual-sweep    r, lambda, mu, n, available, psi_c, tau, ib_relevant,
                    ib_residual, gibbs_relevant, gibbs_residual
  spectrum          r, n, psi, density, cdf
  validate          check, n, P, seed, value, tolerance, passed
r is the two-scale anisotropy ratio (1 = isotropic), n = N/P, mu the
relevance level, eta the information efficiency.)";
}

}  // namespace resinfo::sweep
