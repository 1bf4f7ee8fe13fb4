// config.hpp: experiment configuration, read from and written to JSON.
//
// Grids are either explicit arrays or {"min": a, "max": b, "points": k}
// (log-spaced, endpoints included). Serialization always writes explicit
// arrays, so parse(serialize(c)) == c.

#pragma once

#include "resinfo/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace resinfo::sweep {

enum class Kind { frontier, gibbs_curves, efficiency_sweep, residual_sweep, spectrum, validate };
enum class Unit { nats, bits };
enum class Norm { per_parameter, per_sample };

inline const char* to_string(Kind k) {
    switch (k) {
        case Kind::frontier: return "frontier";
        case Kind::gibbs_curves: return "gibbs-curves";
        case Kind::efficiency_sweep: return "efficiency-sweep";
        case Kind::residual_sweep: return "residual-sweep";
        case Kind::spectrum: return "spectrum";
        case Kind::validate: return "validate";
    }
    return "?";
}
inline const char* to_string(Unit u) { return u == Unit::nats ? "nats" : "bits"; }
inline const char* to_string(Norm n) { return n == Norm::per_parameter ? "per-parameter" : "per-sample"; }

inline std::optional<Kind> parse_kind(const std::string& s) {
    for (Kind k : {Kind::frontier, Kind::gibbs_curves, Kind::efficiency_sweep, Kind::residual_sweep, Kind::spectrum,
                   Kind::validate})
        if (s == to_string(k)) return k;
    return std::nullopt;
}
inline std::optional<Unit> parse_unit(const std::string& s) {
    if (s == "nats") return Unit::nats;
    if (s == "bits") return Unit::bits;
    return std::nullopt;
}
inline std::optional<Norm> parse_norm(const std::string& s) {
    if (s == "per-parameter") return Norm::per_parameter;
    if (s == "per-sample") return Norm::per_sample;
    return std::nullopt;
}

inline std::vector<double> log_grid(double lo, double hi, std::size_t points) {
    if (points == 1) return {lo};
    std::vector<double> out(points);
    const double a = std::log(lo), b = std::log(hi);
    for (std::size_t i = 0; i < points; ++i)
        out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

struct ExperimentConfig {
    Kind kind = Kind::frontier;
    double snr = 1.0;
    std::vector<double> n_grid = log_grid(0.05, 100.0, 64);
    std::vector<double> lambda_grid = {1e-6, 1e-3, 1e-1, 1.0, 10.0};
    std::vector<double> mu_list = {0.8};
    std::vector<double> r_list = {1.0};      // anisotropy s-/s+; 1 is isotropic
    std::vector<double> psi_c_grid;          // frontier; empty: automatic from the upper edge
    std::vector<double> tau_grid = log_grid(1e-4, 1e3, 48);
    int curve_points = 64;                   // automatic psi_c grid and spectrum samples
    int grid_resolution = 256;
    int max_resolution = 8192;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4};
    int oracle_P = 1024;                     // validate: instance dimension
    int posterior_P = 64;                    // validate: posterior check dimension (N = P)
    int mc_draws = 10000;
    bool inject_wrong_lambda_star = false;   // validate negative control
    std::string output;                      // empty: stdout
    std::string jsonl_output;                // optional JSON-lines mirror
    Unit unit = Unit::nats;
    Norm norm = Norm::per_parameter;

    bool operator==(const ExperimentConfig&) const = default;
};

namespace detail {

using nlohmann::json;

inline std::vector<double> read_grid(const json& j, const std::string& path, bool allow_empty = false) {
    std::vector<double> out;
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_number()) throw ConfigError(path + "[" + std::to_string(i) + "]", "expected a number");
            out.push_back(j[i].get<double>());
        }
    } else if (j.is_object()) {
        for (const char* key : {"min", "max", "points"})
            if (!j.contains(key)) throw ConfigError(path + "." + key, "missing");
        if (!j["min"].is_number()) throw ConfigError(path + ".min", "expected a number");
        if (!j["max"].is_number()) throw ConfigError(path + ".max", "expected a number");
        if (!j["points"].is_number_integer() || j["points"].get<long long>() < 1)
            throw ConfigError(path + ".points", "expected a positive integer");
        const double lo = j["min"].get<double>(), hi = j["max"].get<double>();
        if (!(lo > 0.0)) throw ConfigError(path + ".min", "must be > 0");
        if (!(hi >= lo)) throw ConfigError(path + ".max", "must be >= min");
        out = log_grid(lo, hi, static_cast<std::size_t>(j["points"].get<long long>()));
    } else {
        throw ConfigError(path, "expected an array or {min, max, points}");
    }
    if (out.empty() && !allow_empty) throw ConfigError(path, "must be non-empty");
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!(out[i] > 0.0) || !std::isfinite(out[i]))
            throw ConfigError(path + "[" + std::to_string(i) + "]", "must be positive and finite");
    return out;
}

inline int read_int(const json& j, const std::string& path, int min_value) {
    if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
    const long long v = j.get<long long>();
    if (v < min_value || v > 1'000'000'000) throw ConfigError(path, "must be >= " + std::to_string(min_value));
    return static_cast<int>(v);
}

inline std::string read_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw ConfigError(path, "expected a string");
    return j.get<std::string>();
}

}  // namespace detail

// kind comes from the file, the caller, or both (then they must agree).
inline ExperimentConfig parse_config(const nlohmann::json& j, std::optional<Kind> command = std::nullopt) {
    using detail::read_grid;
    using detail::read_int;
    using detail::read_string;
    if (!j.is_object()) throw ConfigError("$", "config must be a JSON object");
    ExperimentConfig c;
    static const std::vector<std::string> known = {
        "kind", "snr", "n_grid", "lambda_grid", "mu_list", "r_list", "psi_c_grid", "tau_grid", "curve_points",
        "grid_resolution", "max_resolution", "seeds", "oracle_P", "posterior_P", "mc_draws",
        "inject_wrong_lambda_star", "output", "jsonl_output", "unit", "normalization"};
    for (const auto& item : j.items())
        if (std::find(known.begin(), known.end(), item.key()) == known.end())
            throw ConfigError(item.key(), "unknown field");

    std::optional<Kind> kind = command;
    if (j.contains("kind")) {
        const auto named = parse_kind(read_string(j["kind"], "kind"));
        if (!named) throw ConfigError("kind", "unknown experiment kind '" + j["kind"].get<std::string>() + "'");
        if (command && *command != *named)
            throw ConfigError("kind", std::string("config is for ") + to_string(*named) + ", command is " +
                                          to_string(*command));
        kind = named;
    }
    if (!kind) throw ConfigError("kind", "missing");
    c.kind = *kind;
    if (c.kind == Kind::validate) c.n_grid = {0.5, 1.0, 2.0};

    if (j.contains("snr")) {
        if (!j["snr"].is_number() || !(j["snr"].get<double>() > 0.0) || !std::isfinite(j["snr"].get<double>()))
            throw ConfigError("snr", "must be a positive number");
        c.snr = j["snr"].get<double>();
    }
    if (j.contains("n_grid")) c.n_grid = read_grid(j["n_grid"], "n_grid");
    if (j.contains("lambda_grid")) c.lambda_grid = read_grid(j["lambda_grid"], "lambda_grid");
    if (j.contains("mu_list")) {
        c.mu_list = read_grid(j["mu_list"], "mu_list");
        for (std::size_t i = 0; i < c.mu_list.size(); ++i)
            if (!(c.mu_list[i] < 1.0)) throw ConfigError("mu_list[" + std::to_string(i) + "]", "must lie in (0, 1)");
    }
    if (j.contains("r_list")) {
        c.r_list = read_grid(j["r_list"], "r_list");
        for (std::size_t i = 0; i < c.r_list.size(); ++i)
            if (c.r_list[i] > 1.0) throw ConfigError("r_list[" + std::to_string(i) + "]", "must lie in (0, 1]");
    }
    if (j.contains("psi_c_grid")) c.psi_c_grid = read_grid(j["psi_c_grid"], "psi_c_grid", true);
    if (j.contains("tau_grid")) c.tau_grid = read_grid(j["tau_grid"], "tau_grid");
    if (j.contains("curve_points")) c.curve_points = read_int(j["curve_points"], "curve_points", 2);
    if (j.contains("grid_resolution")) c.grid_resolution = read_int(j["grid_resolution"], "grid_resolution", 256);
    if (j.contains("max_resolution")) c.max_resolution = read_int(j["max_resolution"], "max_resolution", 256);
    if (c.max_resolution < c.grid_resolution) throw ConfigError("max_resolution", "must be >= grid_resolution");
    if (j.contains("seeds")) {
        const auto& s = j["seeds"];
        if (!s.is_array() || s.empty()) throw ConfigError("seeds", "expected a non-empty array");
        c.seeds.clear();
        for (std::size_t i = 0; i < s.size(); ++i) {
            const std::string path = "seeds[" + std::to_string(i) + "]";
            if (s[i].is_number_unsigned()) c.seeds.push_back(s[i].get<std::uint64_t>());
            else if (s[i].is_number_integer() && s[i].get<long long>() >= 0)
                c.seeds.push_back(static_cast<std::uint64_t>(s[i].get<long long>()));
            else throw ConfigError(path, "expected a non-negative integer");
        }
    }
    if (j.contains("oracle_P")) c.oracle_P = read_int(j["oracle_P"], "oracle_P", 4);
    if (j.contains("posterior_P")) c.posterior_P = read_int(j["posterior_P"], "posterior_P", 1);
    if (j.contains("mc_draws")) c.mc_draws = read_int(j["mc_draws"], "mc_draws", 1000);
    if (j.contains("inject_wrong_lambda_star")) {
        if (!j["inject_wrong_lambda_star"].is_boolean()) throw ConfigError("inject_wrong_lambda_star", "expected a boolean");
        c.inject_wrong_lambda_star = j["inject_wrong_lambda_star"].get<bool>();
    }
    if (j.contains("output")) c.output = read_string(j["output"], "output");
    if (j.contains("jsonl_output")) c.jsonl_output = read_string(j["jsonl_output"], "jsonl_output");
    if (j.contains("unit")) {
        const auto u = parse_unit(read_string(j["unit"], "unit"));
        if (!u) throw ConfigError("unit", "expected nats or bits");
        c.unit = *u;
    }
    if (j.contains("normalization")) {
        const auto n = parse_norm(read_string(j["normalization"], "normalization"));
        if (!n) throw ConfigError("normalization", "expected per-parameter or per-sample");
        c.norm = *n;
    }
    return c;
}

inline nlohmann::json serialize_config(const ExperimentConfig& c) {
    nlohmann::json j;
    j["kind"] = to_string(c.kind);
    j["snr"] = c.snr;
    j["n_grid"] = c.n_grid;
    j["lambda_grid"] = c.lambda_grid;
    j["mu_list"] = c.mu_list;
    j["r_list"] = c.r_list;
    j["psi_c_grid"] = c.psi_c_grid;
    j["tau_grid"] = c.tau_grid;
    j["curve_points"] = c.curve_points;
    j["grid_resolution"] = c.grid_resolution;
    j["max_resolution"] = c.max_resolution;
    j["seeds"] = c.seeds;
    j["oracle_P"] = c.oracle_P;
    j["posterior_P"] = c.posterior_P;
    j["mc_draws"] = c.mc_draws;
    j["inject_wrong_lambda_star"] = c.inject_wrong_lambda_star;
    j["output"] = c.output;
    j["jsonl_output"] = c.jsonl_output;
    j["unit"] = to_string(c.unit);
    j["normalization"] = to_string(c.norm);
    return j;
}

inline ExperimentConfig load_config(const std::string& path, std::optional<Kind> command = std::nullopt) {
    std::ifstream in(path);
    if (!in) throw ConfigError("--config", "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("--config", std::string("invalid JSON: ") + e.what());
    }
    return parse_config(j, command);
}

}  // namespace resinfo::sweep
