// resinfo: run an experiment sweep and write its table.
//
// exit status: 0 ok, 1 usage/config error, 2 numerical failure, 3 validation failure

#include "resinfo/sweep/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int write_outputs(const resinfo::sweep::ResultTable& t, const resinfo::sweep::ExperimentConfig& c) {
    using namespace resinfo::sweep;
    if (c.output.empty() || c.output == "-") {
        write_csv(std::cout, t, c);
    } else {
        std::ofstream out(c.output);
        if (!out) {
            std::cerr << "resinfo: cannot write " << c.output << "\n";
            return 1;
        }
        write_csv(out, t, c);
    }
    if (!c.jsonl_output.empty()) {
        std::ofstream out(c.jsonl_output);
        if (!out) {
            std::cerr << "resinfo: cannot write " << c.jsonl_output << "\n";
            return 1;
        }
        write_jsonl(out, t);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace resinfo::sweep;

    CLI::App app{"Relevant and residual information of ridge regression and the information bottleneck"};
    app.footer(column_help() + R"(

Exit status: 0 success, 1 usage or config error, 2 numerical failure (see the
error column), 3 validation failure. RESINFO_THREADS caps the worker count.)");
    std::string kind_name, config_path, out, jsonl, unit, norm;
    unsigned threads = 0;
    std::uint64_t seed = 0;
    bool inject = false;
    app.add_option("kind", kind_name, "frontier | gibbs-curves | efficiency-sweep | residual-sweep | spectrum | validate")
        ->required();
    app.add_option("--config", config_path, "JSON experiment config (defaults apply when omitted)");
    app.add_option("--out", out, "CSV output path (default: config output, else stdout)");
    app.add_option("--jsonl", jsonl, "also write rows as JSON lines to this path");
    app.add_option("--unit", unit, "nats | bits");
    app.add_option("--norm", norm, "per-parameter | per-sample");
    app.add_option("--threads", threads, "worker threads (0: all cores)");
    auto* seed_opt = app.add_option("--seed", seed, "first seed; seeds become seed, seed+1, ... (same count)");
    app.add_flag("--inject-wrong-lambda-star", inject, "validate test mode: posterior checks use 10 lambda*");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    ExperimentConfig config;
    try {
        const auto kind = parse_kind(kind_name);
        if (!kind) throw resinfo::ConfigError("kind", "unknown experiment kind '" + kind_name + "'");
        config = config_path.empty() ? parse_config(nlohmann::json{{"kind", kind_name}})
                                     : load_config(config_path, kind);
        if (!out.empty()) config.output = out;
        if (!jsonl.empty()) config.jsonl_output = jsonl;
        if (!unit.empty()) {
            const auto u = parse_unit(unit);
            if (!u) throw resinfo::ConfigError("--unit", "expected nats or bits");
            config.unit = *u;
        }
        if (!norm.empty()) {
            const auto n = parse_norm(norm);
            if (!n) throw resinfo::ConfigError("--norm", "expected per-parameter or per-sample");
            config.norm = *n;
        }
        if (*seed_opt)
            for (std::size_t i = 0; i < config.seeds.size(); ++i) config.seeds[i] = seed + i;
        if (inject) config.inject_wrong_lambda_star = true;
    } catch (const resinfo::ConfigError& e) {
        std::cerr << "resinfo: config error: " << e.what() << "\n";
        return 1;
    }

    ResultTable table;
    try {
        table = run(config, resolve_threads(threads));
    } catch (const resinfo::Error& e) {
        std::cerr << "resinfo: " << e.what() << "\n";
        return 2;
    }
    if (const int rc = write_outputs(table, config)) return rc;

    if (config.kind == Kind::validate) {
        const std::size_t check = 0, n = 1, P = 2, s = 3, value = 4, tol = 5, passed = 6;
        for (const auto& row : table.rows)
            std::cerr << (row.number(passed) == 1.0 ? "PASS " : "FAIL ") << std::get<std::string>(row.cells[check])
                      << " n=" << row.number(n) << " P=" << row.number(P) << " seed=" << std::get<std::string>(row.cells[s])
                      << " value=" << row.number(value) << " tolerance=" << row.number(tol)
                      << (row.error.empty() ? "" : " error: " + row.error) << "\n";
    }
    for (const auto& line : table.summary) std::cerr << line << "\n";
    if (table.validation_failed) return 3;
    if (table.has_errors()) return 2;
    return 0;
}
