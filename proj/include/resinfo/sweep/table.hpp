// table.hpp: flat result tables and their CSV / JSON-lines writers.

#pragma once

#include "resinfo/sweep/config.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace resinfo::sweep {

enum class ColumnType {
    number,
    info,   // an information value: scaled by unit and normalization
    text,
};

struct Column {
    std::string name;
    ColumnType type = ColumnType::number;
};

using Cell = std::variant<double, std::string>;

struct Row {
    std::vector<Cell> cells;   // one per column; numbers are NaN on failure
    std::string error;         // empty on success

    double number(std::size_t i) const { return std::get<double>(cells[i]); }
};

struct ResultTable {
    Kind kind = Kind::frontier;
    std::vector<Column> columns;
    std::vector<Row> rows;
    std::vector<std::string> summary;
    bool validation_failed = false;

    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i].name == name) return i;
        throw Error("no column " + name);
    }

    bool has_errors() const {
        for (const auto& r : rows)
            if (!r.error.empty()) return true;
        return false;
    }
};

inline Row failed_row(std::vector<Cell> keys, std::size_t width, const std::string& error) {
    Row r{std::move(keys), error};
    r.cells.resize(width, std::numeric_limits<double>::quiet_NaN());
    return r;
}

// Per-parameter nats to the requested unit and normalization, in place.
inline void convert_units(ResultTable& t, Unit unit, Norm norm) {
    if (unit == Unit::nats && norm == Norm::per_parameter) return;
    const double ln2 = std::log(2.0);
    std::size_t n_col = t.columns.size();
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i].name == "n") n_col = i;
    for (auto& row : t.rows)
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            if (t.columns[i].type != ColumnType::info) continue;
            double v = std::get<double>(row.cells[i]);
            if (unit == Unit::bits) v = v / ln2;
            if (norm == Norm::per_sample) {
                if (n_col == t.columns.size()) throw Error("per-sample normalization needs an n column");
                v = v / row.number(n_col);
            }
            row.cells[i] = v;
        }
}

inline std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c == '\n' ? ' ' : c;
    }
    return out + "\"";
}

inline void write_csv(std::ostream& out, const ResultTable& t, const ExperimentConfig& c) {
    out << "# resinfo " << to_string(t.kind) << "\n";
    out << "# informations in " << to_string(c.unit) << ", " << to_string(c.norm)
        << (c.unit == Unit::nats ? " (natural logarithms; --unit bits divides by ln 2)" : " (nats / ln 2)") << "\n";
    out << "# config: " << serialize_config(c).dump() << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << t.columns[i].name << ',';
    out << "error\n";
    for (const auto& row : t.rows) {
        for (const auto& cell : row.cells) {
            if (const double* v = std::get_if<double>(&cell)) out << format_number(*v);
            else out << csv_escape(std::get<std::string>(cell));
            out << ',';
        }
        out << csv_escape(row.error) << "\n";
    }
    for (const auto& s : t.summary) out << "# summary: " << s << "\n";
}

inline void write_jsonl(std::ostream& out, const ResultTable& t) {
    for (const auto& row : t.rows) {
        nlohmann::json j = nlohmann::json::object();
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            if (const double* v = std::get_if<double>(&row.cells[i])) {
                if (std::isnan(*v)) j[t.columns[i].name] = nullptr;
                else j[t.columns[i].name] = *v;
            } else {
                j[t.columns[i].name] = std::get<std::string>(row.cells[i]);
            }
        }
        j["error"] = row.error;
        out << j.dump() << "\n";
    }
    out << nlohmann::json{{"summary", t.summary}}.dump() << "\n";
}

}  // namespace resinfo::sweep
