#pragma once

// Dataset: named numeric columns of equal length. Immutable after
// construction; NaN and infinity are rejected up front so downstream
// statistics never have to re-check.
//
// CSV wire format: UTF-8, comma separator, mandatory header row, LF or CRLF
// accepted on read, LF emitted on write, values serialized with 17
// significant digits (lossless double round trip).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "synthdata/error.hpp"

namespace synthdata {

struct Column {
    std::string name;
    std::vector<double> values;
};

class Dataset {
public:
    Dataset() = default;

    explicit Dataset(std::vector<Column> columns) : cols_(std::move(columns)) {
        std::unordered_set<std::string_view> seen;
        for (const auto& c : cols_) {
            if (c.name.empty()) {
                throw SchemaError("Dataset: column names must be nonempty");
            }
            if (!seen.insert(c.name).second) {
                throw SchemaError("Dataset: duplicate column name \"" + c.name + "\"");
            }
            if (c.values.size() != cols_.front().values.size()) {
                throw SchemaError("Dataset: column \"" + c.name + "\" has length " +
                                  std::to_string(c.values.size()) + ", expected " +
                                  std::to_string(cols_.front().values.size()));
            }
            for (double v : c.values) {
                if (!std::isfinite(v)) {
                    throw DomainError("Dataset: non-finite value in column \"" + c.name + "\"");
                }
            }
        }
    }

    std::size_t n_rows() const { return cols_.empty() ? 0 : cols_.front().values.size(); }
    std::size_t n_cols() const { return cols_.size(); }

    const std::vector<Column>& columns() const { return cols_; }

    const Column& column(std::size_t i) const { return cols_.at(i); }

    const Column& column(std::string_view name) const {
        for (const auto& c : cols_) {
            if (c.name == name) return c;
        }
        throw LookupError("Dataset: no column named \"" + std::string(name) + "\"");
    }

    bool has_column(std::string_view name) const {
        return std::any_of(cols_.begin(), cols_.end(),
                           [&](const Column& c) { return c.name == name; });
    }

    std::vector<std::string> column_names() const {
        std::vector<std::string> names;
        names.reserve(cols_.size());
        for (const auto& c : cols_) names.push_back(c.name);
        return names;
    }

    bool operator==(const Dataset& other) const {
        if (n_cols() != other.n_cols()) return false;
        for (std::size_t i = 0; i < n_cols(); ++i) {
            if (cols_[i].name != other.cols_[i].name) return false;
            if (cols_[i].values != other.cols_[i].values) return false;
        }
        return true;
    }

private:
    std::vector<Column> cols_;
};

struct SummaryStats {
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation, n-1 denominator
    double min = 0.0;
    double max = 0.0;
    std::size_t n = 0;
};

inline SummaryStats column_stats(const Dataset& d, std::string_view name) {
    const Column& col = d.column(name);
    const std::size_t n = col.values.size();
    if (n < 2) {
        throw InsufficientDataError("column_stats: column \"" + std::string(name) +
                                    "\" has " + std::to_string(n) +
                                    " values; need at least 2 for a standard deviation");
    }
    SummaryStats s;
    s.n = n;
    double sum = 0.0;
    s.min = col.values.front();
    s.max = col.values.front();
    for (double v : col.values) {
        sum += v;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    s.mean = sum / static_cast<double>(n);
    double acc = 0.0;
    for (double v : col.values) {
        const double dev = v - s.mean;
        acc += dev * dev;
    }
    s.std = std::sqrt(acc / static_cast<double>(n - 1));
    return s;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

// Locale-independent numeric parse of a full cell ('.' decimal point,
// optional scientific notation). NaN/inf spellings are rejected.
inline double parse_cell(std::string_view cell, std::size_t row,
                         std::string_view column_name) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || cell.empty() || !std::isfinite(value)) {
        throw ParseError("CSV: non-numeric cell \"" + std::string(cell) + "\" at row " +
                         std::to_string(row) + ", column \"" + std::string(column_name) +
                         "\"");
    }
    return value;
}

}  // namespace detail

inline Dataset load_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("CSV: input is empty; a header row is required");
    }
    const auto header = detail::split_csv_line(line);
    std::vector<Column> cols;
    cols.reserve(header.size());
    std::unordered_set<std::string_view> seen;
    for (auto name : header) {
        if (name.empty()) {
            throw SchemaError("CSV: empty column name in header");
        }
        if (!seen.insert(name).second) {
            throw SchemaError("CSV: duplicate column name \"" + std::string(name) +
                              "\" in header");
        }
        cols.push_back(Column{std::string(name), {}});
    }

    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) {
            break;  // trailing newline, not a row
        }
        ++row;
        const auto fields = detail::split_csv_line(line);
        if (fields.size() != cols.size()) {
            throw ParseError("CSV: row " + std::to_string(row) + " has " +
                             std::to_string(fields.size()) + " fields, expected " +
                             std::to_string(cols.size()));
        }
        for (std::size_t c = 0; c < cols.size(); ++c) {
            cols[c].values.push_back(detail::parse_cell(fields[c], row, cols[c].name));
        }
    }
    return Dataset(std::move(cols));
}

inline Dataset load_csv(const std::string& text) {
    std::istringstream in(text);
    return load_csv(in);
}

inline Dataset load_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("CSV: cannot open file \"" + path + "\"");
    }
    return load_csv(in);
}

namespace detail {

inline void format_value(std::string& out, double v) {
    char buf[40];
    const int len = std::snprintf(buf, sizeof(buf), "%.17g", v);
    out.append(buf, static_cast<std::size_t>(len));
}

}  // namespace detail

inline std::string write_csv(const Dataset& d) {
    std::string out;
    for (std::size_t c = 0; c < d.n_cols(); ++c) {
        if (c > 0) out.push_back(',');
        out.append(d.column(c).name);
    }
    out.push_back('\n');
    const std::size_t rows = d.n_rows();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < d.n_cols(); ++c) {
            if (c > 0) out.push_back(',');
            detail::format_value(out, d.column(c).values[r]);
        }
        out.push_back('\n');
    }
    return out;
}

inline void write_csv(const Dataset& d, std::ostream& out) { out << write_csv(d); }

inline void write_csv_file(const Dataset& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("CSV: cannot open \"" + path + "\" for writing");
    }
    out << write_csv(d);
}

}  // namespace synthdata
