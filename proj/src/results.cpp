// SPDX-License-Identifier: Apache-2.0
//
// nfwpt: near-field wireless power transfer simulation library
// Copyright (C) 2026 The nfwpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nfwpt/results.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nfwpt {

namespace {

template <class Columns> std::size_t find_column(const Columns &columns, std::string_view name) {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name)
            return i;
    throw std::out_of_range("no column named '" + std::string(name) + "'");
}

std::string cell_text(const Cell &cell) {
    if (const auto *d = std::get_if<double>(&cell))
        return format_number(*d);
    if (const auto *i = std::get_if<std::int64_t>(&cell))
        return std::to_string(*i);
    if (const auto *b = std::get_if<bool>(&cell))
        return *b ? "true" : "false";
    return std::get<std::string>(cell);
}

void check_shape(const ResultTable &table) {
    for (std::size_t r = 0; r < table.rows.size(); ++r)
        if (table.rows[r].size() != table.columns.size())
            throw std::invalid_argument("row " + std::to_string(r) + " has " +
                                        std::to_string(table.rows[r].size()) +
                                        " cells for " + std::to_string(table.columns.size()) +
                                        " columns");
}

} // namespace

std::size_t ResultTable::column_index(std::string_view column) const {
    return find_column(columns, column);
}

std::size_t CsvData::column_index(std::string_view column) const {
    return find_column(columns, column);
}

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "json")
        return OutputFormat::Json;
    throw std::invalid_argument("unknown output format '" + std::string(name) +
                                "' (expected csv or json)");
}

std::string format_number(double value) {
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

std::string to_csv(const ResultTable &table) {
    check_shape(table);
    std::ostringstream os;
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << cell_text(row[i]);
        os << '\n';
    }
    return os.str();
}

std::string to_json(const ResultTable &table) {
    check_shape(table);
    auto records = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const auto &key = table.columns[i];
            std::visit(
                [&](const auto &v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        if (std::isfinite(v))
                            rec[key] = std::stod(format_number(v));
                        else
                            rec[key] = format_number(v);
                    } else {
                        rec[key] = v;
                    }
                },
                row[i]);
        }
        records.push_back(std::move(rec));
    }
    return records.dump(2) + "\n";
}

std::string render(const ResultTable &table, OutputFormat format) {
    return format == OutputFormat::Csv ? to_csv(table) : to_json(table);
}

void emit_results(const ResultTable &table, const std::filesystem::path &path,
                  OutputFormat format) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << render(table, format);
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

CsvData parse_csv(std::string_view text) {
    CsvData data;
    std::istringstream is{std::string(text)};
    std::string line;
    auto split = [](const std::string &l) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(l);
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        if (!l.empty() && l.back() == ',')
            cells.emplace_back();
        return cells;
    };
    if (!std::getline(is, line))
        throw std::invalid_argument("CSV text is empty");
    data.columns = split(line);
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        auto cells = split(line);
        if (cells.size() != data.columns.size())
            throw std::invalid_argument("CSV row has " + std::to_string(cells.size()) +
                                        " cells, header has " +
                                        std::to_string(data.columns.size()));
        data.rows.push_back(std::move(cells));
    }
    return data;
}

} // namespace nfwpt
