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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nfwpt {

using Cell = std::variant<double, std::int64_t, std::string, bool>;

/// Column-named rows in sweep order.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Index of `column`; throws std::out_of_range when absent.
    std::size_t column_index(std::string_view column) const;
};

enum class OutputFormat { Csv, Json };

OutputFormat parse_output_format(std::string_view name);

/// Nine significant digits, "%.9g" style; non-finite values print as inf / -inf / nan.
std::string format_number(double value);

std::string to_csv(const ResultTable &table);
std::string to_json(const ResultTable &table);
std::string render(const ResultTable &table, OutputFormat format);

/// Writes the table; throws std::runtime_error on I/O failure.
void emit_results(const ResultTable &table, const std::filesystem::path &path,
                  OutputFormat format);

/// Header plus raw string cells of a CSV produced by to_csv.
struct CsvData {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t column_index(std::string_view column) const;
};

CsvData parse_csv(std::string_view text);

} // namespace nfwpt
