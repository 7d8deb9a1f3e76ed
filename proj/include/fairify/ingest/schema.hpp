// Copyright 2026 The fairify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fairify/ingest/csv.hpp"

namespace fairify::ingest {

enum class ColumnType { kString, kInteger, kDecimal, kBoolean, kDate, kDateTime };

// Which module of the case report form a column belongs to.
enum class CrfModule { kAdmission, kFollowUp, kOutcome };

std::string_view to_string(ColumnType type);
std::string_view to_string(CrfModule module);

struct ColumnSpec {
  std::string name;
  ColumnType type = ColumnType::kString;
  bool nullable = false;
  std::vector<std::string> null_markers{""};
  std::optional<CrfModule> crf_module;
};

struct ColumnSchema {
  std::vector<ColumnSpec> columns;

  const ColumnSpec* find(std::string_view name) const;
};

// {"columns": [{name, type, nullable, null_markers?, crf_module?}]}.
// Throws ingest.SchemaViolation naming the offending JSON path.
ColumnSchema parse_schema(std::string_view json_text);
ColumnSchema read_schema(const std::filesystem::path& path);

struct Decimal {
  std::string canonical;
  auto operator<=>(const Decimal&) const = default;
};
struct DateTime {
  std::string canonical;
  auto operator<=>(const DateTime&) const = default;
};

using CellValue = std::variant<std::string, std::int64_t, Decimal, bool,
                               std::chrono::year_month_day, DateTime>;
using TypedCell = std::optional<CellValue>;

// Canonical lexical form: integers without sign/leading zeros, "true"/"false",
// ISO-8601 dates, strings verbatim.
std::string canonical_lexical(const CellValue& value);

struct RowError {
  std::size_t row;  // 1-based data row
  std::string column;
  std::string reason;
};

struct TypedDataset {
  ColumnSchema schema;
  std::vector<std::vector<TypedCell>> rows;
  std::vector<RowError> row_errors;
  SourceInfo source;

  // Index of `name` in schema order; throws ingest.UnknownColumn.
  std::size_t column_index(std::string_view name) const;
};

// Keeps only the schema's columns, in schema order. Unparseable cells become
// null and are listed in row_errors.
TypedDataset apply_schema(const TabularDataset& data, const ColumnSchema& schema);

}  // namespace fairify::ingest
