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

#include "fairify/ingest/schema.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "fairify/clock.hpp"
#include "fairify/digest.hpp"

namespace fairify::ingest {

using nlohmann::json;

namespace {

[[noreturn]] void violation(const std::string& path, const std::string& what) {
  throw Error("ingest", "SchemaViolation", path + ": " + what);
}

ColumnType parse_type(const std::string& s, const std::string& path) {
  if (s == "string") return ColumnType::kString;
  if (s == "integer") return ColumnType::kInteger;
  if (s == "decimal") return ColumnType::kDecimal;
  if (s == "boolean") return ColumnType::kBoolean;
  if (s == "date") return ColumnType::kDate;
  if (s == "datetime") return ColumnType::kDateTime;
  violation(path, "unknown type '" + s + "'");
}

CrfModule parse_module(const std::string& s, const std::string& path) {
  if (s == "admission") return CrfModule::kAdmission;
  if (s == "followup") return CrfModule::kFollowUp;
  if (s == "outcome") return CrfModule::kOutcome;
  violation(path, "unknown crf_module '" + s + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

std::optional<std::int64_t> parse_integer(std::string_view s) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  std::string text = negative ? "-" + std::string(s) : std::string(s);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

// Canonical decimal: no redundant zeros, at least one digit on each side of
// the point, no negative zero.
std::optional<Decimal> parse_decimal(std::string_view s) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
  if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;
  while (int_part.size() > 1 && int_part.front() == '0') int_part.remove_prefix(1);
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.remove_suffix(1);
  std::string ip = int_part.empty() ? "0" : std::string(int_part);
  std::string fp = frac_part.empty() ? "0" : std::string(frac_part);
  if (ip == "0" && fp == "0") negative = false;
  return Decimal{(negative ? "-" : "") + ip + "." + fp};
}

std::optional<bool> parse_boolean(std::string_view s) {
  std::string lower(trim(s));
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "true" || lower == "1") return true;
  if (lower == "false" || lower == "0") return false;
  return std::nullopt;
}

std::optional<std::chrono::year_month_day> parse_date(std::string_view s) {
  s = trim(s);
  if (s.size() != 10 || s[4] != '-' || s[7] != '-' ||
      !all_digits(s.substr(0, 4)) || !all_digits(s.substr(5, 2)) ||
      !all_digits(s.substr(8, 2))) {
    return std::nullopt;
  }
  const int y = std::stoi(std::string(s.substr(0, 4)));
  const unsigned m = static_cast<unsigned>(std::stoi(std::string(s.substr(5, 2))));
  const unsigned d = static_cast<unsigned>(std::stoi(std::string(s.substr(8, 2))));
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                  std::chrono::day{d}};
  if (!ymd.ok()) return std::nullopt;
  return ymd;
}

std::optional<DateTime> parse_datetime(std::string_view s) {
  s = trim(s);
  if (s.size() < 19 || s[10] != 'T') return std::nullopt;
  try {
    parse_instant(s);
  } catch (const Error&) {
    return std::nullopt;
  }
  return DateTime{std::string(s)};
}

const char* type_reason(ColumnType type) {
  switch (type) {
    case ColumnType::kString: return "invalid string";
    case ColumnType::kInteger: return "invalid integer";
    case ColumnType::kDecimal: return "invalid decimal";
    case ColumnType::kBoolean: return "invalid boolean";
    case ColumnType::kDate: return "invalid date";
    case ColumnType::kDateTime: return "invalid datetime";
  }
  return "invalid value";
}

TypedCell parse_cell(std::string_view raw, ColumnType type) {
  switch (type) {
    case ColumnType::kString:
      return CellValue(std::string(raw));
    case ColumnType::kInteger:
      if (auto v = parse_integer(raw)) return CellValue(*v);
      break;
    case ColumnType::kDecimal:
      if (auto v = parse_decimal(raw)) return CellValue(*v);
      break;
    case ColumnType::kBoolean:
      if (auto v = parse_boolean(raw)) return CellValue(*v);
      break;
    case ColumnType::kDate:
      if (auto v = parse_date(raw)) return CellValue(*v);
      break;
    case ColumnType::kDateTime:
      if (auto v = parse_datetime(raw)) return CellValue(*v);
      break;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ColumnType type) {
  switch (type) {
    case ColumnType::kString: return "string";
    case ColumnType::kInteger: return "integer";
    case ColumnType::kDecimal: return "decimal";
    case ColumnType::kBoolean: return "boolean";
    case ColumnType::kDate: return "date";
    case ColumnType::kDateTime: return "datetime";
  }
  return "string";
}

std::string_view to_string(CrfModule module) {
  switch (module) {
    case CrfModule::kAdmission: return "admission";
    case CrfModule::kFollowUp: return "followup";
    case CrfModule::kOutcome: return "outcome";
  }
  return "admission";
}

const ColumnSpec* ColumnSchema::find(std::string_view name) const {
  auto it = std::find_if(columns.begin(), columns.end(),
                         [&](const ColumnSpec& c) { return c.name == name; });
  return it == columns.end() ? nullptr : &*it;
}

ColumnSchema parse_schema(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    violation("/", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("columns") || !doc["columns"].is_array()) {
    violation("/columns", "missing array");
  }
  ColumnSchema schema;
  std::set<std::string> names;
  const auto& cols = doc["columns"];
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::string path = "/columns/" + std::to_string(i);
    const auto& c = cols[i];
    if (!c.is_object()) violation(path, "expected object");
    ColumnSpec spec;
    if (!c.contains("name") || !c["name"].is_string()) violation(path + "/name", "missing string");
    spec.name = c["name"].get<std::string>();
    if (!names.insert(spec.name).second) {
      violation(path + "/name", "duplicate column '" + spec.name + "'");
    }
    if (!c.contains("type") || !c["type"].is_string()) violation(path + "/type", "missing string");
    spec.type = parse_type(c["type"].get<std::string>(), path + "/type");
    if (!c.contains("nullable") || !c["nullable"].is_boolean()) {
      violation(path + "/nullable", "missing boolean");
    }
    spec.nullable = c["nullable"].get<bool>();
    if (c.contains("null_markers")) {
      const auto& markers = c["null_markers"];
      if (!markers.is_array()) violation(path + "/null_markers", "expected array");
      spec.null_markers.clear();
      for (std::size_t k = 0; k < markers.size(); ++k) {
        if (!markers[k].is_string()) {
          violation(path + "/null_markers/" + std::to_string(k), "expected string");
        }
        spec.null_markers.push_back(markers[k].get<std::string>());
      }
    }
    if (c.contains("crf_module")) {
      if (!c["crf_module"].is_string()) violation(path + "/crf_module", "expected string");
      spec.crf_module = parse_module(c["crf_module"].get<std::string>(), path + "/crf_module");
    }
    schema.columns.push_back(std::move(spec));
  }
  return schema;
}

ColumnSchema read_schema(const std::filesystem::path& path) {
  return parse_schema(read_file(path));
}

std::string canonical_lexical(const CellValue& value) {
  struct Visitor {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const Decimal& d) const { return d.canonical; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::chrono::year_month_day& ymd) const {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                    static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
      return buf;
    }
    std::string operator()(const DateTime& dt) const { return dt.canonical; }
  };
  return std::visit(Visitor{}, value);
}

std::size_t TypedDataset::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < schema.columns.size(); ++i) {
    if (schema.columns[i].name == name) return i;
  }
  throw Error("ingest", "UnknownColumn", "no column '" + std::string(name) + "'");
}

TypedDataset apply_schema(const TabularDataset& data, const ColumnSchema& schema) {
  std::vector<std::size_t> source_index;
  for (const auto& spec : schema.columns) {
    auto it = std::find(data.columns.begin(), data.columns.end(), spec.name);
    if (it == data.columns.end()) {
      throw Error("ingest", "UnknownColumn",
                  "schema column '" + spec.name + "' is not in the dataset");
    }
    source_index.push_back(static_cast<std::size_t>(it - data.columns.begin()));
  }

  TypedDataset out;
  out.schema = schema;
  out.source = data.source;
  out.rows.reserve(data.rows.size());
  for (std::size_t r = 0; r < data.rows.size(); ++r) {
    std::vector<TypedCell> row;
    row.reserve(schema.columns.size());
    for (std::size_t c = 0; c < schema.columns.size(); ++c) {
      const auto& spec = schema.columns[c];
      const std::string& raw = data.rows[r][source_index[c]];
      const bool is_null_marker =
          std::find(spec.null_markers.begin(), spec.null_markers.end(), raw) !=
          spec.null_markers.end();
      if (is_null_marker) {
        if (!spec.nullable) {
          out.row_errors.push_back({r + 1, spec.name, "null in non-nullable column"});
        }
        row.emplace_back(std::nullopt);
        continue;
      }
      TypedCell cell = parse_cell(raw, spec.type);
      if (!cell) out.row_errors.push_back({r + 1, spec.name, type_reason(spec.type)});
      row.push_back(std::move(cell));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace fairify::ingest
