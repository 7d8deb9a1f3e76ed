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

#include "fairify/etl/mapping.hpp"

#include <json.hpp>

#include "fairify/digest.hpp"

namespace fairify::etl {

using nlohmann::json;
using rdf::Iri;

UnmappedValueError::UnmappedValueError(std::string column, std::string value, std::size_t row)
    : Error("etl", "UnmappedValue",
            "row " + std::to_string(row) + ": column " + column + " has unmapped value '" +
                value + "'"),
      column_(std::move(column)),
      value_(std::move(value)),
      row_(row) {}

NullInTemplateError::NullInTemplateError(std::string column, std::size_t row)
    : Error("etl", "NullInTemplate",
            "row " + std::to_string(row) + ": subject template column " + column + " is null"),
      column_(std::move(column)),
      row_(row) {}

namespace {

[[noreturn]] void violation(const std::string& path, const std::string& what) {
  throw Error("etl", "SchemaViolation", path + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) violation(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) violation(path + "." + key, "missing field");
  return *it;
}

std::string string_at(const json& obj, const char* key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_string()) violation(path + "." + key, "expected a string");
  return v.get<std::string>();
}

Iri absolute(const std::string& text, const std::string& path) {
  try {
    return rdf::validate_iri(text);
  } catch (const rdf::IriError& e) {
    throw Error("etl", "BadIri", path + ": " + e.what());
  }
}

Iri resolve_term(const std::string& ref, const rdf::PrefixMap& prefixes,
                 const std::string& path) {
  if (ref.size() >= 2 && ref.front() == '<' && ref.back() == '>') {
    return absolute(ref.substr(1, ref.size() - 2), path);
  }
  const auto colon = ref.find(':');
  if (colon == std::string::npos) violation(path, "'" + ref + "' is neither a CURIE nor an IRI");
  if (prefixes.find(std::string_view(ref).substr(0, colon)) == nullptr) {
    if (ref.find("://") != std::string::npos || ref.starts_with("urn:")) {
      return absolute(ref, path);
    }
    throw Error("etl", "UnknownPrefix",
                path + ": prefix '" + ref.substr(0, colon) + "' is not declared");
  }
  try {
    return rdf::expand_curie(ref, prefixes);
  } catch (const rdf::IriError& e) {
    throw Error("etl", "BadIri", path + ": " + e.what());
  }
}

const ingest::ColumnSpec& column_of(const ingest::ColumnSchema& schema, const std::string& name,
                                    const std::string& path) {
  const auto* spec = schema.find(name);
  if (spec == nullptr) {
    throw Error("etl", "UnknownColumn", path + ": column '" + name + "' is not in the schema");
  }
  return *spec;
}

Iri datatype_for(ingest::ColumnType type) {
  switch (type) {
    case ingest::ColumnType::kString: return rdf::vocab::xsd_string();
    case ingest::ColumnType::kInteger: return rdf::vocab::xsd("integer");
    case ingest::ColumnType::kDecimal: return rdf::vocab::xsd("decimal");
    case ingest::ColumnType::kBoolean: return rdf::vocab::xsd("boolean");
    case ingest::ColumnType::kDate: return rdf::vocab::xsd("date");
    case ingest::ColumnType::kDateTime: return rdf::vocab::xsd("dateTime");
  }
  return rdf::vocab::xsd_string();
}

DataRule parse_data_rule(const json& j, const rdf::PrefixMap& prefixes,
                         const ingest::ColumnSchema& schema, const std::string& path) {
  const std::string column = string_at(j, "column", path);
  const auto& col = column_of(schema, column, path + ".column");
  DataRule rule{column, resolve_term(string_at(j, "predicate", path), prefixes, path + ".predicate"),
                std::nullopt, std::nullopt};
  const bool has_type = j.contains("datatype");
  const bool has_lang = j.contains("language");
  if (has_type && has_lang) violation(path, "datatype and language are mutually exclusive");
  const Iri natural = datatype_for(col.type);
  if (has_type) {
    Iri dt = resolve_term(string_at(j, "datatype", path), prefixes, path + ".datatype");
    if (dt != natural && dt != rdf::vocab::xsd_string()) {
      violation(path + ".datatype", dt.str() + " does not fit " +
                                        std::string(ingest::to_string(col.type)) + " column " +
                                        column);
    }
    rule.datatype = std::move(dt);
  } else if (has_lang) {
    const std::string lang = string_at(j, "language", path);
    if (col.type != ingest::ColumnType::kString) {
      violation(path + ".language", "language tags need a string column");
    }
    try {
      rule.language = rdf::Literal::tagged("", lang).language();
    } catch (const Error& e) {
      violation(path + ".language", e.what());
    }
  } else {
    rule.datatype = natural;
  }
  return rule;
}

ObjectRule parse_object_rule(const json& j, const rdf::PrefixMap& prefixes,
                             const ingest::ColumnSchema& schema, const std::string& path) {
  const std::string column = string_at(j, "column", path);
  column_of(schema, column, path + ".column");
  ObjectRule rule{column, resolve_term(string_at(j, "predicate", path), prefixes, path + ".predicate"),
                  {}, OnUnmapped::kError};
  const json& map = member(j, "value_map", path);
  if (!map.is_object()) violation(path + ".value_map", "expected an object");
  for (const auto& [value, target] : map.items()) {
    const std::string p = path + ".value_map." + value;
    if (!target.is_string()) violation(p, "expected a string");
    rule.value_map.emplace(value, resolve_term(target.get<std::string>(), prefixes, p));
  }
  if (j.contains("on_unmapped")) {
    const std::string mode = string_at(j, "on_unmapped", path);
    if (mode == "error") {
      rule.on_unmapped = OnUnmapped::kError;
    } else if (mode == "skip") {
      rule.on_unmapped = OnUnmapped::kSkip;
    } else if (mode == "mint") {
      rule.on_unmapped = OnUnmapped::kMint;
    } else {
      violation(path + ".on_unmapped", "expected error, skip or mint");
    }
  }
  return rule;
}

}  // namespace

std::vector<std::string> template_columns(std::string_view uri_template) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < uri_template.size()) {
    const char c = uri_template[i];
    if (c == '}') violation("subject.template", "unbalanced '}'");
    if (c != '{') {
      ++i;
      continue;
    }
    const auto close = uri_template.find('}', i + 1);
    if (close == std::string_view::npos) violation("subject.template", "unbalanced '{'");
    const auto name = uri_template.substr(i + 1, close - i - 1);
    if (name.empty() || name.find('{') != std::string_view::npos) {
      violation("subject.template", "bad placeholder");
    }
    out.emplace_back(name);
    i = close + 1;
  }
  return out;
}

MappingSpec parse_mapping_spec(std::string_view json_text, const ingest::ColumnSchema& schema) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    violation("$", e.what());
  }
  MappingSpec spec{absolute(string_at(doc, "base_iri", "$"), "$.base_iri"), {}, {}, {}, {}};
  spec.prefixes.bind("rdf", Iri::parse(rdf::vocab::kRdf));
  spec.prefixes.bind("rdfs", Iri::parse(rdf::vocab::kRdfs));
  spec.prefixes.bind("xsd", Iri::parse(rdf::vocab::kXsd));
  if (doc.contains("prefixes")) {
    const json& p = doc["prefixes"];
    if (!p.is_object()) violation("$.prefixes", "expected an object");
    for (const auto& [label, ns] : p.items()) {
      const std::string path = "$.prefixes." + label;
      if (!ns.is_string()) violation(path, "expected a string");
      if (!rdf::is_prefix_label(label)) violation(path, "bad prefix label");
      spec.prefixes.bind(label, absolute(ns.get<std::string>(), path));
    }
  }

  const json& subject = member(doc, "subject", "$");
  spec.subject.uri_template = string_at(subject, "template", "$.subject");
  for (const auto& col : template_columns(spec.subject.uri_template)) {
    column_of(schema, col, "$.subject.template");
  }
  if (subject.contains("class")) {
    spec.subject.type =
        resolve_term(string_at(subject, "class", "$.subject"), spec.prefixes, "$.subject.class");
  }

  for (const char* key : {"data_rules", "object_rules"}) {
    if (!doc.contains(key)) continue;
    const json& rules = doc[key];
    const std::string base = std::string("$.") + key;
    if (!rules.is_array()) violation(base, "expected an array");
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const std::string path = base + "[" + std::to_string(i) + "]";
      if (key == std::string("data_rules")) {
        spec.data_rules.push_back(parse_data_rule(rules[i], spec.prefixes, schema, path));
      } else {
        spec.object_rules.push_back(parse_object_rule(rules[i], spec.prefixes, schema, path));
      }
    }
  }
  return spec;
}

MappingSpec read_mapping_spec(const std::filesystem::path& path,
                              const ingest::ColumnSchema& schema) {
  return parse_mapping_spec(read_file(path), schema);
}

const ingest::TypedCell& RowView::cell(std::string_view column) const {
  return data_.rows.at(index_).at(data_.column_index(column));
}

Iri expand_uri_template(std::string_view uri_template, const Iri& base, const RowView& row) {
  std::string out;
  std::size_t i = 0;
  while (i < uri_template.size()) {
    if (uri_template[i] != '{') {
      out.push_back(uri_template[i++]);
      continue;
    }
    const auto close = uri_template.find('}', i);
    const std::string column(uri_template.substr(i + 1, close - i - 1));
    const auto& cell = row.cell(column);
    if (!cell) throw NullInTemplateError(column, row.number());
    out += rdf::percent_encode(ingest::canonical_lexical(*cell));
    i = close + 1;
  }
  const auto colon = uri_template.find(':');
  const bool has_scheme = colon != std::string_view::npos && colon < uri_template.find('{') &&
                          colon > 0;
  if (has_scheme) return rdf::validate_iri(out);
  return rdf::join_iri(base, out);
}

Iri mint_term(const Iri& base, std::string_view column, std::string_view value) {
  return rdf::join_iri(base,
                       "term/" + rdf::percent_encode(column) + "/" + rdf::percent_encode(value));
}

std::size_t TransformCounters::triples() const {
  std::size_t n = type_triples;
  for (const auto& c : data) n += c.emitted;
  for (const auto& c : object) n += c.emitted;
  return n;
}

std::size_t TransformCounters::skipped_nulls() const {
  std::size_t n = 0;
  for (const auto& c : data) n += c.skipped_nulls;
  for (const auto& c : object) n += c.skipped_nulls;
  return n;
}

std::size_t TransformCounters::skipped_unmapped() const {
  std::size_t n = 0;
  for (const auto& c : object) n += c.skipped_unmapped;
  return n;
}

void TransformCounters::merge(const TransformCounters& other) {
  type_triples += other.type_triples;
  auto add = [](std::vector<RuleCounts>& into, const std::vector<RuleCounts>& from) {
    for (std::size_t i = 0; i < into.size() && i < from.size(); ++i) {
      into[i].emitted += from[i].emitted;
      into[i].skipped_nulls += from[i].skipped_nulls;
      into[i].skipped_unmapped += from[i].skipped_unmapped;
    }
  };
  add(data, other.data);
  add(object, other.object);
}

std::optional<rdf::Triple> map_data_property(const DataRule& rule, const Iri& subject,
                                             const RowView& row, RuleCounts& counts) {
  const auto& cell = row.cell(rule.column);
  if (!cell) {
    ++counts.skipped_nulls;
    return std::nullopt;
  }
  std::string lexical = ingest::canonical_lexical(*cell);
  ++counts.emitted;
  if (rule.language) {
    return rdf::Triple(subject, rule.predicate, rdf::Literal::tagged(std::move(lexical), *rule.language));
  }
  return rdf::Triple(subject, rule.predicate,
                     rdf::Literal::typed(std::move(lexical),
                                         rule.datatype.value_or(rdf::vocab::xsd_string())));
}

std::optional<rdf::Triple> map_object_property(const ObjectRule& rule, const Iri& base,
                                               const Iri& subject, const RowView& row,
                                               RuleCounts& counts) {
  const auto& cell = row.cell(rule.column);
  if (!cell) {
    ++counts.skipped_nulls;
    return std::nullopt;
  }
  const std::string value = ingest::canonical_lexical(*cell);
  if (auto it = rule.value_map.find(value); it != rule.value_map.end()) {
    ++counts.emitted;
    return rdf::Triple(subject, rule.predicate, it->second);
  }
  switch (rule.on_unmapped) {
    case OnUnmapped::kError:
      throw UnmappedValueError(rule.column, value, row.number());
    case OnUnmapped::kSkip:
      ++counts.skipped_unmapped;
      return std::nullopt;
    case OnUnmapped::kMint:
      break;
  }
  ++counts.emitted;
  return rdf::Triple(subject, rule.predicate, mint_term(base, rule.column, value));
}

std::vector<rdf::Triple> transform_row(const MappingSpec& spec, const RowView& row,
                                       TransformCounters& counters) {
  std::vector<rdf::Triple> out;
  const Iri subject = expand_uri_template(spec.subject.uri_template, spec.base_iri, row);
  if (spec.subject.type) {
    out.emplace_back(subject, rdf::vocab::rdf_type(), *spec.subject.type);
    ++counters.type_triples;
  }
  for (std::size_t i = 0; i < spec.data_rules.size(); ++i) {
    if (auto t = map_data_property(spec.data_rules[i], subject, row, counters.data[i])) {
      out.push_back(std::move(*t));
    }
  }
  for (std::size_t i = 0; i < spec.object_rules.size(); ++i) {
    if (auto t = map_object_property(spec.object_rules[i], spec.base_iri, subject, row,
                                     counters.object[i])) {
      out.push_back(std::move(*t));
    }
  }
  return out;
}

}  // namespace fairify::etl
