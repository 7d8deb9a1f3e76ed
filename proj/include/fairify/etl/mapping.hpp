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

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairify/ingest/schema.hpp"
#include "fairify/rdf/graph.hpp"

namespace fairify::etl {

class UnmappedValueError : public Error {
 public:
  UnmappedValueError(std::string column, std::string value, std::size_t row);
  const std::string& column() const noexcept { return column_; }
  const std::string& value() const noexcept { return value_; }
  std::size_t row() const noexcept { return row_; }

 private:
  std::string column_;
  std::string value_;
  std::size_t row_;
};

class NullInTemplateError : public Error {
 public:
  NullInTemplateError(std::string column, std::size_t row);
  const std::string& column() const noexcept { return column_; }
  std::size_t row() const noexcept { return row_; }

 private:
  std::string column_;
  std::size_t row_;
};

enum class OnUnmapped { kError, kSkip, kMint };

struct DataRule {
  std::string column;
  rdf::Iri predicate;
  // Exactly one of the two is set after parsing.
  std::optional<rdf::Iri> datatype;
  std::optional<std::string> language;
};

struct ObjectRule {
  std::string column;
  rdf::Iri predicate;
  std::map<std::string, rdf::Iri> value_map;
  OnUnmapped on_unmapped = OnUnmapped::kError;
};

struct SubjectSpec {
  std::string uri_template;
  std::optional<rdf::Iri> type;
};

struct MappingSpec {
  rdf::Iri base_iri;
  rdf::PrefixMap prefixes;
  SubjectSpec subject;
  std::vector<DataRule> data_rules;
  std::vector<ObjectRule> object_rules;
};

// Term references are CURIEs over the declared prefixes (rdf, rdfs and xsd
// are predeclared) or absolute IRIs, optionally in angle brackets. A data
// rule without datatype or language gets the datatype of its schema column.
// Throws etl.SchemaViolation, etl.UnknownPrefix, etl.BadIri, etl.UnknownColumn.
MappingSpec parse_mapping_spec(std::string_view json_text, const ingest::ColumnSchema& schema);
MappingSpec read_mapping_spec(const std::filesystem::path& path,
                              const ingest::ColumnSchema& schema);

// Placeholder names in order of appearance; etl.SchemaViolation on
// unbalanced or empty braces.
std::vector<std::string> template_columns(std::string_view uri_template);

// One typed row of a dataset.
class RowView {
 public:
  RowView(const ingest::TypedDataset& data, std::size_t index) : data_(data), index_(index) {}
  const ingest::TypedCell& cell(std::string_view column) const;
  std::size_t number() const { return index_ + 1; }

 private:
  const ingest::TypedDataset& data_;
  std::size_t index_;
};

// Substitutes percent-encoded canonical cell values; relative results are
// joined to `base`. Throws NullInTemplateError.
rdf::Iri expand_uri_template(std::string_view uri_template, const rdf::Iri& base,
                             const RowView& row);

// base/term/<column>/<value>, both percent-encoded.
rdf::Iri mint_term(const rdf::Iri& base, std::string_view column, std::string_view value);

struct RuleCounts {
  std::size_t emitted = 0;
  std::size_t skipped_nulls = 0;
  std::size_t skipped_unmapped = 0;
};

struct TransformCounters {
  explicit TransformCounters(const MappingSpec& spec)
      : data(spec.data_rules.size()), object(spec.object_rules.size()) {}

  std::size_t type_triples = 0;
  std::vector<RuleCounts> data;
  std::vector<RuleCounts> object;

  std::size_t triples() const;
  std::size_t skipped_nulls() const;
  std::size_t skipped_unmapped() const;
  void merge(const TransformCounters& other);
};

std::optional<rdf::Triple> map_data_property(const DataRule& rule, const rdf::Iri& subject,
                                             const RowView& row, RuleCounts& counts);

// Throws UnmappedValueError when the rule says so.
std::optional<rdf::Triple> map_object_property(const ObjectRule& rule, const rdf::Iri& base,
                                               const rdf::Iri& subject, const RowView& row,
                                               RuleCounts& counts);

// Type triple first, then data rules, then object rules, in spec order.
std::vector<rdf::Triple> transform_row(const MappingSpec& spec, const RowView& row,
                                       TransformCounters& counters);

}  // namespace fairify::etl
