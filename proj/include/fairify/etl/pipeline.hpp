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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fairify/clock.hpp"
#include "fairify/etl/mapping.hpp"
#include "fairify/prov/document.hpp"

namespace fairify::etl {

struct PipelineConfig {
  std::filesystem::path input_csv;
  std::filesystem::path schema;
  std::filesystem::path mapping;
  std::filesystem::path output_dir;
  std::optional<std::string> run_id;
  prov::Granularity granularity = prov::Granularity::kStep;
  ingest::CsvDialect dialect;
  std::size_t batch_size = 100;
};

struct RuleReport {
  std::string kind;  // "data" or "object"
  std::string column;
  std::string predicate;
  RuleCounts counts;
};

struct RunReport {
  std::string run_id;
  std::size_t rows_in = 0;
  std::size_t triples_out = 0;
  std::size_t skipped_nulls = 0;
  std::size_t skipped_unmapped = 0;
  std::size_t row_errors = 0;
  std::vector<RuleReport> per_rule;
  // File name -> SHA-256 of the data outputs written before the report.
  std::map<std::string, std::string> output_digests;

  nlohmann::json to_json() const;
};

// Output file names inside the output directory.
inline constexpr const char* kDataFile = "data.nt";
inline constexpr const char* kReportFile = "run-report.json";
inline constexpr const char* kProvNTriplesFile = "prov.nt";
inline constexpr const char* kProvJsonFile = "prov.json";

// First 16 hex digits of SHA-256 over the concatenated input digests.
std::string derive_run_id(const std::vector<std::string>& input_digests);

// Rows in, in memory: counters plus the sorted, deduplicated graph.
struct TransformResult {
  ingest::TypedDataset data;
  rdf::Graph graph;
  TransformCounters counters;
};
TransformResult transform_dataset(const MappingSpec& spec, ingest::TypedDataset data);

// ingest -> triplify (5a) -> report (5b) -> write (6), with provenance.
// On failure the data and report files are removed, provenance recording the
// failed stage is still written, and the error is rethrown.
RunReport run_pipeline(const PipelineConfig& config, const Clock& clock);

}  // namespace fairify::etl
