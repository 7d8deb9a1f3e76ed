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

#include "fairify/etl/pipeline.hpp"

#include <system_error>

#include "fairify/digest.hpp"
#include "fairify/prov/recorder.hpp"
#include "fairify/rdf/ntriples.hpp"

namespace fairify::etl {

namespace fs = std::filesystem;
using nlohmann::json;
using prov::EntityKind;
using prov::Status;
using rdf::Iri;

nlohmann::json RunReport::to_json() const {
  json rules = json::array();
  for (const auto& r : per_rule) {
    json entry = {{"kind", r.kind},
                  {"emitted", r.counts.emitted},
                  {"skipped_nulls", r.counts.skipped_nulls},
                  {"skipped_unmapped", r.counts.skipped_unmapped}};
    if (!r.column.empty()) entry["column"] = r.column;
    entry["predicate"] = r.predicate;
    rules.push_back(std::move(entry));
  }
  return {{"run_id", run_id},
          {"rows_in", rows_in},
          {"triples_out", triples_out},
          {"skipped_nulls", skipped_nulls},
          {"skipped_unmapped", skipped_unmapped},
          {"row_errors", row_errors},
          {"per_rule", std::move(rules)},
          {"output_digests", output_digests}};
}

std::string derive_run_id(const std::vector<std::string>& input_digests) {
  std::string joined;
  for (const auto& d : input_digests) joined += d;
  return sha256_hex(joined).substr(0, 16);
}

namespace {

void transform_rows(const MappingSpec& spec, const ingest::TypedDataset& data,
                    std::size_t begin, std::size_t end, rdf::Graph& into,
                    TransformCounters& counters) {
  for (std::size_t i = begin; i < end; ++i) {
    for (auto& t : transform_row(spec, RowView(data, i), counters)) into.insert(std::move(t));
  }
}

RunReport make_report(const MappingSpec& spec, const TransformResult& result,
                      const std::string& run_id) {
  RunReport report;
  report.run_id = run_id;
  report.rows_in = result.data.rows.size();
  report.triples_out = result.counters.triples();
  report.skipped_nulls = result.counters.skipped_nulls();
  report.skipped_unmapped = result.counters.skipped_unmapped();
  report.row_errors = result.data.row_errors.size();
  if (spec.subject.type) {
    report.per_rule.push_back(
        {"class", "", rdf::vocab::rdf_type().str(), {result.counters.type_triples, 0, 0}});
  }
  for (std::size_t i = 0; i < spec.data_rules.size(); ++i) {
    report.per_rule.push_back({"data", spec.data_rules[i].column,
                               spec.data_rules[i].predicate.str(), result.counters.data[i]});
  }
  for (std::size_t i = 0; i < spec.object_rules.size(); ++i) {
    report.per_rule.push_back({"object", spec.object_rules[i].column,
                               spec.object_rules[i].predicate.str(), result.counters.object[i]});
  }
  return report;
}

std::vector<prov::StageSpec> pipeline_stages() {
  return {{"triplify", "5a", "fairify-etl"},
          {"generate-metadata", "5b", "fairify-report"},
          {"write-files", "6", "fairify-writer"}};
}

}  // namespace

TransformResult transform_dataset(const MappingSpec& spec, ingest::TypedDataset data) {
  TransformResult result{std::move(data), {}, TransformCounters(spec)};
  transform_rows(spec, result.data, 0, result.data.rows.size(), result.graph, result.counters);
  return result;
}

RunReport run_pipeline(const PipelineConfig& config, const Clock& clock) {
  const std::string csv_bytes = read_file(config.input_csv);
  const std::string schema_bytes = read_file(config.schema);
  const std::string mapping_bytes = read_file(config.mapping);
  const std::string csv_digest = sha256_hex(csv_bytes);
  const std::string schema_digest = sha256_hex(schema_bytes);
  const std::string mapping_digest = sha256_hex(mapping_bytes);
  const std::string run_id =
      config.run_id.value_or(derive_run_id({csv_digest, schema_digest, mapping_digest}));
  if (!prov::is_valid_run_id(run_id)) {
    throw Error("etl", "BadRunId", "run id '" + run_id + "' is not [A-Za-z0-9._-]+");
  }

  // Provenance ids live under the mapping's base IRI when it can be read.
  Iri base = Iri::parse("http://example.org/fairify/");
  try {
    base = Iri::parse(json::parse(mapping_bytes).at("base_iri").get<std::string>());
  } catch (const std::exception&) {
  }

  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) {
    throw Error("io", "WriteFailed",
                "cannot create " + config.output_dir.string() + ": " + ec.message());
  }
  const fs::path data_path = config.output_dir / kDataFile;
  const fs::path report_path = config.output_dir / kReportFile;

  prov::PlanConfig plan{base, run_id, pipeline_stages(), config.granularity};
  plan.batch_size = config.batch_size == 0 ? 1 : config.batch_size;
  prov::Recorder recorder(plan, clock);
  recorder.begin_run();
  auto input = [&](const fs::path& p, const std::string& digest, const char* role) {
    return recorder.add_entity(EntityKind::kDataset, {{"path", p.filename().string()},
                                                      {"role", role},
                                                      {"sha256", digest}});
  };
  const Iri csv_entity = input(config.input_csv, csv_digest, "table");
  const Iri schema_entity = input(config.schema, schema_digest, "schema");
  const Iri mapping_entity = input(config.mapping, mapping_digest, "mapping");

  std::string stage = "5a";
  TimePoint started = recorder.now();
  auto write_prov = [&](Status status) {
    const prov::ProvDocument doc = recorder.finish(status);
    write_file(config.output_dir / kProvNTriplesFile,
               prov::serialize_prov(doc, prov::ProvFormat::kNTriples));
    write_file(config.output_dir / kProvJsonFile,
               prov::serialize_prov(doc, prov::ProvFormat::kProvJson));
  };

  try {
    const auto schema = ingest::parse_schema(schema_bytes);
    const auto spec = parse_mapping_spec(mapping_bytes, schema);
    const auto table =
        ingest::parse_csv(csv_bytes, config.dialect, config.input_csv.filename().string());
    TransformResult result{ingest::apply_schema(table, schema), {}, TransformCounters(spec)};

    std::vector<Iri> batches;
    if (config.granularity == prov::Granularity::kRecord) {
      const std::size_t n = result.data.rows.size();
      for (std::size_t first = 0; first < n; first += plan.batch_size) {
        const std::size_t last = std::min(n, first + plan.batch_size);
        const TimePoint batch_started = recorder.now();
        rdf::Graph part;
        transform_rows(spec, result.data, first, last, part, result.counters);
        const Iri batch = recorder.add_entity(
            EntityKind::kGraph, {{"triples", std::to_string(part.size())}});
        recorder.record_batch("5a", "fairify-etl", {csv_entity}, {batch}, batch_started,
                              first + 1, last);
        result.graph.merge(part);
        batches.push_back(batch);
      }
    } else {
      transform_rows(spec, result.data, 0, result.data.rows.size(), result.graph,
                     result.counters);
    }
    const Iri graph_entity = recorder.add_entity(
        EntityKind::kGraph, {{"triples", std::to_string(result.graph.size())}});
    recorder.record_activity("5a", "fairify-etl", {csv_entity, schema_entity, mapping_entity},
                             {graph_entity}, Status::kSucceeded, started);
    if (batches.empty()) {
      recorder.add_derivation(graph_entity, csv_entity);
    } else {
      for (const auto& b : batches) recorder.add_derivation(graph_entity, b);
    }
    const std::string data_bytes = rdf::serialize_ntriples(result.graph);
    const std::string data_digest = sha256_hex(data_bytes);

    stage = "5b";
    started = recorder.now();
    RunReport report = make_report(spec, result, run_id);
    report.output_digests[kDataFile] = data_digest;
    const std::string report_bytes = report.to_json().dump(2) + "\n";
    write_file(report_path, report_bytes);
    const Iri report_entity = recorder.add_entity(
        EntityKind::kFile, {{"path", kReportFile}, {"sha256", sha256_hex(report_bytes)}});
    recorder.record_activity("5b", "fairify-report", {graph_entity}, {report_entity},
                             Status::kSucceeded, started);

    stage = "6";
    started = recorder.now();
    write_file(data_path, data_bytes);
    const Iri data_entity = recorder.add_entity(
        EntityKind::kFile, {{"path", kDataFile},
                            {"sha256", data_digest},
                            {"triples", std::to_string(result.graph.size())}});
    recorder.record_activity("6", "fairify-writer", {graph_entity}, {data_entity},
                             Status::kSucceeded, started);
    recorder.add_derivation(data_entity, graph_entity);

    write_prov(Status::kSucceeded);
    return report;
  } catch (const std::exception& e) {
    std::string message = e.what();
    if (const auto* err = dynamic_cast<const Error*>(&e)) {
      message = err->module() + "." + err->name() + ": " + message;
    }
    fs::remove(data_path, ec);
    fs::remove(report_path, ec);
    const std::string agent = stage == "5a"   ? "fairify-etl"
                              : stage == "5b" ? "fairify-report"
                                              : "fairify-writer";
    recorder.record_activity(stage, agent, {csv_entity, schema_entity, mapping_entity}, {},
                             Status::kFailed, started, {{"error", message}});
    write_prov(Status::kFailed);
    throw;
  }
}

}  // namespace fairify::etl
