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

#include <algorithm>
#include <csignal>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairify/assess/assessor.hpp"
#include "fairify/clock.hpp"
#include "fairify/digest.hpp"
#include "fairify/error.hpp"
#include "fairify/etl/pipeline.hpp"
#include "fairify/fdp/metadata.hpp"
#include "fairify/fdp/service.hpp"
#include "fairify/fdp/store.hpp"
#include "fairify/ingest/csv.hpp"
#include "fairify/ingest/schema.hpp"
#include "fairify/prov/document.hpp"
#include "fairify/rdf/ntriples.hpp"
#include "fairify/store/query.hpp"
#include "fairify/version.hpp"

namespace {

using namespace fairify;
using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInput = 2;

struct IngestArgs {
  fs::path in;
  fs::path schema;
  char delimiter = ',';
};

struct RunArgs {
  fs::path in, schema, map, out;
  std::optional<std::string> run_id;
  std::string granularity = "step";
  std::optional<std::string> fixed_clock;
  std::size_t batch_size = 100;
  char delimiter = ',';
};

struct ProvExportArgs {
  fs::path in;
  std::string format = "ntriples";
  std::optional<fs::path> out;
};

struct MetadataBuildArgs {
  fs::path in;
  std::optional<fs::path> data;
  std::optional<fs::path> out;
  std::optional<fs::path> write_json;
  std::string format = "ntriples";
  std::optional<std::string> fixed_clock;
};

struct ServeArgs {
  std::optional<fs::path> metadata;
  std::optional<fs::path> data;
  std::optional<std::string> bind;
  std::optional<std::string> base_url;
};

struct QueryArgs {
  fs::path data;
  fs::path query;
};

struct AssessArgs {
  std::optional<fs::path> data, prov, metadata, mapping, questions, json_out;
  std::optional<std::string> service_url;
};

Clock clock_from(const std::optional<std::string>& fixed) {
  return fixed ? fixed_clock(parse_instant(*fixed)) : system_clock();
}

void emit(const std::optional<fs::path>& out, const std::string& bytes) {
  if (out) {
    write_file(*out, bytes);
  } else {
    std::cout << bytes;
  }
}

int cmd_ingest(const IngestArgs& a) {
  ingest::CsvDialect dialect;
  dialect.delimiter = a.delimiter;
  const auto table = ingest::read_csv(a.in, dialect);
  const auto typed = ingest::apply_schema(table, ingest::read_schema(a.schema));
  std::cout << "source " << typed.source.path << "\n"
            << "sha256 " << typed.source.digest << "\n"
            << "rows " << typed.rows.size() << "\n"
            << "columns " << typed.schema.columns.size() << "\n";
  for (const auto& c : typed.schema.columns) {
    std::cout << "  " << c.name << " " << ingest::to_string(c.type)
              << (c.nullable ? " nullable" : "") << "\n";
  }
  std::cout << "row_errors " << typed.row_errors.size() << "\n";
  for (const auto& e : typed.row_errors) {
    std::cout << "  row " << e.row << " " << e.column << ": " << e.reason << "\n";
  }
  return kOk;
}

int cmd_run(const RunArgs& a) {
  etl::PipelineConfig c;
  c.input_csv = a.in;
  c.schema = a.schema;
  c.mapping = a.map;
  c.output_dir = a.out;
  c.run_id = a.run_id;
  c.granularity = prov::parse_granularity(a.granularity);
  c.dialect.delimiter = a.delimiter;
  c.batch_size = a.batch_size;
  const auto report = etl::run_pipeline(c, clock_from(a.fixed_clock));
  std::cout << report.to_json().dump(2) << "\n";
  return kOk;
}

int cmd_prov_export(const ProvExportArgs& a) {
  const std::string bytes = read_file(a.in);
  const bool from_json = a.in.extension() == ".json";
  if (a.format == "provjson") {
    if (!from_json) {
      throw Error("prov", "UnsupportedConversion", "PROV-JSON export needs a PROV-JSON input");
    }
    json doc;
    try {
      doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
      throw Error("prov", "BadProvJson", e.what());
    }
    prov::provjson_to_graph(doc);
    emit(a.out, doc.dump(2) + "\n");
    return kOk;
  }
  rdf::Graph g;
  if (from_json) {
    try {
      g = prov::provjson_to_graph(json::parse(bytes));
    } catch (const json::parse_error& e) {
      throw Error("prov", "BadProvJson", e.what());
    }
  } else {
    g = rdf::parse_ntriples(bytes);
  }
  emit(a.out, rdf::serialize_ntriples(g));
  return kOk;
}

int cmd_metadata_build(const MetadataBuildArgs& a) {
  auto fields = fdp::read_metadata_file(a.in);
  if (a.data) {
    const std::string bytes = read_file(*a.data);
    for (auto& f : fields) {
      if (f.kind != "distribution") continue;
      f.checksum = sha256_hex(bytes);
      f.byte_size = bytes.size();
    }
  }
  const Clock clock = clock_from(a.fixed_clock);
  fdp::MetadataStore store = fdp::MetadataStore::from_fields(fields, clock);
  for (const auto& r : store.records()) {
    for (const auto& issue : fdp::validate_layer(r)) {
      std::cerr << "WARN " << to_string(issue.severity) << " " << issue.record.str() << " "
                << issue.field << ": " << issue.message << "\n";
    }
  }
  if (a.write_json) {
    json doc = json::array();
    for (const auto& f : fields) doc.push_back(fdp::to_json(f));
    write_file(*a.write_json, doc.dump(2) + "\n");
  }
  if (a.format == "nquads") {
    emit(a.out, rdf::serialize_nquads(store.quads()));
  } else if (a.format == "jsonld") {
    emit(a.out, fdp::render_jsonld(store.graph()).dump(2) + "\n");
  } else {
    emit(a.out, rdf::serialize_ntriples(store.graph()));
  }
  return kOk;
}

int cmd_serve(const ServeArgs& a) {
  fdp::ServiceConfig config;
  fdp::apply_env_overrides(config);
  if (a.metadata) config.metadata = *a.metadata;
  if (a.data) config.data_file = *a.data;
  if (a.base_url) config.base_url = *a.base_url;
  std::string bind = a.bind.value_or(config.host + ":" + std::to_string(config.port));
  const auto colon = bind.rfind(':');
  if (colon == std::string::npos) throw Error("cli", "BadBind", "expected host:port: " + bind);
  try {
    config.host = bind.substr(0, colon);
    config.port = std::stoi(bind.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error("cli", "BadBind", "expected host:port: " + bind);
  }
  if (config.metadata.empty()) throw Error("cli", "MissingMetadata", "no metadata file given");

  const auto store = fdp::MetadataStore::load(config.metadata, system_clock());

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  fdp::FdpService service(store, config.base_url, config.data_file);
  const int port = service.start(config.host, config.port);
  if (!config.base_url && config.port == 0) {
    service.reload(store, "http://" + config.host + ":" + std::to_string(port));
  }
  std::cout << "listening http://" << config.host << ":" << port << " base " << service.base_url()
            << std::endl;
  int sig = 0;
  sigwait(&signals, &sig);
  service.stop();
  return kOk;
}

int cmd_query(const QueryArgs& a) {
  const store::TripleStore st(rdf::parse_ntriples(read_file(a.data)));
  const auto table = store::evaluate(store::parse_query(read_file(a.query)), st);
  std::cout << table.to_tsv();
  return kOk;
}

int cmd_assess(const AssessArgs& a) {
  assess::AssessmentBundle bundle;
  bundle.data = a.data;
  bundle.prov = a.prov;
  bundle.metadata = a.metadata;
  bundle.mapping = a.mapping;
  bundle.service_url = a.service_url;
  auto report = assess::evaluate_indicators(bundle);
  if (a.questions) {
    const auto questions = assess::read_questions(*a.questions);
    rdf::Graph g;
    if (a.data) {
      try {
        g = rdf::parse_ntriples(read_file(*a.data));
      } catch (const Error&) {
        // Unparseable data already fails I1-D-RDF; questions then see no triples.
      }
    }
    report.cqs = assess::run_competency_questions(questions, store::TripleStore(g));
  }
  std::cout << report.to_text();
  if (a.json_out) write_file(*a.json_out, report.to_json().dump(2) + "\n");
  return report.exit_code();
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

const CLI::App* deepest(const CLI::App* app) {
  for (const auto* sub : app->get_subcommands()) return deepest(sub);
  return app;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fairify: CSV to RDF FAIRification toolkit"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "read flags from a TOML file; command-line flags win");
  app.require_subcommand(1);

  IngestArgs ingest_args;
  auto* ingest = app.add_subcommand("ingest", "parse a CSV file and check it against a schema");
  ingest->add_option("--in", ingest_args.in, "CSV file")->required()->check(CLI::ExistingFile);
  ingest->add_option("--schema", ingest_args.schema, "column schema JSON")
      ->required()
      ->check(CLI::ExistingFile);
  ingest->add_option("--delimiter", ingest_args.delimiter, "field delimiter");

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "triplify a CSV file and record provenance");
  run->add_option("--in", run_args.in, "CSV file")->required()->check(CLI::ExistingFile);
  run->add_option("--schema", run_args.schema, "column schema JSON")->required()->check(CLI::ExistingFile);
  run->add_option("--map", run_args.map, "mapping spec JSON")->required()->check(CLI::ExistingFile);
  run->add_option("--out", run_args.out, "output directory")->required();
  run->add_option("--run-id", run_args.run_id, "run identifier (default: derived from inputs)");
  run->add_option("--granularity", run_args.granularity, "provenance granularity")
      ->check(CLI::IsMember({"run", "step", "record"}));
  run->add_option("--fixed-clock", run_args.fixed_clock, "ISO-8601 instant used for every timestamp");
  run->add_option("--batch-size", run_args.batch_size, "rows per batch at record granularity")
      ->check(CLI::PositiveNumber);
  run->add_option("--delimiter", run_args.delimiter, "field delimiter");

  auto* prov = app.add_subcommand("prov", "provenance utilities");
  prov->require_subcommand(1);
  ProvExportArgs export_args;
  auto* prov_export = prov->add_subcommand("export", "re-serialize a provenance document");
  prov_export->add_option("--in", export_args.in, "prov.json or prov.nt")
      ->required()
      ->check(CLI::ExistingFile);
  prov_export->add_option("--format", export_args.format, "output format")
      ->check(CLI::IsMember({"ntriples", "provjson"}));
  prov_export->add_option("--out", export_args.out, "output file (default: stdout)");

  auto* metadata = app.add_subcommand("metadata", "metadata layer utilities");
  metadata->require_subcommand(1);
  MetadataBuildArgs build_args;
  auto* build = metadata->add_subcommand("build", "validate and serialize metadata layers");
  build->add_option("--in", build_args.in, "metadata JSON")->required()->check(CLI::ExistingFile);
  build->add_option("--data", build_args.data, "data file; fills distribution checksum and byte size")
      ->check(CLI::ExistingFile);
  build->add_option("--out", build_args.out, "output file (default: stdout)");
  build->add_option("--write-json", build_args.write_json, "write the completed metadata JSON here");
  build->add_option("--format", build_args.format, "output format")
      ->check(CLI::IsMember({"ntriples", "nquads", "jsonld"}));
  build->add_option("--fixed-clock", build_args.fixed_clock, "ISO-8601 instant for default dates");

  ServeArgs serve_args;
  auto* serve = app.add_subcommand("serve", "serve metadata layers over HTTP");
  serve->add_option("--metadata", serve_args.metadata, "metadata JSON")->check(CLI::ExistingFile);
  serve->add_option("--data", serve_args.data, "data file behind distribution download URLs")
      ->check(CLI::ExistingFile);
  serve->add_option("--bind", serve_args.bind, "host:port (port 0 picks a free port)");
  serve->add_option("--base-url", serve_args.base_url, "public URL of the root record");

  QueryArgs query_args;
  auto* query = app.add_subcommand("query", "evaluate a query file against an N-Triples file");
  query->add_option("--data", query_args.data, "N-Triples file")->required()->check(CLI::ExistingFile);
  query->add_option("--query", query_args.query, "query file")->required()->check(CLI::ExistingFile);

  AssessArgs assess_args;
  auto* assess = app.add_subcommand("assess", "score a bundle against the maturity rubric");
  assess->add_option("--data", assess_args.data, "N-Triples data file");
  assess->add_option("--prov", assess_args.prov, "prov.json or prov.nt");
  assess->add_option("--metadata", assess_args.metadata, "metadata JSON");
  assess->add_option("--mapping", assess_args.mapping, "mapping spec JSON");
  assess->add_option("--questions", assess_args.questions, "competency questions JSON");
  assess->add_option("--service-url", assess_args.service_url, "running metadata service");
  assess->add_option("--json", assess_args.json_out, "also write the report as JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << deepest(&app)->help() << "ERROR cli.Usage: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*ingest) return cmd_ingest(ingest_args);
    if (*run) return cmd_run(run_args);
    if (*prov_export) return cmd_prov_export(export_args);
    if (*build) return cmd_metadata_build(build_args);
    if (*serve) return cmd_serve(serve_args);
    if (*query) return cmd_query(query_args);
    if (*assess) return cmd_assess(assess_args);
  } catch (const Error& e) {
    std::cerr << "ERROR " << e.module() << "." << e.name() << ": " << one_line(e.what()) << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "ERROR cli.Internal: " << one_line(e.what()) << "\n";
    return kInput;
  }
  return kUsage;
}
