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

#include <gtest/gtest.h>

#include <fstream>

#include <json.hpp>

#include "fairify/digest.hpp"
#include "fairify/fdp/http_client.hpp"
#include "support/process.hpp"
#include "support/temp_dir.hpp"

using namespace fairify;
using test_support::CommandResult;
using test_support::run_command;

namespace {

const std::string kCli = FAIRIFY_CLI;
const std::filesystem::path kCrf = std::filesystem::path(FAIRIFY_FIXTURE_DIR) / "crf";

CommandResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), kCli);
  return run_command(std::move(args));
}

std::vector<std::string> run_args(const std::filesystem::path& out) {
  return {"run",   "--in",  (kCrf / "crf.csv").string(), "--schema", (kCrf / "schema.json").string(),
          "--map", (kCrf / "mapping.json").string(),     "--out",    out.string(),
          "--run-id", "cli-test", "--fixed-clock", "2022-01-01T00:00:00Z"};
}

// The last stderr line, which carries the machine-readable error.
std::string last_line(const std::string& s) {
  std::string t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') == std::string::npos ? 0 : t.rfind('\n') + 1);
}

std::size_t error_lines(const std::string& s) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s.compare(pos, 6, "ERROR ") == 0) ++n;
    pos = s.find('\n', pos);
    if (pos == std::string::npos) break;
    ++pos;
  }
  return n;
}

}  // namespace

TEST(Cli, runWritesFourFiles) {
  test_support::TempDir dir("fairify-cli");
  const auto r = cli(run_args(dir / "out"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  for (const char* f : {"data.nt", "prov.nt", "prov.json", "run-report.json"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / "out" / f)) << f;
  }
  EXPECT_NE(r.out.find("\"triples_out\": 1527"), std::string::npos);
}

TEST(Cli, missingMapIsUsageError) {
  const auto r = cli({"run", "--in", (kCrf / "crf.csv").string(), "--schema",
                          (kCrf / "schema.json").string(), "--out", "/tmp/unused"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("Usage:"), std::string::npos);
  EXPECT_EQ(last_line(r.err), "ERROR cli.Usage: --map is required");
  EXPECT_EQ(error_lines(r.err), 1u);
}

TEST(Cli, usageErrors) {
  EXPECT_EQ(cli({}).exit_code, 1);
  EXPECT_EQ(cli({"frobnicate"}).exit_code, 1);
  EXPECT_EQ(cli({"prov"}).exit_code, 1);
  test_support::TempDir dir("fairify-cli");
  auto args = run_args(dir / "out");
  args.push_back("--granularity");
  args.push_back("hourly");
  EXPECT_EQ(cli(args).exit_code, 1);
  EXPECT_EQ(cli({"--help"}).exit_code, 0);
}

TEST(Cli, inputErrorsNameTheModule) {
  test_support::TempDir dir("fairify-cli");
  std::ofstream(dir / "broken.json") << "{\"base_iri\": 3}";
  auto args = run_args(dir / "out");
  args[6] = (dir / "broken.json").string();
  const auto r = cli(args);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(last_line(r.err).rfind("ERROR etl.", 0), 0u) << r.err;
  EXPECT_EQ(error_lines(r.err), 1u);

  std::ofstream(dir / "bad.rq") << "SELECT ?s WHERE { ?s ?p }";
  std::ofstream(dir / "g.nt") << "";
  const auto q = cli({"query", "--data", (dir / "g.nt").string(), "--query", (dir / "bad.rq").string()});
  EXPECT_EQ(q.exit_code, 2);
  EXPECT_EQ(last_line(q.err), "ERROR query.SyntaxError: expected a term (offset 24)");
}

TEST(Cli, metadataBuildRejectsEssentialGaps) {
  test_support::TempDir dir("fairify-cli");
  std::ifstream in(kCrf / "metadata.json");
  auto doc = nlohmann::json::parse(in);
  doc[2].erase("license");
  std::ofstream(dir / "md.json") << doc.dump();
  const auto r = cli({"metadata", "build", "--in", (dir / "md.json").string()});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(last_line(r.err).rfind("ERROR fdp.ValidationFailed:", 0), 0u) << r.err;
}

TEST(Cli, metadataBuildFillsChecksum) {
  test_support::TempDir dir("fairify-cli");
  ASSERT_EQ(cli(run_args(dir / "out")).exit_code, 0);
  const auto r = cli({"metadata", "build", "--in", (kCrf / "metadata.json").string(), "--data",
                          (dir / "out" / "data.nt").string(), "--write-json",
                          (dir / "md.json").string(), "--format", "nquads"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const std::string digest = sha256_hex(read_file(dir / "out" / "data.nt"));
  EXPECT_NE(read_file(dir / "md.json").find(digest), std::string::npos);
  EXPECT_NE(r.out.find(digest), std::string::npos);
}

TEST(Cli, runThenAssessOffline) {
  test_support::TempDir dir("fairify-cli");
  ASSERT_EQ(cli(run_args(dir / "out")).exit_code, 0);
  const std::vector<std::string> bundle = {
      "assess", "--data", (dir / "out" / "data.nt").string(), "--prov",
      (dir / "out" / "prov.json").string(), "--mapping", (kCrf / "mapping.json").string(),
      "--questions", (kCrf / "questions.json").string(), "--json", (dir / "report.json").string()};
  auto with = [&](const std::filesystem::path& metadata) {
    auto a = bundle;
    a.push_back("--metadata");
    a.push_back(metadata.string());
    return cli(a);
  };
  const auto ok = with(kCrf / "metadata.json");
  EXPECT_EQ(ok.exit_code, 0) << ok.out;
  EXPECT_NE(ok.out.find("essential_pass true"), std::string::npos);
  const auto report = nlohmann::json::parse(read_file(dir / "report.json"));
  EXPECT_EQ(report["essential_pass"], true);
  EXPECT_EQ(report["cqs"].size(), 3u);

  std::ifstream in(kCrf / "metadata.json");
  auto doc = nlohmann::json::parse(in);
  for (auto& rec : doc) rec.erase("license");
  std::ofstream(dir / "nolicense.json") << doc.dump();
  EXPECT_EQ(with(dir / "nolicense.json").exit_code, 3);
}

TEST(Cli, configFileWithFlagOverride) {
  test_support::TempDir dir("fairify-cli");
  std::ofstream(dir / "run.toml") << "[run]\n"
                                  << "in = \"" << (kCrf / "crf.csv").string() << "\"\n"
                                  << "schema = \"" << (kCrf / "schema.json").string() << "\"\n"
                                  << "map = \"" << (kCrf / "mapping.json").string() << "\"\n"
                                  << "out = \"" << (dir / "out").string() << "\"\n"
                                  << "run-id = \"from-file\"\n";
  const auto r = cli({"--config", (dir / "run.toml").string(), "run", "--run-id", "from-flag"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("\"run_id\": \"from-flag\""), std::string::npos);
}

TEST(Cli, provExportMatchesNTriples) {
  test_support::TempDir dir("fairify-cli");
  ASSERT_EQ(cli(run_args(dir / "out")).exit_code, 0);
  const auto r = cli({"prov", "export", "--in", (dir / "out" / "prov.json").string()});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, read_file(dir / "out" / "prov.nt"));
  const auto back = cli({"prov", "export", "--in", (dir / "out" / "prov.nt").string(), "--format", "provjson"});
  EXPECT_EQ(back.exit_code, 2);
  EXPECT_EQ(last_line(back.err).rfind("ERROR prov.UnsupportedConversion:", 0), 0u);
}

TEST(Cli, ingestSummary) {
  const auto r = cli({"ingest", "--in", (kCrf / "crf.csv").string(), "--schema",
                          (kCrf / "schema.json").string()});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("rows 200\n"), std::string::npos);
  EXPECT_NE(r.out.find("row_errors 3\n"), std::string::npos);
}

TEST(Cli, serveOnFreePort) {
  test_support::Background serve({kCli, "serve", "--metadata", (kCrf / "metadata.json").string(),
                                  "--bind", "127.0.0.1:0"});
  const std::string line = serve.first_line();
  ASSERT_EQ(line.rfind("listening http://127.0.0.1:", 0), 0u) << line;
  const std::string base = line.substr(10, line.find(' ', 10) - 10);
  const auto root = fdp::http_get(base + "/", "application/n-triples");
  EXPECT_EQ(root.status, 200);
  EXPECT_NE(root.body.find("<" + base + ">"), std::string::npos);
  EXPECT_EQ(serve.stop(), 0);
}
