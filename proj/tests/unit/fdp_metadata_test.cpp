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

#include <algorithm>
#include <deque>
#include <random>

#include "fairify/digest.hpp"
#include "fairify/fdp/store.hpp"
#include "fairify/rdf/ntriples.hpp"
#include "support/random_rdf.hpp"

using namespace fairify;
using namespace fairify::fdp;
using rdf::Iri;
using rdf::Literal;
using rdf::Triple;

namespace {

const std::filesystem::path kMetadata =
    std::filesystem::path(FAIRIFY_FIXTURE_DIR) / "crf" / "metadata.json";
const Clock kClock = fixed_clock(parse_instant("2022-03-04T10:00:00Z"));

LayerFields fields(std::string kind, std::string id) {
  LayerFields f;
  f.kind = std::move(kind);
  f.id = std::move(id);
  f.title = "Title of " + f.id;
  f.version = "1.0";
  f.publisher = "http://ex.org/org";
  f.license = "http://ex.org/license";
  f.description = "d";
  return f;
}

struct Tree {
  LayerRecord root = build_layer(LayerKind::kFdpRoot, fields("fdp_root", "http://ex.org"),
                                 nullptr, kClock);
  LayerRecord catalog = build_layer(LayerKind::kCatalog, fields("catalog", "http://ex.org/catalog/c"),
                                    &root, kClock);
};

void expect_error(const std::function<void()>& f, const std::string& name,
                  const std::string& mention = "") {
  try {
    f();
    ADD_FAILURE() << "expected " << name;
  } catch (const Error& e) {
    EXPECT_EQ(e.module(), "fdp");
    EXPECT_EQ(e.name(), name) << e.what();
    EXPECT_NE(std::string(e.what()).find(mention), std::string::npos) << e.what();
  }
}

bool has_issue(const std::vector<ValidationIssue>& issues, const std::string& field,
               Severity s) {
  return std::any_of(issues.begin(), issues.end(), [&](const ValidationIssue& i) {
    return i.field == field && i.severity == s;
  });
}

std::size_t count_predicate(const rdf::Graph& g, const Iri& p) {
  return std::count_if(g.begin(), g.end(), [&](const Triple& t) { return t.predicate == p; });
}

}  // namespace

TEST(BuildLayer, linksBothWays) {
  Tree t;
  const auto ds = build_layer(LayerKind::kDataset, fields("dataset", "http://ex.org/dataset/d"),
                              &t.catalog, kClock);
  EXPECT_EQ(*ds.parent, t.catalog.id);
  EXPECT_EQ(t.catalog.children, std::vector<Iri>{ds.id});
  EXPECT_EQ(t.root.children, std::vector<Iri>{t.catalog.id});
  // modified defaults to the clock's date.
  EXPECT_EQ(ds.modified, "2022-03-04");
}

TEST(BuildLayer, errors) {
  Tree t;
  expect_error([&] {
    build_layer(LayerKind::kDistribution, fields("distribution", "http://ex.org/x"), &t.catalog,
                kClock);
  }, "WrongParentKind");
  expect_error([&] {
    build_layer(LayerKind::kCatalog, fields("catalog", "http://ex.org/c2"), nullptr, kClock);
  }, "WrongParentKind");
  expect_error([&] {
    build_layer(LayerKind::kFdpRoot, fields("fdp_root", "http://ex.org/r2"), &t.root, kClock);
  }, "WrongParentKind");
  auto f = fields("catalog", "http://ex.org/c3");
  f.title.reset();
  expect_error([&] { build_layer(LayerKind::kCatalog, f, &t.root, kClock); },
               "MissingRequiredField", "title");
  f = fields("catalog", "http://ex.org/c3");
  f.license = "not an iri";
  expect_error([&] { build_layer(LayerKind::kCatalog, f, &t.root, kClock); }, "BadIri",
               "license");
}

TEST(BuildLayer, literalPublisher) {
  auto f = fields("fdp_root", "http://ex.org");
  f.publisher = "Data Stewards";
  const auto r = build_layer(LayerKind::kFdpRoot, f, nullptr, kClock);
  EXPECT_EQ(std::get<std::string>(*r.publisher), "Data Stewards");
  EXPECT_TRUE(render_layer(r).contains(
      Triple(r.id, vocab::dct("publisher"), Literal::plain("Data Stewards"))));
}

TEST(ValidateLayer, fixtureDistributionIsClean) {
  const auto records = link_records(read_metadata_file(kMetadata), kClock);
  for (const auto& r : records) EXPECT_TRUE(validate_layer(r).empty()) << r.id.str();
}

TEST(ValidateLayer, essentialIssues) {
  Tree t;
  auto ds_fields = fields("dataset", "http://ex.org/dataset/d");
  ds_fields.license.reset();
  ds_fields.keywords = {"k"};
  auto ds = build_layer(LayerKind::kDataset, ds_fields, &t.catalog, kClock);
  auto issues = validate_layer(ds);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_TRUE(has_issue(issues, "license", Severity::kEssential));

  ds_fields.license = "http://ex.org/l";
  ds = build_layer(LayerKind::kDataset, ds_fields, &t.catalog, kClock);
  auto dist_fields = fields("distribution", "http://ex.org/distribution/x");
  dist_fields.media_type = "text/turtle";
  auto dist = build_layer(LayerKind::kDistribution, dist_fields, &ds, kClock);
  issues = validate_layer(dist);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_TRUE(has_issue(issues, "access", Severity::kEssential));

  dist.access_url = Iri::parse("http://ex.org/sparql");
  EXPECT_TRUE(validate_layer(dist).empty());
  dist.checksum = "ABC";
  dist.version = "v1";
  dist.issued = "2021-02-30";
  issues = validate_layer(dist);
  EXPECT_TRUE(has_issue(issues, "checksum", Severity::kEssential));
  EXPECT_TRUE(has_issue(issues, "version", Severity::kEssential));
  EXPECT_TRUE(has_issue(issues, "issued", Severity::kImportant));
  expect_error([&] { serialize_layer(dist); }, "InvalidRecord", "checksum");
}

TEST(SerializeLayer, directMapping) {
  Tree t;
  const auto g = serialize_layer(t.catalog);
  EXPECT_TRUE(g.contains(Triple(t.catalog.id, rdf::vocab::rdf_type(), vocab::dcat("Catalog"))));
  EXPECT_TRUE(g.contains(Triple(t.catalog.id, vocab::dct("isPartOf"), t.root.id)));
  EXPECT_TRUE(serialize_layer(t.root).contains(
      Triple(t.root.id, rdf::vocab::rdf_type(), vocab::r3d("Repository"))));

  auto f = fields("dataset", "http://ex.org/dataset/d");
  f.keywords = {"covid", "crf"};
  const auto ds = build_layer(LayerKind::kDataset, f, &t.catalog, kClock);
  EXPECT_EQ(count_predicate(serialize_layer(ds), vocab::dcat("keyword")), 2u);
}

TEST(SerializeLayer, checksumAndSize) {
  Tree t;
  auto ds = build_layer(LayerKind::kDataset, fields("dataset", "http://ex.org/dataset/d"),
                        &t.catalog, kClock);
  auto f = fields("distribution", "http://ex.org/distribution/x");
  f.download_url = "http://ex.org/distribution/x/data";
  f.byte_size = 1234;
  f.checksum = sha256_hex("abc");
  const auto dist = build_layer(LayerKind::kDistribution, f, &ds, kClock);
  const auto g = serialize_layer(dist);
  EXPECT_TRUE(g.contains(Triple(dist.id, vocab::dcat("byteSize"),
                                Literal::typed("1234", rdf::vocab::xsd("nonNegativeInteger")))));
  EXPECT_EQ(count_predicate(g, vocab::spdx("checksumValue")), 1u);
  const auto back = extract_layer(g, dist.id);
  EXPECT_EQ(back.checksum, sha256_hex("abc"));
  EXPECT_EQ(back.byte_size, 1234u);
}

TEST(SerializeLayer, fixtureMatchesHandWrittenTriples) {
  const auto store = MetadataStore::load(kMetadata, kClock);
  EXPECT_EQ(rdf::serialize_ntriples(store.graph()),
            read_file(std::filesystem::path(FAIRIFY_TEST_DATA_DIR) / "crf_metadata_expected.nt"));
}

TEST(SerializeLayer, extractReproducesRecord) {
  std::mt19937 rng(99);
  const auto records = link_records(read_metadata_file(kMetadata), kClock);
  for (const auto& r : records) {
    const auto back = extract_layer(rdf::parse_ntriples(rdf::serialize_ntriples(serialize_layer(r))), r.id);
    auto expected = r;
    std::sort(expected.keywords.begin(), expected.keywords.end());
    EXPECT_EQ(back, expected) << r.id.str();
  }
  for (int trial = 0; trial < 100; ++trial) {
    Tree t;
    auto f = fields("dataset", "http://ex.org/dataset/d" + std::to_string(trial));
    f.title = test_support::adversarial_text(rng) + "x";
    f.description = test_support::adversarial_text(rng);
    for (int k = rng() % 4; k > 0; --k) f.keywords.push_back(test_support::adversarial_text(rng) + "k");
    if (rng() % 2) f.publisher = "Org " + test_support::adversarial_text(rng);
    auto ds = build_layer(LayerKind::kDataset, f, &t.catalog, kClock);
    std::sort(ds.keywords.begin(), ds.keywords.end());
    ds.keywords.erase(std::unique(ds.keywords.begin(), ds.keywords.end()), ds.keywords.end());
    const auto g = rdf::parse_ntriples(rdf::serialize_ntriples(render_layer(ds)));
    EXPECT_EQ(extract_layer(g, ds.id), ds) << "trial " << trial;
  }
}

TEST(LinkRecords, chainLaw) {
  const auto records = link_records(read_metadata_file(kMetadata), kClock);
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records.front().kind, LayerKind::kFdpRoot);
  std::map<Iri, int> seen;
  std::deque<Iri> queue{records.front().id};
  auto find = [&](const Iri& id) {
    return std::find_if(records.begin(), records.end(), [&](const LayerRecord& r) { return r.id == id; });
  };
  while (!queue.empty()) {
    const Iri id = queue.front();
    queue.pop_front();
    ++seen[id];
    auto it = find(id);
    ASSERT_NE(it, records.end());
    for (const auto& c : it->children) {
      EXPECT_EQ(*find(c)->parent, id);
      queue.push_back(c);
    }
  }
  EXPECT_EQ(seen.size(), records.size());
  for (const auto& [id, n] : seen) EXPECT_EQ(n, 1) << id.str();
}

TEST(LinkRecords, brokenTrees) {
  auto base = read_metadata_file(kMetadata);
  auto f = base;
  f[2].parent = "http://localhost:8080/catalog/missing";
  expect_error([&] { link_records(f, kClock); }, "BrokenChain", "missing");
  f = base;
  f.erase(f.begin());
  expect_error([&] { link_records(f, kClock); }, "NoRoot");
  f = base;
  f.push_back(base[0]);
  f.back().id = "http://other.org";
  expect_error([&] { link_records(f, kClock); }, "NoRoot");
  f = base;
  f.push_back(base[3]);
  expect_error([&] { link_records(f, kClock); }, "BrokenChain", "duplicate");
  f = base;
  f[1].parent = f[2].id;  // catalog <-> dataset cycle, cut off from the root
  expect_error([&] { link_records(f, kClock); }, "BrokenChain", "not reachable");
  f = base;
  f[3].parent = f[1].id;
  expect_error([&] { link_records(f, kClock); }, "WrongParentKind");
}

TEST(MetadataStoreLoad, fixtureAndFailures) {
  const auto store = MetadataStore::load(kMetadata, kClock);
  EXPECT_EQ(store.root().id.str(), "http://localhost:8080");
  EXPECT_EQ(store.records().size(), 4u);
  EXPECT_EQ(store.digest(), sha256_hex(read_file(kMetadata)));
  EXPECT_NE(store.find(Iri::parse("http://localhost:8080/dataset/crf-synthetic-2021")), nullptr);
  EXPECT_EQ(store.quads().size(), store.graph().size());

  auto f = read_metadata_file(kMetadata);
  f[2].license.reset();
  f[3].download_url.reset();
  expect_error([&] { MetadataStore::from_fields(f, kClock); }, "ValidationFailed", "license");
  expect_error([&] { MetadataStore::from_fields(f, kClock); }, "ValidationFailed", "access");
}

TEST(ParseMetadata, shapeErrors) {
  expect_error([] { parse_metadata(R"([{"kind": "catalog", "id": "http://x", "titel": "t"}])"); },
               "SchemaViolation", "$[0].titel");
  expect_error([] { parse_metadata(R"([{"kind": "shelf", "id": "http://x"}])"); },
               "SchemaViolation", "$[0].kind");
  expect_error([] { parse_metadata(R"([{"kind": "distribution", "id": "http://x", "byte_size": -1}])"); },
               "SchemaViolation", "byte_size");
  EXPECT_EQ(parse_metadata(R"({"records": []})").size(), 0u);
  const auto fixture = read_metadata_file(kMetadata);
  nlohmann::json j = nlohmann::json::array();
  for (const auto& f : fixture) j.push_back(to_json(f));
  EXPECT_EQ(j, nlohmann::json::parse(read_file(kMetadata)));
}

TEST(JsonLd, shippedContextIsUsed) {
  const auto shipped = nlohmann::json::parse(
      read_file(std::filesystem::path(FAIRIFY_FIXTURE_DIR) / ".." / "resources" / "fdp-context.jsonld"));
  EXPECT_EQ(jsonld_context(), shipped["@context"]);
}

TEST(JsonLd, sameFactsAsGraph) {
  const auto store = MetadataStore::load(kMetadata, kClock);
  const auto doc = render_jsonld(store.graph());
  EXPECT_EQ(doc["@graph"].size(), 4u);
  EXPECT_EQ(jsonld_to_graph(nlohmann::json::parse(doc.dump())), store.graph());
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = test_support::random_graph(rng, 20);
    EXPECT_EQ(jsonld_to_graph(nlohmann::json::parse(render_jsonld(g).dump())), g);
  }
  expect_error([] { jsonld_to_graph({{"@graph", {{{"dct:title", "x"}}}}}); }, "BadJsonLd");
}
