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

#include "fairify/assess/assessor.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "fairify/digest.hpp"
#include "fairify/fdp/http_client.hpp"
#include "fairify/fdp/metadata.hpp"
#include "fairify/fdp/service.hpp"
#include "fairify/prov/document.hpp"
#include "fairify/rdf/ntriples.hpp"

namespace fairify::assess {

using fdp::LayerKind;
using fdp::LayerRecord;
using nlohmann::json;
using rdf::Iri;

std::string_view to_string(Priority p) {
  switch (p) {
    case Priority::kEssential: return "essential";
    case Priority::kImportant: return "important";
    case Priority::kUseful: return "useful";
  }
  return "useful";
}

const std::vector<Indicator>& rubric() {
  static const std::vector<Indicator> kRubric = {
      {"F1-M-ID", 'F', Priority::kEssential,
       "dataset and distribution records have unique absolute IRIs"},
      {"F2-M-RICH", 'F', Priority::kImportant,
       "datasets carry title, description and keywords"},
      {"F3-M-REF", 'F', Priority::kEssential,
       "distributions reference the data by download or access URL"},
      {"F4-M-SERVED", 'F', Priority::kImportant, "metadata service answers GET / with 200"},
      {"A1-M-HTTP", 'A', Priority::kImportant, "every record route is retrievable over HTTP"},
      {"I1-D-RDF", 'I', Priority::kEssential, "data parses as N-Triples"},
      {"I1-M-RDF", 'I', Priority::kEssential, "metadata serializes as RDF"},
      {"I2-D-VOCAB", 'I', Priority::kImportant,
       "data predicates belong to vocabularies declared by the mapping"},
      {"R1.1-M-LICENSE", 'R', Priority::kEssential,
       "dataset and distribution records carry a license"},
      {"R1.2-M-PROV", 'R', Priority::kEssential,
       "provenance records the generation of the exact data file"},
  };
  return kRubric;
}

QueryParseError::QueryParseError(std::string question, std::size_t offset,
                                 const std::string& message)
    : Error("assess", "QueryParseError", question + ": " + message),
      question_(std::move(question)),
      offset_(offset) {}

std::map<char, double> MaturityReport::scores() const {
  std::map<char, std::pair<int, int>> counts;
  for (const auto& i : indicators) {
    auto& [passed, total] = counts[i.principle];
    passed += i.pass;
    ++total;
  }
  std::map<char, double> out;
  for (const auto& [letter, c] : counts) {
    out[letter] = c.second == 0 ? 0.0 : static_cast<double>(c.first) / c.second;
  }
  return out;
}

bool MaturityReport::essential_pass() const {
  return std::all_of(indicators.begin(), indicators.end(), [](const IndicatorResult& i) {
    return i.priority != Priority::kEssential || i.pass;
  });
}

const IndicatorResult* MaturityReport::find(std::string_view id) const {
  for (const auto& i : indicators) {
    if (i.id == id) return &i;
  }
  return nullptr;
}

std::size_t MaturityReport::passed() const {
  return std::count_if(indicators.begin(), indicators.end(),
                       [](const IndicatorResult& i) { return i.pass; });
}

int MaturityReport::exit_code() const {
  const bool answered = std::all_of(cqs.begin(), cqs.end(),
                                    [](const CqResult& c) { return c.answered; });
  return essential_pass() && answered ? 0 : 3;
}

json MaturityReport::to_json() const {
  json inds = json::array();
  for (const auto& i : indicators) {
    inds.push_back({{"id", i.id},
                    {"principle", std::string(1, i.principle)},
                    {"priority", to_string(i.priority)},
                    {"pass", i.pass},
                    {"evidence", i.evidence}});
  }
  json s = json::object();
  for (const auto& [letter, v] : scores()) s[std::string(1, letter)] = v;
  json q = json::array();
  for (const auto& c : cqs) q.push_back({{"id", c.id}, {"rows", c.rows}, {"answered", c.answered}});
  return {{"rubric_version", kRubricVersion},
          {"indicators", std::move(inds)},
          {"scores", std::move(s)},
          {"essential_pass", essential_pass()},
          {"cqs", std::move(q)}};
}

std::string MaturityReport::to_text() const {
  std::string out = std::string("rubric ") + kRubricVersion + "\n";
  char line[512];
  std::snprintf(line, sizeof line, "%-15s %-2s %-10s %-6s %s\n", "indicator", "p", "priority",
                "result", "evidence");
  out += line;
  for (const auto& i : indicators) {
    std::snprintf(line, sizeof line, "%-15s %-2c %-10s %-6s ", i.id.c_str(), i.principle,
                  std::string(to_string(i.priority)).c_str(), i.pass ? "pass" : "FAIL");
    out += line + i.evidence + "\n";
  }
  out += "scores";
  for (const auto& [letter, v] : scores()) {
    std::snprintf(line, sizeof line, " %c=%.2f", letter, v);
    out += line;
  }
  out += std::string("\nessential_pass ") + (essential_pass() ? "true" : "false") + "\n";
  if (!cqs.empty()) {
    std::snprintf(line, sizeof line, "%-15s %-6s %s\n", "question", "rows", "answered");
    out += line;
    for (const auto& c : cqs) {
      std::snprintf(line, sizeof line, "%-15s %-6zu %s\n", c.id.c_str(), c.rows,
                    c.answered ? "yes" : "NO");
      out += line;
    }
  }
  return out;
}

namespace {

template <typename T>
struct Loaded {
  std::optional<T> value;
  std::string error;
};

Loaded<rdf::Graph> load_data(const AssessmentBundle& b, std::string& digest) {
  if (!b.data) return {std::nullopt, "no data file in bundle"};
  try {
    const std::string bytes = read_file(*b.data);
    digest = sha256_hex(bytes);
    return {rdf::parse_ntriples(bytes), ""};
  } catch (const Error& e) {
    return {std::nullopt, e.module() + "." + e.name() + ": " + e.what()};
  }
}

Loaded<std::vector<LayerRecord>> load_metadata(const AssessmentBundle& b) {
  if (!b.metadata) return {std::nullopt, "no metadata in bundle"};
  try {
    const auto fields = fdp::read_metadata_file(*b.metadata);
    // Fixed clock: records without `modified` must not vary between runs.
    return {fdp::link_records(fields, fixed_clock(TimePoint{})), ""};
  } catch (const Error& e) {
    return {std::nullopt, e.module() + "." + e.name() + ": " + e.what()};
  }
}

Loaded<rdf::Graph> load_prov(const AssessmentBundle& b) {
  if (!b.prov) return {std::nullopt, "no provenance in bundle"};
  try {
    const std::string bytes = read_file(*b.prov);
    if (b.prov->extension() == ".json") return {prov::provjson_to_graph(json::parse(bytes)), ""};
    return {rdf::parse_ntriples(bytes), ""};
  } catch (const Error& e) {
    return {std::nullopt, e.module() + "." + e.name() + ": " + e.what()};
  } catch (const json::exception& e) {
    return {std::nullopt, std::string("bad PROV-JSON: ") + e.what()};
  }
}

Loaded<std::vector<std::string>> load_namespaces(const AssessmentBundle& b) {
  if (!b.mapping) return {std::nullopt, "no mapping spec in bundle"};
  try {
    const json spec = json::parse(read_file(*b.mapping));
    std::vector<std::string> ns = {std::string(rdf::vocab::kRdf), std::string(rdf::vocab::kRdfs),
                                   std::string(rdf::vocab::kXsd)};
    if (spec.contains("prefixes") && spec["prefixes"].is_object()) {
      for (const auto& [label, iri] : spec["prefixes"].items()) {
        if (iri.is_string()) ns.push_back(iri.get<std::string>());
      }
    }
    return {ns, ""};
  } catch (const Error& e) {
    return {std::nullopt, e.module() + "." + e.name() + ": " + e.what()};
  } catch (const json::exception& e) {
    return {std::nullopt, std::string("bad mapping spec: ") + e.what()};
  }
}

std::vector<const LayerRecord*> of_kind(const std::vector<LayerRecord>& records,
                                        std::initializer_list<LayerKind> kinds) {
  std::vector<const LayerRecord*> out;
  for (const auto& r : records) {
    if (std::find(kinds.begin(), kinds.end(), r.kind) != kinds.end()) out.push_back(&r);
  }
  return out;
}

std::string strip_slash(std::string s) {
  while (!s.empty() && s.back() == '/') s.pop_back();
  return s;
}

// Record IRI under the metadata root, moved onto the service URL.
std::string on_service(const std::string& iri, const std::string& root, const std::string& base) {
  if (iri.starts_with(root) && (iri.size() == root.size() || iri[root.size()] == '/')) {
    return base + iri.substr(root.size());
  }
  return iri;
}

class Evaluator {
 public:
  explicit Evaluator(const AssessmentBundle& b)
      : bundle_(b),
        data_(load_data(b, data_digest_)),
        metadata_(load_metadata(b)),
        prov_(load_prov(b)),
        namespaces_(load_namespaces(b)) {
    if (b.service_url) service_ = strip_slash(*b.service_url);
  }

  MaturityReport run() {
    MaturityReport report;
    for (const auto& ind : rubric()) {
      auto [pass, evidence] = check(ind.id);
      report.indicators.push_back({ind.id, ind.principle, ind.priority, pass, evidence});
    }
    return report;
  }

 private:
  using Outcome = std::pair<bool, std::string>;

  Outcome check(const std::string& id) {
    if (id == "F1-M-ID") return f1();
    if (id == "F2-M-RICH") return f2();
    if (id == "F3-M-REF") return f3();
    if (id == "F4-M-SERVED") return f4();
    if (id == "A1-M-HTTP") return a1();
    if (id == "I1-D-RDF") return i1_data();
    if (id == "I1-M-RDF") return i1_metadata();
    if (id == "I2-D-VOCAB") return i2();
    if (id == "R1.1-M-LICENSE") return r11();
    return r12();
  }

  Outcome f1() {
    if (!metadata_.value) return {false, metadata_.error};
    const auto recs = of_kind(*metadata_.value, {LayerKind::kDataset, LayerKind::kDistribution});
    const auto datasets = of_kind(*metadata_.value, {LayerKind::kDataset});
    if (datasets.empty() || datasets.size() == recs.size()) {
      return {false, "need at least one dataset and one distribution record"};
    }
    std::set<Iri> ids;
    for (const auto* r : recs) {
      if (!ids.insert(r->id).second) return {false, "duplicate id " + r->id.str()};
    }
    return {true, std::to_string(recs.size()) + " dataset/distribution records with absolute IRIs"};
  }

  Outcome f2() {
    if (!metadata_.value) return {false, metadata_.error};
    const auto datasets = of_kind(*metadata_.value, {LayerKind::kDataset});
    if (datasets.empty()) return {false, "no dataset record"};
    for (const auto* r : datasets) {
      if (r->title.empty()) return {false, r->id.str() + " has no title"};
      if (r->description.empty()) return {false, r->id.str() + " has no description"};
      if (r->keywords.empty()) return {false, r->id.str() + " has no keywords"};
    }
    return {true, std::to_string(datasets.size()) + " dataset(s) with title, description, keywords"};
  }

  Outcome f3() {
    if (!metadata_.value) return {false, metadata_.error};
    const auto dists = of_kind(*metadata_.value, {LayerKind::kDistribution});
    if (dists.empty()) return {false, "no distribution record"};
    std::string evidence;
    for (const auto* r : dists) {
      if (!r->download_url && !r->access_url) {
        return {false, r->id.str() + " has neither download_url nor access_url"};
      }
      if (!r->checksum.empty() && !data_digest_.empty() && r->checksum != data_digest_) {
        return {false, r->id.str() + " checksum does not match the data file"};
      }
      if (service_ && r->download_url && !data_digest_.empty()) {
        const std::string url =
            on_service(r->download_url->str(), strip_slash(root_id()), *service_);
        try {
          const auto res = fdp::http_get(url, "application/n-triples");
          if (res.status != 200) {
            return {false, "GET " + url + " returned " + std::to_string(res.status)};
          }
          if (sha256_hex(res.body) != data_digest_) {
            return {false, "GET " + url + " does not return the data file"};
          }
          evidence = "; download verified against data digest";
        } catch (const Error& e) {
          return {false, e.what()};
        }
      }
    }
    return {true, std::to_string(dists.size()) + " distribution(s) with data URL" + evidence};
  }

  Outcome f4() {
    if (!service_) return {false, "service not provided"};
    try {
      const auto res = fdp::http_get(*service_ + "/", "application/n-triples");
      if (res.status != 200) return {false, "GET / returned " + std::to_string(res.status)};
      return {true, "GET / returned 200"};
    } catch (const Error& e) {
      return {false, e.what()};
    }
  }

  Outcome a1() {
    if (!service_) return {false, "service not provided"};
    if (!metadata_.value) return {false, metadata_.error};
    const std::string root = strip_slash(root_id());
    for (const auto& r : *metadata_.value) {
      const std::string url = *service_ + fdp::route_path(r);
      try {
        const auto res = fdp::http_get(url, "application/n-triples");
        if (res.status != 200) return {false, "GET " + url + " returned " + std::to_string(res.status)};
        const Iri self = Iri::parse(on_service(r.id.str(), root, *service_));
        const auto g = rdf::parse_ntriples(res.body);
        const bool mentions = std::any_of(g.begin(), g.end(), [&](const rdf::Triple& t) {
          return t.subject == rdf::Term(self);
        });
        if (!mentions) return {false, "GET " + url + " does not describe " + self.str()};
      } catch (const Error& e) {
        return {false, e.what()};
      }
    }
    return {true, std::to_string(metadata_.value->size()) + " record routes returned 200"};
  }

  Outcome i1_data() {
    if (!data_.value) return {false, data_.error};
    if (data_.value->empty()) return {false, "data file holds no triples"};
    return {true, std::to_string(data_.value->size()) + " triples parsed"};
  }

  Outcome i1_metadata() {
    if (!metadata_.value) return {false, metadata_.error};
    try {
      rdf::Graph g;
      for (const auto& r : *metadata_.value) g.merge(fdp::render_layer(r));
      if (rdf::parse_ntriples(rdf::serialize_ntriples(g)) != g) {
        return {false, "N-Triples round trip changed the metadata graph"};
      }
      if (fdp::jsonld_to_graph(json::parse(fdp::render_jsonld(g).dump())) != g) {
        return {false, "JSON-LD round trip changed the metadata graph"};
      }
      return {true, std::to_string(g.size()) + " metadata triples as N-Triples and JSON-LD"};
    } catch (const Error& e) {
      return {false, e.what()};
    }
  }

  Outcome i2() {
    if (!data_.value) return {false, data_.error};
    if (!namespaces_.value) return {false, namespaces_.error};
    std::set<std::string> predicates;
    for (const auto& t : *data_.value) predicates.insert(t.predicate.str());
    if (predicates.empty()) return {false, "data holds no predicates"};
    for (const auto& p : predicates) {
      const bool declared = std::any_of(namespaces_.value->begin(), namespaces_.value->end(),
                                        [&](const std::string& ns) { return p.starts_with(ns); });
      if (!declared) return {false, "predicate " + p + " is outside the declared vocabularies"};
    }
    return {true, std::to_string(predicates.size()) + " predicates in declared vocabularies"};
  }

  Outcome r11() {
    if (!metadata_.value) return {false, metadata_.error};
    const auto recs = of_kind(*metadata_.value, {LayerKind::kDataset, LayerKind::kDistribution});
    if (recs.empty()) return {false, "no dataset or distribution record"};
    for (const auto* r : recs) {
      if (!r->license) return {false, r->id.str() + " has no license"};
    }
    return {true, std::to_string(recs.size()) + " record(s) licensed"};
  }

  Outcome r12() {
    if (!prov_.value) return {false, prov_.error};
    if (prov_.value->empty()) return {false, "provenance document is empty"};
    if (data_digest_.empty()) return {false, data_.value ? "data digest unavailable" : data_.error};
    store::TripleStore st(*prov_.value);
    const auto q = store::parse_query(
        "PREFIX prov: <" + std::string(prov::kProvNs) + ">\nPREFIX fx: <" +
        std::string(prov::kFairifyNs) + ">\nSELECT ?e ?a WHERE { ?e fx:sha256 \"" + data_digest_ +
        "\" . ?e prov:wasGeneratedBy ?a }");
    const auto rows = store::evaluate(q, st).rows;
    if (rows.empty()) return {false, "no generated entity carries the data file digest"};
    return {true, "data file digest generated by " + rdf::to_ntriples(rows.front().at(1))};
  }

  std::string root_id() const {
    for (const auto& r : *metadata_.value) {
      if (r.kind == LayerKind::kFdpRoot) return r.id.str();
    }
    return "";
  }

  const AssessmentBundle& bundle_;
  std::string data_digest_;
  Loaded<rdf::Graph> data_;
  Loaded<std::vector<LayerRecord>> metadata_;
  Loaded<rdf::Graph> prov_;
  Loaded<std::vector<std::string>> namespaces_;
  std::optional<std::string> service_;
};

[[noreturn]] void bad_questions(const std::string& what) {
  throw Error("assess", "BadQuestions", what);
}

}  // namespace

MaturityReport evaluate_indicators(const AssessmentBundle& bundle) {
  if (bundle.empty()) throw Error("assess", "EmptyBundle", "assessment bundle is empty");
  return Evaluator(bundle).run();
}

std::vector<CompetencyQuestion> parse_questions(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad_questions(e.what());
  }
  if (!doc.is_array()) bad_questions("expected a JSON list of questions");
  std::vector<CompetencyQuestion> out;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& q = doc[i];
    const std::string path = "$[" + std::to_string(i) + "]";
    if (!q.is_object()) bad_questions(path + ": expected an object");
    for (const char* key : {"id", "query"}) {
      if (!q.contains(key) || !q[key].is_string()) bad_questions(path + "." + key + ": missing string");
    }
    CompetencyQuestion cq{q["id"].get<std::string>(), q.value("text", std::string()),
                          q["query"].get<std::string>(), 1};
    if (q.contains("min_rows")) {
      if (!q["min_rows"].is_number_unsigned()) bad_questions(path + ".min_rows: expected a count");
      cq.min_rows = q["min_rows"].get<std::size_t>();
    }
    if (!ids.insert(cq.id).second) bad_questions(path + ".id: duplicate id " + cq.id);
    out.push_back(std::move(cq));
  }
  return out;
}

std::vector<CompetencyQuestion> read_questions(const std::filesystem::path& path) {
  return parse_questions(read_file(path));
}

std::vector<CqResult> run_competency_questions(const std::vector<CompetencyQuestion>& questions,
                                               const store::TripleStore& st) {
  std::vector<store::Query> parsed;
  for (const auto& q : questions) {
    try {
      parsed.push_back(store::parse_query(q.query));
    } catch (const store::QueryError& e) {
      throw QueryParseError(q.id, e.offset(), e.what());
    }
  }
  std::vector<CqResult> out;
  for (std::size_t i = 0; i < questions.size(); ++i) {
    auto table = store::evaluate(parsed[i], st);
    CqResult r{questions[i].id, table.rows.size(), questions[i].min_rows, false, {}};
    r.answered = r.rows >= r.min_rows;
    if (table.rows.size() > 10) table.rows.resize(10);
    r.sample = std::move(table);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace fairify::assess
