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

#include "fairify/prov/document.hpp"

#include <algorithm>
#include <set>

#include "fairify/rdf/ntriples.hpp"

namespace fairify::prov {

using nlohmann::json;
using rdf::Iri;
using rdf::Literal;
using rdf::Triple;

namespace {

Iri prov_iri(std::string_view local) {
  return Iri::parse(std::string(kProvNs) + std::string(local));
}
Iri fx_iri(std::string_view local) {
  return Iri::parse(std::string(kFairifyNs) + std::string(local));
}
Literal date_time(TimePoint t) {
  return Literal::typed(format_instant(t), rdf::vocab::xsd("dateTime"));
}

constexpr const char* kQualifiedName = "prov:QUALIFIED_NAME";

json qualified(std::string_view curie) {
  return json{{"$", curie}, {"type", kQualifiedName}};
}

// Compacts ids under the document namespace, PROV and the toolkit namespace.
class Compactor {
 public:
  explicit Compactor(const ProvDocument& doc) {
    if (doc.ns) ns_ = doc.ns->str();
  }
  std::string operator()(const Iri& iri) const {
    const auto& s = iri.str();
    if (!ns_.empty() && s.starts_with(ns_)) return "run:" + s.substr(ns_.size());
    if (s.starts_with(kProvNs)) return "prov:" + s.substr(kProvNs.size());
    if (s.starts_with(kFairifyNs)) return "fx:" + s.substr(kFairifyNs.size());
    return s;
  }

 private:
  std::string ns_;
};

}  // namespace

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::kFile: return "file";
    case EntityKind::kDataset: return "dataset";
    case EntityKind::kGraph: return "graph";
    case EntityKind::kPlan: return "plan";
    case EntityKind::kPlanStep: return "plan_step";
  }
  return "file";
}

std::string_view to_string(Granularity g) {
  switch (g) {
    case Granularity::kRun: return "run";
    case Granularity::kStep: return "step";
    case Granularity::kRecord: return "record";
  }
  return "step";
}

std::string_view to_string(Status s) {
  return s == Status::kSucceeded ? "succeeded" : "failed";
}

Granularity parse_granularity(std::string_view text) {
  if (text == "run") return Granularity::kRun;
  if (text == "step") return Granularity::kStep;
  if (text == "record") return Granularity::kRecord;
  throw Error("prov", "BadGranularity",
              "granularity must be run, step or record, not '" + std::string(text) + "'");
}

bool is_step_label(std::string_view label) {
  static const std::set<std::string_view> kLabels = {"1",  "2",  "3", "4a", "4b",
                                                     "5a", "5b", "6", "7"};
  return kLabels.count(label) != 0;
}

const ProvEntity* ProvDocument::find_entity(const Iri& id) const {
  auto it = std::find_if(entities.begin(), entities.end(),
                         [&](const ProvEntity& e) { return e.id == id; });
  return it == entities.end() ? nullptr : &*it;
}

const ProvActivity* ProvDocument::find_activity(const Iri& id) const {
  auto it = std::find_if(activities.begin(), activities.end(),
                         [&](const ProvActivity& a) { return a.id == id; });
  return it == activities.end() ? nullptr : &*it;
}

std::vector<std::string> ProvDocument::plan_step_labels() const {
  std::vector<std::string> out;
  for (const auto& e : entities) {
    if (e.kind != EntityKind::kPlanStep) continue;
    auto it = e.labels.find("stepLabel");
    if (it != e.labels.end()) out.push_back(it->second);
  }
  return out;
}

std::vector<std::string> ProvDocument::executed_step_labels() const {
  std::vector<std::string> out;
  for (const auto& a : activities) {
    for (const auto& l : a.step_labels) {
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
  }
  return out;
}

std::vector<std::string> check_invariants(const ProvDocument& doc) {
  std::vector<std::string> problems;
  std::set<Iri> ids;
  auto unique = [&](const Iri& id) {
    if (!ids.insert(id).second) problems.push_back("duplicate id " + id.str());
  };
  for (const auto& e : doc.entities) unique(e.id);
  for (const auto& a : doc.activities) unique(a.id);
  std::set<std::string> agent_names;
  for (const auto& g : doc.agents) {
    unique(g.id);
    if (!agent_names.insert(g.name).second) {
      problems.push_back("more than one agent for tool " + g.name);
    }
  }

  auto is_entity = [&](const Iri& id) { return doc.find_entity(id) != nullptr; };
  auto is_activity = [&](const Iri& id) { return doc.find_activity(id) != nullptr; };
  auto is_agent = [&](const Iri& id) {
    return std::any_of(doc.agents.begin(), doc.agents.end(),
                       [&](const ProvAgent& g) { return g.id == id; });
  };
  for (const auto& u : doc.used) {
    if (!is_activity(u.activity) || !is_entity(u.entity)) {
      problems.push_back("used " + u.id.str() + " has a dangling endpoint");
    }
  }
  std::map<Iri, int> generations;
  for (const auto& g : doc.generated) {
    if (!is_activity(g.activity) || !is_entity(g.entity)) {
      problems.push_back("wasGeneratedBy " + g.id.str() + " has a dangling endpoint");
    }
    ++generations[g.entity];
  }
  for (const auto& a : doc.associations) {
    if (!is_activity(a.activity) || !is_agent(a.agent) ||
        (a.plan && !is_entity(*a.plan))) {
      problems.push_back("wasAssociatedWith " + a.id.str() + " has a dangling endpoint");
    }
  }
  for (const auto& d : doc.derivations) {
    if (!is_entity(d.generated) || !is_entity(d.used)) {
      problems.push_back("wasDerivedFrom " + d.id.str() + " has a dangling endpoint");
    }
  }
  for (const auto& e : doc.entities) {
    if (e.kind != EntityKind::kFile && e.kind != EntityKind::kGraph) continue;
    const int n = generations.count(e.id) ? generations.at(e.id) : 0;
    if (n != 1) {
      problems.push_back(e.id.str() + " has " + std::to_string(n) +
                         " wasGeneratedBy edges, expected 1");
    }
  }
  for (const auto& a : doc.activities) {
    if (a.started > a.ended) problems.push_back(a.id.str() + " ends before it starts");
  }
  const auto plan = doc.plan_step_labels();
  for (const auto& l : doc.executed_step_labels()) {
    if (std::find(plan.begin(), plan.end(), l) == plan.end()) {
      problems.push_back("executed step " + l + " is not in the plan");
    }
  }
  return problems;
}

rdf::Graph to_graph(const ProvDocument& doc) {
  rdf::Graph g;
  const Iri type = rdf::vocab::rdf_type();
  auto labels = [&](const Iri& id, const Labels& ls) {
    for (const auto& [k, v] : ls) g.insert(Triple(id, fx_iri(k), Literal::plain(v)));
  };
  for (const auto& e : doc.entities) {
    g.insert(Triple(e.id, type, prov_iri("Entity")));
    if (e.kind == EntityKind::kPlan) g.insert(Triple(e.id, type, prov_iri("Plan")));
    g.insert(Triple(e.id, fx_iri("kind"), Literal::plain(std::string(to_string(e.kind)))));
    labels(e.id, e.labels);
  }
  for (const auto& a : doc.activities) {
    g.insert(Triple(a.id, type, prov_iri("Activity")));
    g.insert(Triple(a.id, prov_iri("startedAtTime"), date_time(a.started)));
    g.insert(Triple(a.id, prov_iri("endedAtTime"), date_time(a.ended)));
    g.insert(Triple(a.id, fx_iri("status"), Literal::plain(std::string(to_string(a.status)))));
    for (const auto& l : a.step_labels) {
      g.insert(Triple(a.id, fx_iri("stepLabel"), Literal::plain(l)));
    }
    labels(a.id, a.labels);
  }
  for (const auto& ag : doc.agents) {
    g.insert(Triple(ag.id, type, prov_iri("Agent")));
    g.insert(Triple(ag.id, type, prov_iri("SoftwareAgent")));
    g.insert(Triple(ag.id, fx_iri("name"), Literal::plain(ag.name)));
    g.insert(Triple(ag.id, fx_iri("version"), Literal::plain(ag.version)));
  }
  for (const auto& u : doc.used) g.insert(Triple(u.activity, prov_iri("used"), u.entity));
  for (const auto& w : doc.generated) {
    g.insert(Triple(w.entity, prov_iri("wasGeneratedBy"), w.activity));
  }
  for (const auto& a : doc.associations) {
    g.insert(Triple(a.activity, prov_iri("wasAssociatedWith"), a.agent));
    if (a.plan) {
      g.insert(Triple(a.activity, prov_iri("qualifiedAssociation"), a.id));
      g.insert(Triple(a.id, type, prov_iri("Association")));
      g.insert(Triple(a.id, prov_iri("agent"), a.agent));
      g.insert(Triple(a.id, prov_iri("hadPlan"), *a.plan));
    }
  }
  for (const auto& d : doc.derivations) {
    g.insert(Triple(d.generated, prov_iri("wasDerivedFrom"), d.used));
  }
  return g;
}

json to_provjson(const ProvDocument& doc) {
  const Compactor curie(doc);
  json out;
  out["prefix"] = {{"prov", kProvNs},
                   {"fx", kFairifyNs},
                   {"xsd", rdf::vocab::kXsd}};
  if (doc.ns) out["prefix"]["run"] = doc.ns->str();

  auto put_labels = [](json& obj, const Labels& ls) {
    for (const auto& [k, v] : ls) obj["fx:" + k] = v;
  };
  for (const auto& e : doc.entities) {
    json obj;
    obj["fx:kind"] = to_string(e.kind);
    if (e.kind == EntityKind::kPlan) obj["prov:type"] = qualified("prov:Plan");
    put_labels(obj, e.labels);
    out["entity"][curie(e.id)] = std::move(obj);
  }
  for (const auto& a : doc.activities) {
    json obj;
    obj["prov:startTime"] = format_instant(a.started);
    obj["prov:endTime"] = format_instant(a.ended);
    obj["fx:status"] = to_string(a.status);
    if (a.step_labels.size() == 1) {
      obj["fx:stepLabel"] = a.step_labels.front();
    } else if (!a.step_labels.empty()) {
      obj["fx:stepLabel"] = a.step_labels;
    }
    put_labels(obj, a.labels);
    out["activity"][curie(a.id)] = std::move(obj);
  }
  for (const auto& g : doc.agents) {
    out["agent"][curie(g.id)] = {{"prov:type", qualified("prov:SoftwareAgent")},
                                 {"fx:name", g.name},
                                 {"fx:version", g.version}};
  }
  for (const auto& u : doc.used) {
    out["used"][curie(u.id)] = {{"prov:activity", curie(u.activity)},
                                {"prov:entity", curie(u.entity)}};
  }
  for (const auto& w : doc.generated) {
    out["wasGeneratedBy"][curie(w.id)] = {{"prov:entity", curie(w.entity)},
                                          {"prov:activity", curie(w.activity)}};
  }
  for (const auto& a : doc.associations) {
    json obj = {{"prov:activity", curie(a.activity)}, {"prov:agent", curie(a.agent)}};
    if (a.plan) obj["prov:plan"] = curie(*a.plan);
    out["wasAssociatedWith"][curie(a.id)] = std::move(obj);
  }
  for (const auto& d : doc.derivations) {
    out["wasDerivedFrom"][curie(d.id)] = {{"prov:generatedEntity", curie(d.generated)},
                                          {"prov:usedEntity", curie(d.used)}};
  }
  return out;
}

std::string serialize_prov(const ProvDocument& doc, ProvFormat format) {
  if (format == ProvFormat::kNTriples) return rdf::serialize_ntriples(to_graph(doc));
  return to_provjson(doc).dump(2) + "\n";
}

namespace {

class ProvJsonReader {
 public:
  explicit ProvJsonReader(const json& doc) : doc_(doc) {
    if (!doc.is_object() || !doc.contains("prefix") || !doc["prefix"].is_object()) {
      fail("missing prefix block");
    }
    for (const auto& [label, ns] : doc["prefix"].items()) {
      if (!ns.is_string()) fail("prefix " + label + " is not a string");
      prefixes_.bind(label, rdf::validate_iri(ns.get<std::string>()));
    }
  }

  rdf::Graph read() {
    const Iri type = rdf::vocab::rdf_type();
    for (const auto& [id, attrs] : section("entity")) {
      g_.insert(Triple(expand(id), type, prov_iri("Entity")));
      attributes(expand(id), attrs);
    }
    for (const auto& [id, attrs] : section("activity")) {
      const Iri a = expand(id);
      g_.insert(Triple(a, type, prov_iri("Activity")));
      json rest = attrs;
      for (const auto& [key, pred] : {std::pair{"prov:startTime", "startedAtTime"},
                                      std::pair{"prov:endTime", "endedAtTime"}}) {
        if (!rest.contains(key)) continue;
        g_.insert(Triple(a, prov_iri(pred),
                         Literal::typed(rest[key].get<std::string>(),
                                        rdf::vocab::xsd("dateTime"))));
        rest.erase(key);
      }
      attributes(a, rest);
    }
    for (const auto& [id, attrs] : section("agent")) {
      g_.insert(Triple(expand(id), type, prov_iri("Agent")));
      attributes(expand(id), attrs);
    }
    for (const auto& [id, r] : section("used")) {
      g_.insert(Triple(ref(r, "prov:activity"), prov_iri("used"), ref(r, "prov:entity")));
    }
    for (const auto& [id, r] : section("wasGeneratedBy")) {
      g_.insert(Triple(ref(r, "prov:entity"), prov_iri("wasGeneratedBy"),
                       ref(r, "prov:activity")));
    }
    for (const auto& [id, r] : section("wasAssociatedWith")) {
      const Iri activity = ref(r, "prov:activity");
      const Iri agent = ref(r, "prov:agent");
      g_.insert(Triple(activity, prov_iri("wasAssociatedWith"), agent));
      if (r.contains("prov:plan")) {
        const Iri assoc = expand(id);
        g_.insert(Triple(activity, prov_iri("qualifiedAssociation"), assoc));
        g_.insert(Triple(assoc, type, prov_iri("Association")));
        g_.insert(Triple(assoc, prov_iri("agent"), agent));
        g_.insert(Triple(assoc, prov_iri("hadPlan"), ref(r, "prov:plan")));
      }
    }
    for (const auto& [id, r] : section("wasDerivedFrom")) {
      g_.insert(Triple(ref(r, "prov:generatedEntity"), prov_iri("wasDerivedFrom"),
                       ref(r, "prov:usedEntity")));
    }
    return std::move(g_);
  }

 private:
  [[noreturn]] static void fail(const std::string& what) {
    throw Error("prov", "BadProvJson", what);
  }

  json::object_t section(const char* name) const {
    if (!doc_.contains(name)) return {};
    if (!doc_[name].is_object()) fail(std::string(name) + " is not an object");
    return doc_[name].get<json::object_t>();
  }

  Iri expand(const std::string& name) const {
    const auto colon = name.find(':');
    if (colon != std::string::npos && prefixes_.find(name.substr(0, colon)) != nullptr) {
      return rdf::expand_curie(name, prefixes_);
    }
    return rdf::validate_iri(name);
  }

  Iri ref(const json& record, const char* key) const {
    if (!record.is_object() || !record.contains(key) || !record[key].is_string()) {
      fail(std::string("relation lacks ") + key);
    }
    return expand(record[key].get<std::string>());
  }

  rdf::Term value(const json& v) const {
    if (v.is_string()) return Literal::plain(v.get<std::string>());
    if (v.is_object() && v.contains("$") && v.contains("type")) {
      const auto type = v["type"].get<std::string>();
      const auto lexical = v["$"].get<std::string>();
      if (type == kQualifiedName) return expand(lexical);
      return Literal::typed(lexical, expand(type));
    }
    fail("unsupported attribute value " + v.dump());
  }

  void attributes(const Iri& subject, const json& attrs) {
    if (!attrs.is_object()) fail("attributes of " + subject.str() + " are not an object");
    for (const auto& [key, v] : attrs.items()) {
      const Iri predicate = key == "prov:type" ? rdf::vocab::rdf_type() : expand(key);
      if (v.is_array()) {
        for (const auto& item : v) g_.insert(Triple(subject, predicate, value(item)));
      } else {
        g_.insert(Triple(subject, predicate, value(v)));
      }
    }
  }

  const json& doc_;
  rdf::PrefixMap prefixes_;
  rdf::Graph g_;
};

}  // namespace

rdf::Graph provjson_to_graph(const json& doc) { return ProvJsonReader(doc).read(); }

}  // namespace fairify::prov
