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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fairify/clock.hpp"
#include "fairify/rdf/graph.hpp"

namespace fairify::prov {

inline constexpr std::string_view kProvNs = "http://www.w3.org/ns/prov#";
// Toolkit vocabulary for attributes PROV itself does not name.
inline constexpr std::string_view kFairifyNs = "http://example.org/fairify/ns#";

enum class EntityKind { kFile, kDataset, kGraph, kPlan, kPlanStep };
enum class Granularity { kRun, kStep, kRecord };
enum class Status { kSucceeded, kFailed };

std::string_view to_string(EntityKind kind);
std::string_view to_string(Granularity g);
std::string_view to_string(Status s);
Granularity parse_granularity(std::string_view text);

// Workflow step numbering: 1, 2, 3, 4a, 4b, 5a, 5b, 6, 7.
bool is_step_label(std::string_view label);

using Labels = std::map<std::string, std::string>;

struct ProvEntity {
  rdf::Iri id;
  EntityKind kind;
  Labels labels;
};

struct ProvActivity {
  rdf::Iri id;
  // Empty for the umbrella run activity at step/record granularity; all
  // stage labels when the whole run is a single activity.
  std::vector<std::string> step_labels;
  TimePoint started;
  TimePoint ended;
  Status status = Status::kSucceeded;
  Labels labels;
  std::size_t sequence = 0;
};

struct ProvAgent {
  rdf::Iri id;
  std::string name;
  std::string version;
};

struct Used {
  rdf::Iri id;
  rdf::Iri activity;
  rdf::Iri entity;
};
struct WasGeneratedBy {
  rdf::Iri id;
  rdf::Iri entity;
  rdf::Iri activity;
};
// hadPlan travels with the association, as in PROV-O qualified associations.
struct WasAssociatedWith {
  rdf::Iri id;
  rdf::Iri activity;
  rdf::Iri agent;
  std::optional<rdf::Iri> plan;
};
struct WasDerivedFrom {
  rdf::Iri id;
  rdf::Iri generated;
  rdf::Iri used;
};

struct ProvDocument {
  // Namespace all ids are minted under: base_iri/prov/<run_id>/
  std::optional<rdf::Iri> ns;
  Granularity granularity = Granularity::kStep;

  std::vector<ProvEntity> entities;
  std::vector<ProvActivity> activities;
  std::vector<ProvAgent> agents;
  std::vector<Used> used;
  std::vector<WasGeneratedBy> generated;
  std::vector<WasAssociatedWith> associations;
  std::vector<WasDerivedFrom> derivations;

  bool empty() const {
    return entities.empty() && activities.empty() && agents.empty();
  }
  const ProvEntity* find_entity(const rdf::Iri& id) const;
  const ProvActivity* find_activity(const rdf::Iri& id) const;

  // Step labels carried by plan_step entities, in plan order.
  std::vector<std::string> plan_step_labels() const;
  // Step labels of executed activities.
  std::vector<std::string> executed_step_labels() const;
};

// Empty when every document invariant holds; otherwise one message each.
std::vector<std::string> check_invariants(const ProvDocument& doc);

// PROV-O statements for the document.
rdf::Graph to_graph(const ProvDocument& doc);
nlohmann::json to_provjson(const ProvDocument& doc);

enum class ProvFormat { kNTriples, kProvJson };
// N-Triples sorted; PROV-JSON with sorted keys and two-space indent.
std::string serialize_prov(const ProvDocument& doc, ProvFormat format);

// Facts encoded by a PROV-JSON document written by to_provjson, expressed
// with the same PROV-O terms to_graph uses. Throws prov.BadProvJson.
rdf::Graph provjson_to_graph(const nlohmann::json& doc);

}  // namespace fairify::prov
