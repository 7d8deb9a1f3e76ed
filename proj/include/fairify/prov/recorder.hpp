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
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fairify/prov/document.hpp"

namespace fairify::prov {

struct StageSpec {
  std::string name;
  std::string step_label;
  std::string agent;
};

struct PlanConfig {
  rdf::Iri base_iri;
  std::string run_id;
  std::vector<StageSpec> stages;
  Granularity granularity = Granularity::kStep;
  std::size_t batch_size = 100;
  // Agent for the umbrella run activity.
  std::string pipeline_agent = "fairify";
};

// [A-Za-z0-9._-]+
bool is_valid_run_id(std::string_view run_id);

// Prospective provenance: one plan entity and one plan_step entity per stage,
// each step derived from its predecessor. Throws prov.EmptyPipeline and
// prov.InvalidStepLabel and prov.BadRunId.
ProvDocument build_plan(const PlanConfig& config);

// Collects retrospective provenance against a plan. Safe for concurrent
// calls; the document is assembled in finish().
class Recorder {
 public:
  Recorder(PlanConfig config, Clock clock);

  Granularity granularity() const { return config_.granularity; }
  std::size_t batch_size() const { return config_.batch_size; }
  TimePoint now() const { return clock_(); }

  // Opens the run activity; call once before any stage.
  void begin_run();

  rdf::Iri add_entity(EntityKind kind, Labels labels);
  void add_derivation(const rdf::Iri& generated, const rdf::Iri& used);

  // Records one stage. At run granularity the event is folded into the run
  // activity and nullopt is returned. Throws prov.UnknownPlanStep.
  std::optional<ProvActivity> record_activity(const std::string& step_label,
                                              const std::string& agent,
                                              const std::vector<rdf::Iri>& inputs,
                                              const std::vector<rdf::Iri>& outputs,
                                              Status status, TimePoint started,
                                              Labels labels = {});

  // One row batch of a stage; only admitted at record granularity
  // (prov.BatchNotAdmitted otherwise).
  std::optional<ProvActivity> record_batch(const std::string& step_label,
                                           const std::string& agent,
                                           const std::vector<rdf::Iri>& inputs,
                                           const std::vector<rdf::Iri>& outputs,
                                           TimePoint started, std::size_t first_row,
                                           std::size_t last_row);

  // Closes the run activity and returns the full document.
  ProvDocument finish(Status status);

 private:
  rdf::Iri mint(std::string_view kind);
  const rdf::Iri& agent_locked(const std::string& name);
  const ProvEntity& plan_step_locked(const std::string& step_label) const;
  ProvActivity add_activity_locked(std::vector<std::string> labels, TimePoint started,
                                   Status status, Labels extra, const std::string& agent,
                                   const std::optional<rdf::Iri>& plan,
                                   const std::vector<rdf::Iri>& inputs,
                                   const std::vector<rdf::Iri>& outputs);

  PlanConfig config_;
  Clock clock_;
  mutable std::mutex mutex_;
  ProvDocument doc_;
  std::size_t sequence_ = 0;
  TimePoint run_started_{};
  bool run_open_ = false;

  // Folded stage events for run granularity.
  std::vector<std::string> folded_labels_;
  std::vector<rdf::Iri> folded_inputs_;
  std::vector<rdf::Iri> folded_outputs_;
  std::vector<std::string> folded_agents_;
  Status folded_status_ = Status::kSucceeded;
};

}  // namespace fairify::prov
