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

#include "fairify/prov/recorder.hpp"

#include <algorithm>

#include "fairify/error.hpp"
#include "fairify/version.hpp"

namespace fairify::prov {

using rdf::Iri;

namespace {

Iri run_namespace(const PlanConfig& config) {
  return rdf::join_iri(config.base_iri, "prov/" + config.run_id + "/");
}

Iri mint_id(const Iri& ns, std::string_view kind, std::size_t seq) {
  return Iri::parse(ns.str() + std::string(kind) + "/" + std::to_string(seq));
}

template <typename T>
void append_unique(std::vector<T>& out, const T& value) {
  if (std::find(out.begin(), out.end(), value) == out.end()) out.push_back(value);
}

}  // namespace

bool is_valid_run_id(std::string_view run_id) {
  if (run_id.empty()) return false;
  return std::all_of(run_id.begin(), run_id.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '.' || c == '_' || c == '-';
  });
}

namespace {

ProvDocument build_plan_counted(const PlanConfig& config, std::size_t& seq) {
  if (config.stages.empty()) {
    throw Error("prov", "EmptyPipeline", "pipeline has no stages");
  }
  if (!is_valid_run_id(config.run_id)) {
    throw Error("prov", "BadRunId", "run id '" + config.run_id + "' is not [A-Za-z0-9._-]+");
  }
  for (const auto& stage : config.stages) {
    if (!is_step_label(stage.step_label)) {
      throw Error("prov", "InvalidStepLabel",
                  "stage " + stage.name + " has unknown step label '" + stage.step_label + "'");
    }
  }
  ProvDocument doc;
  doc.ns = run_namespace(config);
  doc.granularity = config.granularity;
  doc.entities.push_back({mint_id(*doc.ns, "plan", ++seq),
                          EntityKind::kPlan,
                          {{"name", "fairify pipeline"},
                           {"stepCount", std::to_string(config.stages.size())}}});
  std::optional<Iri> previous;
  for (const auto& stage : config.stages) {
    Iri id = mint_id(*doc.ns, "plan_step", ++seq);
    doc.entities.push_back({id,
                            EntityKind::kPlanStep,
                            {{"name", stage.name},
                             {"stepLabel", stage.step_label},
                             {"agent", stage.agent}}});
    if (previous) {
      doc.derivations.push_back({mint_id(*doc.ns, "derivation", ++seq), id, *previous});
    }
    previous = id;
  }
  return doc;
}

}  // namespace

ProvDocument build_plan(const PlanConfig& config) {
  std::size_t seq = 0;
  return build_plan_counted(config, seq);
}

Recorder::Recorder(PlanConfig config, Clock clock)
    : config_(std::move(config)), clock_(std::move(clock)) {
  doc_ = build_plan_counted(config_, sequence_);
}

Iri Recorder::mint(std::string_view kind) { return mint_id(*doc_.ns, kind, ++sequence_); }

void Recorder::begin_run() {
  std::lock_guard lock(mutex_);
  run_started_ = clock_();
  run_open_ = true;
}

Iri Recorder::add_entity(EntityKind kind, Labels labels) {
  std::lock_guard lock(mutex_);
  Iri id = mint(to_string(kind));
  doc_.entities.push_back({id, kind, std::move(labels)});
  return id;
}

void Recorder::add_derivation(const Iri& generated, const Iri& used) {
  std::lock_guard lock(mutex_);
  doc_.derivations.push_back({mint("derivation"), generated, used});
}

const Iri& Recorder::agent_locked(const std::string& name) {
  for (const auto& a : doc_.agents) {
    if (a.name == name) return a.id;
  }
  doc_.agents.push_back({mint("agent"), name, kVersion});
  return doc_.agents.back().id;
}

const ProvEntity& Recorder::plan_step_locked(const std::string& step_label) const {
  for (const auto& e : doc_.entities) {
    if (e.kind != EntityKind::kPlanStep) continue;
    auto it = e.labels.find("stepLabel");
    if (it != e.labels.end() && it->second == step_label) return e;
  }
  throw Error("prov", "UnknownPlanStep", "step " + step_label + " is not in the plan");
}

ProvActivity Recorder::add_activity_locked(std::vector<std::string> labels, TimePoint started,
                                           Status status, Labels extra,
                                           const std::string& agent,
                                           const std::optional<Iri>& plan,
                                           const std::vector<Iri>& inputs,
                                           const std::vector<Iri>& outputs) {
  ProvActivity a{mint("activity"), {}, {}, {}, Status::kSucceeded, {}, 0};
  a.sequence = sequence_;
  a.step_labels = std::move(labels);
  a.started = started;
  a.ended = std::max(started, clock_());
  a.status = status;
  a.labels = std::move(extra);
  const Iri agent_id = agent_locked(agent);
  doc_.associations.push_back({mint("association"), a.id, agent_id, plan});
  for (const auto& in : inputs) doc_.used.push_back({mint("usage"), a.id, in});
  for (const auto& out : outputs) doc_.generated.push_back({mint("generation"), out, a.id});
  doc_.activities.push_back(a);
  return a;
}

std::optional<ProvActivity> Recorder::record_activity(const std::string& step_label,
                                                      const std::string& agent,
                                                      const std::vector<Iri>& inputs,
                                                      const std::vector<Iri>& outputs,
                                                      Status status, TimePoint started,
                                                      Labels labels) {
  std::lock_guard lock(mutex_);
  const ProvEntity& step = plan_step_locked(step_label);
  if (config_.granularity == Granularity::kRun) {
    append_unique(folded_labels_, step_label);
    append_unique(folded_agents_, agent);
    for (const auto& in : inputs) append_unique(folded_inputs_, in);
    for (const auto& out : outputs) append_unique(folded_outputs_, out);
    if (status == Status::kFailed) folded_status_ = Status::kFailed;
    return std::nullopt;
  }
  const Iri plan = step.id;
  return add_activity_locked({step_label}, started, status, std::move(labels), agent, plan,
                             inputs, outputs);
}

std::optional<ProvActivity> Recorder::record_batch(const std::string& step_label,
                                                   const std::string& agent,
                                                   const std::vector<Iri>& inputs,
                                                   const std::vector<Iri>& outputs,
                                                   TimePoint started, std::size_t first_row,
                                                   std::size_t last_row) {
  std::lock_guard lock(mutex_);
  if (config_.granularity != Granularity::kRecord) {
    throw Error("prov", "BatchNotAdmitted",
                "row batches are recorded only at record granularity");
  }
  const Iri plan = plan_step_locked(step_label).id;
  return add_activity_locked(
      {step_label}, started, Status::kSucceeded,
      {{"firstRow", std::to_string(first_row)}, {"lastRow", std::to_string(last_row)}}, agent,
      plan, inputs, outputs);
}

ProvDocument Recorder::finish(Status status) {
  std::lock_guard lock(mutex_);
  if (!run_open_) run_started_ = clock_();
  run_open_ = false;
  const Iri plan = doc_.entities.front().id;
  if (config_.granularity == Granularity::kRun) {
    const Status overall =
        status == Status::kFailed ? Status::kFailed : folded_status_;
    ProvActivity a = add_activity_locked(folded_labels_, run_started_, overall, {},
                                         config_.pipeline_agent, plan, folded_inputs_,
                                         folded_outputs_);
    for (const auto& agent : folded_agents_) {
      if (agent == config_.pipeline_agent) continue;
      doc_.associations.push_back({mint("association"), a.id, agent_locked(agent), {}});
    }
  } else {
    add_activity_locked({}, run_started_, status, {}, config_.pipeline_agent, plan, {}, {});
  }
  return doc_;
}

}  // namespace fairify::prov
