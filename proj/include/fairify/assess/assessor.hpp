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

#include "fairify/store/query.hpp"

namespace fairify::assess {

inline constexpr const char* kRubricVersion = "fairify-rubric-1";

enum class Priority { kEssential, kImportant, kUseful };
std::string_view to_string(Priority p);

struct Indicator {
  std::string id;
  char principle;
  Priority priority;
  std::string description;
};

// The ten indicators, in report order.
const std::vector<Indicator>& rubric();

struct AssessmentBundle {
  std::optional<std::filesystem::path> data;      // data.nt
  std::optional<std::filesystem::path> prov;      // prov.nt or prov.json
  std::optional<std::filesystem::path> metadata;  // metadata.json
  std::optional<std::filesystem::path> mapping;   // mapping spec, for declared vocabularies
  std::optional<std::string> service_url;

  bool empty() const {
    return !data && !prov && !metadata && !mapping && !service_url;
  }
};

struct IndicatorResult {
  std::string id;
  char principle;
  Priority priority;
  bool pass = false;
  std::string evidence;
};

struct CompetencyQuestion {
  std::string id;
  std::string text;
  std::string query;
  std::size_t min_rows = 1;
};

struct CqResult {
  std::string id;
  std::size_t rows = 0;
  std::size_t min_rows = 1;
  bool answered = false;
  store::ResultTable sample;  // first 10 rows
};

// Query parse failure of one competency question.
class QueryParseError : public Error {
 public:
  QueryParseError(std::string question, std::size_t offset, const std::string& message);
  const std::string& question() const noexcept { return question_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string question_;
  std::size_t offset_;
};

struct MaturityReport {
  std::vector<IndicatorResult> indicators;
  std::vector<CqResult> cqs;

  // passed / total per principle letter.
  std::map<char, double> scores() const;
  bool essential_pass() const;
  const IndicatorResult* find(std::string_view id) const;
  std::size_t passed() const;
  // 0 when every essential indicator passes and every question is answered, else 3.
  int exit_code() const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Throws assess.EmptyBundle; every other problem becomes a failing row.
MaturityReport evaluate_indicators(const AssessmentBundle& bundle);

// JSON list of {id, text, query, min_rows?}. Throws assess.BadQuestions.
std::vector<CompetencyQuestion> parse_questions(std::string_view json_text);
std::vector<CompetencyQuestion> read_questions(const std::filesystem::path& path);

// Throws QueryParseError naming the question.
std::vector<CqResult> run_competency_questions(const std::vector<CompetencyQuestion>& questions,
                                               const store::TripleStore& store);

}  // namespace fairify::assess
