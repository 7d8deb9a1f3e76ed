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
#include <string>
#include <string_view>
#include <vector>

#include "fairify/rdf/term.hpp"
#include "fairify/store/triple_store.hpp"

namespace fairify::store {

// SyntaxError, UnknownPrefix, EmptyProjection or UnboundProjection, with the
// 0-based byte offset into the query text.
class QueryError : public Error {
 public:
  QueryError(std::string name, std::size_t offset, const std::string& message)
      : Error("query", std::move(name),
              message + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

struct Query {
  rdf::PrefixMap prefixes;
  std::vector<Variable> projected;
  std::vector<TriplePattern> patterns;
};

// PREFIX label: <iri> ... SELECT ?v ... WHERE { pattern . pattern ... }
Query parse_query(std::string_view text);

struct ResultTable {
  std::vector<Variable> header;
  // Duplicate-free, ordered by the tab-joined N-Triples form of each row.
  std::vector<std::vector<rdf::Term>> rows;

  // Header line of ?names, then one line per row of N-Triples terms.
  std::string to_tsv() const;
};

// Natural join of all patterns, projected and deduplicated.
ResultTable evaluate(const Query& query, const TripleStore& store);

}  // namespace fairify::store
