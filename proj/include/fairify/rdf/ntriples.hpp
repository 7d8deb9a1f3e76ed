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
#include <set>
#include <string>
#include <string_view>

#include "fairify/rdf/graph.hpp"

namespace fairify::rdf {

// Parse failure with the 1-based input line.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& reason)
      : Error("rdf", "SyntaxError",
              "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

// Escapes \" \\ \n \r \t; every other character is emitted as-is.
std::string escape_literal(std::string_view lexical);

// N-Triples form of a single term: <iri>, "lex", "lex"@lang, "lex"^^<dt>.
std::string to_ntriples(const Term& term);
std::string to_ntriples(const Triple& triple);

// One statement per line, lines sorted by code point, LF terminated.
std::string serialize_ntriples(const Graph& graph);
std::string serialize_nquads(const std::set<Quad>& quads);

// Accepts comments and blank lines; rejects blank-node labels.
Graph parse_ntriples(std::string_view text);

}  // namespace fairify::rdf
