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

#include "fairify/rdf/term.hpp"

namespace fairify::rdf {

// A duplicate-free set of triples.
class Graph {
 public:
  using const_iterator = std::set<Triple>::const_iterator;

  Graph() = default;
  Graph(std::initializer_list<Triple> triples);

  // True iff the triple was not already present.
  bool insert(Triple t) { return triples_.insert(std::move(t)).second; }
  void merge(const Graph& other);
  bool contains(const Triple& t) const { return triples_.count(t) != 0; }

  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }

  bool operator==(const Graph&) const = default;

 private:
  std::set<Triple> triples_;
};

}  // namespace fairify::rdf
