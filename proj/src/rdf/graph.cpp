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

#include "fairify/rdf/graph.hpp"

namespace fairify::rdf {

Graph::Graph(std::initializer_list<Triple> triples) : triples_(triples) {}

void Graph::merge(const Graph& other) {
  triples_.insert(other.triples_.begin(), other.triples_.end());
}

}  // namespace fairify::rdf
