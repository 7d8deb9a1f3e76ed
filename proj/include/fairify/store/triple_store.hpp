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
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <variant>

#include "fairify/rdf/graph.hpp"

namespace fairify::store {

struct Variable {
  std::string name;  // without the leading '?'
  auto operator<=>(const Variable&) const = default;
  bool operator==(const Variable&) const = default;
};

using PatternTerm = std::variant<rdf::Term, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
};

// Traversal order of one of the three permutation indexes.
enum class IndexOrder { kSubjectFirst, kPredicateFirst, kObjectFirst };

// In-memory triple store with subject-, predicate- and object-first indexes.
// Many concurrent readers or one writer.
class TripleStore {
  // first key -> second key -> third keys
  using Index = std::map<rdf::Term, std::map<rdf::Term, std::set<rdf::Term>>>;

 public:
  // Holds a shared lock for its lifetime; all lookups through one Reader see
  // the same state.
  class Reader {
   public:
    // Triples unifying with `pattern`, using the index whose leading position
    // is bound.
    rdf::Graph match(const TriplePattern& pattern) const;
    // Same result, forced through a specific index.
    rdf::Graph match_via(IndexOrder order, const TriplePattern& pattern) const;
    std::size_t size() const { return store_->size_; }

   private:
    friend class TripleStore;
    explicit Reader(const TripleStore& store)
        : store_(&store), lock_(store.mutex_) {}
    const TripleStore* store_;
    std::shared_lock<std::shared_mutex> lock_;
  };

  TripleStore() = default;
  explicit TripleStore(const rdf::Graph& graph);

  // True iff `t` was absent. All three indexes are updated under one lock.
  bool insert(const rdf::Triple& t);

  Reader reader() const { return Reader(*this); }
  rdf::Graph match(const TriplePattern& pattern) const {
    return reader().match(pattern);
  }
  rdf::Graph match_via(IndexOrder order, const TriplePattern& pattern) const {
    return reader().match_via(order, pattern);
  }
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  Index spo_;
  Index pos_;
  Index osp_;
  std::size_t size_ = 0;
};

}  // namespace fairify::store
