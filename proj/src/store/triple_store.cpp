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

#include "fairify/store/triple_store.hpp"

#include <array>

namespace fairify::store {

namespace {

// Position (0 = subject, 1 = predicate, 2 = object) held at each level of an
// index.
constexpr std::array<int, 3> positions(IndexOrder order) {
  switch (order) {
    case IndexOrder::kSubjectFirst:
      return {0, 1, 2};
    case IndexOrder::kPredicateFirst:
      return {1, 2, 0};
    case IndexOrder::kObjectFirst:
      return {2, 0, 1};
  }
  return {0, 1, 2};
}

const rdf::Term* bound(const PatternTerm& t) {
  return std::get_if<rdf::Term>(&t);
}

// Repeated variables must bind to equal terms.
bool consistent(const std::array<const PatternTerm*, 3>& pattern,
                const std::array<const rdf::Term*, 3>& terms) {
  for (int i = 0; i < 3; ++i) {
    const auto* vi = std::get_if<Variable>(pattern[i]);
    if (vi == nullptr) continue;
    for (int j = i + 1; j < 3; ++j) {
      const auto* vj = std::get_if<Variable>(pattern[j]);
      if (vj != nullptr && *vi == *vj && *terms[i] != *terms[j]) return false;
    }
  }
  return true;
}

template <typename Map, typename Fn>
void for_keys(const Map& map, const rdf::Term* key, Fn&& fn) {
  if (key != nullptr) {
    auto it = map.find(*key);
    if (it != map.end()) fn(it->first, it->second);
    return;
  }
  for (const auto& [k, v] : map) fn(k, v);
}

}  // namespace

TripleStore::TripleStore(const rdf::Graph& graph) {
  for (const auto& t : graph) insert(t);
}

bool TripleStore::insert(const rdf::Triple& t) {
  std::unique_lock lock(mutex_);
  const rdf::Term p = t.predicate;
  if (!spo_[t.subject][p].insert(t.object).second) return false;
  pos_[p][t.object].insert(t.subject);
  osp_[t.object][t.subject].insert(p);
  ++size_;
  return true;
}

std::size_t TripleStore::size() const {
  std::shared_lock lock(mutex_);
  return size_;
}

rdf::Graph TripleStore::Reader::match(const TriplePattern& pattern) const {
  IndexOrder order = IndexOrder::kSubjectFirst;
  if (bound(pattern.subject) == nullptr) {
    if (bound(pattern.predicate) != nullptr) {
      order = IndexOrder::kPredicateFirst;
    } else if (bound(pattern.object) != nullptr) {
      order = IndexOrder::kObjectFirst;
    }
  }
  return match_via(order, pattern);
}

rdf::Graph TripleStore::Reader::match_via(IndexOrder order,
                                          const TriplePattern& pattern) const {
  const Index& index = order == IndexOrder::kSubjectFirst     ? store_->spo_
                       : order == IndexOrder::kPredicateFirst ? store_->pos_
                                                              : store_->osp_;
  const auto pos = positions(order);
  const std::array<const PatternTerm*, 3> spo_pattern{
      &pattern.subject, &pattern.predicate, &pattern.object};
  const std::array<const PatternTerm*, 3> level{
      spo_pattern[pos[0]], spo_pattern[pos[1]], spo_pattern[pos[2]]};

  rdf::Graph out;
  for_keys(index, bound(*level[0]), [&](const rdf::Term& k0, const auto& m1) {
    for_keys(m1, bound(*level[1]), [&](const rdf::Term& k1, const auto& leaves) {
      auto emit = [&](const rdf::Term& k2) {
        std::array<const rdf::Term*, 3> terms{};
        terms[pos[0]] = &k0;
        terms[pos[1]] = &k1;
        terms[pos[2]] = &k2;
        if (!consistent(spo_pattern, terms)) return;
        const auto* predicate = std::get_if<rdf::Iri>(terms[1]);
        if (predicate == nullptr) return;
        out.insert(rdf::Triple(*terms[0], *predicate, *terms[2]));
      };
      if (const rdf::Term* key = bound(*level[2])) {
        if (leaves.count(*key) != 0) emit(*leaves.find(*key));
      } else {
        for (const auto& k2 : leaves) emit(k2);
      }
    });
  });
  return out;
}

}  // namespace fairify::store
