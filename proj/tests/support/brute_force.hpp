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

// Reference BGP evaluator: tries every assignment of store terms to the
// query's variables and keeps those under which every pattern is a stored
// triple. Exponential, so only for small stores.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fairify/rdf/ntriples.hpp"
#include "fairify/store/query.hpp"

namespace fairify::test_support {

inline std::vector<rdf::Term> all_terms(const rdf::Graph& g) {
  std::set<rdf::Term> terms;
  for (const auto& t : g) {
    terms.insert(t.subject);
    terms.insert(rdf::Term(t.predicate));
    terms.insert(t.object);
  }
  return {terms.begin(), terms.end()};
}

inline store::ResultTable brute_force_evaluate(const store::Query& q,
                                               const rdf::Graph& g) {
  std::vector<std::string> vars;
  auto note = [&](const store::PatternTerm& t) {
    if (const auto* v = std::get_if<store::Variable>(&t)) {
      if (std::find(vars.begin(), vars.end(), v->name) == vars.end()) {
        vars.push_back(v->name);
      }
    }
  };
  for (const auto& p : q.patterns) {
    note(p.subject);
    note(p.predicate);
    note(p.object);
  }
  const auto domain = all_terms(g);
  std::map<std::string, std::vector<rdf::Term>> rows;
  store::ResultTable out;
  out.header = q.projected;
  if (domain.empty() && !vars.empty()) return out;

  std::vector<std::size_t> choice(vars.size(), 0);
  while (true) {
    auto value = [&](const store::PatternTerm& t) -> const rdf::Term& {
      if (const auto* v = std::get_if<store::Variable>(&t)) {
        const auto idx = std::find(vars.begin(), vars.end(), v->name) - vars.begin();
        return domain[choice[static_cast<std::size_t>(idx)]];
      }
      return std::get<rdf::Term>(t);
    };
    bool all = true;
    for (const auto& p : q.patterns) {
      const rdf::Term& s = value(p.subject);
      const rdf::Term& pr = value(p.predicate);
      const rdf::Term& o = value(p.object);
      if (rdf::is_literal(s) || !rdf::is_iri(pr) ||
          !g.contains(rdf::Triple(s, std::get<rdf::Iri>(pr), o))) {
        all = false;
        break;
      }
    }
    if (all) {
      std::vector<rdf::Term> row;
      std::string key;
      for (const auto& v : q.projected) {
        const auto& t = value(store::PatternTerm(v));
        if (!key.empty()) key += '\t';
        key += rdf::to_ntriples(t);
        row.push_back(t);
      }
      rows.emplace(key, row);
    }
    // odometer
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == domain.size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  for (auto& [k, row] : rows) out.rows.push_back(row);
  return out;
}

// Random conjunctive query over the vocabulary of `g` using at most
// `max_vars` distinct variables.
inline store::Query random_query(std::mt19937& rng, const rdf::Graph& g,
                                 int max_patterns = 3, int max_vars = 3) {
  const auto domain = all_terms(g);
  std::vector<rdf::Iri> predicates;
  for (const auto& t : g) predicates.push_back(t.predicate);
  std::uniform_int_distribution<int> npat(1, max_patterns);
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<int> var(0, max_vars - 1);
  auto make_var = [&] {
    return store::PatternTerm(store::Variable{std::string(1, static_cast<char>('a' + var(rng)))});
  };
  auto pick = [&](const auto& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  store::Query q;
  for (int i = npat(rng); i > 0; --i) {
    store::TriplePattern p{make_var(), make_var(), make_var()};
    if (!domain.empty() && coin(rng) == 0) {
      // Subjects must not be literals.
      rdf::Term s = pick(domain);
      if (rdf::is_iri(s)) p.subject = s;
    }
    if (!predicates.empty() && coin(rng) != 0) p.predicate = rdf::Term(pick(predicates));
    if (!domain.empty() && coin(rng) == 0) p.object = pick(domain);
    q.patterns.push_back(std::move(p));
  }
  std::set<std::string> seen;
  for (const auto& p : q.patterns) {
    for (const auto* t : {&p.subject, &p.predicate, &p.object}) {
      if (const auto* v = std::get_if<store::Variable>(t)) {
        if (seen.insert(v->name).second) q.projected.push_back(*v);
      }
    }
  }
  if (q.projected.empty()) {
    q.patterns.front().object = store::Variable{"z"};
    q.projected.push_back(store::Variable{"z"});
  }
  std::shuffle(q.projected.begin(), q.projected.end(), rng);
  q.projected.resize(std::uniform_int_distribution<std::size_t>(1, q.projected.size())(rng));
  return q;
}

// Stores drawn from a small vocabulary so random joins are non-trivial.
inline rdf::Graph small_random_graph(std::mt19937& rng, int max_triples) {
  static const std::vector<std::string> kNodes = {"n0", "n1", "n2", "n3", "n4", "n5"};
  static const std::vector<std::string> kPreds = {"p", "q", "r"};
  std::uniform_int_distribution<int> count(0, max_triples);
  std::uniform_int_distribution<std::size_t> node(0, kNodes.size() - 1);
  std::uniform_int_distribution<std::size_t> pred(0, kPreds.size() - 1);
  std::uniform_int_distribution<int> lit(0, 4);
  rdf::Graph g;
  for (int i = count(rng); i > 0; --i) {
    rdf::Term o = lit(rng) == 0 ? rdf::Term(rdf::Literal::plain(kNodes[node(rng)]))
                                : rdf::Term(rdf::Iri::parse("http://ex.org/" + kNodes[node(rng)]));
    g.insert(rdf::Triple(rdf::Iri::parse("http://ex.org/" + kNodes[node(rng)]),
                         rdf::Iri::parse("http://ex.org/" + kPreds[pred(rng)]), o));
  }
  return g;
}

}  // namespace fairify::test_support
