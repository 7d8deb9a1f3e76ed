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

#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "fairify/store/query.hpp"
#include "support/brute_force.hpp"

using namespace fairify;
using namespace fairify::store;
using rdf::Iri;
using rdf::Literal;
using rdf::Triple;

namespace {

Iri iri(std::string_view s) { return Iri::parse(s); }
const char* kCrf = "http://ex.org/crf#";
Iri crf(std::string_view local) { return iri(std::string(kCrf) + std::string(local)); }
Iri patient(int n) { return iri("http://ex.org/v/patient/" + std::to_string(n)); }

// Two typed patients, one untyped subject, and two attribute triples.
rdf::Graph five_triples() {
  return rdf::Graph{
      Triple(patient(1), rdf::vocab::rdf_type(), crf("Patient")),
      Triple(patient(2), rdf::vocab::rdf_type(), crf("Patient")),
      Triple(patient(3), rdf::vocab::rdf_type(), crf("Visit")),
      Triple(patient(1), crf("hasOutcome"), crf("DischargedAlive")),
      Triple(patient(2), crf("age"), Literal::typed("67", rdf::vocab::xsd("integer")))};
}

rdf::Graph linear_scan(const rdf::Graph& g, const TriplePattern& p) {
  // Independent of the indexes: test each stored triple against the pattern.
  rdf::Graph out;
  for (const auto& t : g) {
    std::map<std::string, rdf::Term> seen;
    auto ok = [&](const PatternTerm& pt, const rdf::Term& value) {
      if (const auto* term = std::get_if<rdf::Term>(&pt)) return *term == value;
      const auto& name = std::get<Variable>(pt).name;
      auto [it, fresh] = seen.emplace(name, value);
      return fresh || it->second == value;
    };
    if (ok(p.subject, t.subject) && ok(p.predicate, rdf::Term(t.predicate)) &&
        ok(p.object, t.object)) {
      out.insert(t);
    }
  }
  return out;
}

PatternTerm v(std::string name) { return Variable{std::move(name)}; }

}  // namespace

// _____________________________________________________________________________
TEST(TripleStore, insertIsSetSemantics) {
  TripleStore store;
  Triple t(patient(1), rdf::vocab::rdf_type(), crf("Patient"));
  EXPECT_TRUE(store.insert(t));
  EXPECT_FALSE(store.insert(t));
  EXPECT_EQ(store.size(), 1u);
  for (int i = 2; i <= 10; ++i) {
    store.insert(Triple(patient(i), rdf::vocab::rdf_type(), crf("Patient")));
  }
  EXPECT_EQ(store.size(), 10u);
}

TEST(TripleStore, matchTypedPatients) {
  const auto g = five_triples();
  TripleStore store(g);
  TriplePattern p{v("x"), rdf::Term(rdf::vocab::rdf_type()), rdf::Term(crf("Patient"))};
  const auto got = store.match(p);
  EXPECT_EQ(got, linear_scan(g, p));
  EXPECT_EQ(got.size(), 2u);
}

TEST(TripleStore, fullyBoundAndFullyOpen) {
  const auto g = five_triples();
  TripleStore store(g);
  TriplePattern bound{rdf::Term(patient(1)), rdf::Term(crf("hasOutcome")),
                      rdf::Term(crf("DischargedAlive"))};
  EXPECT_EQ(store.match(bound).size(), 1u);
  TriplePattern absent{rdf::Term(patient(2)), rdf::Term(crf("hasOutcome")),
                       rdf::Term(crf("DischargedAlive"))};
  EXPECT_TRUE(store.match(absent).empty());
  EXPECT_EQ(store.match(TriplePattern{v("s"), v("p"), v("o")}), g);
}

TEST(TripleStore, repeatedVariableInOnePattern) {
  rdf::Graph g{Triple(patient(1), crf("knows"), patient(1)),
               Triple(patient(1), crf("knows"), patient(2))};
  TripleStore store(g);
  TriplePattern p{v("x"), rdf::Term(crf("knows")), v("x")};
  for (auto order : {IndexOrder::kSubjectFirst, IndexOrder::kPredicateFirst,
                     IndexOrder::kObjectFirst}) {
    EXPECT_EQ(store.match_via(order, p).size(), 1u);
  }
}

TEST(TripleStore, indexesAgreeOnRandomStores) {
  std::mt19937 rng(99);
  for (int round = 0; round < 200; ++round) {
    const auto g = test_support::small_random_graph(rng, 30);
    TripleStore store;
    for (const auto& t : g) store.insert(t);
    ASSERT_EQ(store.size(), g.size());
    const auto q = test_support::random_query(rng, g, 1);
    const auto& p = q.patterns.front();
    const auto expected = linear_scan(g, p);
    EXPECT_EQ(store.match(p), expected);
    for (auto order : {IndexOrder::kSubjectFirst, IndexOrder::kPredicateFirst,
                       IndexOrder::kObjectFirst}) {
      EXPECT_EQ(store.match_via(order, p), expected);
      EXPECT_EQ(store.match_via(order, TriplePattern{v("s"), v("p"), v("o")}), g);
    }
  }
}

TEST(TripleStore, concurrentReadersAndWriter) {
  TripleStore store;
  std::thread writer([&] {
    for (int i = 0; i < 500; ++i) {
      store.insert(Triple(patient(i), rdf::vocab::rdf_type(), crf("Patient")));
    }
  });
  std::vector<std::thread> readers;
  for (int r = 0; r < 4; ++r) {
    readers.emplace_back([&] {
      for (int i = 0; i < 100; ++i) {
        auto reader = store.reader();
        const auto all = reader.match(TriplePattern{v("s"), v("p"), v("o")});
        EXPECT_EQ(all.size(), reader.size());
      }
    });
  }
  writer.join();
  for (auto& t : readers) t.join();
  EXPECT_EQ(store.size(), 500u);
}

// _____________________________________________________________________________
TEST(ParseQuery, twoPatterns) {
  const auto q = parse_query(
      "SELECT ?p WHERE { ?p <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
      "<http://ex.org/crf#Patient> . ?p <http://ex.org/crf#hasOutcome> ?o }");
  ASSERT_EQ(q.patterns.size(), 2u);
  ASSERT_EQ(q.projected.size(), 1u);
  EXPECT_EQ(q.projected[0].name, "p");
  EXPECT_EQ(std::get<rdf::Term>(q.patterns[1].predicate), rdf::Term(crf("hasOutcome")));
}

TEST(ParseQuery, prefixesLiteralsAndKeywordA) {
  const auto q = parse_query(
      "# patients aged 67\n"
      "PREFIX crf: <http://ex.org/crf#>\n"
      "PREFIX xsd: <http://www.w3.org/2001/XMLSchema#>\n"
      "select ?p ?n where {\n"
      "  ?p a crf:Patient .\n"
      "  ?p crf:age \"67\"^^xsd:integer .\n"
      "  ?p crf:note \"say \\\"hi\\\"\"@EN .\n"
      "  ?p crf:name ?n .\n"
      "}\n");
  ASSERT_EQ(q.patterns.size(), 4u);
  EXPECT_EQ(std::get<rdf::Term>(q.patterns[0].predicate), rdf::Term(rdf::vocab::rdf_type()));
  EXPECT_EQ(std::get<rdf::Term>(q.patterns[1].object),
            rdf::Term(Literal::typed("67", rdf::vocab::xsd("integer"))));
  EXPECT_EQ(std::get<rdf::Term>(q.patterns[2].object),
            rdf::Term(Literal::tagged("say \"hi\"", "en")));
}

TEST(ParseQuery, unknownPrefix) {
  try {
    parse_query("SELECT ?x WHERE { ?x foo:bar ?y }");
    FAIL();
  } catch (const QueryError& e) {
    EXPECT_EQ(e.name(), "UnknownPrefix");
    EXPECT_EQ(e.offset(), 21u);
  }
}

TEST(ParseQuery, emptyProjection) {
  try {
    parse_query("SELECT WHERE { ?x ?p ?o }");
    FAIL();
  } catch (const QueryError& e) {
    EXPECT_EQ(e.name(), "EmptyProjection");
  }
}

TEST(ParseQuery, errors) {
  auto name_of = [](const char* text) {
    try {
      parse_query(text);
    } catch (const QueryError& e) {
      return e.name();
    }
    return std::string("none");
  };
  EXPECT_EQ(name_of("SELECT ?z WHERE { ?x ?p ?o }"), "UnboundProjection");
  EXPECT_EQ(name_of("SELECT ?x WHERE { ?x ?p }"), "SyntaxError");
  EXPECT_EQ(name_of("SELECT ?x WHERE { ?x ?p ?o"), "SyntaxError");
  EXPECT_EQ(name_of("SELECT ?x { ?x ?p ?o }"), "SyntaxError");
  EXPECT_EQ(name_of("SELECT ?x WHERE { \"lit\" ?p ?x }"), "SyntaxError");
  EXPECT_EQ(name_of("SELECT ?x WHERE { ?x <rel> ?o }"), "SyntaxError");
  EXPECT_EQ(name_of("SELECT ?x WHERE { ?x ?p ?o } extra"), "SyntaxError");
  EXPECT_EQ(name_of("SELECT ?x WHERE { ?x ?p ?o . }"), "none");
  try {
    parse_query("SELECT ?x WHERE { ?x ?p ?o ?q }");
    FAIL();
  } catch (const QueryError& e) {
    EXPECT_EQ(e.offset(), 27u);
  }
}

// _____________________________________________________________________________
TEST(Evaluate, twoPatternJoinMatchesBruteForce) {
  rdf::Graph g = five_triples();
  g.insert(Triple(patient(2), crf("hasOutcome"), crf("Death")));
  ASSERT_EQ(g.size(), 6u);
  const auto q = parse_query(
      "PREFIX crf: <http://ex.org/crf#>\n"
      "SELECT ?p ?o WHERE { ?p a crf:Patient . ?p crf:hasOutcome ?o }");
  const auto got = evaluate(q, TripleStore(g));
  const auto want = test_support::brute_force_evaluate(q, g);
  EXPECT_EQ(got.rows, want.rows);
  ASSERT_EQ(got.rows.size(), 2u);
  EXPECT_EQ(got.rows[0][1], rdf::Term(crf("DischargedAlive")));
}

TEST(Evaluate, emptyStore) {
  const auto q = parse_query("SELECT ?s WHERE { ?s ?p ?o }");
  EXPECT_TRUE(evaluate(q, TripleStore{}).rows.empty());
}

TEST(Evaluate, cartesianProduct) {
  const auto g = five_triples();
  const auto q = parse_query(
      "PREFIX crf: <http://ex.org/crf#>\n"
      "SELECT ?a ?b WHERE { ?a a crf:Patient . ?b crf:hasOutcome ?o }");
  const auto got = evaluate(q, TripleStore(g));
  EXPECT_EQ(got.rows, test_support::brute_force_evaluate(q, g).rows);
  EXPECT_EQ(got.rows.size(), 2u * 1u);
}

TEST(Evaluate, rowsAreDistinctAndSorted) {
  const auto g = five_triples();
  const auto q = parse_query("SELECT ?p WHERE { ?s ?p ?o }");
  const auto got = evaluate(q, TripleStore(g));
  EXPECT_EQ(got.rows.size(), 3u);
  EXPECT_TRUE(std::is_sorted(got.rows.begin(), got.rows.end(), [](auto& a, auto& b) {
    return rdf::to_ntriples(a[0]) < rdf::to_ntriples(b[0]);
  }));
}

TEST(Evaluate, randomizedOracleEquivalence) {
  std::mt19937 rng(4242);
  for (int round = 0; round < 150; ++round) {
    const auto g = test_support::small_random_graph(rng, 30);
    const auto q = test_support::random_query(rng, g);
    const auto want = test_support::brute_force_evaluate(q, g);
    EXPECT_EQ(evaluate(q, TripleStore(g)).rows, want.rows) << "round " << round;
  }
}

TEST(Evaluate, monotoneUnderInsertion) {
  std::mt19937 rng(5);
  for (int round = 0; round < 50; ++round) {
    auto g = test_support::small_random_graph(rng, 20);
    const auto q = test_support::random_query(rng, g);
    TripleStore store(g);
    const auto before = evaluate(q, store);
    const auto extra = test_support::small_random_graph(rng, 5);
    for (const auto& t : extra) store.insert(t);
    const auto after = evaluate(q, store);
    for (const auto& row : before.rows) {
      EXPECT_NE(std::find(after.rows.begin(), after.rows.end(), row), after.rows.end());
    }
  }
}

TEST(ResultTable, tsv) {
  const auto g = five_triples();
  const auto q = parse_query(
      "PREFIX crf: <http://ex.org/crf#>\nSELECT ?p ?a WHERE { ?p crf:age ?a }");
  EXPECT_EQ(evaluate(q, TripleStore(g)).to_tsv(),
            "?p\t?a\n<http://ex.org/v/patient/2>\t"
            "\"67\"^^<http://www.w3.org/2001/XMLSchema#integer>\n");
}
