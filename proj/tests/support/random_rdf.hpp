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

// Random RDF generators shared by the property tests and the acceptance suite.

#include <random>
#include <string>
#include <vector>

#include "fairify/rdf/graph.hpp"

namespace fairify::test_support {

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Literal text biased towards characters that stress the escaping rules.
inline std::string adversarial_text(std::mt19937& rng) {
  static const std::vector<std::string> kPieces = {
      "\"", "\\", "\n", "\r", "\t", "\\n", "\\u0041", "'", "#", " . ", "<x>",
      "_:b0", "\x01", "\x7f", "é", "中文", "😀", "a", "patient", "@en", "^^"};
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<std::size_t> pick(0, kPieces.size() - 1);
  std::uniform_int_distribution<int> coin(0, 4);
  std::uniform_int_distribution<std::uint32_t> bmp(0x20, 0xFFFD);
  std::string out;
  for (int i = len(rng); i > 0; --i) {
    if (coin(rng) == 0) {
      char32_t cp = bmp(rng);
      if (cp >= 0xD800 && cp <= 0xDFFF) cp = 0x263A;
      append_utf8(out, cp);
    } else {
      out += kPieces[pick(rng)];
    }
  }
  return out;
}

inline rdf::Iri random_iri(std::mt19937& rng, int vocabulary) {
  std::uniform_int_distribution<int> n(0, vocabulary - 1);
  static const std::vector<std::string> kBases = {
      "http://ex.org/a/", "https://ex.org/b#", "urn:x:", "http://ex.org/é/"};
  std::uniform_int_distribution<std::size_t> b(0, kBases.size() - 1);
  return rdf::Iri::parse(kBases[b(rng)] + "r" + std::to_string(n(rng)));
}

inline rdf::Term random_object(std::mt19937& rng, int vocabulary) {
  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng)) {
    case 0:
      return random_iri(rng, vocabulary);
    case 1:
      return rdf::Literal::plain(adversarial_text(rng));
    case 2: {
      static const std::vector<std::string> kTags = {"en", "pt-BR", "de-ch-1996"};
      std::uniform_int_distribution<std::size_t> t(0, kTags.size() - 1);
      return rdf::Literal::tagged(adversarial_text(rng), kTags[t(rng)]);
    }
    default:
      return rdf::Literal::typed(adversarial_text(rng),
                                 rdf::vocab::xsd(std::uniform_int_distribution<int>(0, 1)(rng)
                                                     ? "integer"
                                                     : "date"));
  }
}

inline rdf::Graph random_graph(std::mt19937& rng, int max_triples,
                               int vocabulary = 12) {
  std::uniform_int_distribution<int> count(0, max_triples);
  rdf::Graph g;
  for (int i = count(rng); i > 0; --i) {
    g.insert(rdf::Triple(random_iri(rng, vocabulary),
                         random_iri(rng, vocabulary / 3 + 1),
                         random_object(rng, vocabulary)));
  }
  return g;
}

}  // namespace fairify::test_support
