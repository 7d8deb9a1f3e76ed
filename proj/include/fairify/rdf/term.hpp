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

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "fairify/error.hpp"

namespace fairify::rdf {

// RelativeIri / IllegalChar raised by validate_iri. `position` is the 1-based
// character offset of the offending byte (0 for RelativeIri).
class IriError : public Error {
 public:
  IriError(std::string name, std::size_t position, const std::string& message)
      : Error("rdf", std::move(name), message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An absolute IRI. Only constructible through validation, so every Iri value
// in the program satisfies the syntactic invariants.
class Iri {
 public:
  static Iri parse(std::string_view text);

  const std::string& str() const noexcept { return value_; }

  auto operator<=>(const Iri&) const = default;
  bool operator==(const Iri&) const = default;

 private:
  explicit Iri(std::string value) : value_(std::move(value)) {}
  std::string value_;
};

// Returns the Iri iff `text` has a scheme and no forbidden characters.
// The value is kept verbatim.
Iri validate_iri(std::string_view text);

class Literal {
 public:
  // xsd:string literal.
  static Literal plain(std::string lexical);
  // Typed literal; rdf:langString is rejected (use tagged()).
  static Literal typed(std::string lexical, Iri datatype);
  // Language-tagged literal; the tag is validated and lowercased.
  static Literal tagged(std::string lexical, std::string_view language);

  const std::string& lexical() const noexcept { return lexical_; }
  const Iri& datatype() const noexcept { return datatype_; }
  // Empty unless the literal is language-tagged.
  const std::string& language() const noexcept { return language_; }

  auto operator<=>(const Literal&) const = default;
  bool operator==(const Literal&) const = default;

 private:
  Literal(std::string lexical, Iri datatype, std::string language)
      : lexical_(std::move(lexical)),
        datatype_(std::move(datatype)),
        language_(std::move(language)) {}

  std::string lexical_;
  Iri datatype_;
  std::string language_;
};

using Term = std::variant<Iri, Literal>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_literal(const Term& t) {
  return std::holds_alternative<Literal>(t);
}

// Skolem IRIs stand in for blank nodes: base + "/.well-known/skolem/" + local.
Iri mint_skolem(const Iri& base, std::string_view local);
bool is_skolem(const Iri& iri);

struct Triple {
  Triple(Term subject, Iri predicate, Term object);

  Term subject;
  Iri predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

struct Quad {
  Triple triple;
  Iri graph;

  auto operator<=>(const Quad&) const = default;
  bool operator==(const Quad&) const = default;
};

class PrefixMap {
 public:
  // Throws rdf.BadPrefixLabel when `label` is not [A-Za-z][A-Za-z0-9_-]* or "".
  void bind(const std::string& label, Iri ns);
  const Iri* find(std::string_view label) const;
  const std::map<std::string, Iri, std::less<>>& bindings() const {
    return bindings_;
  }
  bool empty() const { return bindings_.empty(); }

 private:
  std::map<std::string, Iri, std::less<>> bindings_;
};

bool is_prefix_label(std::string_view label);

// "label:local" -> namespace ++ local, then validate_iri.
Iri expand_curie(std::string_view name, const PrefixMap& prefixes);

// Keeps RFC 3986 unreserved characters; everything else becomes %XX
// (uppercase hex) of its UTF-8 bytes.
std::string percent_encode(std::string_view text);

// base ++ "/" ++ path with exactly one slash at the seam.
Iri join_iri(const Iri& base, std::string_view path);

namespace vocab {
inline constexpr std::string_view kRdf =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

Iri rdf(std::string_view local);
Iri rdfs(std::string_view local);
Iri xsd(std::string_view local);
Iri rdf_type();
Iri xsd_string();
Iri rdf_lang_string();
}  // namespace vocab

}  // namespace fairify::rdf
