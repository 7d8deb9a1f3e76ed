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

#include "fairify/rdf/term.hpp"

#include <algorithm>
#include <cctype>

namespace fairify::rdf {

namespace {

bool is_alpha(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool forbidden_in_iri(unsigned char c) {
  if (c < 0x20 || c == 0x7F) return true;
  switch (c) {
    case ' ':
    case '<':
    case '>':
    case '"':
    case '{':
    case '}':
    case '|':
    case '^':
    case '`':
    case '\\':
      return true;
    default:
      return false;
  }
}

// BCP-47 shape: [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*.
bool is_language_tag(std::string_view tag) {
  std::size_t i = 0;
  const std::size_t n = tag.size();
  std::size_t run = 0;
  while (i < n && is_alpha(tag[i])) ++i, ++run;
  if (run == 0) return false;
  while (i < n) {
    if (tag[i] != '-') return false;
    ++i;
    run = 0;
    while (i < n && (is_alpha(tag[i]) || is_digit(tag[i]))) ++i, ++run;
    if (run == 0) return false;
  }
  return true;
}

constexpr std::string_view kSkolemPath = "/.well-known/skolem/";

void check_iri(std::string_view text) {
  // scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." ) ":"
  std::size_t i = 0;
  if (text.empty() || !is_alpha(text[0])) {
    throw IriError("RelativeIri", 0,
                   "IRI has no scheme: '" + std::string(text) + "'");
  }
  while (i < text.size() && (is_alpha(text[i]) || is_digit(text[i]) ||
                             text[i] == '+' || text[i] == '-' ||
                             text[i] == '.')) {
    ++i;
  }
  if (i == text.size() || text[i] != ':') {
    throw IriError("RelativeIri", 0,
                   "IRI has no scheme: '" + std::string(text) + "'");
  }
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (forbidden_in_iri(static_cast<unsigned char>(text[k]))) {
      throw IriError("IllegalChar", k + 1,
                     "illegal character in IRI at offset " +
                         std::to_string(k + 1) + ": '" + std::string(text) +
                         "'");
    }
  }
}

}  // namespace

Iri Iri::parse(std::string_view text) {
  check_iri(text);
  return Iri(std::string(text));
}

Iri validate_iri(std::string_view text) { return Iri::parse(text); }

Literal Literal::plain(std::string lexical) {
  return Literal(std::move(lexical), vocab::xsd_string(), {});
}

Literal Literal::typed(std::string lexical, Iri datatype) {
  if (datatype == vocab::rdf_lang_string()) {
    throw Error("rdf", "BadLiteral",
                "rdf:langString literal requires a language tag");
  }
  return Literal(std::move(lexical), std::move(datatype), {});
}

Literal Literal::tagged(std::string lexical, std::string_view language) {
  if (!is_language_tag(language)) {
    throw Error("rdf", "BadLiteral",
                "invalid language tag '" + std::string(language) + "'");
  }
  std::string lower(language);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return Literal(std::move(lexical), vocab::rdf_lang_string(),
                 std::move(lower));
}

Iri mint_skolem(const Iri& base, std::string_view local) {
  return join_iri(base, std::string(kSkolemPath.substr(1)) + std::string(local));
}

bool is_skolem(const Iri& iri) {
  return iri.str().find(kSkolemPath) != std::string::npos;
}

Triple::Triple(Term s, Iri p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (is_literal(subject)) {
    throw Error("rdf", "BadTriple", "subject must not be a literal");
  }
  if (is_skolem(predicate)) {
    throw Error("rdf", "BadTriple",
                "predicate must not be a Skolem IRI: " + predicate.str());
  }
}

bool is_prefix_label(std::string_view label) {
  if (label.empty()) return true;
  if (!is_alpha(label[0])) return false;
  return std::all_of(label.begin() + 1, label.end(), [](char c) {
    return is_alpha(c) || is_digit(c) || c == '_' || c == '-';
  });
}

void PrefixMap::bind(const std::string& label, Iri ns) {
  if (!is_prefix_label(label)) {
    throw Error("rdf", "BadPrefixLabel", "invalid prefix label '" + label + "'");
  }
  bindings_.insert_or_assign(label, std::move(ns));
}

const Iri* PrefixMap::find(std::string_view label) const {
  auto it = bindings_.find(label);
  return it == bindings_.end() ? nullptr : &it->second;
}

Iri expand_curie(std::string_view name, const PrefixMap& prefixes) {
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) {
    throw Error("rdf", "NotACurie",
                "'" + std::string(name) + "' has no prefix separator");
  }
  const auto label = name.substr(0, colon);
  const Iri* ns = prefixes.find(label);
  if (ns == nullptr) {
    throw Error("rdf", "UnknownPrefix",
                "unknown prefix '" + std::string(label) + "'");
  }
  return validate_iri(ns->str() + std::string(name.substr(colon + 1)));
}

std::string percent_encode(std::string_view text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(text.size());
  for (unsigned char c : text) {
    if (is_alpha(static_cast<char>(c)) || is_digit(static_cast<char>(c)) ||
        c == '-' || c == '.' || c == '_' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0x0F]);
    }
  }
  return out;
}

Iri join_iri(const Iri& base, std::string_view path) {
  std::string out = base.str();
  while (!out.empty() && out.back() == '/') out.pop_back();
  while (!path.empty() && path.front() == '/') path.remove_prefix(1);
  out.push_back('/');
  out.append(path);
  return validate_iri(out);
}

namespace vocab {
Iri rdf(std::string_view local) { return Iri::parse(std::string(kRdf) + std::string(local)); }
Iri rdfs(std::string_view local) { return Iri::parse(std::string(kRdfs) + std::string(local)); }
Iri xsd(std::string_view local) { return Iri::parse(std::string(kXsd) + std::string(local)); }
Iri rdf_type() {
  static const Iri iri = rdf("type");
  return iri;
}
Iri xsd_string() {
  static const Iri iri = xsd("string");
  return iri;
}
Iri rdf_lang_string() {
  static const Iri iri = rdf("langString");
  return iri;
}
}  // namespace vocab

}  // namespace fairify::rdf
