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

#include "fairify/store/query.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "fairify/rdf/ntriples.hpp"

namespace fairify::store {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_local_char(char c) {
  return is_name_char(c) || c == '-' || c == '.' || c == '%' ||
         static_cast<unsigned char>(c) >= 0x80;
}

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : text_(text) {}

  Query parse() {
    Query q;
    skip_ws();
    while (keyword("PREFIX")) {
      skip_ws();
      const std::size_t at = pos_;
      std::string label = read_while([](char c) { return is_name_char(c) || c == '-'; });
      if (peek() != ':' || !rdf::is_prefix_label(label)) {
        fail("SyntaxError", at, "expected prefix label followed by ':'");
      }
      ++pos_;
      skip_ws();
      if (peek() != '<') fail("SyntaxError", pos_, "expected <iri> in PREFIX");
      q.prefixes.bind(label, iri_ref());
      skip_ws();
    }
    prefixes_ = &q.prefixes;

    if (!keyword("SELECT")) fail("SyntaxError", pos_, "expected SELECT");
    skip_ws();
    while (peek() == '?' || peek() == '$') {
      q.projected.push_back(variable());
      skip_ws();
    }
    if (q.projected.empty()) {
      fail("EmptyProjection", pos_, "SELECT lists no variables");
    }
    if (!keyword("WHERE")) fail("SyntaxError", pos_, "expected WHERE");
    skip_ws();
    if (peek() != '{') fail("SyntaxError", pos_, "expected '{'");
    ++pos_;
    skip_ws();
    q.patterns.push_back(pattern());
    skip_ws();
    while (peek() == '.') {
      ++pos_;
      skip_ws();
      if (peek() == '}') break;
      q.patterns.push_back(pattern());
      skip_ws();
    }
    if (peek() != '}') fail("SyntaxError", pos_, "expected '.' or '}'");
    ++pos_;
    skip_ws();
    if (pos_ != text_.size()) {
      fail("SyntaxError", pos_, "unexpected content after '}'");
    }

    for (std::size_t i = 0; i < q.projected.size(); ++i) {
      if (!mentioned(q, q.projected[i])) {
        fail("UnboundProjection", projected_at_[i],
             "?" + q.projected[i].name + " does not occur in any pattern");
      }
    }
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& name, std::size_t at,
                         const std::string& message) const {
    throw QueryError(name, at, message);
  }

  static bool mentioned(const Query& q, const Variable& v) {
    auto is_v = [&](const PatternTerm& t) {
      const auto* var = std::get_if<Variable>(&t);
      return var != nullptr && *var == v;
    };
    return std::any_of(q.patterns.begin(), q.patterns.end(),
                       [&](const TriplePattern& p) {
                         return is_v(p.subject) || is_v(p.predicate) ||
                                is_v(p.object);
                       });
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  template <typename Pred>
  std::string read_while(Pred pred) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool keyword(std::string_view kw) {
    if (pos_ + kw.size() > text_.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != kw[i]) {
        return false;
      }
    }
    if (is_name_char(peek(kw.size()))) return false;
    pos_ += kw.size();
    return true;
  }

  Variable variable() {
    const std::size_t at = pos_;
    ++pos_;
    std::string name = read_while(is_name_char);
    if (name.empty()) fail("SyntaxError", at, "empty variable name");
    if (!parsing_patterns_) projected_at_.push_back(at);
    return Variable{std::move(name)};
  }

  rdf::Iri iri_ref() {
    const std::size_t at = pos_;
    ++pos_;
    const auto end = text_.find('>', pos_);
    if (end == std::string_view::npos) fail("SyntaxError", at, "unterminated IRI");
    const auto value = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    try {
      return rdf::validate_iri(value);
    } catch (const rdf::IriError& e) {
      fail("SyntaxError", at, e.what());
    }
  }

  rdf::Iri prefixed_name() {
    const std::size_t at = pos_;
    std::string label = read_while([](char c) { return is_name_char(c) || c == '-'; });
    if (peek() != ':') fail("SyntaxError", at, "expected a term");
    ++pos_;
    std::string local = read_while(is_local_char);
    // A trailing '.' terminates the pattern, not the name.
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --pos_;
    }
    if (prefixes_->find(label) == nullptr) {
      fail("UnknownPrefix", at, "undeclared prefix '" + label + "'");
    }
    try {
      return rdf::expand_curie(label + ":" + local, *prefixes_);
    } catch (const Error& e) {
      fail("SyntaxError", at, e.what());
    }
  }

  rdf::Literal literal() {
    const std::size_t at = pos_;
    ++pos_;
    std::string lexical;
    while (true) {
      if (pos_ >= text_.size()) fail("SyntaxError", at, "unterminated string");
      const char c = text_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        lexical.push_back(c);
        continue;
      }
      switch (peek()) {
        case 'n': lexical.push_back('\n'); break;
        case 'r': lexical.push_back('\r'); break;
        case 't': lexical.push_back('\t'); break;
        case '"': lexical.push_back('"'); break;
        case '\\': lexical.push_back('\\'); break;
        default: fail("SyntaxError", pos_ - 1, "bad escape in string");
      }
      ++pos_;
    }
    try {
      if (peek() == '^' && peek(1) == '^') {
        pos_ += 2;
        rdf::Iri dt = peek() == '<' ? iri_ref() : prefixed_name();
        return rdf::Literal::typed(std::move(lexical), std::move(dt));
      }
      if (peek() == '@') {
        ++pos_;
        std::string tag = read_while([](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '-';
        });
        return rdf::Literal::tagged(std::move(lexical), tag);
      }
    } catch (const QueryError&) {
      throw;
    } catch (const Error& e) {
      fail("SyntaxError", at, e.what());
    }
    return rdf::Literal::plain(std::move(lexical));
  }

  PatternTerm term(int position) {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '?' || c == '$') return variable();
    if (c == '<') return rdf::Term(iri_ref());
    if (c == '"') {
      if (position != 2) fail("SyntaxError", at, "literal allowed only as object");
      return rdf::Term(literal());
    }
    if (position == 1 && c == 'a' && !is_local_char(peek(1)) && peek(1) != ':') {
      ++pos_;
      return rdf::Term(rdf::vocab::rdf_type());
    }
    if (c == ':' || std::isalpha(static_cast<unsigned char>(c))) {
      return rdf::Term(prefixed_name());
    }
    fail("SyntaxError", at, "expected a term");
  }

  TriplePattern pattern() {
    parsing_patterns_ = true;
    PatternTerm s = term(0);
    skip_ws();
    PatternTerm p = term(1);
    skip_ws();
    PatternTerm o = term(2);
    return TriplePattern{std::move(s), std::move(p), std::move(o)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const rdf::PrefixMap* prefixes_ = nullptr;
  bool parsing_patterns_ = false;
  std::vector<std::size_t> projected_at_;
};

using Binding = std::map<std::string, rdf::Term, std::less<>>;

PatternTerm substitute(const PatternTerm& t, const Binding& b) {
  if (const auto* v = std::get_if<Variable>(&t)) {
    auto it = b.find(v->name);
    if (it != b.end()) return it->second;
  }
  return t;
}

void bind_if_variable(const PatternTerm& t, const rdf::Term& value, Binding& b) {
  if (const auto* v = std::get_if<Variable>(&t)) b.emplace(v->name, value);
}

}  // namespace

Query parse_query(std::string_view text) { return QueryParser(text).parse(); }

ResultTable evaluate(const Query& query, const TripleStore& store) {
  auto reader = store.reader();
  std::vector<Binding> solutions{Binding{}};
  for (const auto& pattern : query.patterns) {
    std::vector<Binding> next;
    for (const auto& b : solutions) {
      const TriplePattern bound{substitute(pattern.subject, b),
                                substitute(pattern.predicate, b),
                                substitute(pattern.object, b)};
      for (const auto& t : reader.match(bound)) {
        Binding extended = b;
        bind_if_variable(bound.subject, t.subject, extended);
        bind_if_variable(bound.predicate, rdf::Term(t.predicate), extended);
        bind_if_variable(bound.object, t.object, extended);
        next.push_back(std::move(extended));
      }
    }
    solutions = std::move(next);
    if (solutions.empty()) break;
  }

  std::map<std::string, std::vector<rdf::Term>> rows;
  for (const auto& b : solutions) {
    std::vector<rdf::Term> row;
    std::string key;
    for (const auto& v : query.projected) {
      const rdf::Term& value = b.at(v.name);
      if (!key.empty()) key.push_back('\t');
      key += rdf::to_ntriples(value);
      row.push_back(value);
    }
    rows.emplace(std::move(key), std::move(row));
  }

  ResultTable table;
  table.header = query.projected;
  table.rows.reserve(rows.size());
  for (auto& [key, row] : rows) table.rows.push_back(std::move(row));
  return table;
}

std::string ResultTable::to_tsv() const {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i != 0) out.push_back('\t');
    out += "?" + header[i].name;
  }
  out.push_back('\n');
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out.push_back('\t');
      out += rdf::to_ntriples(row[i]);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace fairify::store
