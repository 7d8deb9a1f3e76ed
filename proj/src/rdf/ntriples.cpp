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

#include "fairify/rdf/ntriples.hpp"

#include <algorithm>
#include <vector>

namespace fairify::rdf {

std::string escape_literal(std::string_view lexical) {
  std::string out;
  out.reserve(lexical.size() + 2);
  for (char c : lexical) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string to_ntriples(const Term& term) {
  if (const auto* iri = std::get_if<Iri>(&term)) {
    return "<" + iri->str() + ">";
  }
  const auto& lit = std::get<Literal>(term);
  std::string out = "\"" + escape_literal(lit.lexical()) + "\"";
  if (!lit.language().empty()) {
    out += "@" + lit.language();
  } else if (lit.datatype() != vocab::xsd_string()) {
    out += "^^<" + lit.datatype().str() + ">";
  }
  return out;
}

std::string to_ntriples(const Triple& t) {
  return to_ntriples(t.subject) + " <" + t.predicate.str() + "> " +
         to_ntriples(t.object);
}

namespace {

std::string join_sorted(std::vector<std::string> lines) {
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += " .\n";
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
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

// Cursor over one statement line.
class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  // Returns false for blank and comment-only lines.
  bool at_statement() {
    skip_ws();
    return pos_ < line_.size() && line_[pos_] != '#';
  }

  Triple statement() {
    Term subject = subject_term();
    skip_ws();
    if (peek() != '<') fail("expected predicate IRI");
    Iri predicate = iri_ref();
    skip_ws();
    Term object = object_term();
    skip_ws();
    if (peek() != '.') fail("expected '.' at end of statement");
    ++pos_;
    skip_ws();
    if (pos_ < line_.size() && line_[pos_] != '#') {
      fail("unexpected content after '.'");
    }
    try {
      return Triple(std::move(subject), std::move(predicate), std::move(object));
    } catch (const Error& e) {
      fail(e.what());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& reason) const {
    throw SyntaxError(line_no_, reason);
  }

  char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) {
      ++pos_;
    }
  }

  Term subject_term() {
    if (peek() == '<') return iri_ref();
    if (line_.substr(pos_, 2) == "_:") fail("blank nodes are not permitted");
    fail("expected subject IRI");
  }

  Term object_term() {
    if (peek() == '<') return iri_ref();
    if (peek() == '"') return literal();
    if (line_.substr(pos_, 2) == "_:") fail("blank nodes are not permitted");
    fail("expected object term");
  }

  char32_t hex_escape(std::size_t digits) {
    if (pos_ + digits > line_.size()) fail("truncated \\u escape");
    char32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      const char c = line_[pos_ + i];
      cp <<= 4;
      if (c >= '0' && c <= '9') {
        cp |= static_cast<char32_t>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        cp |= static_cast<char32_t>(c - 'a' + 10);
      } else if (c >= 'A' && c <= 'F') {
        cp |= static_cast<char32_t>(c - 'A' + 10);
      } else {
        fail("bad hex digit in escape");
      }
    }
    pos_ += digits;
    if ((cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      fail("escape is not a Unicode scalar value");
    }
    return cp;
  }

  void uchar(std::string& out) {
    // pos_ is on the letter after the backslash.
    const char kind = line_[pos_++];
    append_utf8(out, hex_escape(kind == 'u' ? 4 : 8));
  }

  Iri iri_ref() {
    ++pos_;  // '<'
    std::string value;
    while (true) {
      if (pos_ >= line_.size()) fail("unterminated IRI");
      const char c = line_[pos_];
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        ++pos_;
        if (peek() != 'u' && peek() != 'U') fail("bad escape in IRI");
        uchar(value);
        continue;
      }
      value.push_back(c);
      ++pos_;
    }
    try {
      return validate_iri(value);
    } catch (const IriError& e) {
      fail(e.what());
    }
  }

  Literal literal() {
    ++pos_;  // '"'
    std::string lexical;
    while (true) {
      if (pos_ >= line_.size()) fail("unterminated literal");
      const char c = line_[pos_];
      if (c == '"') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        ++pos_;
        switch (peek()) {
          case 't': lexical.push_back('\t'); ++pos_; break;
          case 'b': lexical.push_back('\b'); ++pos_; break;
          case 'n': lexical.push_back('\n'); ++pos_; break;
          case 'r': lexical.push_back('\r'); ++pos_; break;
          case 'f': lexical.push_back('\f'); ++pos_; break;
          case '"': lexical.push_back('"'); ++pos_; break;
          case '\'': lexical.push_back('\''); ++pos_; break;
          case '\\': lexical.push_back('\\'); ++pos_; break;
          case 'u':
          case 'U': uchar(lexical); break;
          default: fail("bad escape in literal");
        }
        continue;
      }
      lexical.push_back(c);
      ++pos_;
    }
    if (line_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      if (peek() != '<') fail("expected datatype IRI after ^^");
      Iri datatype = iri_ref();
      try {
        return Literal::typed(std::move(lexical), std::move(datatype));
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    if (peek() == '@') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < line_.size() && line_[pos_] != ' ' && line_[pos_] != '\t' &&
             line_[pos_] != '.') {
        ++pos_;
      }
      // A '.' can only continue a tag as part of the statement terminator.
      try {
        return Literal::tagged(std::move(lexical),
                               line_.substr(start, pos_ - start));
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    return Literal::plain(std::move(lexical));
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_ntriples(const Graph& graph) {
  std::vector<std::string> lines;
  lines.reserve(graph.size());
  for (const auto& t : graph) lines.push_back(to_ntriples(t));
  return join_sorted(std::move(lines));
}

std::string serialize_nquads(const std::set<Quad>& quads) {
  std::vector<std::string> lines;
  lines.reserve(quads.size());
  for (const auto& q : quads) {
    lines.push_back(to_ntriples(q.triple) + " <" + q.graph.str() + ">");
  }
  return join_sorted(std::move(lines));
}

Graph parse_ntriples(std::string_view text) {
  Graph graph;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    LineParser parser(line, line_no);
    if (!parser.at_statement()) continue;
    graph.insert(parser.statement());
  }
  return graph;
}

}  // namespace fairify::rdf
