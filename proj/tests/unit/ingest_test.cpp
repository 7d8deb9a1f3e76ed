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

#include "fairify/ingest/schema.hpp"

using namespace fairify;
using namespace fairify::ingest;

namespace {

std::string error_name(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.name();
  }
  return "none";
}

ColumnSchema schema_of(const char* json) { return parse_schema(json); }

}  // namespace

// _____________________________________________________________________________
TEST(ParseCsv, quotedDelimiter) {
  const auto ds = parse_csv("x,y,z\na,\"b,c\",d\n");
  ASSERT_EQ(ds.rows.size(), 1u);
  ASSERT_EQ(ds.rows[0].size(), 3u);
  EXPECT_EQ(ds.rows[0][1], "b,c");
}

TEST(ParseCsv, embeddedNewline) {
  const auto ds = parse_csv("id,note\n1,\"line one\nline two\"\n2,plain\n");
  ASSERT_EQ(ds.rows.size(), 2u);
  EXPECT_EQ(ds.rows[0][1], "line one\nline two");
  EXPECT_EQ(ds.rows[1][0], "2");
}

TEST(ParseCsv, doubledQuote) {
  const auto ds = parse_csv("a\n\"say \"\"hi\"\"\"\n");
  ASSERT_EQ(ds.rows.size(), 1u);
  EXPECT_EQ(ds.rows[0][0], "say \"hi\"");
}

TEST(ParseCsv, crlfLineEndings) {
  const auto ds = parse_csv("a,b\r\n1,2\r\n3,\"x\r\ny\"\r\n");
  ASSERT_EQ(ds.columns, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(ds.rows.size(), 2u);
  EXPECT_EQ(ds.rows[0][1], "2");
  EXPECT_EQ(ds.rows[1][1], "x\r\ny");
}

TEST(ParseCsv, arityMismatchReportsRow) {
  try {
    parse_csv("a,b,c,d,e\n1,2,3,4,5\n1,2,3,4\n");
    FAIL();
  } catch (const CsvError& e) {
    EXPECT_EQ(e.name(), "ArityMismatch");
    EXPECT_EQ(e.row(), 2u);
  }
}

TEST(ParseCsv, unterminatedQuote) {
  try {
    parse_csv("a,b\n1,2\n3,\"open\n");
    FAIL();
  } catch (const CsvError& e) {
    EXPECT_EQ(e.name(), "UnterminatedQuote");
    EXPECT_EQ(e.row(), 2u);
  }
}

TEST(ParseCsv, duplicateColumnAndUtf8) {
  EXPECT_EQ(error_name([] { parse_csv("a,b,a\n1,2,3\n"); }), "DuplicateColumn");
  EXPECT_EQ(error_name([] { parse_csv("a\n\xff\n"); }), "InvalidUtf8");
  EXPECT_EQ(error_name([] { parse_csv("a\n\xc3\n"); }), "InvalidUtf8");
  EXPECT_EQ(parse_csv("a\nação\n").rows[0][0], "ação");
}

TEST(ParseCsv, dialectAndEdges) {
  CsvDialect semi{';', '\'', false};
  const auto ds = parse_csv("1;'a;b'\n2;c", semi);
  EXPECT_EQ(ds.columns, (std::vector<std::string>{"c1", "c2"}));
  ASSERT_EQ(ds.rows.size(), 2u);
  EXPECT_EQ(ds.rows[0][1], "a;b");
  EXPECT_EQ(ds.rows[1][1], "c");

  EXPECT_TRUE(parse_csv("").rows.empty());
  const auto trailing = parse_csv("a,b\n1,\n\n");
  ASSERT_EQ(trailing.rows.size(), 1u);
  EXPECT_EQ(trailing.rows[0][1], "");
  EXPECT_EQ(parse_csv("a,b\n\"\",x\n").rows[0][0], "");
}

TEST(ParseCsv, digestStability) {
  const std::string bytes = "a,b\n1,2\n";
  EXPECT_EQ(parse_csv(bytes).source.digest, parse_csv(bytes).source.digest);
  EXPECT_NE(parse_csv(bytes).source.digest, parse_csv("a,b\n1,3\n").source.digest);
  EXPECT_EQ(parse_csv(bytes).source.digest.size(), 64u);
}

// _____________________________________________________________________________
TEST(ParseSchema, fieldsAndViolations) {
  const auto s = schema_of(R"({"columns":[
      {"name":"id","type":"string","nullable":false},
      {"name":"crp","type":"decimal","nullable":true,"null_markers":["","NA"],"crf_module":"followup"}]})");
  ASSERT_EQ(s.columns.size(), 2u);
  EXPECT_EQ(s.columns[1].null_markers, (std::vector<std::string>{"", "NA"}));
  EXPECT_EQ(s.columns[1].crf_module, CrfModule::kFollowUp);
  EXPECT_EQ(s.columns[0].null_markers, std::vector<std::string>{""});

  try {
    schema_of(R"({"columns":[{"name":"id","nullable":false}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "SchemaViolation");
    EXPECT_NE(std::string(e.what()).find("/columns/0/type"), std::string::npos);
  }
  EXPECT_EQ(error_name([] { schema_of(R"({"columns":[{"name":"a","type":"float","nullable":true}]})"); }),
            "SchemaViolation");
  EXPECT_EQ(error_name([] { schema_of("[]"); }), "SchemaViolation");
  EXPECT_EQ(error_name([] { schema_of("{"); }), "SchemaViolation");
}

// _____________________________________________________________________________
TEST(ApplySchema, typesAndErrors) {
  const auto ds = parse_csv(
      "id,age,extra,ok,day,crp,at\n"
      "p1,042,zzz,TRUE,2021-02-28,007.50,2021-03-01T10:00:00Z\n"
      "p2,abc,zzz,0,2021-02-30,-0.0,2021-03-01\n"
      "p3,,zzz,,,,\n");
  const auto s = schema_of(R"({"columns":[
      {"name":"id","type":"string","nullable":false},
      {"name":"age","type":"integer","nullable":true},
      {"name":"ok","type":"boolean","nullable":true},
      {"name":"day","type":"date","nullable":true},
      {"name":"crp","type":"decimal","nullable":true},
      {"name":"at","type":"datetime","nullable":false}]})");
  const auto typed = apply_schema(ds, s);

  // Subset law: "extra" is dropped.
  ASSERT_EQ(typed.schema.columns.size(), 6u);
  ASSERT_EQ(typed.rows.size(), 3u);
  for (const auto& row : typed.rows) EXPECT_EQ(row.size(), 6u);

  const auto& r1 = typed.rows[0];
  EXPECT_EQ(std::get<std::int64_t>(*r1[1]), 42);
  EXPECT_EQ(canonical_lexical(*r1[1]), "42");
  EXPECT_EQ(canonical_lexical(*r1[2]), "true");
  EXPECT_EQ(canonical_lexical(*r1[3]), "2021-02-28");
  EXPECT_EQ(canonical_lexical(*r1[4]), "7.5");
  EXPECT_EQ(canonical_lexical(*r1[5]), "2021-03-01T10:00:00Z");

  // Error isolation: the bad integer does not suppress the boolean.
  const auto& r2 = typed.rows[1];
  EXPECT_FALSE(r2[1].has_value());
  EXPECT_EQ(canonical_lexical(*r2[2]), "false");
  EXPECT_FALSE(r2[3].has_value());
  EXPECT_EQ(canonical_lexical(*r2[4]), "0.0");
  EXPECT_FALSE(r2[5].has_value());

  const auto& r3 = typed.rows[2];
  EXPECT_FALSE(r3[1].has_value());

  std::vector<std::tuple<std::size_t, std::string, std::string>> errors;
  for (const auto& e : typed.row_errors) errors.emplace_back(e.row, e.column, e.reason);
  EXPECT_EQ(errors, (decltype(errors){
                        {2, "age", "invalid integer"},
                        {2, "day", "invalid date"},
                        {2, "at", "invalid datetime"},
                        {3, "at", "null in non-nullable column"}}));
}

TEST(ApplySchema, unknownColumn) {
  const auto ds = parse_csv("a\n1\n");
  const auto s = schema_of(R"({"columns":[{"name":"b","type":"string","nullable":true}]})");
  EXPECT_EQ(error_name([&] { apply_schema(ds, s); }), "UnknownColumn");
}

TEST(ApplySchema, customNullMarkers) {
  const auto ds = parse_csv("v\nNA\n\n5\n");
  const auto s = schema_of(
      R"({"columns":[{"name":"v","type":"integer","nullable":true,"null_markers":["NA"]}]})");
  const auto typed = apply_schema(ds, s);
  ASSERT_EQ(typed.rows.size(), 2u);
  EXPECT_FALSE(typed.rows[0][0].has_value());
  EXPECT_TRUE(typed.row_errors.empty());
  EXPECT_EQ(canonical_lexical(*typed.rows[1][0]), "5");
}

TEST(CanonicalLexical, integersAndDecimals) {
  EXPECT_EQ(canonical_lexical(CellValue(std::int64_t{-5})), "-5");
  const auto s = schema_of(R"({"columns":[{"name":"v","type":"integer","nullable":false},
                                           {"name":"d","type":"decimal","nullable":false}]})");
  const auto typed = apply_schema(parse_csv("v,d\n+0007,.5\n-0,12.\n"), s);
  EXPECT_EQ(canonical_lexical(*typed.rows[0][0]), "7");
  EXPECT_EQ(canonical_lexical(*typed.rows[0][1]), "0.5");
  EXPECT_EQ(canonical_lexical(*typed.rows[1][0]), "0");
  EXPECT_EQ(canonical_lexical(*typed.rows[1][1]), "12.0");
}
