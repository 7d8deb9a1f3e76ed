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

#include "fairify/ingest/csv.hpp"

#include <set>

#include "fairify/digest.hpp"

namespace fairify::ingest {

namespace {

// Offset of the first byte that is not part of well-formed UTF-8, or npos.
std::size_t invalid_utf8_at(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    char32_t min = 0;
    char32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2, min = 0x80, cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3, min = 0x800, cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4, min = 0x10000, cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > s.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
    i += len;
  }
  return std::string_view::npos;
}

}  // namespace

TabularDataset parse_csv(std::string_view bytes, const CsvDialect& dialect,
                         std::string path) {
  TabularDataset out;
  out.source = SourceInfo{std::move(path), sha256_hex(bytes)};

  if (const auto bad = invalid_utf8_at(bytes); bad != std::string_view::npos) {
    throw CsvError("InvalidUtf8", 0,
                   "input is not UTF-8 (byte offset " + std::to_string(bad) + ")");
  }
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);

  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_quoted = false;
  bool record_has_content = false;
  std::size_t quote_opened_in = 0;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_quoted = false;
  };
  auto end_record = [&] {
    if (record_has_content || !field.empty() || field_quoted) {
      end_field();
      records.push_back(std::move(record));
    }
    record.clear();
    field.clear();
    field_quoted = false;
    record_has_content = false;
  };

  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const char c = bytes[i];
    if (in_quotes) {
      if (c == dialect.quote) {
        if (i + 1 < bytes.size() && bytes[i + 1] == dialect.quote) {
          field.push_back(c);
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == dialect.quote && field.empty() && !field_quoted) {
      in_quotes = true;
      field_quoted = true;
      quote_opened_in = records.size();
    } else if (c == dialect.delimiter) {
      end_field();
      record_has_content = true;
    } else if (c == '\n') {
      end_record();
    } else if (c == '\r') {
      if (i + 1 < bytes.size() && bytes[i + 1] == '\n') ++i;
      end_record();
    } else {
      field.push_back(c);
    }
  }
  if (in_quotes) {
    const std::size_t row = dialect.header ? quote_opened_in : quote_opened_in + 1;
    throw CsvError("UnterminatedQuote", row,
                   "unterminated quoted field in record " + std::to_string(row));
  }
  end_record();

  std::size_t first_data = 0;
  if (dialect.header) {
    if (records.empty()) return out;
    out.columns = std::move(records.front());
    first_data = 1;
    std::set<std::string> seen;
    for (const auto& name : out.columns) {
      if (!seen.insert(name).second) {
        throw CsvError("DuplicateColumn", 0, "duplicate column '" + name + "'");
      }
    }
  } else if (!records.empty()) {
    for (std::size_t i = 1; i <= records.front().size(); ++i) {
      out.columns.push_back("c" + std::to_string(i));
    }
  }

  for (std::size_t r = first_data; r < records.size(); ++r) {
    const std::size_t row = r - first_data + 1;
    if (records[r].size() != out.columns.size()) {
      throw CsvError("ArityMismatch", row,
                     "record " + std::to_string(row) + " has " +
                         std::to_string(records[r].size()) + " cells, expected " +
                         std::to_string(out.columns.size()));
    }
    out.rows.push_back(std::move(records[r]));
  }
  return out;
}

TabularDataset read_csv(const std::filesystem::path& path,
                        const CsvDialect& dialect) {
  return parse_csv(read_file(path), dialect, path.string());
}

}  // namespace fairify::ingest
