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

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fairify/error.hpp"

namespace fairify::ingest {

// ArityMismatch, UnterminatedQuote, DuplicateColumn or InvalidUtf8. `row` is
// the 1-based data record number (0 for the header record).
class CsvError : public Error {
 public:
  CsvError(std::string name, std::size_t row, const std::string& message)
      : Error("ingest", std::move(name), message), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

struct CsvDialect {
  char delimiter = ',';
  char quote = '"';
  bool header = true;
};

struct SourceInfo {
  std::string path;
  std::string digest;  // SHA-256 of the raw bytes
};

struct TabularDataset {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  SourceInfo source;
};

// RFC 4180 parsing. Completely empty lines are skipped. Without a header the
// columns are named c1..cN after the first record.
TabularDataset parse_csv(std::string_view bytes, const CsvDialect& dialect = {},
                         std::string path = {});
TabularDataset read_csv(const std::filesystem::path& path,
                        const CsvDialect& dialect = {});

}  // namespace fairify::ingest
