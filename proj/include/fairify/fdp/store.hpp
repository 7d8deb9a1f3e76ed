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

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "fairify/fdp/metadata.hpp"

namespace fairify::fdp {

// Linked, essential-clean metadata records.
class MetadataStore {
 public:
  // Throws fdp.ValidationFailed (every essential issue listed), fdp.NoRoot,
  // fdp.BrokenChain and the parse/build errors of the records.
  static MetadataStore load(const std::filesystem::path& path, const Clock& clock);
  static MetadataStore from_fields(const std::vector<LayerFields>& fields, const Clock& clock,
                                   std::string digest = {});

  const LayerRecord& root() const { return records_.front(); }
  const LayerRecord* find(const rdf::Iri& id) const;
  // Tree order, root first.
  const std::vector<LayerRecord>& records() const { return records_; }
  const std::filesystem::path& source() const { return source_; }
  // SHA-256 of the file the store was loaded from.
  const std::string& digest() const { return digest_; }

  rdf::Graph graph() const;
  // One named graph per record.
  std::set<rdf::Quad> quads() const;

 private:
  explicit MetadataStore(std::vector<LayerRecord> records) : records_(std::move(records)) {}

  std::vector<LayerRecord> records_;
  std::filesystem::path source_;
  std::string digest_;
};

}  // namespace fairify::fdp
