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

#include "fairify/fdp/store.hpp"

#include "fairify/digest.hpp"

namespace fairify::fdp {

MetadataStore MetadataStore::load(const std::filesystem::path& path, const Clock& clock) {
  const std::string bytes = read_file(path);
  MetadataStore store = from_fields(parse_metadata(bytes), clock, sha256_hex(bytes));
  store.source_ = path;
  return store;
}

MetadataStore MetadataStore::from_fields(const std::vector<LayerFields>& fields,
                                         const Clock& clock, std::string digest) {
  MetadataStore store(link_records(fields, clock));
  std::string message;
  for (const auto& r : store.records_) {
    for (const auto& issue : validate_layer(r)) {
      if (issue.severity != Severity::kEssential) continue;
      message += (message.empty() ? " " : "; ") + issue.record.str() + " " + issue.field + ": " + issue.message;
    }
  }
  if (!message.empty()) {
    throw Error("fdp", "ValidationFailed", "metadata has essential issues:" + message);
  }
  store.digest_ = std::move(digest);
  return store;
}

const LayerRecord* MetadataStore::find(const rdf::Iri& id) const {
  for (const auto& r : records_) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

rdf::Graph MetadataStore::graph() const {
  rdf::Graph g;
  for (const auto& r : records_) g.merge(serialize_layer(r));
  return g;
}

std::set<rdf::Quad> MetadataStore::quads() const {
  std::set<rdf::Quad> out;
  for (const auto& r : records_) {
    for (const auto& t : serialize_layer(r)) out.insert({t, r.id});
  }
  return out;
}

}  // namespace fairify::fdp
