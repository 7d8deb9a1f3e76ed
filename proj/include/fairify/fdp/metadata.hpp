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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fairify/clock.hpp"
#include "fairify/rdf/graph.hpp"

namespace fairify::fdp {

namespace vocab {
inline constexpr std::string_view kDct = "http://purl.org/dc/terms/";
inline constexpr std::string_view kDcat = "http://www.w3.org/ns/dcat#";
inline constexpr std::string_view kLdp = "http://www.w3.org/ns/ldp#";
inline constexpr std::string_view kR3d = "http://www.re3data.org/schema/3-0#";
inline constexpr std::string_view kSpdx = "http://spdx.org/rdf/terms#";

rdf::Iri dct(std::string_view local);
rdf::Iri dcat(std::string_view local);
rdf::Iri ldp(std::string_view local);
rdf::Iri r3d(std::string_view local);
rdf::Iri spdx(std::string_view local);
}  // namespace vocab

enum class LayerKind { kFdpRoot, kCatalog, kDataset, kDistribution };

std::string_view to_string(LayerKind kind);
std::optional<LayerKind> parse_layer_kind(std::string_view text);
// The layer directly above; nullopt for fdp_root.
std::optional<LayerKind> parent_kind(LayerKind kind);
rdf::Iri layer_class(LayerKind kind);

// An IRI or, failing IRI validation, a literal name.
using Publisher = std::variant<rdf::Iri, std::string>;

struct LayerRecord {
  LayerRecord(LayerKind k, rdf::Iri i) : kind(k), id(std::move(i)) {}

  LayerKind kind;
  rdf::Iri id;
  std::string title;
  std::string description;
  std::string version;
  std::optional<Publisher> publisher;
  std::optional<rdf::Iri> license;
  std::string issued;    // YYYY-MM-DD or empty
  std::string modified;  // YYYY-MM-DD or empty
  std::vector<std::string> keywords;
  std::optional<rdf::Iri> parent;
  std::vector<rdf::Iri> children;
  // Distribution only.
  std::string media_type;
  std::optional<rdf::Iri> download_url;
  std::optional<rdf::Iri> access_url;
  std::optional<std::uint64_t> byte_size;
  std::string checksum;  // lowercase SHA-256 hex or empty

  bool operator==(const LayerRecord&) const = default;
};

// Raw authoring fields, as written in metadata.json.
struct LayerFields {
  std::string kind;
  std::string id;
  std::optional<std::string> parent;
  std::optional<std::string> title;
  std::optional<std::string> description;
  std::optional<std::string> version;
  std::optional<std::string> publisher;
  std::optional<std::string> license;
  std::optional<std::string> issued;
  std::optional<std::string> modified;
  std::vector<std::string> keywords;
  std::optional<std::string> media_type;
  std::optional<std::string> download_url;
  std::optional<std::string> access_url;
  std::optional<std::uint64_t> byte_size;
  std::optional<std::string> checksum;
};

// Links the new record and `parent` both ways. `modified` defaults to the
// clock's date. Throws fdp.WrongParentKind, fdp.MissingRequiredField (title,
// version, publisher) and fdp.BadIri.
LayerRecord build_layer(LayerKind kind, const LayerFields& fields, LayerRecord* parent,
                        const Clock& clock);

enum class Severity { kEssential, kImportant };
std::string_view to_string(Severity s);

struct ValidationIssue {
  rdf::Iri record;
  std::string field;
  Severity severity;
  std::string message;
};

// Checks of a single record; tree-level checks live in link_records.
std::vector<ValidationIssue> validate_layer(const LayerRecord& record);
bool has_essential(const std::vector<ValidationIssue>& issues);

// Graph of a record without validation.
rdf::Graph render_layer(const LayerRecord& record);
// Throws fdp.InvalidRecord when validate_layer reports an essential issue.
rdf::Graph serialize_layer(const LayerRecord& record);

// Reads a record back from a graph holding its statements; fields outside
// the vocabulary are ignored. Throws fdp.NotARecord.
LayerRecord extract_layer(const rdf::Graph& graph, const rdf::Iri& id);

// metadata.json: an array of objects (or {"records": [...]}) with the
// LayerFields names. Throws fdp.SchemaViolation.
std::vector<LayerFields> parse_metadata(std::string_view json_text);
std::vector<LayerFields> read_metadata_file(const std::filesystem::path& path);
nlohmann::json to_json(const LayerFields& fields);

// Builds every record in parent-first order. Throws fdp.NoRoot (none or
// several fdp_root records), fdp.BrokenChain (missing parent, duplicate id,
// cycle) and the build_layer errors. Result is in tree order from the root.
std::vector<LayerRecord> link_records(const std::vector<LayerFields>& fields,
                                      const Clock& clock);

// Fixed-context JSON-LD: the shipped @context plus an @graph of node objects
// keyed by CURIEs, with IRI values as {"@id"} and literals as strings (plain)
// or {"@value", "@type"|"@language"}.
const nlohmann::json& jsonld_context();
// CURIE under the fixed context, or the full IRI.
std::string compact_iri(const rdf::Iri& iri);
nlohmann::json render_jsonld(const rdf::Graph& graph);
// Inverse of render_jsonld for documents using the fixed context. Throws
// fdp.BadJsonLd.
rdf::Graph jsonld_to_graph(const nlohmann::json& doc);

}  // namespace fairify::fdp
