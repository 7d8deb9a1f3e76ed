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

#include "fairify/fdp/metadata.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <regex>
#include <set>

#include "fairify/digest.hpp"

namespace fairify::fdp {

namespace detail {
extern const std::string_view kContextText;
}

using nlohmann::json;
using rdf::Iri;
using rdf::Literal;
using rdf::Triple;

namespace vocab {
Iri dct(std::string_view local) { return Iri::parse(std::string(kDct) + std::string(local)); }
Iri dcat(std::string_view local) { return Iri::parse(std::string(kDcat) + std::string(local)); }
Iri ldp(std::string_view local) { return Iri::parse(std::string(kLdp) + std::string(local)); }
Iri r3d(std::string_view local) { return Iri::parse(std::string(kR3d) + std::string(local)); }
Iri spdx(std::string_view local) { return Iri::parse(std::string(kSpdx) + std::string(local)); }
}  // namespace vocab

std::string_view to_string(LayerKind kind) {
  switch (kind) {
    case LayerKind::kFdpRoot: return "fdp_root";
    case LayerKind::kCatalog: return "catalog";
    case LayerKind::kDataset: return "dataset";
    case LayerKind::kDistribution: return "distribution";
  }
  return "fdp_root";
}

std::optional<LayerKind> parse_layer_kind(std::string_view text) {
  for (auto k : {LayerKind::kFdpRoot, LayerKind::kCatalog, LayerKind::kDataset,
                 LayerKind::kDistribution}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::optional<LayerKind> parent_kind(LayerKind kind) {
  switch (kind) {
    case LayerKind::kFdpRoot: return std::nullopt;
    case LayerKind::kCatalog: return LayerKind::kFdpRoot;
    case LayerKind::kDataset: return LayerKind::kCatalog;
    case LayerKind::kDistribution: return LayerKind::kDataset;
  }
  return std::nullopt;
}

Iri layer_class(LayerKind kind) {
  switch (kind) {
    case LayerKind::kFdpRoot: return vocab::r3d("Repository");
    case LayerKind::kCatalog: return vocab::dcat("Catalog");
    case LayerKind::kDataset: return vocab::dcat("Dataset");
    case LayerKind::kDistribution: return vocab::dcat("Distribution");
  }
  return vocab::r3d("Repository");
}

std::string_view to_string(Severity s) {
  return s == Severity::kEssential ? "essential" : "important";
}

namespace {

[[noreturn]] void field_error(const char* name, std::string_view kind, const std::string& id,
                              const std::string& field, const std::string& what) {
  throw Error("fdp", name,
              std::string(kind) + " " + id + ": field '" + field + "' " + what);
}

Iri iri_field(const std::string& value, std::string_view kind, const std::string& id,
              const std::string& field) {
  try {
    return rdf::validate_iri(value);
  } catch (const rdf::IriError& e) {
    field_error("BadIri", kind, id, field, e.what());
  }
}

std::optional<Iri> optional_iri(const std::optional<std::string>& value, std::string_view kind,
                                const std::string& id, const std::string& field) {
  if (!value || value->empty()) return std::nullopt;
  return iri_field(*value, kind, id, field);
}

const std::string& required(const std::optional<std::string>& value, std::string_view kind,
                            const std::string& id, const std::string& field) {
  if (!value || value->empty()) field_error("MissingRequiredField", kind, id, field, "is required");
  return *value;
}

bool is_date(const std::string& s) {
  static const std::regex kDate(R"(\d{4}-\d{2}-\d{2})");
  if (!std::regex_match(s, kDate)) return false;
  try {
    return format_date(parse_instant(s)) == s;
  } catch (const Error&) {
    return false;
  }
}

bool is_version(const std::string& s) {
  static const std::regex kVersion(R"(\d+(\.\d+)*)");
  return std::regex_match(s, kVersion);
}

bool is_sha256_hex(const std::string& s) {
  return s.size() == 64 && std::all_of(s.begin(), s.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

}  // namespace

LayerRecord build_layer(LayerKind kind, const LayerFields& fields, LayerRecord* parent,
                        const Clock& clock) {
  const auto kind_name = to_string(kind);
  LayerRecord r(kind, iri_field(fields.id, kind_name, fields.id, "id"));
  const auto expected = parent_kind(kind);
  if (!expected && parent != nullptr) {
    throw Error("fdp", "WrongParentKind", "fdp_root " + fields.id + " cannot have a parent");
  }
  if (expected && (parent == nullptr || parent->kind != *expected)) {
    throw Error("fdp", "WrongParentKind",
                std::string(kind_name) + " " + fields.id + " needs a " +
                    std::string(to_string(*expected)) + " parent, got " +
                    (parent ? std::string(to_string(parent->kind)) : std::string("none")));
  }
  r.title = required(fields.title, kind_name, fields.id, "title");
  r.version = required(fields.version, kind_name, fields.id, "version");
  const std::string& publisher = required(fields.publisher, kind_name, fields.id, "publisher");
  try {
    r.publisher = rdf::validate_iri(publisher);
  } catch (const rdf::IriError&) {
    r.publisher = publisher;
  }
  r.description = fields.description.value_or("");
  r.license = optional_iri(fields.license, kind_name, fields.id, "license");
  r.issued = fields.issued.value_or("");
  r.modified = fields.modified.value_or(format_date(clock()));
  r.keywords = fields.keywords;
  if (kind == LayerKind::kDistribution) {
    r.media_type = fields.media_type.value_or("");
    r.download_url = optional_iri(fields.download_url, kind_name, fields.id, "download_url");
    r.access_url = optional_iri(fields.access_url, kind_name, fields.id, "access_url");
    r.byte_size = fields.byte_size;
    r.checksum = fields.checksum.value_or("");
  }
  if (parent != nullptr) {
    r.parent = parent->id;
    if (std::find(parent->children.begin(), parent->children.end(), r.id) ==
        parent->children.end()) {
      parent->children.push_back(r.id);
    }
  }
  return r;
}

std::vector<ValidationIssue> validate_layer(const LayerRecord& r) {
  std::vector<ValidationIssue> out;
  auto issue = [&](const char* field, Severity s, std::string message) {
    out.push_back({r.id, field, s, std::move(message)});
  };
  const bool data_layer = r.kind == LayerKind::kDataset || r.kind == LayerKind::kDistribution;
  if (r.title.empty()) issue("title", Severity::kEssential, "title is required");
  if (r.version.empty()) {
    issue("version", Severity::kEssential, "version is required");
  } else if (!is_version(r.version)) {
    issue("version", Severity::kEssential, "version '" + r.version + "' is not dotted numerals");
  }
  if (!r.publisher) issue("publisher", Severity::kEssential, "publisher is required");
  if (data_layer && !r.license) issue("license", Severity::kEssential, "license is required");
  if (r.kind == LayerKind::kFdpRoot && r.parent) {
    issue("parent", Severity::kEssential, "fdp_root cannot have a parent");
  }
  if (r.kind != LayerKind::kFdpRoot && !r.parent) {
    issue("parent", Severity::kEssential, "parent is required");
  }
  if (r.kind == LayerKind::kDistribution) {
    if (!r.download_url && !r.access_url) {
      issue("access", Severity::kEssential, "download_url or access_url is required");
    }
    if (r.media_type.empty()) issue("media_type", Severity::kImportant, "media_type is missing");
    if (!r.checksum.empty() && !is_sha256_hex(r.checksum)) {
      issue("checksum", Severity::kEssential, "checksum must be lowercase SHA-256 hex");
    }
  }
  if (r.description.empty()) {
    issue("description", Severity::kImportant, "description is missing");
  }
  if (!r.issued.empty() && !is_date(r.issued)) {
    issue("issued", Severity::kImportant, "issued '" + r.issued + "' is not an ISO-8601 date");
  }
  if (!r.modified.empty() && !is_date(r.modified)) {
    issue("modified", Severity::kImportant,
          "modified '" + r.modified + "' is not an ISO-8601 date");
  }
  if (r.kind == LayerKind::kDataset && r.keywords.empty()) {
    issue("keywords", Severity::kImportant, "dataset has no keywords");
  }
  return out;
}

bool has_essential(const std::vector<ValidationIssue>& issues) {
  return std::any_of(issues.begin(), issues.end(),
                     [](const ValidationIssue& i) { return i.severity == Severity::kEssential; });
}

rdf::Graph render_layer(const LayerRecord& r) {
  rdf::Graph g;
  auto text = [&](const Iri& p, const std::string& v) {
    if (!v.empty()) g.insert(Triple(r.id, p, Literal::plain(v)));
  };
  auto date = [&](const Iri& p, const std::string& v) {
    if (v.empty()) return;
    if (is_date(v)) {
      g.insert(Triple(r.id, p, Literal::typed(v, rdf::vocab::xsd("date"))));
    } else {
      g.insert(Triple(r.id, p, Literal::plain(v)));
    }
  };
  g.insert(Triple(r.id, rdf::vocab::rdf_type(), layer_class(r.kind)));
  text(vocab::dct("title"), r.title);
  text(vocab::dct("description"), r.description);
  text(vocab::dct("hasVersion"), r.version);
  if (r.publisher) {
    if (const auto* iri = std::get_if<Iri>(&*r.publisher)) {
      g.insert(Triple(r.id, vocab::dct("publisher"), *iri));
    } else {
      text(vocab::dct("publisher"), std::get<std::string>(*r.publisher));
    }
  }
  if (r.license) g.insert(Triple(r.id, vocab::dct("license"), *r.license));
  date(vocab::dct("issued"), r.issued);
  date(vocab::dct("modified"), r.modified);
  for (const auto& k : r.keywords) text(vocab::dcat("keyword"), k);
  if (r.parent) g.insert(Triple(r.id, vocab::dct("isPartOf"), *r.parent));
  for (const auto& c : r.children) g.insert(Triple(r.id, vocab::ldp("contains"), c));
  text(vocab::dcat("mediaType"), r.media_type);
  if (r.download_url) g.insert(Triple(r.id, vocab::dcat("downloadURL"), *r.download_url));
  if (r.access_url) g.insert(Triple(r.id, vocab::dcat("accessURL"), *r.access_url));
  if (r.byte_size) {
    g.insert(Triple(r.id, vocab::dcat("byteSize"),
                    Literal::typed(std::to_string(*r.byte_size),
                                   rdf::vocab::xsd("nonNegativeInteger"))));
  }
  if (!r.checksum.empty()) {
    const Iri node = rdf::mint_skolem(r.id, "checksum");
    g.insert(Triple(r.id, vocab::spdx("checksum"), node));
    g.insert(Triple(node, rdf::vocab::rdf_type(), vocab::spdx("Checksum")));
    g.insert(Triple(node, vocab::spdx("algorithm"), vocab::spdx("checksumAlgorithm_sha256")));
    g.insert(Triple(node, vocab::spdx("checksumValue"),
                    Literal::typed(r.checksum, rdf::vocab::xsd("hexBinary"))));
  }
  return g;
}

rdf::Graph serialize_layer(const LayerRecord& record) {
  const auto issues = validate_layer(record);
  if (has_essential(issues)) {
    std::string message = record.id.str() + " is not publishable:";
    for (const auto& i : issues) {
      if (i.severity == Severity::kEssential) message += " " + i.field + " (" + i.message + ");";
    }
    throw Error("fdp", "InvalidRecord", message);
  }
  return render_layer(record);
}

LayerRecord extract_layer(const rdf::Graph& graph, const Iri& id) {
  std::optional<LayerKind> kind;
  LayerRecord r(LayerKind::kFdpRoot, id);
  std::optional<Iri> checksum_node;
  auto lexical = [](const rdf::Term& t) -> std::string {
    if (const auto* l = std::get_if<Literal>(&t)) return l->lexical();
    return std::get<Iri>(t).str();
  };
  auto iri = [](const rdf::Term& t) -> std::optional<Iri> {
    if (const auto* i = std::get_if<Iri>(&t)) return *i;
    return std::nullopt;
  };
  for (const auto& t : graph) {
    if (!std::holds_alternative<Iri>(t.subject) || std::get<Iri>(t.subject) != id) continue;
    const auto& p = t.predicate;
    if (p == rdf::vocab::rdf_type()) {
      for (auto k : {LayerKind::kFdpRoot, LayerKind::kCatalog, LayerKind::kDataset,
                     LayerKind::kDistribution}) {
        if (iri(t.object) == layer_class(k)) kind = k;
      }
    } else if (p == vocab::dct("title")) {
      r.title = lexical(t.object);
    } else if (p == vocab::dct("description")) {
      r.description = lexical(t.object);
    } else if (p == vocab::dct("hasVersion")) {
      r.version = lexical(t.object);
    } else if (p == vocab::dct("publisher")) {
      if (auto i = iri(t.object)) {
        r.publisher = *i;
      } else {
        r.publisher = lexical(t.object);
      }
    } else if (p == vocab::dct("license")) {
      r.license = iri(t.object);
    } else if (p == vocab::dct("issued")) {
      r.issued = lexical(t.object);
    } else if (p == vocab::dct("modified")) {
      r.modified = lexical(t.object);
    } else if (p == vocab::dcat("keyword")) {
      r.keywords.push_back(lexical(t.object));
    } else if (p == vocab::dct("isPartOf")) {
      r.parent = iri(t.object);
    } else if (p == vocab::ldp("contains")) {
      if (auto i = iri(t.object)) r.children.push_back(*i);
    } else if (p == vocab::dcat("mediaType")) {
      r.media_type = lexical(t.object);
    } else if (p == vocab::dcat("downloadURL")) {
      r.download_url = iri(t.object);
    } else if (p == vocab::dcat("accessURL")) {
      r.access_url = iri(t.object);
    } else if (p == vocab::dcat("byteSize")) {
      const auto s = lexical(t.object);
      std::uint64_t n = 0;
      if (std::from_chars(s.data(), s.data() + s.size(), n).ec == std::errc()) r.byte_size = n;
    } else if (p == vocab::spdx("checksum")) {
      checksum_node = iri(t.object);
    }
  }
  if (!kind) throw Error("fdp", "NotARecord", id.str() + " has no FAIR Data Point layer type");
  r.kind = *kind;
  if (checksum_node) {
    for (const auto& t : graph) {
      if (t.subject == rdf::Term(*checksum_node) && t.predicate == vocab::spdx("checksumValue")) {
        r.checksum = lexical(t.object);
      }
    }
  }
  return r;
}

namespace {

[[noreturn]] void violation(const std::string& path, const std::string& what) {
  throw Error("fdp", "SchemaViolation", path + ": " + what);
}

std::optional<std::string> optional_string(const json& obj, const char* key,
                                           const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) violation(path + "." + key, "expected a string");
  return it->get<std::string>();
}

LayerFields parse_fields(const json& obj, const std::string& path) {
  static const std::set<std::string> kKnown = {
      "kind",     "id",         "parent",       "title",      "description", "version",
      "publisher", "license",   "issued",       "modified",   "keywords",    "children",
      "media_type", "download_url", "access_url", "byte_size", "checksum"};
  if (!obj.is_object()) violation(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!kKnown.count(key)) violation(path + "." + key, "unknown field");
  }
  LayerFields f;
  auto kind = optional_string(obj, "kind", path);
  auto id = optional_string(obj, "id", path);
  if (!kind) violation(path + ".kind", "missing field");
  if (!id) violation(path + ".id", "missing field");
  if (!parse_layer_kind(*kind)) violation(path + ".kind", "unknown layer kind '" + *kind + "'");
  f.kind = *kind;
  f.id = *id;
  f.parent = optional_string(obj, "parent", path);
  f.title = optional_string(obj, "title", path);
  f.description = optional_string(obj, "description", path);
  f.version = optional_string(obj, "version", path);
  f.publisher = optional_string(obj, "publisher", path);
  f.license = optional_string(obj, "license", path);
  f.issued = optional_string(obj, "issued", path);
  f.modified = optional_string(obj, "modified", path);
  f.media_type = optional_string(obj, "media_type", path);
  f.download_url = optional_string(obj, "download_url", path);
  f.access_url = optional_string(obj, "access_url", path);
  f.checksum = optional_string(obj, "checksum", path);
  if (obj.contains("keywords")) {
    const json& k = obj["keywords"];
    if (!k.is_array()) violation(path + ".keywords", "expected an array");
    for (const auto& item : k) {
      if (!item.is_string()) violation(path + ".keywords", "expected strings");
      f.keywords.push_back(item.get<std::string>());
    }
  }
  if (obj.contains("byte_size") && !obj["byte_size"].is_null()) {
    if (!obj["byte_size"].is_number_unsigned()) {
      violation(path + ".byte_size", "expected a non-negative integer");
    }
    f.byte_size = obj["byte_size"].get<std::uint64_t>();
  }
  return f;
}

}  // namespace

std::vector<LayerFields> parse_metadata(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    violation("$", e.what());
  }
  std::string base = "$";
  if (doc.is_object() && doc.contains("records")) {
    doc = doc["records"];
    base = "$.records";
  }
  if (!doc.is_array()) violation(base, "expected an array of records");
  std::vector<LayerFields> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    out.push_back(parse_fields(doc[i], base + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<LayerFields> read_metadata_file(const std::filesystem::path& path) {
  return parse_metadata(read_file(path));
}

json to_json(const LayerFields& f) {
  json j = {{"kind", f.kind}, {"id", f.id}};
  auto put = [&](const char* key, const std::optional<std::string>& v) {
    if (v) j[key] = *v;
  };
  put("parent", f.parent);
  put("title", f.title);
  put("description", f.description);
  put("version", f.version);
  put("publisher", f.publisher);
  put("license", f.license);
  put("issued", f.issued);
  put("modified", f.modified);
  if (!f.keywords.empty()) j["keywords"] = f.keywords;
  put("media_type", f.media_type);
  put("download_url", f.download_url);
  put("access_url", f.access_url);
  if (f.byte_size) j["byte_size"] = *f.byte_size;
  put("checksum", f.checksum);
  return j;
}

std::vector<LayerRecord> link_records(const std::vector<LayerFields>& fields,
                                      const Clock& clock) {
  std::vector<std::size_t> roots;
  std::map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i].kind == "fdp_root") roots.push_back(i);
    if (!by_id.emplace(fields[i].id, i).second) {
      throw Error("fdp", "BrokenChain", "duplicate record id " + fields[i].id);
    }
  }
  if (roots.size() != 1) {
    throw Error("fdp", "NoRoot",
                "expected exactly one fdp_root record, found " + std::to_string(roots.size()));
  }
  for (const auto& f : fields) {
    if (f.kind == "fdp_root") continue;
    if (!f.parent) throw Error("fdp", "BrokenChain", f.kind + " " + f.id + " has no parent");
    if (!by_id.count(*f.parent)) {
      throw Error("fdp", "BrokenChain",
                  f.kind + " " + f.id + " names missing parent " + *f.parent);
    }
  }

  std::vector<LayerRecord> out;
  out.reserve(fields.size());
  std::vector<bool> built(fields.size(), false);
  auto build = [&](std::size_t i, LayerRecord* parent) {
    out.push_back(build_layer(*parse_layer_kind(fields[i].kind), fields[i], parent, clock));
    built[i] = true;
  };
  build(roots.front(), nullptr);
  for (std::size_t next = 0; next < out.size(); ++next) {
    const std::string parent_id = out[next].id.str();
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (!built[i] && fields[i].parent == parent_id) build(i, &out[next]);
    }
  }
  if (out.size() != fields.size()) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (!built[i]) {
        throw Error("fdp", "BrokenChain",
                    fields[i].kind + " " + fields[i].id + " is not reachable from the root");
      }
    }
  }
  return out;
}

const json& jsonld_context() {
  static const json kContext = json::parse(detail::kContextText)["@context"];
  return kContext;
}

namespace {

rdf::PrefixMap context_prefixes() {
  rdf::PrefixMap p;
  for (const auto& [label, ns] : jsonld_context().items()) {
    p.bind(label, Iri::parse(ns.get<std::string>()));
  }
  return p;
}

}  // namespace

std::string compact_iri(const Iri& iri) {
  static const rdf::PrefixMap kPrefixes = context_prefixes();
  const auto& s = iri.str();
  for (const auto& [label, ns] : kPrefixes.bindings()) {
    if (s.starts_with(ns.str()) && s.size() > ns.str().size()) {
      const std::string local = s.substr(ns.str().size());
      if (local.find_first_of("/#:") == std::string::npos) return label + ":" + local;
    }
  }
  return s;
}

namespace {

std::string compact(const Iri& iri) { return compact_iri(iri); }

Iri expand(const std::string& name) {
  static const rdf::PrefixMap kPrefixes = context_prefixes();
  const auto colon = name.find(':');
  if (colon != std::string::npos &&
      kPrefixes.find(std::string_view(name).substr(0, colon)) != nullptr) {
    return rdf::expand_curie(name, kPrefixes);
  }
  return rdf::validate_iri(name);
}

json literal_value(const Literal& l) {
  if (!l.language().empty()) return {{"@value", l.lexical()}, {"@language", l.language()}};
  if (l.datatype() == rdf::vocab::xsd_string()) return l.lexical();
  return {{"@value", l.lexical()}, {"@type", compact(l.datatype())}};
}

void add_value(json& node, const std::string& key, json value) {
  if (!node.contains(key)) {
    node[key] = std::move(value);
    return;
  }
  if (!node[key].is_array()) node[key] = json::array({node[key]});
  node[key].push_back(std::move(value));
}

[[noreturn]] void bad_jsonld(const std::string& what) {
  throw Error("fdp", "BadJsonLd", what);
}

}  // namespace

json render_jsonld(const rdf::Graph& graph) {
  json nodes = json::array();
  std::map<std::string, json> by_subject;
  std::vector<std::string> order;
  for (const auto& t : graph) {
    const std::string s = std::get<Iri>(t.subject).str();
    auto [it, fresh] = by_subject.try_emplace(s, json{{"@id", s}});
    if (fresh) order.push_back(s);
    json& node = it->second;
    if (t.predicate == rdf::vocab::rdf_type() && std::holds_alternative<Iri>(t.object)) {
      add_value(node, "@type", compact(std::get<Iri>(t.object)));
    } else if (const auto* iri = std::get_if<Iri>(&t.object)) {
      add_value(node, compact(t.predicate), json{{"@id", iri->str()}});
    } else {
      add_value(node, compact(t.predicate), literal_value(std::get<Literal>(t.object)));
    }
  }
  for (const auto& s : order) nodes.push_back(std::move(by_subject[s]));
  return {{"@context", jsonld_context()}, {"@graph", std::move(nodes)}};
}

rdf::Graph jsonld_to_graph(const json& doc) {
  rdf::Graph g;
  if (!doc.is_object()) bad_jsonld("document is not an object");
  if (!doc.contains("@graph")) return g;
  if (!doc["@graph"].is_array()) bad_jsonld("@graph is not an array");
  try {
    for (const auto& node : doc["@graph"]) {
      if (!node.is_object() || !node.contains("@id") || !node["@id"].is_string()) {
        bad_jsonld("node without @id");
      }
      const Iri subject = expand(node["@id"].get<std::string>());
      for (const auto& [key, raw] : node.items()) {
        if (key == "@id") continue;
        const json values = raw.is_array() ? raw : json::array({raw});
        for (const auto& v : values) {
          if (key == "@type") {
            if (!v.is_string()) bad_jsonld("@type must be a string");
            g.insert(Triple(subject, rdf::vocab::rdf_type(), expand(v.get<std::string>())));
            continue;
          }
          const Iri predicate = expand(key);
          if (v.is_string()) {
            g.insert(Triple(subject, predicate, Literal::plain(v.get<std::string>())));
          } else if (v.is_object() && v.contains("@id")) {
            g.insert(Triple(subject, predicate, expand(v["@id"].get<std::string>())));
          } else if (v.is_object() && v.contains("@value")) {
            const auto lexical = v["@value"].get<std::string>();
            if (v.contains("@language")) {
              g.insert(Triple(subject, predicate,
                              Literal::tagged(lexical, v["@language"].get<std::string>())));
            } else if (v.contains("@type")) {
              g.insert(Triple(subject, predicate,
                              Literal::typed(lexical, expand(v["@type"].get<std::string>()))));
            } else {
              g.insert(Triple(subject, predicate, Literal::plain(lexical)));
            }
          } else {
            bad_jsonld("unsupported value for " + key);
          }
        }
      }
    }
  } catch (const json::exception& e) {
    bad_jsonld(e.what());
  }
  return g;
}

}  // namespace fairify::fdp
