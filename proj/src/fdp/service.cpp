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

#include "fairify/fdp/service.hpp"

#include <algorithm>
#include <cstdlib>

#include <httplib.h>

#include "fairify/digest.hpp"
#include "fairify/rdf/ntriples.hpp"

namespace fairify::fdp {

using rdf::Iri;

void apply_env_overrides(ServiceConfig& config) {
  auto env = [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
  };
  if (auto bind = env("FAIRIFY_BIND")) {
    const auto colon = bind->rfind(':');
    if (colon == std::string::npos) {
      config.host = *bind;
    } else {
      config.host = bind->substr(0, colon);
      try {
        config.port = std::stoi(bind->substr(colon + 1));
      } catch (const std::exception&) {
        throw Error("fdp", "BadBind", "FAIRIFY_BIND '" + *bind + "' is not host:port");
      }
    }
  }
  if (auto url = env("FAIRIFY_BASE_URL")) config.base_url = *url;
  if (auto path = env("FAIRIFY_METADATA")) config.metadata = *path;
  if (auto path = env("FAIRIFY_DATA_FILE")) config.data_file = *path;
}

std::string route_path(const LayerRecord& record) {
  if (record.kind == LayerKind::kFdpRoot) return "/";
  std::string id = record.id.str();
  while (!id.empty() && id.back() == '/') id.pop_back();
  return "/" + std::string(to_string(record.kind)) + "/" + id.substr(id.rfind('/') + 1);
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

struct MediaRange {
  std::string type;
  double q = 1.0;
};

std::vector<MediaRange> parse_accept(std::string_view accept) {
  std::vector<MediaRange> out;
  while (!accept.empty()) {
    const auto comma = accept.find(',');
    std::string_view item = accept.substr(0, comma);
    accept = comma == std::string_view::npos ? std::string_view{} : accept.substr(comma + 1);
    MediaRange range;
    const auto semi = item.find(';');
    range.type = lower(trim(item.substr(0, semi)));
    if (range.type.empty()) continue;
    std::string_view params = semi == std::string_view::npos ? "" : item.substr(semi + 1);
    while (!params.empty()) {
      const auto next = params.find(';');
      const auto param = trim(params.substr(0, next));
      params = next == std::string_view::npos ? std::string_view{} : params.substr(next + 1);
      if (param.size() > 2 && (param[0] == 'q' || param[0] == 'Q') && param[1] == '=') {
        try {
          range.q = std::stod(std::string(param.substr(2)));
        } catch (const std::exception&) {
          range.q = 0;
        }
      }
    }
    out.push_back(std::move(range));
  }
  return out;
}

// q of the most specific range matching `offer`; -1 when none matches.
double quality(const std::vector<MediaRange>& ranges, std::string_view offer) {
  const std::string_view major = offer.substr(0, offer.find('/'));
  int best_specificity = -1;
  double q = -1;
  for (const auto& r : ranges) {
    int specificity = -1;
    if (r.type == offer) {
      specificity = 2;
    } else if (r.type == std::string(major) + "/*") {
      specificity = 1;
    } else if (r.type == "*/*") {
      specificity = 0;
    }
    if (specificity > best_specificity) {
      best_specificity = specificity;
      q = r.q;
    }
  }
  return q;
}

std::string html_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string render_html(const LayerRecord& record, const rdf::Graph& graph) {
  std::string title = record.title;
  std::string rows;
  for (const auto& t : graph) {
    rows += "<tr><td>" + html_escape(compact_iri(t.predicate)) + "</td><td>";
    if (const auto* iri = std::get_if<Iri>(&t.object)) {
      rows += "<a href=\"" + html_escape(iri->str()) + "\">" + html_escape(iri->str()) + "</a>";
    } else {
      rows += html_escape(std::get<rdf::Literal>(t.object).lexical());
    }
    rows += "</td></tr>\n";
  }
  return "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>" + html_escape(title) +
         "</title></head>\n<body>\n<h1>" + html_escape(title) + "</h1>\n<p>" +
         html_escape(std::string(to_string(record.kind))) + " " + html_escape(record.id.str()) +
         "</p>\n<table>\n<tr><th>Property</th><th>Value</th></tr>\n" + rows +
         "</table>\n</body></html>\n";
}

std::string strip_slash(std::string s) {
  while (s.size() > 1 && s.back() == '/') s.pop_back();
  return s;
}

}  // namespace

std::optional<std::string_view> negotiate(std::string_view accept) {
  if (trim(accept).empty()) return kNTriplesType;
  const auto ranges = parse_accept(accept);
  std::optional<std::string_view> best;
  double best_q = 0;
  for (auto offer : {kNTriplesType, kJsonLdType, kHtmlType}) {
    const double q = quality(ranges, offer);
    if (q > best_q) {
      best_q = q;
      best = offer;
    }
  }
  return best;
}

struct FdpService::Snapshot {
  struct Entry {
    std::string ntriples;
    std::string jsonld;
    std::string html;
    LayerKind kind;
  };
  std::string base_url;
  std::map<std::string, Entry> routes;
};

namespace {

std::shared_ptr<const FdpService::Snapshot> make_snapshot(
    const MetadataStore& store, const std::optional<std::string>& base_url) {
  auto snap = std::make_shared<FdpService::Snapshot>();
  const std::string root = strip_slash(store.root().id.str());
  snap->base_url = strip_slash(base_url.value_or(root));
  const bool rewrite = snap->base_url != root;
  auto map_iri = [&](const Iri& iri) -> Iri {
    const auto& s = iri.str();
    if (!rewrite || !s.starts_with(root)) return iri;
    if (s.size() != root.size() && s[root.size()] != '/') return iri;
    return Iri::parse(snap->base_url + s.substr(root.size()));
  };
  auto map_term = [&](const rdf::Term& t) -> rdf::Term {
    if (const auto* iri = std::get_if<Iri>(&t)) return map_iri(*iri);
    return t;
  };
  for (const auto& record : store.records()) {
    rdf::Graph g;
    for (const auto& t : serialize_layer(record)) {
      g.insert(rdf::Triple(map_term(t.subject), map_iri(t.predicate), map_term(t.object)));
    }
    const std::string route = route_path(record);
    FdpService::Snapshot::Entry entry{rdf::serialize_ntriples(g),
                                      render_jsonld(g).dump(2) + "\n",
                                      render_html(record, g), record.kind};
    if (!snap->routes.emplace(route, std::move(entry)).second) {
      throw Error("fdp", "RouteCollision",
                  "two records map to route " + route + " (second: " + record.id.str() + ")");
    }
  }
  return snap;
}

Response plain(int status, std::string body) {
  return {status, "text/plain; charset=utf-8", std::move(body), {}};
}

}  // namespace

FdpService::FdpService(const MetadataStore& store, std::optional<std::string> base_url,
                       std::optional<std::filesystem::path> data_file)
    : base_url_(std::move(base_url)), data_file_(std::move(data_file)) {
  snapshot_ = make_snapshot(store, base_url_);
}

FdpService::~FdpService() { stop(); }

void FdpService::reload(const MetadataStore& store) {
  auto next = make_snapshot(store, base_url_);
  std::lock_guard lock(mutex_);
  snapshot_ = std::move(next);
}

void FdpService::reload(const MetadataStore& store, std::optional<std::string> base_url) {
  auto next = make_snapshot(store, base_url);
  std::lock_guard lock(mutex_);
  base_url_ = std::move(base_url);
  snapshot_ = std::move(next);
}

std::string FdpService::base_url() const {
  std::lock_guard lock(mutex_);
  return snapshot_->base_url;
}

Response FdpService::handle(std::string_view method, std::string_view path,
                            std::string_view accept) const {
  if (method != "GET" && method != "HEAD") {
    Response r = plain(405, "method not allowed\n");
    r.headers["Allow"] = "GET";
    return r;
  }
  std::shared_ptr<const Snapshot> snap;
  {
    std::lock_guard lock(mutex_);
    snap = snapshot_;
  }
  std::string route = strip_slash(std::string(path.substr(0, path.find('?'))));
  if (route.empty()) route = "/";

  if (route.ends_with("/data")) {
    const std::string owner = route.substr(0, route.size() - 5);
    auto it = snap->routes.find(owner);
    if (it == snap->routes.end() || it->second.kind != LayerKind::kDistribution || !data_file_) {
      return plain(404, "not found\n");
    }
    return {200, std::string(kNTriplesType), read_file(*data_file_), {}};
  }

  auto it = snap->routes.find(route);
  if (it == snap->routes.end()) return plain(404, "not found\n");
  const auto type = negotiate(accept);
  if (!type) {
    return plain(406, "supported types: application/n-triples, application/ld+json, text/html\n");
  }
  Response r;
  r.headers["Vary"] = "Accept";
  if (*type == kNTriplesType) {
    r.content_type = std::string(kNTriplesType);
    r.body = it->second.ntriples;
  } else if (*type == kJsonLdType) {
    r.content_type = std::string(kJsonLdType);
    r.body = it->second.jsonld;
  } else {
    r.content_type = "text/html; charset=utf-8";
    r.body = it->second.html;
  }
  return r;
}

void FdpService::install_routes() {
  server_ = std::make_unique<httplib::Server>();
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    const Response r = handle(req.method, req.path, req.get_header_value("Accept"));
    res.status = r.status;
    for (const auto& [k, v] : r.headers) res.set_header(k, v);
    res.set_content(r.body, r.content_type);
  };
  const std::string any = ".*";
  server_->Get(any, handler);
  server_->Post(any, handler);
  server_->Put(any, handler);
  server_->Patch(any, handler);
  server_->Delete(any, handler);
  server_->Options(any, handler);
}

int FdpService::start(const std::string& host, int port) {
  stop();
  install_routes();
  int bound = port;
  if (port == 0) {
    bound = server_->bind_to_any_port(host);
  } else if (!server_->bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound <= 0) {
    throw Error("fdp", "BindFailed", "cannot bind " + host + ":" + std::to_string(port));
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound;
}

void FdpService::run(const std::string& host, int port) {
  install_routes();
  if (!server_->bind_to_port(host, port)) {
    throw Error("fdp", "BindFailed", "cannot bind " + host + ":" + std::to_string(port));
  }
  server_->listen_after_bind();
}

void FdpService::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace fairify::fdp
