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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>

#include "fairify/fdp/store.hpp"

namespace httplib {
class Server;
}

namespace fairify::fdp {

inline constexpr std::string_view kNTriplesType = "application/n-triples";
inline constexpr std::string_view kJsonLdType = "application/ld+json";
inline constexpr std::string_view kHtmlType = "text/html";

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  // Public URL of the root record; defaults to the root record's id.
  std::optional<std::string> base_url;
  std::filesystem::path metadata;
  std::optional<std::filesystem::path> data_file;
};

// FAIRIFY_BIND (host:port), FAIRIFY_BASE_URL, FAIRIFY_METADATA and
// FAIRIFY_DATA_FILE replace the corresponding fields when set.
void apply_env_overrides(ServiceConfig& config);

// "/" for the root, otherwise "/<kind>/<last path segment of the id>".
std::string route_path(const LayerRecord& record);

// Best of the served media types for an Accept header; n-triples for an
// empty header, nullopt when nothing acceptable is offered.
std::optional<std::string_view> negotiate(std::string_view accept);

struct Response {
  int status = 200;
  std::string content_type;
  std::string body;
  std::map<std::string, std::string> headers;
};

class FdpService {
 public:
  FdpService(const MetadataStore& store, std::optional<std::string> base_url = std::nullopt,
             std::optional<std::filesystem::path> data_file = std::nullopt);
  ~FdpService();
  FdpService(const FdpService&) = delete;
  FdpService& operator=(const FdpService&) = delete;

  // Request handling independent of the socket layer.
  Response handle(std::string_view method, std::string_view path,
                  std::string_view accept) const;

  // Swaps in a new snapshot; in-flight requests finish on the old one.
  void reload(const MetadataStore& store);
  // Same, also replacing the public base URL (e.g. once the port is known).
  void reload(const MetadataStore& store, std::optional<std::string> base_url);

  // Binds (port 0 picks a free port), serves on a background thread and
  // returns the bound port. Throws fdp.BindFailed.
  int start(const std::string& host, int port);
  // Binds and serves on the calling thread until stop().
  void run(const std::string& host, int port);
  void stop();

  // Public base URL in use (no trailing slash).
  std::string base_url() const;

  struct Snapshot;

 private:
  void install_routes();

  std::optional<std::string> base_url_;
  std::optional<std::filesystem::path> data_file_;
  mutable std::mutex mutex_;
  std::shared_ptr<const Snapshot> snapshot_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace fairify::fdp
