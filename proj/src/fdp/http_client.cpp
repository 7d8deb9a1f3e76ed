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

#include "fairify/fdp/http_client.hpp"

#include <httplib.h>

#include "fairify/error.hpp"

namespace fairify::fdp {

HttpResult http_get(const std::string& url, const std::string& accept,
                    std::chrono::seconds timeout) {
  const std::string scheme = "http://";
  if (!url.starts_with(scheme)) {
    throw Error("http", "BadUrl", "only http:// URLs can be fetched: " + url);
  }
  const auto slash = url.find('/', scheme.size());
  const std::string origin = url.substr(0, slash);
  const std::string path = slash == std::string::npos ? "/" : url.substr(slash);
  if (origin.size() == scheme.size()) throw Error("http", "BadUrl", "no host in " + url);

  httplib::Client client(origin);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  auto res = client.Get(path, {{"Accept", accept}});
  if (!res) {
    throw Error("http", "Unreachable",
                "GET " + url + " failed: " + httplib::to_string(res.error()));
  }
  return {res->status, res->get_header_value("Content-Type"), res->body};
}

}  // namespace fairify::fdp
