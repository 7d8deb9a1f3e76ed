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

#include <chrono>
#include <string>

namespace fairify::fdp {

struct HttpResult {
  int status = 0;
  std::string content_type;
  std::string body;
};

// Plain-HTTP GET. Throws http.BadUrl (including https URLs) and
// http.Unreachable (connection failure or timeout).
HttpResult http_get(const std::string& url, const std::string& accept,
                    std::chrono::seconds timeout = std::chrono::seconds(5));

}  // namespace fairify::fdp
