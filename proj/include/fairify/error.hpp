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

#include <stdexcept>
#include <string>

namespace fairify {

// Base of every error raised by the toolkit. `module()` and `name()` make up
// the machine-greppable "ERROR <module>.<name>:" prefix printed by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string module, std::string name, const std::string& message)
      : std::runtime_error(message),
        module_(std::move(module)),
        name_(std::move(name)) {}

  const std::string& module() const noexcept { return module_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string module_;
  std::string name_;
};

}  // namespace fairify
