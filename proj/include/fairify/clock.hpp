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
#include <functional>
#include <string>
#include <string_view>

namespace fairify {

using TimePoint = std::chrono::sys_seconds;

// Source of "now". Reruns that must be byte-identical inject a fixed clock.
using Clock = std::function<TimePoint()>;

Clock system_clock();
Clock fixed_clock(TimePoint at);

// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_instant(TimePoint t);
// "YYYY-MM-DD"
std::string format_date(TimePoint t);

// Accepts "YYYY-MM-DD", "YYYY-MM-DDTHH:MM:SS" with optional fraction and an
// optional "Z" or "+HH:MM"/"-HH:MM" offset; normalizes to UTC seconds.
// Throws fairify::Error (clock.BadInstant).
TimePoint parse_instant(std::string_view text);

}  // namespace fairify
