// Copyright 2026 The qmkl-qsar Authors.
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

#include <optional>
#include <string>
#include <string_view>

namespace qsar {

/// Shortest decimal representation that round-trips exactly.
std::string format_double(double value);

/// Strict parse of a finite double; rejects trailing garbage, NaN and infinities.
std::optional<double> parse_double(std::string_view text);

std::optional<long long> parse_integer(std::string_view text);

std::string_view trim(std::string_view text) noexcept;

}  // namespace qsar
