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

#include <cstdint>
#include <random>
#include <string_view>

namespace qsar {

/// Derives an independent child seed from a root seed and a stream label.
/// Every randomized component takes its generator from here so that a single
/// top-level seed determines the whole run.
std::uint64_t derive_seed(std::uint64_t root, std::string_view stream) noexcept;

inline std::mt19937_64 make_rng(std::uint64_t root, std::string_view stream) {
  return std::mt19937_64(derive_seed(root, stream));
}

}  // namespace qsar
