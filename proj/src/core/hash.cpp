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

#include "qsar/core/hash.hpp"

#include <bit>
#include <cstring>

#include "qsar/core/matrix.hpp"

namespace qsar {

namespace {
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;
}

void Fnv1a::update(std::span<const std::byte> bytes) noexcept {
  for (std::byte b : bytes) {
    state_ ^= static_cast<std::uint64_t>(b);
    state_ *= kFnvPrime;
  }
}

void Fnv1a::update(std::string_view text) noexcept {
  update(std::as_bytes(std::span(text.data(), text.size())));
}

void Fnv1a::update(std::uint64_t value) noexcept {
  // Little-endian byte order regardless of host.
  for (int i = 0; i < 8; ++i) {
    state_ ^= (value >> (8 * i)) & 0xffU;
    state_ *= kFnvPrime;
  }
}

void Fnv1a::update(double value) noexcept { update(std::bit_cast<std::uint64_t>(value)); }

std::uint64_t hash_matrix(const Matrix& m) {
  Fnv1a h;
  h.update(static_cast<std::uint64_t>(m.rows()));
  h.update(static_cast<std::uint64_t>(m.cols()));
  for (double v : m.data()) h.update(v);
  return h.digest();
}

std::string to_hex(std::uint64_t value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[value & 0xfU];
    value >>= 4;
  }
  return out;
}

}  // namespace qsar
