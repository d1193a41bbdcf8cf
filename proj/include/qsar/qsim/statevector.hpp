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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qsar::qsim {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 12;

/// Dense n-qubit state. Qubit q is bit q of the basis index (little-endian).
/// Gates update amplitudes in place.
class StateVector {
 public:
  /// |0...0> on `num_qubits` qubits. Throws QubitBoundExceeded above kMaxQubits.
  explicit StateVector(std::size_t num_qubits);
  /// Takes ownership of explicit amplitudes; size must be a power of two.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t size() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  const Amplitude& operator[](std::size_t i) const noexcept { return amps_[i]; }

  double norm_squared() const noexcept;

  void apply_h(std::size_t qubit);
  void apply_ry(std::size_t qubit, double angle);
  void apply_rz(std::size_t qubit, double angle);
  void apply_cnot(std::size_t control, std::size_t target);

 private:
  StateVector() = default;
  void check_qubit(std::size_t q) const;

  std::size_t num_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

/// <a|b>, accumulated in index order with explicit real arithmetic.
Amplitude inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2. Symmetric in its arguments bit-for-bit.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace qsar::qsim
