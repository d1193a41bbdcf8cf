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

#include <cstddef>
#include <span>
#include <string>

#include "qsar/qsim/statevector.hpp"

namespace qsar::qsim {

enum class RotationAxis {
  Y,        ///< RY(scale·x_i) on qubit i
  ZAfterH,  ///< H on every qubit, then RZ(scale·x_i)
};

enum class Entangler {
  Ring,    ///< CNOT(i, i+1 mod n) for i = 0..n-1
  Linear,  ///< CNOT(i, i+1) for i = 0..n-2
};

/// Angle-embedding circuit: `reps` layers of per-qubit rotations followed by
/// a CNOT entangling layer.
struct FeatureMapSpec {
  std::size_t num_qubits = 4;
  std::size_t reps = 1;
  RotationAxis axis = RotationAxis::Y;
  double scale = 1.0;
  Entangler entangler = Entangler::Ring;

  /// Throws InvalidParameter / QubitBoundExceeded.
  void validate() const;
  /// Stable text form, e.g. "axis=Y,reps=1,scale=1,entangler=ring,qubits=4".
  std::string describe() const;

  friend bool operator==(const FeatureMapSpec&, const FeatureMapSpec&) = default;
};

std::string to_string(RotationAxis axis);
std::string to_string(Entangler entangler);
RotationAxis parse_axis(std::string_view text);
Entangler parse_entangler(std::string_view text);

/// U(x)|0...0>. Deterministic for identical inputs.
StateVector prepare_state(std::span<const double> x, const FeatureMapSpec& spec);

}  // namespace qsar::qsim
