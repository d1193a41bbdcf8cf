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

#include "qsar/qsim/feature_map.hpp"

#include <cmath>
#include <sstream>

#include "qsar/core/error.hpp"
#include "qsar/core/format.hpp"

namespace qsar::qsim {

std::string to_string(RotationAxis axis) { return axis == RotationAxis::Y ? "Y" : "ZH"; }
std::string to_string(Entangler entangler) { return entangler == Entangler::Ring ? "ring" : "linear"; }

RotationAxis parse_axis(std::string_view text) {
  if (text == "Y" || text == "y") return RotationAxis::Y;
  if (text == "ZH" || text == "zh" || text == "Z-after-H" || text == "z_after_h") return RotationAxis::ZAfterH;
  throw Error(ErrorCode::InvalidParameter, "unknown rotation axis '" + std::string(text) + "'");
}

Entangler parse_entangler(std::string_view text) {
  if (text == "ring") return Entangler::Ring;
  if (text == "linear") return Entangler::Linear;
  throw Error(ErrorCode::InvalidParameter, "unknown entangler '" + std::string(text) + "'");
}

void FeatureMapSpec::validate() const {
  if (num_qubits == 0) throw Error(ErrorCode::InvalidParameter, "feature map needs at least one qubit");
  if (num_qubits > kMaxQubits) {
    throw Error(ErrorCode::QubitBoundExceeded, std::to_string(num_qubits) + " qubits exceeds the simulator bound");
  }
  if (reps == 0) throw Error(ErrorCode::InvalidParameter, "feature map reps must be >= 1");
  if (scale == 0.0 || !std::isfinite(scale)) throw Error(ErrorCode::InvalidParameter, "feature map scale must be non-zero");
}

std::string FeatureMapSpec::describe() const {
  std::ostringstream out;
  out << "axis=" << to_string(axis) << ",reps=" << reps << ",scale=" << format_double(scale)
      << ",entangler=" << to_string(entangler) << ",qubits=" << num_qubits;
  return out.str();
}

StateVector prepare_state(std::span<const double> x, const FeatureMapSpec& spec) {
  spec.validate();
  if (x.size() != spec.num_qubits) {
    throw Error(ErrorCode::DimensionMismatch, "feature vector has " + std::to_string(x.size()) +
                                                  " entries for " + std::to_string(spec.num_qubits) + " qubits");
  }
  const std::size_t n = spec.num_qubits;
  StateVector state(n);
  for (std::size_t rep = 0; rep < spec.reps; ++rep) {
    if (spec.axis == RotationAxis::ZAfterH) {
      for (std::size_t q = 0; q < n; ++q) state.apply_h(q);
      for (std::size_t q = 0; q < n; ++q) state.apply_rz(q, spec.scale * x[q]);
    } else {
      for (std::size_t q = 0; q < n; ++q) state.apply_ry(q, spec.scale * x[q]);
    }
    if (n > 1) {
      const std::size_t last = spec.entangler == Entangler::Ring ? n : n - 1;
      for (std::size_t q = 0; q < last; ++q) state.apply_cnot(q, (q + 1) % n);
    }
  }
  return state;
}

}  // namespace qsar::qsim
