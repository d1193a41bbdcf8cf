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

#include "qsar/qsim/statevector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qsar/core/error.hpp"

namespace qsar::qsim {

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0) throw Error(ErrorCode::InvalidParameter, "state needs at least one qubit");
  if (num_qubits > kMaxQubits) {
    throw Error(ErrorCode::QubitBoundExceeded,
                std::to_string(num_qubits) + " qubits exceeds the simulator bound of " + std::to_string(kMaxQubits));
  }
  amps_.assign(std::size_t{1} << num_qubits, Amplitude(0.0, 0.0));
  amps_[0] = Amplitude(1.0, 0.0);
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  if (amplitudes.size() < 2 || !std::has_single_bit(amplitudes.size())) {
    throw Error(ErrorCode::DimensionMismatch, "amplitude count must be a power of two >= 2");
  }
  const std::size_t n = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
  if (n > kMaxQubits) throw Error(ErrorCode::QubitBoundExceeded, "too many qubits");
  StateVector s;
  s.num_qubits_ = n;
  s.amps_ = std::move(amplitudes);
  return s;
}

double StateVector::norm_squared() const noexcept {
  double sum = 0.0;
  for (const Amplitude& a : amps_) sum += a.real() * a.real() + a.imag() * a.imag();
  return sum;
}

void StateVector::check_qubit(std::size_t q) const {
  if (q >= num_qubits_) throw Error(ErrorCode::DimensionMismatch, "qubit index out of range");
}

void StateVector::apply_h(std::size_t qubit) {
  check_qubit(qubit);
  const std::size_t mask = std::size_t{1} << qubit;
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) continue;
    const Amplitude a0 = amps_[i], a1 = amps_[i | mask];
    amps_[i] = (a0 + a1) * r;
    amps_[i | mask] = (a0 - a1) * r;
  }
}

void StateVector::apply_ry(std::size_t qubit, double angle) {
  check_qubit(qubit);
  const std::size_t mask = std::size_t{1} << qubit;
  const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) continue;
    const Amplitude a0 = amps_[i], a1 = amps_[i | mask];
    amps_[i] = c * a0 - s * a1;
    amps_[i | mask] = s * a0 + c * a1;
  }
}

void StateVector::apply_rz(std::size_t qubit, double angle) {
  check_qubit(qubit);
  const std::size_t mask = std::size_t{1} << qubit;
  const Amplitude phase0 = std::polar(1.0, -angle / 2.0);
  const Amplitude phase1 = std::polar(1.0, angle / 2.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] *= (i & mask) ? phase1 : phase0;
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw Error(ErrorCode::InvalidParameter, "CNOT control equals target");
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(amps_[i], amps_[i | tmask]);
  }
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "states have different sizes");
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

double fidelity(const StateVector& a, const StateVector& b) {
  const Amplitude z = inner_product(a, b);
  return z.real() * z.real() + z.imag() * z.imag();
}

}  // namespace qsar::qsim
