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

#include <string>
#include <vector>

#include "qsar/core/matrix.hpp"
#include "qsar/kernels/kernel_matrix.hpp"
#include "qsar/kernels/kernel_spec.hpp"
#include "qsar/qsim/statevector.hpp"

namespace qsar::kernels {

/// exp(−gamma·‖a − b‖²).
double rbf_value(std::span<const double> a, std::span<const double> b, double gamma);

/// Kernel between two rows, evaluated from scratch (no state reuse).
double kernel_value(std::span<const double> a, std::span<const double> b, const KernelSpec& spec);

/// Prepares one state per row, in parallel.
std::vector<qsim::StateVector> prepare_states(const Matrix& X, const qsim::FeatureMapSpec& map);

/// Kernel between every row of A and every row of B. Entries are computed in
/// parallel; each entry's arithmetic is independent of the thread count.
/// Passing the same object for A and B computes the upper triangle, mirrors
/// it, and sets the symmetric flag.
KernelMatrix gram_matrix(const Matrix& A, const Matrix& B, const KernelSpec& spec,
                         std::vector<std::string> row_ids = {}, std::vector<std::string> col_ids = {});

inline KernelMatrix gram_matrix(const Matrix& A, const KernelSpec& spec, std::vector<std::string> ids = {}) {
  return gram_matrix(A, A, spec, ids, ids);
}

/// Single-threaded pairwise reference: kernel_value for every (i, j).
KernelMatrix gram_matrix_serial(const Matrix& A, const Matrix& B, const KernelSpec& spec, bool symmetric = false);

}  // namespace qsar::kernels
