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
#include <vector>

#include "qsar/core/matrix.hpp"

namespace qsar::data {

struct EigenDecomposition {
  /// Sorted descending.
  std::vector<double> values;
  /// Column i is the unit eigenvector for values[i].
  Matrix vectors;
  std::size_t sweeps = 0;
};

/// Cyclic Jacobi rotations on a symmetric matrix. Stops when the
/// off-diagonal Frobenius norm falls to `tolerance` times the matrix norm.
EigenDecomposition jacobi_eigen(const Matrix& symmetric, double tolerance = 1e-12, std::size_t max_sweeps = 100);

}  // namespace qsar::data
