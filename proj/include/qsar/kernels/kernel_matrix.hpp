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

namespace qsar::kernels {

/// Gram matrix: symmetric (train × train) or rectangular (test × train).
struct KernelMatrix {
  Matrix values;
  std::vector<std::string> row_ids;
  std::vector<std::string> col_ids;
  bool symmetric = false;
  /// Kernel that produced the matrix ("combined" for ensembles).
  std::string provenance;

  std::size_t rows() const noexcept { return values.rows(); }
  std::size_t cols() const noexcept { return values.cols(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return values(i, j); }
};

/// Largest |K_ij − K_ji|; infinity for non-square matrices.
double asymmetry(const Matrix& k);

}  // namespace qsar::kernels
