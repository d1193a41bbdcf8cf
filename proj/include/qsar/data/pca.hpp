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
#include "qsar/data/dataset.hpp"

namespace qsar::data {

inline constexpr std::size_t kDefaultComponents = 4;

struct PcaModel {
  std::vector<double> mean;
  /// d × k, orthonormal columns; the largest-magnitude entry of each column is positive.
  Matrix components;
  /// Top-k eigenvalues of the sample (n − 1) covariance, descending.
  std::vector<double> eigenvalues;
  /// Full spectrum, for explained-variance reporting.
  std::vector<double> all_eigenvalues;

  std::size_t input_dimension() const noexcept { return components.rows(); }
  std::size_t output_dimension() const noexcept { return components.cols(); }
  friend bool operator==(const PcaModel&, const PcaModel&) = default;
};

/// Sample covariance of the columns of X (parallel over column pairs).
Matrix covariance(const Matrix& X);
/// Single-threaded reference for covariance().
Matrix covariance_serial(const Matrix& X);

PcaModel fit_pca(const Matrix& X, std::size_t k = kDefaultComponents);
inline PcaModel fit_pca(const Dataset& train, std::size_t k = kDefaultComponents) { return fit_pca(train.X, k); }

/// (X − mean) · components.
Matrix project_pca(const PcaModel& model, const Matrix& X);

}  // namespace qsar::data
