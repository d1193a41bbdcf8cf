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
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qsar/kernels/kernel_matrix.hpp"

namespace qsar::svm {

struct SvmParams {
  double C = 1.0;
  /// KKT tolerance on s_i·E_i.
  double tol = 1e-3;
  /// Consecutive sweeps without any update before stopping.
  std::size_t max_passes = 50;
  std::uint64_t seed = 0;
  /// Hard cap on sweeps over the training set.
  std::size_t max_sweeps = 100000;

  void validate() const;
};

/// Dual solution of the soft-margin SVM on a precomputed kernel.
struct SvmModel {
  /// alpha_i · s_i with s = 2y − 1.
  std::vector<double> alpha_y;
  double bias = 0.0;
  std::vector<std::size_t> support_indices;
  std::vector<std::string> train_ids;
  double C = 1.0;

  std::size_t train_size() const noexcept { return alpha_y.size(); }
};

struct SvmTrace {
  /// Dual objective after each sweep, starting with the all-zero point.
  std::vector<double> objective;
  std::size_t sweeps = 0;
  std::size_t updates = 0;
  /// False when max_sweeps stopped training before max_passes quiet sweeps.
  bool converged = false;
};

using KernelFunction = std::function<double(std::size_t, std::size_t)>;

/// Simplified SMO: each KKT violator i is paired with a seeded random j,
/// falling back to the j maximizing |E_i − E_j| and then a scan from a random
/// offset. Stops after max_passes quiet sweeps.
/// Throws SingleClassTraining, NotSymmetric, DimensionMismatch.
SvmModel train_svm(const kernels::KernelMatrix& k_train, std::span<const int> y, const SvmParams& params,
                   SvmTrace* trace = nullptr);

/// Same solver with kernel entries evaluated on demand.
SvmModel train_svm(const KernelFunction& kernel, std::size_t n, std::span<const int> y, const SvmParams& params,
                   SvmTrace* trace = nullptr, std::vector<std::string> train_ids = {});

/// W(α) = Σ α_i − ½ Σ_ij α_i α_j s_i s_j K_ij, with alpha_y = α·s.
double dual_objective(std::span<const double> alpha_y, const KernelFunction& kernel);

/// f(t) = Σ_i alpha_y_i K(t, x_i) + bias for each row t of a test × train kernel.
/// Throws IdMismatch when the column ids differ from the training ids.
std::vector<double> decision_scores(const SvmModel& model, const kernels::KernelMatrix& k_cross);

/// Label 1 iff score >= 0.
std::vector<int> predict_labels(std::span<const double> scores);

}  // namespace qsar::svm
