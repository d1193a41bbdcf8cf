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

#include <span>
#include <vector>

#include "qsar/core/matrix.hpp"
#include "qsar/kernels/kernel_matrix.hpp"
#include "qsar/kernels/kernel_spec.hpp"

namespace qsar::kernels {

double frobenius_inner(const Matrix& a, const Matrix& b);

/// H·K·H with H = I − (1/n)·ones.
Matrix center_kernel(const Matrix& k);

/// Label outer product s·sᵀ with s = 2y − 1.
KernelMatrix target_kernel(std::span<const int> y);

/// <K1, K2>_F / (‖K1‖_F ‖K2‖_F). Throws ZeroMatrix, DimensionMismatch, NotSymmetric.
double alignment(const KernelMatrix& k1, const KernelMatrix& k2);
double alignment(const Matrix& k1, const Matrix& k2);

struct AlignmentWeights {
  /// Kernel-target alignment of each basis kernel (0 when undefined).
  std::vector<double> alignments;
  /// max(a_i, 0) / Σ max(a_j, 0), or uniform when every a_i <= 0.
  std::vector<double> weights;
  bool uniform_fallback = false;
};

/// Alignment-proportional convex weights. With `center` (the default) both
/// the basis kernels and the target are centered before aligning.
AlignmentWeights average_alignment_weights(std::span<const KernelMatrix> kernels, std::span<const int> y,
                                           bool center = true);

inline constexpr double kWeightSumTolerance = 1e-12;

/// Throws InvalidWeights unless weights are non-negative and sum to 1.
void validate_weights(std::span<const double> weights, std::size_t expected_count);

/// Σ w_i K_i in index order.
KernelMatrix combine_kernels(std::span<const KernelMatrix> kernels, std::span<const double> weights);

/// Basis kernels with their convex weights.
struct KernelEnsemble {
  std::vector<KernelSpec> specs;
  std::vector<double> weights;

  void validate() const;
};

}  // namespace qsar::kernels
