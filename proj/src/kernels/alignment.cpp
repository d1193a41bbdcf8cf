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

#include "qsar/kernels/alignment.hpp"

#include <cmath>

#include "qsar/core/error.hpp"

namespace qsar::kernels {

double frobenius_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "Frobenius product of differently shaped matrices");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) sum += a.data()[i] * b.data()[i];
  return sum;
}

Matrix center_kernel(const Matrix& k) {
  if (k.rows() != k.cols()) throw Error(ErrorCode::DimensionMismatch, "centering needs a square matrix");
  const std::size_t n = k.rows();
  std::vector<double> row_mean(n, 0.0), col_mean(n, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      row_mean[i] += k(i, j);
      col_mean[j] += k(i, j);
      total += k(i, j);
    }
  const double inv = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    row_mean[i] *= inv;
    col_mean[i] *= inv;
  }
  total *= inv * inv;
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = k(i, j) - row_mean[i] - col_mean[j] + total;
  return out;
}

KernelMatrix target_kernel(std::span<const int> y) {
  KernelMatrix out;
  const std::size_t n = y.size();
  out.values = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.values(i, j) = static_cast<double>((2 * y[i] - 1) * (2 * y[j] - 1));
  out.symmetric = true;
  out.provenance = "target";
  return out;
}

double alignment(const Matrix& k1, const Matrix& k2) {
  if (k1.rows() != k2.rows() || k1.cols() != k2.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "alignment of differently shaped matrices");
  }
  const double n1 = std::sqrt(frobenius_inner(k1, k1));
  const double n2 = std::sqrt(frobenius_inner(k2, k2));
  if (n1 == 0.0 || n2 == 0.0) throw Error(ErrorCode::ZeroMatrix, "alignment with a zero matrix");
  return frobenius_inner(k1, k2) / (n1 * n2);
}

double alignment(const KernelMatrix& k1, const KernelMatrix& k2) {
  if (!k1.symmetric || !k2.symmetric) throw Error(ErrorCode::NotSymmetric, "alignment needs symmetric kernels");
  return alignment(k1.values, k2.values);
}

AlignmentWeights average_alignment_weights(std::span<const KernelMatrix> kernels, std::span<const int> y,
                                           bool center) {
  AlignmentWeights out;
  const std::size_t m = kernels.size();
  if (m == 0) return out;
  const Matrix target = center ? center_kernel(target_kernel(y).values) : target_kernel(y).values;
  for (const KernelMatrix& k : kernels) {
    if (k.rows() != y.size() || k.cols() != y.size()) {
      throw Error(ErrorCode::DimensionMismatch, "basis kernel shape does not match label count");
    }
    double a = 0.0;
    try {
      a = alignment(center ? center_kernel(k.values) : k.values, target);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ZeroMatrix) throw;
    }
    out.alignments.push_back(a);
  }
  double total = 0.0;
  for (double a : out.alignments) total += std::max(a, 0.0);
  out.weights.resize(m);
  if (total > 0.0) {
    for (std::size_t i = 0; i < m; ++i) out.weights[i] = std::max(out.alignments[i], 0.0) / total;
  } else {
    out.uniform_fallback = true;
    for (double& w : out.weights) w = 1.0 / static_cast<double>(m);
  }
  return out;
}

void validate_weights(std::span<const double> weights, std::size_t expected_count) {
  if (weights.size() != expected_count || weights.empty()) {
    throw Error(ErrorCode::InvalidWeights, "expected " + std::to_string(expected_count) + " weights, got " +
                                               std::to_string(weights.size()));
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorCode::InvalidWeights, "weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) throw Error(ErrorCode::InvalidWeights, "weights must sum to 1");
}

KernelMatrix combine_kernels(std::span<const KernelMatrix> kernels, std::span<const double> weights) {
  validate_weights(weights, kernels.size());
  const KernelMatrix& first = kernels.front();
  KernelMatrix out;
  out.values = Matrix(first.rows(), first.cols());
  out.row_ids = first.row_ids;
  out.col_ids = first.col_ids;
  out.symmetric = true;
  out.provenance = "combined";
  for (std::size_t m = 0; m < kernels.size(); ++m) {
    const KernelMatrix& k = kernels[m];
    if (k.rows() != first.rows() || k.cols() != first.cols()) {
      throw Error(ErrorCode::DimensionMismatch, "combined kernels differ in shape");
    }
    out.symmetric = out.symmetric && k.symmetric;
    for (std::size_t i = 0; i < k.values.data().size(); ++i) out.values.data()[i] += weights[m] * k.values.data()[i];
  }
  return out;
}

void KernelEnsemble::validate() const {
  for (const KernelSpec& s : specs) s.validate();
  validate_weights(weights, specs.size());
}

}  // namespace qsar::kernels
