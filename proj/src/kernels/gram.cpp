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

#include "qsar/kernels/gram.hpp"

#include <cmath>
#include <limits>

#include "qsar/core/error.hpp"
#include "qsar/qsim/feature_map.hpp"

namespace qsar::kernels {

double asymmetry(const Matrix& k) {
  if (k.rows() != k.cols()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = i + 1; j < k.cols(); ++j) worst = std::max(worst, std::abs(k(i, j) - k(j, i)));
  return worst;
}

double rbf_value(std::span<const double> a, std::span<const double> b, double gamma) {
  double d2 = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    d2 += diff * diff;
  }
  return std::exp(-gamma * d2);
}

double kernel_value(std::span<const double> a, std::span<const double> b, const KernelSpec& spec) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "kernel arguments differ in length");
  if (spec.is_quantum()) {
    return qsim::fidelity(qsim::prepare_state(a, spec.feature_map()), qsim::prepare_state(b, spec.feature_map()));
  }
  return rbf_value(a, b, spec.gamma());
}

std::vector<qsim::StateVector> prepare_states(const Matrix& X, const qsim::FeatureMapSpec& map) {
  map.validate();
  if (X.cols() != map.num_qubits) {
    throw Error(ErrorCode::DimensionMismatch, "feature map has " + std::to_string(map.num_qubits) +
                                                  " qubits but data has " + std::to_string(X.cols()) + " columns");
  }
  std::vector<qsim::StateVector> states(X.rows(), qsim::StateVector(map.num_qubits));
  const long long n = static_cast<long long>(X.rows());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(i);
    states[r] = qsim::prepare_state(X.row(r), map);
  }
  return states;
}

namespace {

void check_shapes(const Matrix& A, const Matrix& B, const KernelSpec& spec) {
  spec.validate();
  if (A.cols() != B.cols()) throw Error(ErrorCode::DimensionMismatch, "Gram operands differ in column count");
  if (spec.is_quantum() && A.cols() != spec.feature_map().num_qubits) {
    throw Error(ErrorCode::DimensionMismatch, "quantum kernel '" + spec.name + "' expects " +
                                                  std::to_string(spec.feature_map().num_qubits) + " features");
  }
}

}  // namespace

KernelMatrix gram_matrix(const Matrix& A, const Matrix& B, const KernelSpec& spec, std::vector<std::string> row_ids,
                         std::vector<std::string> col_ids) {
  check_shapes(A, B, spec);
  const bool symmetric = &A == &B;
  const std::size_t r = A.rows(), c = B.rows();
  KernelMatrix out;
  out.values = Matrix(r, c);
  out.row_ids = std::move(row_ids);
  out.col_ids = std::move(col_ids);
  out.symmetric = symmetric;
  out.provenance = spec.name;

  const long long rows = static_cast<long long>(r);
  if (spec.is_quantum()) {
    const auto sa = prepare_states(A, spec.feature_map());
    const auto sb = symmetric ? std::vector<qsim::StateVector>{} : prepare_states(B, spec.feature_map());
    const auto& cols = symmetric ? sa : sb;
#pragma omp parallel for schedule(dynamic, 4)
    for (long long ii = 0; ii < rows; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      for (std::size_t j = symmetric ? i : 0; j < c; ++j) {
        const double v = qsim::fidelity(sa[i], cols[j]);
        out.values(i, j) = v;
        if (symmetric) out.values(j, i) = v;
      }
    }
  } else {
    const double gamma = spec.gamma();
#pragma omp parallel for schedule(dynamic, 4)
    for (long long ii = 0; ii < rows; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      for (std::size_t j = symmetric ? i : 0; j < c; ++j) {
        const double v = rbf_value(A.row(i), B.row(j), gamma);
        out.values(i, j) = v;
        if (symmetric) out.values(j, i) = v;
      }
    }
  }
  return out;
}

KernelMatrix gram_matrix_serial(const Matrix& A, const Matrix& B, const KernelSpec& spec, bool symmetric) {
  check_shapes(A, B, spec);
  KernelMatrix out;
  out.values = Matrix(A.rows(), B.rows());
  out.symmetric = symmetric;
  out.provenance = spec.name;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < B.rows(); ++j) out.values(i, j) = kernel_value(A.row(i), B.row(j), spec);
  return out;
}

}  // namespace qsar::kernels
