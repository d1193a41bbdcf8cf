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

#include "qsar/data/pca.hpp"

#include <cmath>

#include "qsar/core/error.hpp"
#include "qsar/data/jacobi.hpp"

namespace qsar::data {

namespace {

std::vector<double> column_means(const Matrix& X) {
  std::vector<double> mean(X.cols(), 0.0);
  for (std::size_t r = 0; r < X.rows(); ++r)
    for (std::size_t c = 0; c < X.cols(); ++c) mean[c] += X(r, c);
  for (double& m : mean) m /= static_cast<double>(X.rows());
  return mean;
}

double covariance_entry(const Matrix& X, const std::vector<double>& mean, std::size_t i, std::size_t j) {
  double sum = 0.0;
  for (std::size_t r = 0; r < X.rows(); ++r) sum += (X(r, i) - mean[i]) * (X(r, j) - mean[j]);
  return sum / static_cast<double>(X.rows() - 1);
}

void check_rows(const Matrix& X) {
  if (X.rows() < 2) throw Error(ErrorCode::DegenerateData, "covariance needs at least 2 rows");
}

}  // namespace

Matrix covariance_serial(const Matrix& X) {
  check_rows(X);
  const auto mean = column_means(X);
  const std::size_t d = X.cols();
  Matrix cov(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) cov(i, j) = cov(j, i) = covariance_entry(X, mean, i, j);
  return cov;
}

Matrix covariance(const Matrix& X) {
  check_rows(X);
  const auto mean = column_means(X);
  const std::size_t d = X.cols();
  Matrix cov(d, d);
  const long long pairs = static_cast<long long>(d * d);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long idx = 0; idx < pairs; ++idx) {
    const std::size_t i = static_cast<std::size_t>(idx) / d;
    const std::size_t j = static_cast<std::size_t>(idx) % d;
    if (j < i) continue;
    const double v = covariance_entry(X, mean, i, j);
    cov(i, j) = v;
    cov(j, i) = v;
  }
  return cov;
}

PcaModel fit_pca(const Matrix& X, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidParameter, "PCA needs at least one component");
  if (k > X.cols()) {
    throw Error(ErrorCode::KTooLarge,
                "requested " + std::to_string(k) + " components from " + std::to_string(X.cols()) + " features");
  }
  check_rows(X);
  for (double v : X.data())
    if (!std::isfinite(v)) throw Error(ErrorCode::DegenerateData, "non-finite value in PCA input");

  const EigenDecomposition eig = jacobi_eigen(covariance(X), 1e-12);
  const std::size_t d = X.cols();
  PcaModel model;
  model.mean = column_means(X);
  model.all_eigenvalues = eig.values;
  model.components = Matrix(d, k);
  for (std::size_t c = 0; c < k; ++c) {
    model.eigenvalues.push_back(eig.values[c]);
    std::size_t argmax = 0;
    for (std::size_t r = 1; r < d; ++r)
      if (std::abs(eig.vectors(r, c)) > std::abs(eig.vectors(argmax, c))) argmax = r;
    const double sign = eig.vectors(argmax, c) < 0.0 ? -1.0 : 1.0;
    for (std::size_t r = 0; r < d; ++r) model.components(r, c) = sign * eig.vectors(r, c);
  }
  return model;
}

Matrix project_pca(const PcaModel& model, const Matrix& X) {
  if (X.cols() != model.input_dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "PCA fitted on " + std::to_string(model.input_dimension()) +
                                                  " columns, got " + std::to_string(X.cols()));
  }
  const std::size_t k = model.output_dimension();
  Matrix out(X.rows(), k);
  for (std::size_t r = 0; r < X.rows(); ++r)
    for (std::size_t c = 0; c < k; ++c) {
      double sum = 0.0;
      for (std::size_t j = 0; j < X.cols(); ++j) sum += (X(r, j) - model.mean[j]) * model.components(j, c);
      out(r, c) = sum;
    }
  return out;
}

}  // namespace qsar::data
