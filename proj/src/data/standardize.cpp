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

#include "qsar/data/standardize.hpp"

#include <cmath>

#include "qsar/core/error.hpp"

namespace qsar::data {

StandardizerModel fit_standardizer(const Matrix& X) {
  if (X.rows() < 2) throw Error(ErrorCode::TooFewRows, "standardizer needs at least 2 rows");
  const std::size_t n = X.rows(), d = X.cols();
  StandardizerModel model;
  model.means.assign(d, 0.0);
  model.stds.assign(d, 0.0);
  model.zero_variance.assign(d, false);
  for (std::size_t c = 0; c < d; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) sum += X(r, c);
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double dev = X(r, c) - mean;
      ss += dev * dev;
    }
    model.means[c] = mean;
    model.stds[c] = std::sqrt(ss / static_cast<double>(n));
    model.zero_variance[c] = model.stds[c] <= kZeroVarianceStd;
  }
  return model;
}

Matrix transform_standardize(const StandardizerModel& model, const Matrix& X) {
  if (X.cols() != model.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "standardizer fitted on " + std::to_string(model.dimension()) +
                                                  " columns, got " + std::to_string(X.cols()));
  }
  Matrix out(X.rows(), X.cols());
  for (std::size_t r = 0; r < X.rows(); ++r)
    for (std::size_t c = 0; c < X.cols(); ++c)
      out(r, c) = model.zero_variance[c] ? 0.0 : (X(r, c) - model.means[c]) / model.stds[c];
  return out;
}

}  // namespace qsar::data
