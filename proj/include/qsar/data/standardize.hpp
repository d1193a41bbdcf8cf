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

#include <vector>

#include "qsar/core/matrix.hpp"
#include "qsar/data/dataset.hpp"

namespace qsar::data {

struct StandardizerModel {
  std::vector<double> means;
  /// Population (1/n) standard deviations.
  std::vector<double> stds;
  std::vector<bool> zero_variance;

  std::size_t dimension() const noexcept { return means.size(); }
  friend bool operator==(const StandardizerModel&, const StandardizerModel&) = default;
};

/// Standard deviations at or below this are treated as zero.
inline constexpr double kZeroVarianceStd = 1e-12;

StandardizerModel fit_standardizer(const Matrix& X);
inline StandardizerModel fit_standardizer(const Dataset& train) { return fit_standardizer(train.X); }

/// (x − mean) / std per column; zero-variance columns map to 0.
Matrix transform_standardize(const StandardizerModel& model, const Matrix& X);

}  // namespace qsar::data
