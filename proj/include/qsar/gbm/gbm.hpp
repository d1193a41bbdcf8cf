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
#include <span>
#include <vector>

#include "qsar/core/matrix.hpp"

namespace qsar::gbm {

struct GbmParams {
  std::size_t n_trees = 100;
  std::size_t max_depth = 3;
  double learning_rate = 0.1;
  std::size_t min_leaf = 2;

  void validate() const;
};

/// Flat tree node. Leaves have feature == -1. Samples with x[feature] <= threshold go left.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  /// Raw Newton step; scaled by the learning rate at scoring time.
  double value = 0.0;

  bool is_leaf() const noexcept { return feature < 0; }
  bool operator==(const TreeNode&) const = default;
};

struct RegressionTree {
  /// nodes[0] is the root.
  std::vector<TreeNode> nodes;

  double predict(std::span<const double> x) const;
  bool operator==(const RegressionTree&) const = default;
};

struct GbmModel {
  double init_score = 0.0;
  double learning_rate = 0.1;
  std::size_t num_features = 0;
  std::vector<RegressionTree> trees;

  /// Throws InvalidParameter if a split feature is out of range or a leaf is non-finite.
  void validate() const;
  bool operator==(const GbmModel&) const = default;
};

struct GbmTrace {
  /// Mean training deviance before any tree and after each tree.
  std::vector<double> deviance;
};

struct Split {
  int feature = -1;
  double threshold = 0.0;
  double gain = 0.0;
};

/// Best variance-reduction split over rows `rows` of X, fitting `target`.
/// Scans features in parallel and reduces in feature order.
Split find_best_split(const Matrix& x, std::span<const double> target, std::span<const std::size_t> rows,
                      std::size_t min_leaf);
/// Single-threaded reference for find_best_split.
Split find_best_split_serial(const Matrix& x, std::span<const double> target, std::span<const std::size_t> rows,
                             std::size_t min_leaf);

/// Logistic-loss boosting. Throws SingleClassTraining, InvalidParameter, DimensionMismatch.
GbmModel train_gbm(const Matrix& x, std::span<const int> y, const GbmParams& params, GbmTrace* trace = nullptr);

/// init_score + Σ lr·tree(x). Throws DimensionMismatch.
std::vector<double> gbm_scores(const GbmModel& model, const Matrix& x);

/// Mean binomial deviance 2·log(1 + exp(−s·f)), s = 2y − 1.
double logistic_deviance(std::span<const double> scores, std::span<const int> y);

}  // namespace qsar::gbm
