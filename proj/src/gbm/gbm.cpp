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

#include "qsar/gbm/gbm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qsar/core/error.hpp"

namespace qsar::gbm {

void GbmParams::validate() const {
  if (n_trees == 0) throw Error(ErrorCode::InvalidParameter, "n_trees must be >= 1");
  if (max_depth == 0) throw Error(ErrorCode::InvalidParameter, "max_depth must be >= 1");
  if (!(learning_rate > 0.0 && learning_rate <= 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "learning_rate must be in (0, 1]");
  }
  if (min_leaf == 0) throw Error(ErrorCode::InvalidParameter, "min_leaf must be >= 1");
}

double RegressionTree::predict(std::span<const double> x) const {
  std::size_t at = 0;
  while (!nodes[at].is_leaf()) {
    const TreeNode& n = nodes[at];
    at = static_cast<std::size_t>(x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right);
  }
  return nodes[at].value;
}

void GbmModel::validate() const {
  if (!std::isfinite(init_score)) throw Error(ErrorCode::InvalidParameter, "init_score is not finite");
  for (const RegressionTree& t : trees) {
    if (t.nodes.empty()) throw Error(ErrorCode::InvalidParameter, "empty tree");
    for (const TreeNode& n : t.nodes) {
      if (n.is_leaf()) {
        if (!std::isfinite(n.value)) throw Error(ErrorCode::InvalidParameter, "non-finite leaf value");
        continue;
      }
      if (static_cast<std::size_t>(n.feature) >= num_features) {
        throw Error(ErrorCode::InvalidParameter, "split feature out of range");
      }
      const auto size = static_cast<int>(t.nodes.size());
      if (n.left <= 0 || n.right <= 0 || n.left >= size || n.right >= size) {
        throw Error(ErrorCode::InvalidParameter, "bad child index");
      }
    }
  }
}

namespace {

Split best_for_feature(const Matrix& x, std::span<const double> target, std::span<const std::size_t> rows,
                       std::size_t min_leaf, std::size_t f) {
  Split best;
  const std::size_t n = rows.size();
  std::vector<std::size_t> order(rows.begin(), rows.end());
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x(a, f) < x(b, f); });

  double total = 0.0;
  for (std::size_t r : order) total += target[r];
  const double base = total * total / static_cast<double>(n);

  double left_sum = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    left_sum += target[order[k]];
    const double lo = x(order[k], f), hi = x(order[k + 1], f);
    if (!(lo < hi)) continue;
    const std::size_t n_left = k + 1, n_right = n - n_left;
    if (n_left < min_leaf || n_right < min_leaf) continue;
    const double right_sum = total - left_sum;
    const double gain = left_sum * left_sum / static_cast<double>(n_left) +
                        right_sum * right_sum / static_cast<double>(n_right) - base;
    if (gain > best.gain) {
      double mid = lo + 0.5 * (hi - lo);
      if (!(mid < hi)) mid = lo;
      best = {static_cast<int>(f), mid, gain};
    }
  }
  return best;
}

Split reduce(const std::vector<Split>& per_feature) {
  Split best;
  for (const Split& s : per_feature) {
    if (s.feature >= 0 && s.gain > best.gain) best = s;
  }
  return best;
}

}  // namespace

Split find_best_split(const Matrix& x, std::span<const double> target, std::span<const std::size_t> rows,
                      std::size_t min_leaf) {
  const auto d = static_cast<long long>(x.cols());
  std::vector<Split> per_feature(x.cols());
#pragma omp parallel for schedule(static)
  for (long long f = 0; f < d; ++f) {
    per_feature[static_cast<std::size_t>(f)] = best_for_feature(x, target, rows, min_leaf, static_cast<std::size_t>(f));
  }
  return reduce(per_feature);
}

Split find_best_split_serial(const Matrix& x, std::span<const double> target, std::span<const std::size_t> rows,
                             std::size_t min_leaf) {
  std::vector<Split> per_feature(x.cols());
  for (std::size_t f = 0; f < x.cols(); ++f) per_feature[f] = best_for_feature(x, target, rows, min_leaf, f);
  return reduce(per_feature);
}

namespace {

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

class TreeBuilder {
 public:
  TreeBuilder(const Matrix& x, std::span<const double> residual, std::span<const double> hessian,
              const GbmParams& params)
      : x_(x), residual_(residual), hessian_(hessian), params_(params) {}

  RegressionTree build(std::vector<std::size_t> rows) {
    tree_.nodes.clear();
    grow(std::move(rows), 0);
    return std::move(tree_);
  }

 private:
  int grow(std::vector<std::size_t> rows, std::size_t depth) {
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    Split split;
    if (depth < params_.max_depth && rows.size() >= 2 * params_.min_leaf) {
      split = find_best_split(x_, residual_, rows, params_.min_leaf);
    }
    if (split.feature < 0) {
      tree_.nodes[static_cast<std::size_t>(id)].value = leaf_value(rows);
      return id;
    }
    std::vector<std::size_t> left, right;
    const auto f = static_cast<std::size_t>(split.feature);
    for (std::size_t r : rows) (x_(r, f) <= split.threshold ? left : right).push_back(r);
    rows.clear();
    rows.shrink_to_fit();
    const int l = grow(std::move(left), depth + 1);
    const int r = grow(std::move(right), depth + 1);
    TreeNode& node = tree_.nodes[static_cast<std::size_t>(id)];
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.left = l;
    node.right = r;
    return id;
  }

  double leaf_value(const std::vector<std::size_t>& rows) const {
    double num = 0.0, den = 0.0;
    for (std::size_t r : rows) {
      num += residual_[r];
      den += hessian_[r];
    }
    return std::abs(den) < 1e-150 ? 0.0 : num / den;
  }

  const Matrix& x_;
  std::span<const double> residual_;
  std::span<const double> hessian_;
  const GbmParams& params_;
  RegressionTree tree_;
};

}  // namespace

double logistic_deviance(std::span<const double> scores, std::span<const int> y) {
  if (scores.size() != y.size() || scores.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "score and label counts differ");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double m = (y[i] == 1 ? 1.0 : -1.0) * scores[i];
    // log(1 + exp(-m)) without overflow
    sum += std::max(-m, 0.0) + std::log1p(std::exp(-std::abs(m)));
  }
  return 2.0 * sum / static_cast<double>(scores.size());
}

GbmModel train_gbm(const Matrix& x, std::span<const int> y, const GbmParams& params, GbmTrace* trace) {
  params.validate();
  const std::size_t n = x.rows();
  if (y.size() != n) throw Error(ErrorCode::DimensionMismatch, "label count does not match rows");
  std::size_t pos = 0;
  for (int v : y) {
    if (v != 0 && v != 1) throw Error(ErrorCode::NonBinaryLabel, "labels must be 0 or 1");
    pos += static_cast<std::size_t>(v);
  }
  if (pos == 0 || pos == n) throw Error(ErrorCode::SingleClassTraining, "GBM training needs both classes");
  if (n < 2 * params.min_leaf) {
    throw Error(ErrorCode::InvalidParameter, "need at least 2*min_leaf = " + std::to_string(2 * params.min_leaf) +
                                                 " rows, got " + std::to_string(n));
  }

  GbmModel model;
  model.learning_rate = params.learning_rate;
  model.num_features = x.cols();
  const double p0 = static_cast<double>(pos) / static_cast<double>(n);
  model.init_score = std::log(p0 / (1.0 - p0));

  std::vector<double> f(n, model.init_score), residual(n), hessian(n);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (trace) trace->deviance.push_back(logistic_deviance(f, y));

  model.trees.reserve(params.n_trees);
  for (std::size_t t = 0; t < params.n_trees; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      const double p = sigmoid(f[i]);
      residual[i] = static_cast<double>(y[i]) - p;
      hessian[i] = p * (1.0 - p);
    }
    TreeBuilder builder(x, residual, hessian, params);
    RegressionTree tree = builder.build(all);
    for (std::size_t i = 0; i < n; ++i) f[i] += params.learning_rate * tree.predict(x.row(i));
    model.trees.push_back(std::move(tree));
    if (trace) trace->deviance.push_back(logistic_deviance(f, y));
  }
  return model;
}

std::vector<double> gbm_scores(const GbmModel& model, const Matrix& x) {
  if (x.cols() != model.num_features) {
    throw Error(ErrorCode::DimensionMismatch, "model expects " + std::to_string(model.num_features) +
                                                  " features, got " + std::to_string(x.cols()));
  }
  std::vector<double> out(x.rows(), model.init_score);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    double s = model.init_score;
    for (const RegressionTree& t : model.trees) s += model.learning_rate * t.predict(x.row(i));
    out[i] = s;
  }
  return out;
}

}  // namespace qsar::gbm
