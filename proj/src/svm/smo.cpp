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

#include "qsar/svm/smo.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qsar/core/error.hpp"

namespace qsar::svm {

void SvmParams::validate() const {
  if (!(C > 0.0) || !std::isfinite(C)) throw Error(ErrorCode::InvalidParameter, "SVM C must be positive");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidParameter, "SVM tol must be positive");
  if (max_passes == 0) throw Error(ErrorCode::InvalidParameter, "SVM max_passes must be >= 1");
  if (max_sweeps == 0) throw Error(ErrorCode::InvalidParameter, "SVM max_sweeps must be >= 1");
}

double dual_objective(std::span<const double> alpha_y, const KernelFunction& kernel) {
  const std::size_t n = alpha_y.size();
  double linear = 0.0, quadratic = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    linear += std::abs(alpha_y[i]);
    if (alpha_y[i] == 0.0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (alpha_y[j] != 0.0) row += alpha_y[j] * kernel(i, j);
    quadratic += alpha_y[i] * row;
  }
  return linear - 0.5 * quadratic;
}

namespace {

class Smo {
 public:
  Smo(const KernelFunction& kernel, std::size_t n, std::span<const int> y, const SvmParams& params)
      : k_(kernel), n_(n), params_(params), rng_(params.seed), alpha_(n, 0.0), s_(n), f_(n, 0.0) {
    for (std::size_t i = 0; i < n; ++i) s_[i] = y[i] == 1 ? 1.0 : -1.0;
  }

  void run(SvmTrace* trace) {
    if (trace) trace->objective.push_back(objective());
    std::size_t passes = 0, sweeps = 0;
    while (passes < params_.max_passes && sweeps < params_.max_sweeps) {
      std::size_t changed = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (!violates_kkt(i)) continue;
        if (examine(i)) ++changed;
      }
      ++sweeps;
      if (trace) trace->objective.push_back(objective());
      passes = changed == 0 ? passes + 1 : 0;
    }
    if (trace) {
      trace->sweeps = sweeps;
      trace->updates = updates_;
      trace->converged = passes >= params_.max_passes;
    }
  }

  SvmModel model() const {
    SvmModel m;
    m.C = params_.C;
    m.bias = bias_;
    m.alpha_y.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      m.alpha_y[i] = alpha_[i] * s_[i];
      if (alpha_[i] > 0.0) m.support_indices.push_back(i);
    }
    return m;
  }

 private:
  double error(std::size_t i) const { return f_[i] - s_[i]; }

  bool violates_kkt(std::size_t i) const {
    const double r = s_[i] * error(i);
    return (r < -params_.tol && alpha_[i] < params_.C) || (r > params_.tol && alpha_[i] > 0.0);
  }

  bool examine(std::size_t i) {
    if (n_ < 2) return false;
    // Seeded random partner first.
    std::uniform_int_distribution<std::size_t> pick(0, n_ - 2);
    std::size_t j = pick(rng_);
    if (j >= i) ++j;
    if (take_step(i, j)) return true;

    // Largest |E_i − E_j|.
    const double ei = error(i);
    std::size_t best = n_;
    double best_gap = -1.0;
    for (std::size_t c = 0; c < n_; ++c) {
      if (c == i) continue;
      const double gap = std::abs(ei - error(c));
      if (gap > best_gap) {
        best_gap = gap;
        best = c;
      }
    }
    if (best != n_ && best != j && take_step(i, best)) return true;

    std::uniform_int_distribution<std::size_t> offset(0, n_ - 1);
    const std::size_t start = offset(rng_);
    for (std::size_t step = 0; step < n_; ++step) {
      const std::size_t c = (start + step) % n_;
      if (c == i || c == j || c == best) continue;
      if (take_step(i, c)) return true;
    }
    return false;
  }

  bool take_step(std::size_t i, std::size_t j) {
    const double C = params_.C;
    const double ai = alpha_[i], aj = alpha_[j];
    const double si = s_[i], sj = s_[j];
    const double ei = error(i), ej = error(j);

    double lo, hi;
    if (si != sj) {
      lo = std::max(0.0, aj - ai);
      hi = std::min(C, C + aj - ai);
    } else {
      lo = std::max(0.0, ai + aj - C);
      hi = std::min(C, ai + aj);
    }
    if (hi - lo <= 0.0) return false;

    const double kii = k_(i, i), kjj = k_(j, j), kij = k_(i, j);
    const double eta = 2.0 * kij - kii - kjj;
    if (eta >= -1e-12) return false;

    double aj_new = std::clamp(aj - sj * (ei - ej) / eta, lo, hi);
    if (std::abs(aj_new - aj) <= 1e-12 * (aj_new + aj + 1e-12)) return false;
    double ai_new = ai + si * sj * (aj - aj_new);
    if (ai_new < 0.0) {
      aj_new += si * sj * ai_new;
      ai_new = 0.0;
    } else if (ai_new > C) {
      aj_new += si * sj * (ai_new - C);
      ai_new = C;
    }
    const double dai = ai_new - ai, daj = aj_new - aj;

    const double b1 = bias_ - ei - si * dai * kii - sj * daj * kij;
    const double b2 = bias_ - ej - si * dai * kij - sj * daj * kjj;
    double b_new;
    if (ai_new > 0.0 && ai_new < C) {
      b_new = b1;
    } else if (aj_new > 0.0 && aj_new < C) {
      b_new = b2;
    } else {
      b_new = 0.5 * (b1 + b2);
    }

    const double db = b_new - bias_;
    for (std::size_t c = 0; c < n_; ++c) f_[c] += si * dai * k_(i, c) + sj * daj * k_(j, c) + db;
    alpha_[i] = ai_new;
    alpha_[j] = aj_new;
    bias_ = b_new;
    ++updates_;
    return true;
  }

  double objective() const {
    std::vector<double> ay(n_);
    for (std::size_t i = 0; i < n_; ++i) ay[i] = alpha_[i] * s_[i];
    return dual_objective(ay, k_);
  }

  const KernelFunction& k_;
  std::size_t n_;
  SvmParams params_;
  std::mt19937_64 rng_;
  std::vector<double> alpha_;
  std::vector<double> s_;
  std::vector<double> f_;  // decision values on training points, bias included
  double bias_ = 0.0;
  std::size_t updates_ = 0;
};

void check_labels(std::span<const int> y, std::size_t n) {
  if (y.size() != n) throw Error(ErrorCode::DimensionMismatch, "label count does not match kernel size");
  bool pos = false, neg = false;
  for (int v : y) {
    if (v != 0 && v != 1) throw Error(ErrorCode::NonBinaryLabel, "labels must be 0 or 1");
    (v == 1 ? pos : neg) = true;
  }
  if (!pos || !neg) throw Error(ErrorCode::SingleClassTraining, "SVM training needs both classes");
}

}  // namespace

SvmModel train_svm(const KernelFunction& kernel, std::size_t n, std::span<const int> y, const SvmParams& params,
                   SvmTrace* trace, std::vector<std::string> train_ids) {
  params.validate();
  check_labels(y, n);
  Smo smo(kernel, n, y, params);
  smo.run(trace);
  SvmModel model = smo.model();
  model.train_ids = std::move(train_ids);
  return model;
}

SvmModel train_svm(const kernels::KernelMatrix& k_train, std::span<const int> y, const SvmParams& params,
                   SvmTrace* trace) {
  if (k_train.rows() != k_train.cols()) throw Error(ErrorCode::NotSymmetric, "training kernel must be square");
  if (!k_train.symmetric && kernels::asymmetry(k_train.values) > 1e-12) {
    throw Error(ErrorCode::NotSymmetric, "training kernel is not symmetric");
  }
  const Matrix& values = k_train.values;
  const KernelFunction lookup = [&values](std::size_t i, std::size_t j) { return values(i, j); };
  return train_svm(lookup, k_train.rows(), y, params, trace, k_train.row_ids);
}

std::vector<double> decision_scores(const SvmModel& model, const kernels::KernelMatrix& k_cross) {
  if (k_cross.cols() != model.train_size()) {
    throw Error(ErrorCode::IdMismatch, "kernel has " + std::to_string(k_cross.cols()) + " columns, model has " +
                                           std::to_string(model.train_size()) + " training points");
  }
  if (k_cross.col_ids != model.train_ids) {
    throw Error(ErrorCode::IdMismatch, "kernel column ids do not match the model's training ids");
  }
  std::vector<double> scores(k_cross.rows(), model.bias);
  for (std::size_t t = 0; t < k_cross.rows(); ++t) {
    double sum = 0.0;
    for (std::size_t i : model.support_indices) sum += model.alpha_y[i] * k_cross(t, i);
    scores[t] = sum + model.bias;
  }
  return scores;
}

std::vector<int> predict_labels(std::span<const double> scores) {
  std::vector<int> out(scores.size());
  std::transform(scores.begin(), scores.end(), out.begin(), [](double s) { return s >= 0.0 ? 1 : 0; });
  return out;
}

}  // namespace qsar::svm
