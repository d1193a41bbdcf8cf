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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace qsar::eval {

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
  /// Scores >= threshold are called positive; +inf for the first point.
  double threshold = 0.0;
};

struct RocReport {
  double auc = 0.0;
  std::vector<RocPoint> curve;
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
};

struct ConfusionReport {
  std::size_t tp = 0, tn = 0, fp = 0, fn = 0;
  double acc = 0.0, ppv = 0.0, tpr = 0.0, tnr = 0.0, f1 = 0.0, mcc = 0.0;
  /// Names of metrics whose denominator was zero (reported as 0).
  std::vector<std::string> degenerate;

  bool is_degenerate(std::string_view metric) const;
};

/// Pair-counting AUC with tied pairs worth 0.5. Throws SingleClassEval.
double roc_auc(std::span<const double> scores, std::span<const int> labels);

/// Stepwise curve over distinct thresholds in descending order. auc is the trapezoid area.
RocReport roc_curve(std::span<const double> scores, std::span<const int> labels);

/// Area under a curve by the trapezoid rule.
double trapezoid_area(std::span<const RocPoint> curve);

/// Predicted positive iff score >= threshold.
ConfusionReport confusion_metrics(std::span<const double> scores, std::span<const int> labels,
                                  double threshold = 0.0);

/// Columns: threshold,fpr,tpr.
void write_roc_csv(const std::filesystem::path& path, const RocReport& roc);

}  // namespace qsar::eval
