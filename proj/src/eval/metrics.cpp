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

#include "qsar/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>

#include "qsar/core/error.hpp"
#include "qsar/core/format.hpp"

namespace qsar::eval {

namespace {

struct Counts {
  std::size_t pos = 0;
  std::size_t neg = 0;
};

Counts check_inputs(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) {
    throw Error(ErrorCode::DimensionMismatch, "score and label counts differ");
  }
  Counts c;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1) throw Error(ErrorCode::NonBinaryLabel, "labels must be 0 or 1");
    if (std::isnan(scores[i])) throw Error(ErrorCode::InvalidParameter, "NaN score");
    (labels[i] == 1 ? c.pos : c.neg) += 1;
  }
  if (c.pos == 0 || c.neg == 0) throw Error(ErrorCode::SingleClassEval, "AUC needs both classes");
  return c;
}

std::vector<std::size_t> order_by(std::span<const double> scores, bool descending) {
  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return descending ? scores[a] > scores[b] : scores[a] < scores[b];
  });
  return idx;
}

}  // namespace

bool ConfusionReport::is_degenerate(std::string_view metric) const {
  return std::find(degenerate.begin(), degenerate.end(), metric) != degenerate.end();
}

double roc_auc(std::span<const double> scores, std::span<const int> labels) {
  const Counts c = check_inputs(scores, labels);
  const auto idx = order_by(scores, false);
  // Positives beat every negative strictly below them and half of the tied ones.
  double concordant = 0.0;
  std::size_t neg_below = 0;
  for (std::size_t g = 0; g < idx.size();) {
    std::size_t end = g, pos = 0, neg = 0;
    while (end < idx.size() && scores[idx[end]] == scores[idx[g]]) {
      (labels[idx[end]] == 1 ? pos : neg) += 1;
      ++end;
    }
    concordant += static_cast<double>(pos) * static_cast<double>(neg_below) +
                  0.5 * static_cast<double>(pos) * static_cast<double>(neg);
    neg_below += neg;
    g = end;
  }
  return concordant / (static_cast<double>(c.pos) * static_cast<double>(c.neg));
}

RocReport roc_curve(std::span<const double> scores, std::span<const int> labels) {
  const Counts c = check_inputs(scores, labels);
  RocReport r;
  r.n_pos = c.pos;
  r.n_neg = c.neg;
  const double P = static_cast<double>(c.pos), N = static_cast<double>(c.neg);
  r.curve.push_back({0.0, 0.0, std::numeric_limits<double>::infinity()});
  const auto idx = order_by(scores, true);
  std::size_t tp = 0, fp = 0;
  for (std::size_t g = 0; g < idx.size();) {
    const double t = scores[idx[g]];
    while (g < idx.size() && scores[idx[g]] == t) {
      (labels[idx[g]] == 1 ? tp : fp) += 1;
      ++g;
    }
    r.curve.push_back({static_cast<double>(fp) / N, static_cast<double>(tp) / P, t});
  }
  r.auc = trapezoid_area(r.curve);
  return r;
}

double trapezoid_area(std::span<const RocPoint> curve) {
  double area = 0.0;
  for (std::size_t k = 1; k < curve.size(); ++k) {
    area += (curve[k].fpr - curve[k - 1].fpr) * (curve[k].tpr + curve[k - 1].tpr) * 0.5;
  }
  return area;
}

ConfusionReport confusion_metrics(std::span<const double> scores, std::span<const int> labels, double threshold) {
  if (scores.size() != labels.size()) throw Error(ErrorCode::DimensionMismatch, "score and label counts differ");
  ConfusionReport r;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool predicted = scores[i] >= threshold;
    const bool actual = labels[i] == 1;
    if (predicted && actual) ++r.tp;
    else if (predicted) ++r.fp;
    else if (actual) ++r.fn;
    else ++r.tn;
  }
  const auto ratio = [&r](const char* name, double num, double den) {
    if (den == 0.0) {
      r.degenerate.emplace_back(name);
      return 0.0;
    }
    return num / den;
  };
  const double tp = static_cast<double>(r.tp), tn = static_cast<double>(r.tn);
  const double fp = static_cast<double>(r.fp), fn = static_cast<double>(r.fn);
  r.acc = ratio("acc", tp + tn, tp + tn + fp + fn);
  r.ppv = ratio("ppv", tp, tp + fp);
  r.tpr = ratio("tpr", tp, tp + fn);
  r.tnr = ratio("tnr", tn, tn + fp);
  r.f1 = ratio("f1", 2.0 * tp, 2.0 * tp + fp + fn);
  const double den = std::sqrt((tp + fp) * (tp + fn) * (tn + fp) * (tn + fn));
  r.mcc = std::clamp(ratio("mcc", tp * tn - fp * fn, den), -1.0, 1.0);
  return r;
}

void write_roc_csv(const std::filesystem::path& path, const RocReport& roc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << "threshold,fpr,tpr\n";
  for (const RocPoint& p : roc.curve) {
    out << (std::isinf(p.threshold) ? std::string("inf") : format_double(p.threshold)) << ','
        << format_double(p.fpr) << ',' << format_double(p.tpr) << '\n';
  }
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace qsar::eval
