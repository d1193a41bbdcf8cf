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

#include <filesystem>
#include <string>
#include <vector>

#include "qsar/eval/metrics.hpp"
#include "qsar/kernels/alignment.hpp"
#include "qsar/pipeline/config.hpp"
#include "qsar/pipeline/inputs.hpp"
#include "qsar/pipeline/models.hpp"

namespace qsar::pipeline {

std::string tool_version();

inline constexpr const char* kQmklSvm = "qmkl_svm";
inline constexpr const char* kRbfSvm = "rbf_svm";
inline constexpr const char* kGradientBoosting = "gradient_boosting";

struct ModelResult {
  std::string name;
  std::vector<double> test_scores;
  eval::RocReport roc;
  eval::ConfusionReport confusion;
};

/// Preprocessing fitted on the training rows only, plus projected features.
struct PreparedData {
  TrainTest raw;
  Preprocessing preprocessing;
  Matrix train_features;
  Matrix test_features;
};

PreparedData prepare(const PipelineConfig& config);

/// Basis Gram matrices on the training features and their convex weights.
struct BasisKernels {
  std::vector<kernels::KernelSpec> specs;
  std::vector<kernels::KernelMatrix> train;
  kernels::AlignmentWeights weights;
  kernels::KernelMatrix combined;
};

BasisKernels build_basis(const PipelineConfig& config, const PreparedData& data);

struct CompareResult {
  Json report;
  std::vector<ModelResult> models;
  std::filesystem::path report_path;
};

/// Full benchmark: preprocessing, QMKL-SVM, RBF-SVM baseline and GBM, metrics.
/// Writes report.json, roc_<model>.csv, scores_<model>.csv and
/// model_<model>.json under out_dir. Wall-times are kept in the report's
/// "timing" object; everything else depends only on (config, seed).
CompareResult run_compare(const PipelineConfig& config, const std::filesystem::path& out_dir);

/// Writes <kernel>.kmat per basis kernel, combined.kmat and alignment_summary.csv.
BasisKernels run_kernels(const PipelineConfig& config, const std::filesystem::path& out_dir);

/// id,label,score
void write_scores_csv(const std::filesystem::path& path, const std::vector<std::string>& ids,
                      const std::vector<int>& labels, const std::vector<double>& scores);

}  // namespace qsar::pipeline
