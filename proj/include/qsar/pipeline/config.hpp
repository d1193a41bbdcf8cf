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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsar/data/dataset.hpp"
#include "qsar/gbm/gbm.hpp"
#include "qsar/kernels/kernel_spec.hpp"
#include "qsar/svm/smo.hpp"

namespace qsar::pipeline {

using Json = nlohmann::ordered_json;

/// Two Gaussian classes with means ±separation on every axis and identity covariance.
struct SyntheticSource {
  std::size_t n_train = 200;
  std::size_t n_test = 100;
  std::size_t dimension = 4;
  double separation = 0.7;
};

struct InputConfig {
  std::optional<SyntheticSource> synthetic;
  std::filesystem::path train_path;
  std::filesystem::path test_path;
  /// Test fraction for a seeded stratified split of train_path.
  std::optional<double> split_fraction;
  std::string label_column = "label";
  data::LabelKind label_kind = data::LabelKind::Binary;
  std::string id_column = "id";
  std::vector<std::string> feature_columns;
  std::vector<std::string> skip_columns;
  /// When set, features are the native descriptors computed from this column.
  std::string smiles_column;
};

enum class Weighting { Alignment, Uniform };

struct PipelineConfig {
  InputConfig input;
  std::size_t pca_components = 4;
  /// Empty selects the default ensemble for pca_components features.
  std::vector<kernels::KernelSpec> kernels;
  Weighting weighting = Weighting::Alignment;
  bool center_alignment = true;
  /// RBF gamma of the single-kernel baseline SVM; defaults to 1/pca_components.
  std::optional<double> baseline_gamma;
  svm::SvmParams svm;
  gbm::GbmParams gbm;
  double threshold = 0.0;
  std::filesystem::path output_dir = "qsar_out";
  std::filesystem::path cache_dir;
  std::uint64_t seed = 7;

  /// Throws Error(Config) when an invariant fails.
  void validate() const;
  /// Kernels with quantum qubit counts set to pca_components.
  std::vector<kernels::KernelSpec> resolved_kernels() const;
  double resolved_baseline_gamma() const;
};

/// Parses a config document. Relative input paths resolve against `base_dir`.
/// Unknown keys and wrong types throw Error(Config).
PipelineConfig parse_config(const Json& doc, const std::filesystem::path& base_dir = {});
PipelineConfig load_config(const std::filesystem::path& path);

/// Canonical echo of a resolved config, as written into the report.
Json config_to_json(const PipelineConfig& config);

Json kernel_spec_to_json(const kernels::KernelSpec& spec);
kernels::KernelSpec kernel_spec_from_json(const Json& j);

}  // namespace qsar::pipeline
