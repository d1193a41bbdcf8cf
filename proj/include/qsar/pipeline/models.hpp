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

#include "qsar/data/pca.hpp"
#include "qsar/data/standardize.hpp"
#include "qsar/gbm/gbm.hpp"
#include "qsar/kernels/alignment.hpp"
#include "qsar/pipeline/config.hpp"
#include "qsar/svm/smo.hpp"

namespace qsar::pipeline {

inline constexpr int kModelFormatVersion = 1;

/// Train-fitted preprocessing: raw features → standardized → PCA scores.
struct Preprocessing {
  std::vector<std::string> feature_names;
  data::StandardizerModel standardizer;
  data::PcaModel pca;

  Matrix apply(const Matrix& raw) const;
};

/// Everything needed to score new raw feature rows with a kernel SVM.
struct SvmBundle {
  Preprocessing preprocessing;
  kernels::KernelEnsemble ensemble;
  svm::SvmModel model;
  /// PCA scores of the training rows, in model.train_ids order.
  Matrix train_features;

  /// Combined test × train kernel for already-preprocessed rows.
  kernels::KernelMatrix cross_kernel(const Matrix& features, const std::vector<std::string>& ids) const;
  std::vector<double> score_features(const Matrix& features, const std::vector<std::string>& ids) const;
  std::vector<double> score_raw(const Matrix& raw, const std::vector<std::string>& ids) const;
};

struct GbmBundle {
  Preprocessing preprocessing;
  gbm::GbmModel model;

  std::vector<double> score_raw(const Matrix& raw) const;
};

Json to_json(const Preprocessing& p);
Json to_json(const SvmBundle& b);
Json to_json(const GbmBundle& b);
Preprocessing preprocessing_from_json(const Json& j);
SvmBundle svm_bundle_from_json(const Json& j);
GbmBundle gbm_bundle_from_json(const Json& j);

/// "svm" or "gbm", after checking the format tag and version.
std::string bundle_type(const Json& j);

void write_json(const std::filesystem::path& path, const Json& j);
Json read_json(const std::filesystem::path& path);

}  // namespace qsar::pipeline
