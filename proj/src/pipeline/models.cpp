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

#include "qsar/pipeline/models.hpp"

#include <fstream>

#include "qsar/core/error.hpp"
#include "qsar/kernels/gram.hpp"

namespace qsar::pipeline {

namespace {

constexpr const char* kFormatTag = "qmkl-qsar-model";

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

Matrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  Matrix m(rows, cols);
  const Json& data = j.at("data");
  if (data.size() != rows) throw Error(ErrorCode::Config, "matrix row count mismatch in model file");
  for (std::size_t r = 0; r < rows; ++r) {
    if (data[r].size() != cols) throw Error(ErrorCode::Config, "matrix column count mismatch in model file");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = data[r][c].get<double>();
  }
  return m;
}

Json header(const char* type) { return {{"format", kFormatTag}, {"version", kModelFormatVersion}, {"type", type}}; }

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Config, std::string("malformed model file: ") + e.what());
  }
}

}  // namespace

Matrix Preprocessing::apply(const Matrix& raw) const {
  return data::project_pca(pca, data::transform_standardize(standardizer, raw));
}

kernels::KernelMatrix SvmBundle::cross_kernel(const Matrix& features, const std::vector<std::string>& ids) const {
  std::vector<kernels::KernelMatrix> basis;
  basis.reserve(ensemble.specs.size());
  for (const kernels::KernelSpec& spec : ensemble.specs) {
    basis.push_back(kernels::gram_matrix(features, train_features, spec, ids, model.train_ids));
  }
  return kernels::combine_kernels(basis, ensemble.weights);
}

std::vector<double> SvmBundle::score_features(const Matrix& features, const std::vector<std::string>& ids) const {
  return svm::decision_scores(model, cross_kernel(features, ids));
}

std::vector<double> SvmBundle::score_raw(const Matrix& raw, const std::vector<std::string>& ids) const {
  return score_features(preprocessing.apply(raw), ids);
}

std::vector<double> GbmBundle::score_raw(const Matrix& raw) const {
  return gbm::gbm_scores(model, preprocessing.apply(raw));
}

Json to_json(const Preprocessing& p) {
  Json zero = Json::array();
  for (bool z : p.standardizer.zero_variance) zero.push_back(z);
  return {
      {"feature_names", p.feature_names},
      {"standardizer", {{"means", p.standardizer.means}, {"stds", p.standardizer.stds}, {"zero_variance", zero}}},
      {"pca",
       {{"mean", p.pca.mean},
        {"components", matrix_to_json(p.pca.components)},
        {"eigenvalues", p.pca.eigenvalues},
        {"all_eigenvalues", p.pca.all_eigenvalues}}},
  };
}

Preprocessing preprocessing_from_json(const Json& j) {
  return guarded([&] {
    Preprocessing p;
    p.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    const Json& s = j.at("standardizer");
    p.standardizer.means = s.at("means").get<std::vector<double>>();
    p.standardizer.stds = s.at("stds").get<std::vector<double>>();
    for (const Json& z : s.at("zero_variance")) p.standardizer.zero_variance.push_back(z.get<bool>());
    const Json& pca = j.at("pca");
    p.pca.mean = pca.at("mean").get<std::vector<double>>();
    p.pca.components = matrix_from_json(pca.at("components"));
    p.pca.eigenvalues = pca.at("eigenvalues").get<std::vector<double>>();
    p.pca.all_eigenvalues = pca.at("all_eigenvalues").get<std::vector<double>>();
    return p;
  });
}

Json to_json(const SvmBundle& b) {
  Json j = header("svm");
  Json ensemble = Json::array();
  for (std::size_t i = 0; i < b.ensemble.specs.size(); ++i) {
    Json k = kernel_spec_to_json(b.ensemble.specs[i]);
    k["spec"] = b.ensemble.specs[i].describe();
    k["weight"] = b.ensemble.weights[i];
    ensemble.push_back(k);
  }
  j["ensemble"] = ensemble;
  j["svm"] = {{"C", b.model.C},
              {"bias", b.model.bias},
              {"alpha_y", b.model.alpha_y},
              {"support_indices", b.model.support_indices},
              {"train_ids", b.model.train_ids}};
  j["preprocessing"] = to_json(b.preprocessing);
  j["train_features"] = matrix_to_json(b.train_features);
  return j;
}

SvmBundle svm_bundle_from_json(const Json& j) {
  if (bundle_type(j) != "svm") throw Error(ErrorCode::Config, "model file is not an SVM bundle");
  return guarded([&] {
    SvmBundle b;
    for (Json k : j.at("ensemble")) {
      b.ensemble.weights.push_back(k.at("weight").get<double>());
      k.erase("weight");
      k.erase("spec");
      b.ensemble.specs.push_back(kernel_spec_from_json(k));
    }
    b.ensemble.validate();
    const Json& s = j.at("svm");
    b.model.C = s.at("C").get<double>();
    b.model.bias = s.at("bias").get<double>();
    b.model.alpha_y = s.at("alpha_y").get<std::vector<double>>();
    b.model.support_indices = s.at("support_indices").get<std::vector<std::size_t>>();
    b.model.train_ids = s.at("train_ids").get<std::vector<std::string>>();
    b.preprocessing = preprocessing_from_json(j.at("preprocessing"));
    b.train_features = matrix_from_json(j.at("train_features"));
    if (b.train_features.rows() != b.model.alpha_y.size()) {
      throw Error(ErrorCode::Config, "train_features rows do not match alpha_y");
    }
    return b;
  });
}

Json to_json(const GbmBundle& b) {
  Json j = header("gbm");
  Json trees = Json::array();
  for (const gbm::RegressionTree& t : b.model.trees) {
    Json nodes = Json::array();
    for (const gbm::TreeNode& n : t.nodes) {
      if (n.is_leaf()) {
        nodes.push_back({{"value", n.value}});
      } else {
        nodes.push_back({{"feature", n.feature}, {"threshold", n.threshold}, {"left", n.left}, {"right", n.right}});
      }
    }
    trees.push_back(nodes);
  }
  j["gbm"] = {{"init_score", b.model.init_score},
              {"learning_rate", b.model.learning_rate},
              {"num_features", b.model.num_features},
              {"trees", trees}};
  j["preprocessing"] = to_json(b.preprocessing);
  return j;
}

GbmBundle gbm_bundle_from_json(const Json& j) {
  if (bundle_type(j) != "gbm") throw Error(ErrorCode::Config, "model file is not a GBM bundle");
  return guarded([&] {
    GbmBundle b;
    const Json& g = j.at("gbm");
    b.model.init_score = g.at("init_score").get<double>();
    b.model.learning_rate = g.at("learning_rate").get<double>();
    b.model.num_features = g.at("num_features").get<std::size_t>();
    for (const Json& nodes : g.at("trees")) {
      gbm::RegressionTree t;
      for (const Json& n : nodes) {
        gbm::TreeNode node;
        if (n.contains("value")) {
          node.value = n.at("value").get<double>();
        } else {
          node.feature = n.at("feature").get<int>();
          node.threshold = n.at("threshold").get<double>();
          node.left = n.at("left").get<int>();
          node.right = n.at("right").get<int>();
        }
        t.nodes.push_back(node);
      }
      b.model.trees.push_back(std::move(t));
    }
    b.model.validate();
    b.preprocessing = preprocessing_from_json(j.at("preprocessing"));
    return b;
  });
}

std::string bundle_type(const Json& j) {
  if (!j.is_object() || j.value("format", std::string()) != kFormatTag) {
    throw Error(ErrorCode::Config, "not a model bundle");
  }
  if (j.value("version", 0) != kModelFormatVersion) {
    throw Error(ErrorCode::Config, "unsupported model bundle version");
  }
  return j.value("type", std::string());
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Config, path.string() + ": " + e.what());
  }
}

}  // namespace qsar::pipeline
