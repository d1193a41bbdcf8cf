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

#include "qsar/pipeline/run.hpp"

#include <chrono>
#include <fstream>
#include <numeric>

#include "qsar/core/csv.hpp"
#include "qsar/core/error.hpp"
#include "qsar/core/format.hpp"
#include "qsar/core/hash.hpp"
#include "qsar/core/parallel.hpp"
#include "qsar/core/rng.hpp"
#include "qsar/data/jacobi.hpp"
#include "qsar/kernels/cache.hpp"
#include "qsar/kernels/gram.hpp"

#ifndef QSAR_VERSION
#define QSAR_VERSION "0.0.0"
#endif

namespace qsar::pipeline {

std::string tool_version() { return QSAR_VERSION; }

namespace {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string dataset_digest(const data::Dataset& ds) {
  Fnv1a h;
  h.update(hash_matrix(ds.X));
  for (int v : ds.y) h.update(static_cast<std::uint64_t>(v));
  for (const std::string& id : ds.ids) {
    h.update(id);
    h.update(std::string_view("\x1f", 1));
  }
  return to_hex(h.digest());
}

Json dataset_summary(const data::Dataset& ds) {
  return {{"rows", ds.size()},
          {"positives", ds.count_positive()},
          {"features", ds.dimension()},
          {"dropped_rows", ds.dropped_rows},
          {"hash", dataset_digest(ds)}};
}

void require_both_classes(const data::Dataset& ds, ErrorCode code, const char* which) {
  const std::size_t pos = ds.count_positive();
  if (ds.size() == 0) throw Error(ErrorCode::EmptyDataset, std::string(which) + " set is empty");
  if (pos == 0 || pos == ds.size()) {
    throw Error(code, std::string(which) + " labels contain a single class (" + std::to_string(pos) + " of " +
                          std::to_string(ds.size()) + " positive)");
  }
}

Json spectrum_summary(const Matrix& k) {
  const data::EigenDecomposition eig = data::jacobi_eigen(k);
  double trace = 0.0;
  for (std::size_t i = 0; i < k.rows(); ++i) trace += k(i, i);
  return {{"min_eigenvalue", eig.values.back()}, {"max_eigenvalue", eig.values.front()}, {"trace", trace}};
}

Json confusion_json(const eval::ConfusionReport& c, double threshold) {
  return {{"threshold", threshold}, {"tp", c.tp},   {"tn", c.tn},   {"fp", c.fp},   {"fn", c.fn},
          {"acc", c.acc},           {"ppv", c.ppv}, {"tpr", c.tpr}, {"tnr", c.tnr}, {"f1", c.f1},
          {"mcc", c.mcc},           {"degenerate", c.degenerate}};
}

ModelResult evaluate(std::string name, std::vector<double> scores, const std::vector<int>& labels,
                     double threshold) {
  ModelResult r;
  r.name = std::move(name);
  r.roc = eval::roc_curve(scores, labels);
  r.roc.auc = eval::roc_auc(scores, labels);
  r.confusion = eval::confusion_metrics(scores, labels, threshold);
  r.test_scores = std::move(scores);
  return r;
}

svm::SvmParams svm_params_for(const PipelineConfig& config, std::string_view model) {
  svm::SvmParams p = config.svm;
  p.seed = derive_seed(config.seed, std::string("svm/") + std::string(model));
  return p;
}

Json svm_trace_json(const svm::SvmModel& model, const svm::SvmTrace& trace) {
  return {{"support_vectors", model.support_indices.size()},
          {"bias", model.bias},
          {"sweeps", trace.sweeps},
          {"updates", trace.updates},
          {"converged", trace.converged},
          {"final_dual_objective", trace.objective.empty() ? 0.0 : trace.objective.back()}};
}

}  // namespace

PreparedData prepare(const PipelineConfig& config) {
  PreparedData out;
  out.raw = load_inputs(config);
  out.raw.train.validate();
  out.raw.test.validate();
  require_both_classes(out.raw.train, ErrorCode::SingleClassTraining, "training");
  const std::size_t d = out.raw.train.dimension();
  if (config.pca_components > d) {
    throw Error(ErrorCode::KTooLarge, "pca_components = " + std::to_string(config.pca_components) +
                                          " exceeds the " + std::to_string(d) + " input features");
  }
  out.preprocessing.feature_names = out.raw.train.feature_names;
  out.preprocessing.standardizer = data::fit_standardizer(out.raw.train.X);
  const Matrix train_std = data::transform_standardize(out.preprocessing.standardizer, out.raw.train.X);
  out.preprocessing.pca = data::fit_pca(train_std, config.pca_components);
  out.train_features = data::project_pca(out.preprocessing.pca, train_std);
  out.test_features = out.preprocessing.apply(out.raw.test.X);
  return out;
}

BasisKernels build_basis(const PipelineConfig& config, const PreparedData& data) {
  BasisKernels b;
  b.specs = config.resolved_kernels();
  std::optional<kernels::KernelCache> cache;
  if (!config.cache_dir.empty()) cache.emplace(config.cache_dir);
  const auto& ids = data.raw.train.ids;
  for (const kernels::KernelSpec& spec : b.specs) {
    b.train.push_back(kernels::cached_gram(cache ? &*cache : nullptr, data.train_features, data.train_features, spec,
                                           ids, ids));
  }
  if (config.weighting == Weighting::Alignment) {
    b.weights = kernels::average_alignment_weights(b.train, data.raw.train.y, config.center_alignment);
  } else {
    b.weights.alignments = kernels::average_alignment_weights(b.train, data.raw.train.y, config.center_alignment)
                               .alignments;
    b.weights.weights.assign(b.specs.size(), 1.0 / static_cast<double>(b.specs.size()));
    b.weights.uniform_fallback = true;
  }
  kernels::validate_weights(b.weights.weights, b.specs.size());
  b.combined = kernels::combine_kernels(b.train, b.weights.weights);
  return b;
}

void write_scores_csv(const std::filesystem::path& path, const std::vector<std::string>& ids,
                      const std::vector<int>& labels, const std::vector<double>& scores) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  csv::write_row(out, {"id", "label", "score"});
  for (std::size_t i = 0; i < scores.size(); ++i) {
    csv::write_row(out, {ids.empty() ? std::to_string(i + 1) : ids[i], std::to_string(labels[i]),
                         format_double(scores[i])});
  }
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

CompareResult run_compare(const PipelineConfig& config, const std::filesystem::path& out_dir) {
  config.validate();
  Stopwatch clock;
  Json timing;

  PreparedData prep = prepare(config);
  require_both_classes(prep.raw.test, ErrorCode::SingleClassEval, "test");
  timing["preprocess_s"] = clock.lap();

  const auto& train = prep.raw.train;
  const auto& test = prep.raw.test;

  BasisKernels basis = build_basis(config, prep);
  timing["train_kernels_s"] = clock.lap();

  CompareResult result;
  std::vector<std::pair<std::string, Json>> artifacts;
  std::filesystem::create_directories(out_dir);

  // QMKL-SVM on the alignment-weighted combination.
  SvmBundle qmkl;
  qmkl.preprocessing = prep.preprocessing;
  qmkl.ensemble = {basis.specs, basis.weights.weights};
  qmkl.train_features = prep.train_features;
  svm::SvmTrace qmkl_trace;
  qmkl.model = svm::train_svm(basis.combined, train.y, svm_params_for(config, kQmklSvm), &qmkl_trace);
  timing["qmkl_svm_train_s"] = clock.lap();
  result.models.push_back(
      evaluate(kQmklSvm, qmkl.score_features(prep.test_features, test.ids), test.y, config.threshold));
  timing["qmkl_svm_score_s"] = clock.lap();

  // Single RBF kernel baseline.
  SvmBundle rbf;
  rbf.preprocessing = prep.preprocessing;
  rbf.ensemble = {{kernels::KernelSpec::rbf("rbf", config.resolved_baseline_gamma())}, {1.0}};
  rbf.train_features = prep.train_features;
  const kernels::KernelMatrix rbf_train = kernels::gram_matrix(prep.train_features, rbf.ensemble.specs[0], train.ids);
  svm::SvmTrace rbf_trace;
  rbf.model = svm::train_svm(rbf_train, train.y, svm_params_for(config, kRbfSvm), &rbf_trace);
  result.models.push_back(
      evaluate(kRbfSvm, rbf.score_features(prep.test_features, test.ids), test.y, config.threshold));
  timing["rbf_svm_s"] = clock.lap();

  // Gradient boosting on the same PCA features.
  GbmBundle gb;
  gb.preprocessing = prep.preprocessing;
  gbm::GbmTrace gb_trace;
  gb.model = gbm::train_gbm(prep.train_features, train.y, config.gbm, &gb_trace);
  result.models.push_back(
      evaluate(kGradientBoosting, gbm::gbm_scores(gb.model, prep.test_features), test.y, config.threshold));
  timing["gradient_boosting_s"] = clock.lap();

  // Artifacts.
  Json files = Json::array();
  for (const ModelResult& m : result.models) {
    const std::string roc_file = "roc_" + m.name + ".csv";
    const std::string score_file = "scores_" + m.name + ".csv";
    eval::write_roc_csv(out_dir / roc_file, m.roc);
    write_scores_csv(out_dir / score_file, test.ids, test.y, m.test_scores);
    files.push_back(roc_file);
    files.push_back(score_file);
  }
  write_json(out_dir / "model_qmkl_svm.json", to_json(qmkl));
  write_json(out_dir / "model_rbf_svm.json", to_json(rbf));
  write_json(out_dir / "model_gradient_boosting.json", to_json(gb));
  files.push_back("model_qmkl_svm.json");
  files.push_back("model_rbf_svm.json");
  files.push_back("model_gradient_boosting.json");

  // Report.
  Json report;
  report["tool"] = {{"name", "qmkl_qsar"}, {"version", tool_version()}};
  report["seed"] = config.seed;
  report["config"] = config_to_json(config);
  report["datasets"] = {{"train", dataset_summary(train)}, {"test", dataset_summary(test)}};

  const data::PcaModel& pca = prep.preprocessing.pca;
  const double total_var = std::accumulate(pca.all_eigenvalues.begin(), pca.all_eigenvalues.end(), 0.0);
  std::vector<double> ratio;
  for (double v : pca.eigenvalues) ratio.push_back(total_var > 0.0 ? v / total_var : 0.0);
  std::size_t zero_var = 0;
  for (bool z : prep.preprocessing.standardizer.zero_variance) zero_var += z ? 1 : 0;
  report["preprocessing"] = {{"input_features", train.dimension()},
                             {"zero_variance_features", zero_var},
                             {"pca_components", pca.output_dimension()},
                             {"pca_eigenvalues", pca.eigenvalues},
                             {"explained_variance_ratio", ratio}};

  Json ks = Json::array();
  for (std::size_t i = 0; i < basis.specs.size(); ++i) {
    ks.push_back({{"name", basis.specs[i].name},
                  {"spec", basis.specs[i].describe()},
                  {"alignment", basis.weights.alignments[i]},
                  {"weight", basis.weights.weights[i]},
                  {"spectrum", spectrum_summary(basis.train[i].values)}});
  }
  report["kernels"] = {{"weighting", config.weighting == Weighting::Alignment ? "alignment" : "uniform"},
                       {"uniform_fallback", basis.weights.uniform_fallback},
                       {"basis", ks},
                       {"combined_spectrum", spectrum_summary(basis.combined.values)}};

  Json models;
  for (const ModelResult& m : result.models) {
    Json entry{{"auc", m.roc.auc},
               {"roc_points", m.roc.curve.size()},
               {"confusion", confusion_json(m.confusion, config.threshold)}};
    if (m.name == kQmklSvm) entry["training"] = svm_trace_json(qmkl.model, qmkl_trace);
    if (m.name == kRbfSvm) {
      entry["training"] = svm_trace_json(rbf.model, rbf_trace);
      entry["training"]["gamma"] = config.resolved_baseline_gamma();
    }
    if (m.name == kGradientBoosting) {
      entry["training"] = {{"trees", gb.model.trees.size()},
                           {"init_score", gb.model.init_score},
                           {"final_train_deviance", gb_trace.deviance.back()}};
    }
    models[m.name] = entry;
  }
  report["models"] = models;
  report["artifacts"] = files;
  timing["report_s"] = clock.lap();
  timing["threads"] = worker_threads();
  report["timing"] = timing;

  result.report_path = out_dir / "report.json";
  write_json(result.report_path, report);
  result.report = std::move(report);
  return result;
}

BasisKernels run_kernels(const PipelineConfig& config, const std::filesystem::path& out_dir) {
  config.validate();
  const PreparedData prep = prepare(config);
  BasisKernels basis = build_basis(config, prep);
  std::filesystem::create_directories(out_dir);
  const std::uint64_t ds_hash = kernels::dataset_hash(prep.train_features, prep.train_features);
  for (std::size_t i = 0; i < basis.specs.size(); ++i) {
    const kernels::KernelSpec& spec = basis.specs[i];
    kernels::write_kernel_file(out_dir / (spec.name + ".kmat"), basis.train[i],
                               {spec.name, spec.describe(), spec.hash(), ds_hash});
  }
  kernels::write_kernel_file(out_dir / "combined.kmat", basis.combined, {"combined", "combined", 0, ds_hash});

  std::ofstream summary(out_dir / "alignment_summary.csv", std::ios::binary);
  if (!summary) throw Error(ErrorCode::Io, "cannot write alignment summary");
  csv::write_row(summary, {"kernel", "spec", "alignment", "weight"});
  for (std::size_t i = 0; i < basis.specs.size(); ++i) {
    csv::write_row(summary, {basis.specs[i].name, basis.specs[i].describe(), format_double(basis.weights.alignments[i]),
                             format_double(basis.weights.weights[i])});
  }
  if (!summary) throw Error(ErrorCode::Io, "write failed for alignment summary");
  return basis;
}

}  // namespace qsar::pipeline
