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

#include "qsar/pipeline/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "qsar/core/error.hpp"

namespace qsar::pipeline {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Config, where.empty() ? what : where + ": " + what);
}

/// Reads keys from one object and rejects any that were not consumed.
class Reader {
 public:
  Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) fail(path_, "expected an object");
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key) && !j_.at(key).is_null();
  }

  const Json& at(const std::string& key) {
    seen_.insert(key);
    return j_.at(key);
  }

  std::string where(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  double real(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    const Json& v = j_.at(key);
    if (!v.is_number()) fail(where(key), "expected a number");
    return v.get<double>();
  }

  std::size_t count(const std::string& key, std::size_t fallback) {
    if (!has(key)) return fallback;
    const Json& v = j_.at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && v.get<long long>() < 0)) {
      fail(where(key), "expected a non-negative integer");
    }
    return v.get<std::size_t>();
  }

  std::string text(const std::string& key, std::string fallback) {
    if (!has(key)) return fallback;
    const Json& v = j_.at(key);
    if (!v.is_string()) fail(where(key), "expected a string");
    return v.get<std::string>();
  }

  bool flag(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const Json& v = j_.at(key);
    if (!v.is_boolean()) fail(where(key), "expected true or false");
    return v.get<bool>();
  }

  std::vector<std::string> strings(const std::string& key) {
    std::vector<std::string> out;
    if (!has(key)) return out;
    const Json& v = j_.at(key);
    if (!v.is_array()) fail(where(key), "expected an array of strings");
    for (const Json& e : v) {
      if (!e.is_string()) fail(where(key), "expected an array of strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) fail(where(it.key()), "unknown key");
    }
  }

 private:
  const Json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  if (p.empty()) return {};
  const std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

InputConfig parse_input(const Json& j, const std::filesystem::path& base) {
  Reader r(j, "input");
  InputConfig in;
  if (r.has("synthetic")) {
    Reader s(r.at("synthetic"), "input.synthetic");
    SyntheticSource src;
    src.n_train = s.count("n_train", src.n_train);
    src.n_test = s.count("n_test", src.n_test);
    src.dimension = s.count("dimension", src.dimension);
    src.separation = s.real("separation", src.separation);
    s.finish();
    in.synthetic = src;
  }
  in.train_path = resolve(base, r.text("train", ""));
  in.test_path = resolve(base, r.text("test", ""));
  if (r.has("split_fraction")) in.split_fraction = r.real("split_fraction", 0.0);
  in.label_column = r.text("label_column", in.label_column);
  const std::string kind = r.text("label_kind", "binary");
  if (kind == "binary") {
    in.label_kind = data::LabelKind::Binary;
  } else if (kind == "ic50_nM") {
    in.label_kind = data::LabelKind::Ic50nM;
  } else {
    fail("input.label_kind", "expected \"binary\" or \"ic50_nM\", got \"" + kind + "\"");
  }
  in.id_column = r.text("id_column", in.id_column);
  in.feature_columns = r.strings("feature_columns");
  in.skip_columns = r.strings("skip_columns");
  in.smiles_column = r.text("smiles_column", "");
  r.finish();
  return in;
}

}  // namespace

Json kernel_spec_to_json(const kernels::KernelSpec& spec) {
  Json j;
  j["name"] = spec.name;
  if (spec.is_quantum()) {
    const qsim::FeatureMapSpec& m = spec.feature_map();
    j["type"] = "quantum";
    j["axis"] = qsim::to_string(m.axis);
    j["reps"] = m.reps;
    j["scale"] = m.scale;
    j["entangler"] = qsim::to_string(m.entangler);
    j["qubits"] = m.num_qubits;
  } else {
    j["type"] = "rbf";
    j["gamma"] = spec.gamma();
  }
  return j;
}

kernels::KernelSpec kernel_spec_from_json(const Json& j) {
  Reader r(j, "kernels[]");
  const std::string name = r.text("name", "");
  if (name.empty()) fail("kernels[]", "every kernel needs a name");
  const std::string type = r.text("type", "");
  kernels::KernelSpec spec;
  try {
    if (type == "quantum") {
      qsim::FeatureMapSpec m;
      m.axis = qsim::parse_axis(r.text("axis", "Y"));
      m.reps = r.count("reps", m.reps);
      m.scale = r.real("scale", m.scale);
      m.entangler = qsim::parse_entangler(r.text("entangler", "ring"));
      // 0 means "one qubit per PCA component".
      m.num_qubits = r.count("qubits", 0);
      spec = kernels::KernelSpec::quantum(name, m);
    } else if (type == "rbf") {
      spec = kernels::KernelSpec::rbf(name, r.real("gamma", 0.0));
    } else {
      fail("kernels." + name, "type must be \"quantum\" or \"rbf\"");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Config) throw;
    fail("kernels." + name, e.what());
  }
  r.finish();
  return spec;
}

PipelineConfig parse_config(const Json& doc, const std::filesystem::path& base_dir) {
  Reader r(doc, "");
  PipelineConfig c;
  if (!r.has("input")) fail("", "missing required key 'input'");
  c.input = parse_input(r.at("input"), base_dir);
  c.pca_components = r.count("pca_components", c.pca_components);
  if (r.has("kernels")) {
    const Json& list = r.at("kernels");
    if (!list.is_array()) fail("kernels", "expected an array");
    for (const Json& k : list) c.kernels.push_back(kernel_spec_from_json(k));
  }
  const std::string w = r.text("weighting", "alignment");
  if (w == "alignment") {
    c.weighting = Weighting::Alignment;
  } else if (w == "uniform") {
    c.weighting = Weighting::Uniform;
  } else {
    fail("weighting", "expected \"alignment\" or \"uniform\"");
  }
  c.center_alignment = r.flag("center_alignment", c.center_alignment);
  if (r.has("baseline_gamma")) c.baseline_gamma = r.real("baseline_gamma", 0.0);
  if (r.has("svm")) {
    Reader s(r.at("svm"), "svm");
    c.svm.C = s.real("C", c.svm.C);
    c.svm.tol = s.real("tol", c.svm.tol);
    c.svm.max_passes = s.count("max_passes", c.svm.max_passes);
    c.svm.max_sweeps = s.count("max_sweeps", c.svm.max_sweeps);
    s.finish();
  }
  if (r.has("gbm")) {
    Reader g(r.at("gbm"), "gbm");
    c.gbm.n_trees = g.count("n_trees", c.gbm.n_trees);
    c.gbm.max_depth = g.count("max_depth", c.gbm.max_depth);
    c.gbm.learning_rate = g.real("learning_rate", c.gbm.learning_rate);
    c.gbm.min_leaf = g.count("min_leaf", c.gbm.min_leaf);
    g.finish();
  }
  c.threshold = r.real("threshold", c.threshold);
  if (r.has("output_dir")) c.output_dir = resolve(base_dir, r.text("output_dir", ""));
  c.cache_dir = resolve(base_dir, r.text("cache_dir", ""));
  if (r.has("seed")) {
    const Json& s = r.at("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      fail("seed", "expected a non-negative integer");
    }
    c.seed = s.get<std::uint64_t>();
  }
  r.finish();
  c.validate();
  return c;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Config, "cannot open config " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Config, path.string() + ": " + e.what());
  }
  return parse_config(doc, path.parent_path());
}

void PipelineConfig::validate() const {
  const InputConfig& in = input;
  if (in.synthetic) {
    if (!in.train_path.empty() || !in.test_path.empty() || in.split_fraction) {
      fail("input", "synthetic input excludes train/test/split_fraction");
    }
    const SyntheticSource& s = *in.synthetic;
    if (s.n_train < 4 || s.n_test < 2) fail("input.synthetic", "need n_train >= 4 and n_test >= 2");
    if (s.dimension == 0) fail("input.synthetic.dimension", "must be >= 1");
    if (!std::isfinite(s.separation)) fail("input.synthetic.separation", "must be finite");
  } else {
    if (in.train_path.empty()) fail("input", "set either 'synthetic' or 'train'");
    if (in.test_path.empty() == !in.split_fraction.has_value()) {
      fail("input", "set exactly one of 'test' and 'split_fraction'");
    }
    if (in.split_fraction && !(*in.split_fraction > 0.0 && *in.split_fraction < 1.0)) {
      fail("input.split_fraction", "must be in (0, 1)");
    }
  }
  if (pca_components == 0) fail("pca_components", "must be >= 1");
  if (pca_components > qsim::kMaxQubits && std::any_of(kernels.begin(), kernels.end(), [](const auto& k) {
        return k.is_quantum();
      })) {
    fail("pca_components", "quantum kernels support at most " + std::to_string(qsim::kMaxQubits) + " features");
  }
  std::set<std::string> names;
  for (const kernels::KernelSpec& k : resolved_kernels()) {
    if (!names.insert(k.name).second) fail("kernels", "duplicate kernel name '" + k.name + "'");
    try {
      k.validate();
    } catch (const Error& e) {
      fail("kernels." + k.name, e.what());
    }
    if (k.is_quantum() && k.feature_map().num_qubits != pca_components) {
      fail("kernels." + k.name, "qubit count must equal pca_components");
    }
  }
  if (baseline_gamma && !(*baseline_gamma > 0.0)) fail("baseline_gamma", "must be positive");
  try {
    svm.validate();
    gbm.validate();
  } catch (const Error& e) {
    fail("", e.what());
  }
  if (!std::isfinite(threshold)) fail("threshold", "must be finite");
}

std::vector<kernels::KernelSpec> PipelineConfig::resolved_kernels() const {
  if (kernels.empty()) return kernels::default_ensemble(pca_components);
  std::vector<kernels::KernelSpec> out = kernels;
  for (kernels::KernelSpec& k : out) {
    if (k.is_quantum() && std::get<qsim::FeatureMapSpec>(k.kind).num_qubits == 0) {
      std::get<qsim::FeatureMapSpec>(k.kind).num_qubits = pca_components;
    }
  }
  return out;
}

double PipelineConfig::resolved_baseline_gamma() const {
  return baseline_gamma.value_or(1.0 / static_cast<double>(pca_components));
}

Json config_to_json(const PipelineConfig& c) {
  Json j;
  Json in;
  if (c.input.synthetic) {
    const SyntheticSource& s = *c.input.synthetic;
    in["synthetic"] = {{"n_train", s.n_train}, {"n_test", s.n_test}, {"dimension", s.dimension},
                       {"separation", s.separation}};
  } else {
    in["train"] = c.input.train_path.generic_string();
    if (c.input.split_fraction) {
      in["split_fraction"] = *c.input.split_fraction;
    } else {
      in["test"] = c.input.test_path.generic_string();
    }
    in["label_column"] = c.input.label_column;
    in["label_kind"] = c.input.label_kind == data::LabelKind::Binary ? "binary" : "ic50_nM";
    in["id_column"] = c.input.id_column;
    if (!c.input.feature_columns.empty()) in["feature_columns"] = c.input.feature_columns;
    if (!c.input.skip_columns.empty()) in["skip_columns"] = c.input.skip_columns;
    if (!c.input.smiles_column.empty()) in["smiles_column"] = c.input.smiles_column;
  }
  j["input"] = in;
  j["pca_components"] = c.pca_components;
  Json ks = Json::array();
  for (const auto& k : c.resolved_kernels()) ks.push_back(kernel_spec_to_json(k));
  j["kernels"] = ks;
  j["weighting"] = c.weighting == Weighting::Alignment ? "alignment" : "uniform";
  j["center_alignment"] = c.center_alignment;
  j["baseline_gamma"] = c.resolved_baseline_gamma();
  j["svm"] = {{"C", c.svm.C}, {"tol", c.svm.tol}, {"max_passes", c.svm.max_passes},
              {"max_sweeps", c.svm.max_sweeps}};
  j["gbm"] = {{"n_trees", c.gbm.n_trees}, {"max_depth", c.gbm.max_depth},
              {"learning_rate", c.gbm.learning_rate}, {"min_leaf", c.gbm.min_leaf}};
  j["threshold"] = c.threshold;
  j["seed"] = c.seed;
  return j;
}

}  // namespace qsar::pipeline
