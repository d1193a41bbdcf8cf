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

// Acceptance harness: one PASS/FAIL line per criterion, non-zero exit on any failure.
// Usage: qsar_acceptance WORK_DIR

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qsar/chem/descriptors.hpp"
#include "qsar/chem/smiles.hpp"
#include "qsar/core/csv.hpp"
#include "qsar/core/format.hpp"
#include "qsar/core/rng.hpp"
#include "qsar/data/jacobi.hpp"
#include "qsar/eval/metrics.hpp"
#include "qsar/kernels/alignment.hpp"
#include "qsar/kernels/gram.hpp"
#include "qsar/pipeline/commands.hpp"
#include "qsar/pipeline/config.hpp"
#include "qsar/pipeline/run.hpp"
#include "qsar/qsim/feature_map.hpp"
#include "qsar/svm/smo.hpp"

using namespace qsar;
namespace fs = std::filesystem;

namespace {

// Collects the first failing detail; later checks still run.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && ok_) detail_ = what;
    ok_ = ok_ && ok;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  bool ok() const { return ok_; }
  std::string summary() const { return ok_ ? notes_ : detail_; }

 private:
  bool ok_ = true;
  std::string detail_;
  std::string notes_;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;  // 0 = no runtime bound
  std::function<void(Check&)> body;
};

qsim::FeatureMapSpec map_spec(std::size_t n, std::size_t reps, qsim::RotationAxis axis, double scale,
                              qsim::Entangler e) {
  qsim::FeatureMapSpec s;
  s.num_qubits = n;
  s.reps = reps;
  s.axis = axis;
  s.scale = scale;
  s.entangler = e;
  return s;
}

std::vector<int> random_labels(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> y(n);
  for (int& v : y) v = coin(rng) ? 1 : 0;
  y[0] = 1;
  y[1] = 0;
  return y;
}

void quantum_oracle(Check& c) {
  std::mt19937_64 rng(derive_seed(1, "acceptance/quantum"));
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  const kernels::KernelSpec one = kernels::KernelSpec::quantum(
      "q", map_spec(1, 1, qsim::RotationAxis::Y, 1.0, qsim::Entangler::Ring));
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const double a[] = {u(rng)};
    const double b[] = {u(rng)};
    const double expected = std::pow(std::cos((a[0] - b[0]) / 2.0), 2);
    worst = std::max(worst, std::abs(kernels::kernel_value(a, b, one) - expected));
  }
  c.expect(worst <= 1e-10, "1-feature kernel deviates by " + fmt(worst));
  c.note("1-feature max err " + fmt(worst));

  double worst_state = 0.0;
  const qsim::RotationAxis axes[] = {qsim::RotationAxis::Y, qsim::RotationAxis::ZAfterH};
  for (int t = 0; t < 50; ++t) {
    const std::vector<double> x = {u(rng), u(rng)};
    const auto spec = map_spec(2, 1 + t % 2, axes[t % 2], 1.0, t % 4 < 2 ? qsim::Entangler::Ring : qsim::Entangler::Linear);
    const qsim::StateVector got = qsim::prepare_state(x, spec);
    const oracle::Dense unitary = oracle::feature_map_unitary(x, spec);
    for (std::size_t i = 0; i < got.size(); ++i) worst_state = std::max(worst_state, std::abs(got[i] - unitary[i][0]));
  }
  c.expect(worst_state <= 1e-12, "2-feature state deviates by " + fmt(worst_state));
  c.note("2-feature max err " + fmt(worst_state));
}

void psd_suite(Check& c) {
  std::mt19937_64 rng(derive_seed(2, "acceptance/psd"));
  double min_eig = 1e300, diag = 0.0, asym = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Matrix X = oracle::random_matrix(30, 4, rng, -2.5, 2.5);
    const std::vector<int> y = random_labels(30, rng);
    std::vector<kernels::KernelMatrix> basis;
    for (const auto& spec : kernels::default_ensemble(4)) basis.push_back(kernels::gram_matrix(X, spec));
    const auto w = kernels::average_alignment_weights(basis, y, true);
    basis.push_back(kernels::combine_kernels(std::span(basis.data(), basis.size()), w.weights));
    for (const auto& k : basis) {
      for (double v : data::jacobi_eigen(k.values).values) min_eig = std::min(min_eig, v);
      for (std::size_t i = 0; i < k.rows(); ++i) diag = std::max(diag, std::abs(k(i, i) - 1.0));
      asym = std::max(asym, kernels::asymmetry(k.values));
    }
  }
  c.expect(min_eig >= -1e-8, "min eigenvalue " + fmt(min_eig));
  c.expect(diag <= 1e-10, "diagonal deviation " + fmt(diag));
  c.expect(asym <= 1e-12, "asymmetry " + fmt(asym));
  c.note("min eig " + fmt(min_eig) + ", diag err " + fmt(diag) + ", asym " + fmt(asym));
}

void weight_contract(Check& c) {
  std::mt19937_64 rng(derive_seed(3, "acceptance/weights"));
  double worst_prop = 0.0, worst_sum = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Matrix X = oracle::random_matrix(30, 4, rng, -2.0, 2.0);
    const std::vector<int> y = random_labels(30, rng);
    std::vector<kernels::KernelMatrix> basis;
    for (const auto& spec : kernels::default_ensemble(4)) basis.push_back(kernels::gram_matrix(X, spec));
    const auto w = kernels::average_alignment_weights(basis, y, true);
    const Matrix target = kernels::center_kernel(kernels::target_kernel(y).values);
    double total = 0.0, sum = 0.0;
    std::vector<double> clamped;
    for (const auto& k : basis) {
      clamped.push_back(std::max(kernels::alignment(kernels::center_kernel(k.values), target), 0.0));
      total += clamped.back();
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      c.expect(w.weights[i] >= 0.0, "negative weight");
      const double expected = total > 0.0 ? clamped[i] / total : 1.0 / static_cast<double>(basis.size());
      worst_prop = std::max(worst_prop, std::abs(w.weights[i] - expected));
      sum += w.weights[i];
    }
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
  }
  c.expect(worst_sum <= 1e-12, "weights sum off by " + fmt(worst_sum));
  c.expect(worst_prop <= 1e-15, "proportionality error " + fmt(worst_prop));

  const Matrix X = oracle::random_matrix(30, 4, rng, -2.0, 2.0);
  const std::vector<int> y = random_labels(30, rng);
  const auto k = kernels::gram_matrix(X, kernels::KernelSpec::rbf("r", 0.5));
  const std::vector<kernels::KernelMatrix> twins = {k, k};
  const auto w = kernels::average_alignment_weights(twins, y, true);
  c.expect(w.weights[0] == w.weights[1], "identical kernels got different weights");
  c.note("sum err " + fmt(worst_sum) + ", proportionality err " + fmt(worst_prop));
}

void svm_correctness(Check& c) {
  std::size_t models = 0;
  double worst_sum = 0.0, worst_box = 0.0, worst_drop = 0.0;
  auto audit = [&](const svm::SvmModel& m, std::span<const int> y, const svm::SvmTrace& trace) {
    ++models;
    double sum = 0.0;
    for (std::size_t i = 0; i < m.train_size(); ++i) {
      const double alpha = m.alpha_y[i] * (y[i] ? 1.0 : -1.0);
      worst_box = std::max({worst_box, -alpha, alpha - m.C});
      sum += m.alpha_y[i];
    }
    worst_sum = std::max(worst_sum, std::abs(sum));
    for (std::size_t i = 1; i < trace.objective.size(); ++i)
      worst_drop = std::max(worst_drop, trace.objective[i - 1] - trace.objective[i]);
  };

  Matrix X(4, 2);
  X(1, 0) = X(1, 1) = 1.0;
  X(2, 1) = 1.0;
  X(3, 0) = 1.0;
  const int y[] = {0, 0, 1, 1};
  const auto K = kernels::gram_matrix(X, kernels::KernelSpec::rbf("r", 1.0), std::vector<std::string>{"a", "b", "c", "d"});
  svm::SvmParams p;
  p.C = 10.0;
  svm::SvmTrace trace;
  const auto xor_model = svm::train_svm(K, y, p, &trace);
  audit(xor_model, y, trace);
  const auto pred = svm::predict_labels(svm::decision_scores(xor_model, K));
  std::size_t correct = 0;
  for (std::size_t i = 0; i < 4; ++i) correct += pred[i] == y[i];
  c.expect(correct == 4, "XOR training accuracy " + fmt(correct / 4.0));

  std::mt19937_64 rng(derive_seed(4, "acceptance/svm"));
  for (int t = 0; t < 20; ++t) {
    const Matrix Z = oracle::random_matrix(40, 4, rng, -2.0, 2.0);
    const std::vector<int> labels = random_labels(40, rng);
    std::vector<kernels::KernelMatrix> basis;
    for (const auto& spec : kernels::default_ensemble(4)) basis.push_back(kernels::gram_matrix(Z, spec));
    const auto w = kernels::average_alignment_weights(basis, labels, true);
    const auto combined = kernels::combine_kernels(basis, w.weights);
    svm::SvmParams q;
    q.C = t % 2 ? 1.0 : 10.0;
    q.seed = static_cast<std::uint64_t>(t);
    svm::SvmTrace tr;
    audit(svm::train_svm(combined, labels, q, &tr), labels, tr);
  }
  c.expect(worst_box <= 1e-6, "box constraint violated by " + fmt(worst_box));
  c.expect(worst_sum <= 1e-6, "sum alpha*s = " + fmt(worst_sum));
  c.expect(worst_drop <= 0.0, "objective decreased by " + fmt(worst_drop));
  c.note("XOR acc 1, " + std::to_string(models) + " models, |sum alpha*s| <= " + fmt(worst_sum) +
         ", objective drop " + fmt(std::max(worst_drop, 0.0)));
}

void auc_oracle(Check& c) {
  const double s[] = {0.1, 0.4, 0.35, 0.8};
  const int y[] = {0, 0, 1, 1};
  const double ex = eval::roc_auc(s, y);
  c.expect(ex == 0.75, "worked example gave " + fmt(ex));

  std::mt19937_64 rng(derive_seed(5, "acceptance/auc"));
  std::uniform_int_distribution<int> level(0, 24);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::vector<double> scores(200);
    const std::vector<int> labels = random_labels(200, rng);
    for (double& v : scores) v = 0.04 * level(rng);
    const double pairs = eval::roc_auc(scores, labels);
    const double trap = eval::trapezoid_area(eval::roc_curve(scores, labels).curve);
    worst = std::max({worst, std::abs(pairs - trap), std::abs(pairs - oracle::brute_auc(scores, labels))});
  }
  c.expect(worst <= 1e-12, "pair vs trapezoid differ by " + fmt(worst));
  c.note("example 0.75, max diff " + fmt(worst));
}

void descriptor_corpus(Check& c) {
  auto d = [](const char* s) { return chem::compute_descriptors(chem::parse_smiles(s)); };
  auto near = [&](double got, double want, const std::string& what) {
    c.expect(std::abs(got - want) <= 1e-6, what + " = " + fmt(got) + ", want " + fmt(want));
  };
  const auto ethanol = d("CCO");
  near(ethanol.num_hbd, 1, "ethanol hbd");
  near(ethanol.num_hba, 1, "ethanol hba");
  near(ethanol.num_rotatable_bonds, 0, "ethanol rotatable");
  near(ethanol.fraction_csp3, 2.0 / 2.0, "ethanol fsp3");  // both carbons sp3
  near(ethanol.tpsa, 20.23, "ethanol tpsa");  // one hydroxyl O
  const auto benzene = d("c1ccccc1");
  near(benzene.num_aromatic_rings, 1, "benzene aromatic rings");
  near(benzene.tpsa, 0, "benzene tpsa");
  near(benzene.fraction_csp3, 0, "benzene fsp3");
  near(d("C").bertz_ct, 0, "methane bertz");
  const auto butane = d("CCCC");
  near(butane.num_rotatable_bonds, 1, "butane rotatable");
  // two equivalent 2-bond paths: 2 log2 2 - 2 log2 2 for atoms of one type = 2
  near(butane.bertz_ct, 2.0 * std::log2(2.0), "butane bertz");
  const auto ethane = d("CC");
  near(ethane.chi0n, 1.0 / std::sqrt(1.0) + 1.0 / std::sqrt(1.0), "ethane chi0n");
  near(ethane.chi1n, 1.0 / std::sqrt(1.0 * 1.0), "ethane chi1n");
  c.note("ethanol, benzene, methane, butane, ethane within 1e-6");
}

void end_to_end(Check& c, const fs::path& work) {
  const fs::path dir = work / "benchmark";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "config.json");
    cfg << R"({
  "input": {"synthetic": {"n_train": 200, "n_test": 100, "dimension": 4, "separation": 0.7}},
  "seed": 7
})";
  }
  std::ostringstream out, err;
  const auto t0 = std::chrono::steady_clock::now();
  pipeline::RunOverrides ov;
  ov.out_dir = dir / "run1";
  const int code = pipeline::cmd_compare(dir / "config.json", ov, out, err);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(code == 0, "cmd_compare exit " + std::to_string(code) + ": " + err.str());
  if (code != 0) return;
  c.expect(secs < 120.0, "cmd_compare took " + fmt(secs) + " s");
  ov.out_dir = dir / "run2";
  c.expect(pipeline::cmd_compare(dir / "config.json", ov, out, err) == 0, "rerun failed");

  auto load = [](const fs::path& p) {
    std::ifstream in(p);
    return pipeline::Json::parse(in);
  };
  pipeline::Json r1 = load(dir / "run1" / "report.json");
  pipeline::Json r2 = load(dir / "run2" / "report.json");
  const double q = r1["models"]["qmkl_svm"]["auc"].get<double>();
  const double rbf = r1["models"]["rbf_svm"]["auc"].get<double>();
  c.expect(r1["models"].contains("gradient_boosting"), "no gradient_boosting entry");
  const double gb = r1["models"]["gradient_boosting"]["auc"].get<double>();
  c.expect(q >= 0.90, "qmkl_svm AUC " + fmt(q) + " < 0.90");
  c.expect(q >= rbf - 0.02, "qmkl_svm AUC " + fmt(q) + " below rbf_svm " + fmt(rbf) + " - 0.02");
  r1.erase("timing");
  r2.erase("timing");
  c.expect(r1.dump() == r2.dump(), "rerun report differs outside timing");
  c.note("qmkl_svm " + fmt(q) + ", rbf_svm " + fmt(rbf) + ", gradient_boosting " + fmt(gb) + ", compare " +
         fmt(secs) + " s, rerun identical");
}

void leak_freedom(Check& c, const fs::path& work) {
  const fs::path dir = work / "leak";
  fs::remove_all(dir);
  std::ostringstream out, err;
  c.expect(pipeline::cmd_synth(dir, 8, 80, 40, 4, 0.7, out, err) == 0, "synth failed");
  {
    std::ofstream cfg(dir / "config.json");
    cfg << R"({"input": {"train": "train.csv", "test": "test.csv"}})";
  }
  const pipeline::PipelineConfig config = pipeline::load_config(dir / "config.json");
  const pipeline::PreparedData base = pipeline::prepare(config);

  std::mt19937_64 rng(derive_seed(8, "acceptance/leak"));
  std::normal_distribution<double> nd(0.0, 50.0);
  for (int round = 0; round < 5; ++round) {
    csv::Table test = csv::read_file((dir / "test.csv").string());
    for (auto& row : test.rows)
      for (std::size_t col = 1; col + 1 < row.size(); ++col) row[col] = format_double(nd(rng));
    {
      std::ofstream o(dir / "test.csv", std::ios::binary);
      csv::write_row(o, test.header);
      for (const auto& row : test.rows) csv::write_row(o, row);
    }
    const pipeline::PreparedData moved = pipeline::prepare(config);
    c.expect(moved.preprocessing.standardizer == base.preprocessing.standardizer, "standardizer moved");
    c.expect(moved.preprocessing.pca == base.preprocessing.pca, "PCA moved");
  }
  c.note("5 perturbations, fitted parameters bit-identical");
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "qsar_acceptance";
  fs::create_directories(work);

  const std::vector<Criterion> criteria = {
      {1, "quantum kernel oracle", 5.0, quantum_oracle},
      {2, "PSD suite", 60.0, psd_suite},
      {3, "MKL weight contract", 0.0, weight_contract},
      {4, "SVM correctness", 0.0, svm_correctness},
      {5, "AUC oracle", 0.0, auc_oracle},
      {6, "descriptor corpus", 0.0, descriptor_corpus},
      {7, "end-to-end synthetic benchmark", 120.0, [&](Check& c) { end_to_end(c, work); }},
      {8, "leak-freedom", 0.0, [&](Check& c) { leak_freedom(c, work); }},
  };

  int failures = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.budget_s > 0.0) check.expect(secs < cr.budget_s, "runtime " + fmt(secs) + " s over budget");
    std::cout << (check.ok() ? "PASS" : "FAIL") << " criterion " << cr.id << " (" << cr.title << "): "
              << check.summary() << " [" << fmt(secs) << " s]\n";
    failures += !check.ok();
  }
  return failures == 0 ? 0 : 1;
}
