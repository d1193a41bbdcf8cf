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

// Command-line entry point: descriptors, compare, kernels, score, synth.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qsar/core/parallel.hpp"
#include "qsar/pipeline/commands.hpp"
#include "qsar/pipeline/run.hpp"

namespace {

struct RunFlags {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  int threads = 0;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--config", f.config, "Pipeline config (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", f.out, "Output directory (overrides output_dir)");
  cmd->add_option("--seed", f.seed, "Top-level seed (overrides the config)");
  cmd->add_option("--threads", f.threads, "OpenMP worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
}

qsar::pipeline::RunOverrides overrides(const RunFlags& f) {
  qsar::pipeline::RunOverrides o;
  if (!f.out.empty()) o.out_dir = f.out;
  o.seed = f.seed;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum multiple-kernel learning QSAR benchmark"};
  app.set_version_flag("--version", qsar::pipeline::tool_version());
  app.require_subcommand(1);

  RunFlags compare_flags;
  auto* compare = app.add_subcommand("compare", "Train QMKL-SVM, RBF-SVM and gradient boosting; write the report");
  add_run_flags(compare, compare_flags);

  RunFlags kernel_flags;
  auto* kernels = app.add_subcommand("kernels", "Dump basis Gram matrices, alignments and weights");
  add_run_flags(kernels, kernel_flags);

  std::string desc_in, desc_out;
  qsar::pipeline::DescriptorOptions desc_opts;
  auto* descriptors = app.add_subcommand("descriptors", "Compute native descriptors from a SMILES CSV");
  descriptors->add_option("--input", desc_in, "CSV with a SMILES column")->required();
  descriptors->add_option("--output", desc_out, "Descriptor CSV to write")->required();
  descriptors->add_option("--smiles-column", desc_opts.smiles_column, "SMILES column name")->capture_default_str();
  descriptors->add_option("--id-column", desc_opts.id_column, "Identifier column name")->capture_default_str();

  std::string model_path, score_in, score_out, score_id = "id";
  auto* score = app.add_subcommand("score", "Score raw feature rows with a saved model bundle");
  score->add_option("--model", model_path, "model_*.json bundle")->required()->check(CLI::ExistingFile);
  score->add_option("--input", score_in, "CSV with the model's feature columns")->required();
  score->add_option("--output", score_out, "Score CSV to write")->required();
  score->add_option("--id-column", score_id, "Identifier column name")->capture_default_str();

  std::string synth_out;
  std::uint64_t synth_seed = 7;
  std::size_t synth_train = 200, synth_test = 100, synth_dim = 4;
  double synth_sep = 0.7;
  auto* synth = app.add_subcommand("synth", "Write a two-Gaussian synthetic train/test pair");
  synth->add_option("--out", synth_out, "Output directory")->required();
  synth->add_option("--seed", synth_seed)->capture_default_str();
  synth->add_option("--train", synth_train, "Training rows")->capture_default_str();
  synth->add_option("--test", synth_test, "Test rows")->capture_default_str();
  synth->add_option("--dimension", synth_dim)->capture_default_str();
  synth->add_option("--separation", synth_sep, "Class means at +/- this value")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qsar::pipeline::kExitUsage;
  }

  if (*compare) {
    if (compare_flags.threads > 0) qsar::set_worker_threads(compare_flags.threads);
    return qsar::pipeline::cmd_compare(compare_flags.config, overrides(compare_flags), std::cout, std::cerr);
  }
  if (*kernels) {
    if (kernel_flags.threads > 0) qsar::set_worker_threads(kernel_flags.threads);
    return qsar::pipeline::cmd_kernels(kernel_flags.config, overrides(kernel_flags), std::cout, std::cerr);
  }
  if (*descriptors) return qsar::pipeline::cmd_descriptors(desc_in, desc_out, desc_opts, std::cout, std::cerr);
  if (*score) return qsar::pipeline::cmd_score(model_path, score_in, score_out, score_id, std::cout, std::cerr);
  if (*synth) {
    return qsar::pipeline::cmd_synth(synth_out, synth_seed, synth_train, synth_test, synth_dim, synth_sep, std::cout,
                                     std::cerr);
  }
  return qsar::pipeline::kExitUsage;
}
