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
#include <iosfwd>
#include <optional>
#include <string>

#include "qsar/core/error.hpp"

namespace qsar::pipeline {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDegenerate = 3;

/// 3 for degenerate data (single class, empty or rank-deficient sets), otherwise 2.
int exit_code_for(ErrorCode code) noexcept;

struct RunOverrides {
  std::optional<std::filesystem::path> out_dir;
  std::optional<std::uint64_t> seed;
};

/// Command entry points. Each reports errors on `err` and returns an exit code.
int cmd_compare(const std::filesystem::path& config_path, const RunOverrides& overrides, std::ostream& out,
                std::ostream& err);
int cmd_kernels(const std::filesystem::path& config_path, const RunOverrides& overrides, std::ostream& out,
                std::ostream& err);

struct DescriptorOptions {
  std::string smiles_column = "smiles";
  std::string id_column = "id";
};

/// Writes id, smiles and the native descriptors; rejected rows go to
/// <out stem>.rejects.csv. A missing SMILES column writes nothing.
int cmd_descriptors(const std::filesystem::path& input_csv, const std::filesystem::path& output_csv,
                    const DescriptorOptions& options, std::ostream& out, std::ostream& err);

/// Scores a CSV of raw features with a model bundle; writes id,score.
int cmd_score(const std::filesystem::path& model_path, const std::filesystem::path& input_csv,
              const std::filesystem::path& output_csv, const std::string& id_column, std::ostream& out,
              std::ostream& err);

/// Writes synthetic train.csv and test.csv.
int cmd_synth(const std::filesystem::path& out_dir, std::uint64_t seed, std::size_t n_train, std::size_t n_test,
              std::size_t dimension, double separation, std::ostream& out, std::ostream& err);

std::filesystem::path rejects_path_for(const std::filesystem::path& output_csv);

}  // namespace qsar::pipeline
