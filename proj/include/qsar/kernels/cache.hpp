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

#include "qsar/core/matrix.hpp"
#include "qsar/kernels/kernel_matrix.hpp"
#include "qsar/kernels/kernel_spec.hpp"

namespace qsar::kernels {

inline constexpr int kKernelFileVersion = 1;

/// Header of a kernel matrix file.
///
///   qmkl-kernel-matrix 1
///   kernel <name>
///   spec <canonical spec text>
///   spec_hash <16 hex digits>
///   dataset_hash <16 hex digits>
///   shape <rows> <cols>
///   symmetric <0|1>
///   row_ids <csv list>
///   col_ids <csv list>
///   data
///   <rows lines of space-separated shortest round-trip doubles>
struct KernelFileHeader {
  std::string kernel_name;
  std::string spec;
  std::uint64_t spec_hash = 0;
  std::uint64_t dataset_hash = 0;
};

void write_kernel_file(const std::filesystem::path& path, const KernelMatrix& k, const KernelFileHeader& header);
KernelMatrix read_kernel_file(const std::filesystem::path& path, KernelFileHeader* header = nullptr);

/// Hash of the row and column feature matrices a Gram matrix is built from.
std::uint64_t dataset_hash(const Matrix& rows, const Matrix& cols);

/// Directory of kernel files keyed by (dataset hash, spec hash).
class KernelCache {
 public:
  explicit KernelCache(std::filesystem::path dir);

  std::filesystem::path path_for(std::uint64_t dataset, std::uint64_t spec) const;
  std::optional<KernelMatrix> load(std::uint64_t dataset, std::uint64_t spec) const;
  void store(const KernelMatrix& k, const KernelSpec& spec, std::uint64_t dataset) const;

 private:
  std::filesystem::path dir_;
};

/// gram_matrix through an optional cache. Ids are not part of the key;
/// cached matrices get the ids passed here.
KernelMatrix cached_gram(const KernelCache* cache, const Matrix& A, const Matrix& B, const KernelSpec& spec,
                         const std::vector<std::string>& row_ids, const std::vector<std::string>& col_ids);

}  // namespace qsar::kernels
