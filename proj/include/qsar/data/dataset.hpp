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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qsar/core/matrix.hpp"

namespace qsar::data {

/// Feature matrix with binary labels; the unit passed through preprocessing.
struct Dataset {
  Matrix X;
  std::vector<int> y;
  std::vector<std::string> feature_names;
  std::vector<std::string> ids;
  /// Rows skipped at ingestion because a selected value was missing or non-numeric.
  std::size_t dropped_rows = 0;

  std::size_t size() const noexcept { return y.size(); }
  std::size_t dimension() const noexcept { return X.cols(); }
  std::size_t count_positive() const noexcept;

  /// Throws DimensionMismatch / NonBinaryLabel when the invariants fail.
  void validate() const;

  Dataset subset(const std::vector<std::size_t>& rows) const;
};

enum class LabelKind {
  Binary,  ///< integers 0/1
  Ic50nM,  ///< IC50 in nM, labelled by the pIC50 threshold
};

struct TableSpec {
  std::string label_column;
  LabelKind label_kind = LabelKind::Binary;
  /// Empty selects every column except the label, id and skipped columns.
  std::vector<std::string> feature_columns;
  /// Row identifiers; when absent from the file, ids are 1-based row numbers.
  std::string id_column = "id";
  std::vector<std::string> skip_columns;
};

/// Reads a CSV with header into a Dataset. Rows with a missing or
/// unparseable selected value are dropped and counted.
Dataset load_table(const std::string& path, const TableSpec& spec);
Dataset load_table(std::istream& in, const TableSpec& spec);

/// Writes id, features..., label.
void write_table(const std::string& path, const Dataset& ds, const std::string& label_column = "label");

}  // namespace qsar::data
