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
#include <random>
#include <string>
#include <vector>

#include "qsar/chem/descriptors.hpp"
#include "qsar/core/csv.hpp"
#include "qsar/data/dataset.hpp"
#include "qsar/pipeline/config.hpp"

namespace qsar::pipeline {

struct TrainTest {
  data::Dataset train;
  data::Dataset test;
};

/// n points, labels alternating 1,0,1,...; class 1 centred at +separation on
/// every axis, class 0 at −separation, unit variance.
data::Dataset synthetic_dataset(std::size_t n, std::size_t dimension, double separation, std::mt19937_64& rng,
                                const std::string& id_prefix);

/// Train and test sets drawn from independent streams of `seed`.
TrainTest synthetic_train_test(const SyntheticSource& source, std::uint64_t seed);

/// Per-class seeded shuffle; round(fraction·n_class) rows of each class go to
/// the test set, keeping at least one row of each class on both sides when
/// the class has two or more rows. Both parts keep the original row order.
TrainTest stratified_split(const data::Dataset& ds, double test_fraction, std::uint64_t seed);

struct DescriptorRow {
  std::size_t source_row = 0;  ///< 1-based data row in the input file
  std::string id;
  std::string smiles;
  chem::DescriptorVector descriptors;
};

struct RejectedRow {
  std::size_t source_row = 0;
  std::string id;
  std::string smiles;
  std::string reason;
};

struct DescriptorTable {
  std::vector<DescriptorRow> rows;
  std::vector<RejectedRow> rejects;
};

/// Computes native descriptors for every row. Throws MissingColumn when the
/// SMILES column is absent; unparseable SMILES become rejects.
DescriptorTable compute_descriptor_table(const csv::Table& table, const std::string& smiles_column,
                                         const std::string& id_column);

/// Dataset of descriptor features with labels from the configured label column.
data::Dataset descriptor_dataset(const csv::Table& table, const InputConfig& input);

/// Loads (or generates) the train and test sets described by the config.
TrainTest load_inputs(const PipelineConfig& config);

}  // namespace qsar::pipeline
