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

#include "qsar/pipeline/inputs.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qsar/chem/smiles.hpp"
#include "qsar/core/error.hpp"
#include "qsar/core/format.hpp"
#include "qsar/core/rng.hpp"

namespace qsar::pipeline {

data::Dataset synthetic_dataset(std::size_t n, std::size_t dimension, double separation, std::mt19937_64& rng,
                                const std::string& id_prefix) {
  data::Dataset ds;
  ds.X = Matrix(n, dimension);
  ds.y.resize(n);
  ds.ids.resize(n);
  for (std::size_t c = 0; c < dimension; ++c) ds.feature_names.push_back("x" + std::to_string(c + 1));
  std::normal_distribution<double> noise(0.0, 1.0);
  const int width = static_cast<int>(std::to_string(n).size());
  for (std::size_t i = 0; i < n; ++i) {
    const int label = i % 2 == 0 ? 1 : 0;
    ds.y[i] = label;
    const double mean = label == 1 ? separation : -separation;
    for (std::size_t c = 0; c < dimension; ++c) ds.X(i, c) = mean + noise(rng);
    std::string num = std::to_string(i + 1);
    ds.ids[i] = id_prefix + std::string(static_cast<std::size_t>(width) - num.size(), '0') + num;
  }
  return ds;
}

TrainTest synthetic_train_test(const SyntheticSource& source, std::uint64_t seed) {
  auto train_rng = make_rng(seed, "synthetic/train");
  auto test_rng = make_rng(seed, "synthetic/test");
  return {synthetic_dataset(source.n_train, source.dimension, source.separation, train_rng, "train-"),
          synthetic_dataset(source.n_test, source.dimension, source.separation, test_rng, "test-")};
}

TrainTest stratified_split(const data::Dataset& ds, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "split fraction must be in (0, 1)");
  }
  auto rng = make_rng(seed, "split");
  std::vector<bool> to_test(ds.size(), false);
  for (int cls : {0, 1}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (ds.y[i] == cls) members.push_back(i);
    std::shuffle(members.begin(), members.end(), rng);
    auto take = static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(members.size())));
    if (members.size() >= 2) take = std::clamp<std::size_t>(take, 1, members.size() - 1);
    for (std::size_t k = 0; k < take && k < members.size(); ++k) to_test[members[k]] = true;
  }
  std::vector<std::size_t> train_rows, test_rows;
  for (std::size_t i = 0; i < ds.size(); ++i) (to_test[i] ? test_rows : train_rows).push_back(i);
  TrainTest out{ds.subset(train_rows), ds.subset(test_rows)};
  out.train.dropped_rows = ds.dropped_rows;
  return out;
}

DescriptorTable compute_descriptor_table(const csv::Table& table, const std::string& smiles_column,
                                         const std::string& id_column) {
  const auto smiles_col = table.column_index(smiles_column);
  if (!smiles_col) throw Error(ErrorCode::MissingColumn, "SMILES column '" + smiles_column + "' not found");
  const auto id_col = table.column_index(id_column);
  DescriptorTable out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t source_row = r + 1;
    std::string id = id_col && *id_col < row.size() ? row[*id_col] : std::to_string(source_row);
    std::string smiles = *smiles_col < row.size() ? std::string(trim(row[*smiles_col])) : std::string();
    try {
      const chem::Molecule mol = chem::parse_smiles(smiles);
      out.rows.push_back({source_row, std::move(id), std::move(smiles), chem::compute_descriptors(mol)});
    } catch (const Error& e) {
      out.rejects.push_back({source_row, std::move(id), std::move(smiles), e.what()});
    }
  }
  return out;
}

data::Dataset descriptor_dataset(const csv::Table& table, const InputConfig& input) {
  const auto label_col = table.column_index(input.label_column);
  if (!label_col) throw Error(ErrorCode::MissingColumn, "label column '" + input.label_column + "' not found");
  const DescriptorTable desc = compute_descriptor_table(table, input.smiles_column, input.id_column);

  // Re-assemble as an in-memory table so labels go through the regular loader.
  std::ostringstream buffer;
  std::vector<std::string> header{"id", input.label_column};
  for (std::string_view name : chem::DescriptorVector::names()) header.emplace_back(name);
  csv::write_row(buffer, header);
  for (const DescriptorRow& row : desc.rows) {
    const auto& source = table.rows[row.source_row - 1];
    std::vector<std::string> fields{row.id, *label_col < source.size() ? source[*label_col] : std::string()};
    for (double v : row.descriptors.values()) fields.push_back(format_double(v));
    csv::write_row(buffer, fields);
  }
  std::istringstream in(buffer.str());
  data::TableSpec spec;
  spec.label_column = input.label_column;
  spec.label_kind = input.label_kind;
  spec.id_column = "id";
  data::Dataset ds = data::load_table(in, spec);
  ds.dropped_rows += desc.rejects.size();
  return ds;
}

namespace {

data::Dataset load_one(const std::filesystem::path& path, const InputConfig& input) {
  if (!input.smiles_column.empty()) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
    return descriptor_dataset(csv::read(in), input);
  }
  data::TableSpec spec;
  spec.label_column = input.label_column;
  spec.label_kind = input.label_kind;
  spec.id_column = input.id_column;
  spec.feature_columns = input.feature_columns;
  spec.skip_columns = input.skip_columns;
  return data::load_table(path.string(), spec);
}

}  // namespace

TrainTest load_inputs(const PipelineConfig& config) {
  const InputConfig& in = config.input;
  if (in.synthetic) return synthetic_train_test(*in.synthetic, config.seed);
  data::Dataset train = load_one(in.train_path, in);
  if (in.split_fraction) return stratified_split(train, *in.split_fraction, config.seed);
  data::Dataset test = load_one(in.test_path, in);
  if (test.feature_names != train.feature_names) {
    throw Error(ErrorCode::DimensionMismatch, "train and test files have different feature columns");
  }
  return {std::move(train), std::move(test)};
}

}  // namespace qsar::pipeline
