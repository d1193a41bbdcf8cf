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

#include "qsar/data/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "qsar/core/csv.hpp"
#include "qsar/core/error.hpp"
#include "qsar/core/format.hpp"
#include "qsar/data/activity.hpp"

namespace qsar::data {

std::size_t Dataset::count_positive() const noexcept {
  return static_cast<std::size_t>(std::count(y.begin(), y.end(), 1));
}

void Dataset::validate() const {
  if (X.rows() != y.size()) throw Error(ErrorCode::DimensionMismatch, "label count differs from row count");
  if (!ids.empty() && ids.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "id count differs from row count");
  if (!feature_names.empty() && feature_names.size() != X.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "feature name count differs from column count");
  }
  for (int label : y)
    if (label != 0 && label != 1) throw Error(ErrorCode::NonBinaryLabel, "label outside {0,1}");
}

Dataset Dataset::subset(const std::vector<std::size_t>& rows) const {
  Dataset out;
  out.X = select_rows(X, rows);
  out.feature_names = feature_names;
  for (std::size_t r : rows) {
    out.y.push_back(y[r]);
    if (!ids.empty()) out.ids.push_back(ids[r]);
  }
  return out;
}

Dataset load_table(std::istream& in, const TableSpec& spec) {
  const csv::Table table = csv::read(in);
  const auto label_col = table.column_index(spec.label_column);
  if (!label_col) throw Error(ErrorCode::MissingColumn, "label column '" + spec.label_column + "' not found");
  const auto id_col = table.column_index(spec.id_column);

  std::vector<std::size_t> feature_cols;
  std::vector<std::string> names;
  if (spec.feature_columns.empty()) {
    for (std::size_t c = 0; c < table.header.size(); ++c) {
      if (c == *label_col || (id_col && c == *id_col)) continue;
      const std::string& h = table.header[c];
      if (std::find(spec.skip_columns.begin(), spec.skip_columns.end(), h) != spec.skip_columns.end()) continue;
      feature_cols.push_back(c);
      names.push_back(h);
    }
  } else {
    for (const std::string& name : spec.feature_columns) {
      const auto c = table.column_index(name);
      if (!c) throw Error(ErrorCode::MissingColumn, "feature column '" + name + "' not found");
      feature_cols.push_back(*c);
      names.push_back(name);
    }
  }

  Dataset ds;
  ds.feature_names = names;
  std::vector<double> values;
  std::size_t row_number = 0;
  for (const auto& row : table.rows) {
    ++row_number;
    if (row.size() != table.header.size()) {
      ++ds.dropped_rows;
      continue;
    }
    std::optional<int> label;
    if (spec.label_kind == LabelKind::Binary) {
      const std::string_view text = trim(row[*label_col]);
      if (auto v = parse_integer(text)) {
        if (*v != 0 && *v != 1) {
          throw Error(ErrorCode::NonBinaryLabel,
                      "row " + std::to_string(row_number) + ": label '" + std::string(text) + "' is not 0 or 1");
        }
        label = static_cast<int>(*v);
      } else if (auto d = parse_double(text)) {
        if (*d != 0.0 && *d != 1.0) {
          throw Error(ErrorCode::NonBinaryLabel,
                      "row " + std::to_string(row_number) + ": label '" + std::string(text) + "' is not 0 or 1");
        }
        label = static_cast<int>(*d);
      }
    } else if (auto ic50 = parse_double(row[*label_col])) {
      label = label_from_activity({"", *ic50});
    }
    if (!label) {
      ++ds.dropped_rows;
      continue;
    }
    std::vector<double> parsed;
    parsed.reserve(feature_cols.size());
    bool ok = true;
    for (std::size_t c : feature_cols) {
      auto v = parse_double(row[c]);
      if (!v) {
        ok = false;
        break;
      }
      parsed.push_back(*v);
    }
    if (!ok) {
      ++ds.dropped_rows;
      continue;
    }
    values.insert(values.end(), parsed.begin(), parsed.end());
    ds.y.push_back(*label);
    ds.ids.push_back(id_col ? row[*id_col] : std::to_string(row_number));
  }
  if (ds.y.empty()) throw Error(ErrorCode::EmptyDataset, "no usable rows");
  ds.X = Matrix(ds.y.size(), feature_cols.size(), std::move(values));
  return ds;
}

Dataset load_table(const std::string& path, const TableSpec& spec) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  return load_table(in, spec);
}

void write_table(const std::string& path, const Dataset& ds, const std::string& label_column) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  std::vector<std::string> header{"id"};
  header.insert(header.end(), ds.feature_names.begin(), ds.feature_names.end());
  header.push_back(label_column);
  csv::write_row(out, header);
  for (std::size_t r = 0; r < ds.size(); ++r) {
    std::vector<std::string> fields{ds.ids.empty() ? std::to_string(r + 1) : ds.ids[r]};
    for (double v : ds.X.row(r)) fields.push_back(format_double(v));
    fields.push_back(std::to_string(ds.y[r]));
    csv::write_row(out, fields);
  }
}

}  // namespace qsar::data
