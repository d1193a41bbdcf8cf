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

#include "qsar/pipeline/commands.hpp"

#include <fstream>
#include <ostream>

#include "qsar/core/csv.hpp"
#include "qsar/core/format.hpp"
#include "qsar/pipeline/inputs.hpp"
#include "qsar/pipeline/models.hpp"
#include "qsar/pipeline/run.hpp"

namespace qsar::pipeline {

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingleClassTraining:
    case ErrorCode::SingleClassEval:
    case ErrorCode::DegenerateData:
    case ErrorCode::EmptyDataset:
    case ErrorCode::TooFewRows:
      return kExitDegenerate;
    default:
      return kExitUsage;
  }
}

namespace {

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error [io]: " << e.what() << '\n';
    return kExitUsage;
  }
}

PipelineConfig with_overrides(const std::filesystem::path& config_path, const RunOverrides& o) {
  PipelineConfig c = load_config(config_path);
  if (o.seed) c.seed = *o.seed;
  if (o.out_dir) c.output_dir = *o.out_dir;
  c.validate();
  return c;
}

}  // namespace

int cmd_compare(const std::filesystem::path& config_path, const RunOverrides& overrides, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const PipelineConfig config = with_overrides(config_path, overrides);
    const CompareResult r = run_compare(config, config.output_dir);
    for (const ModelResult& m : r.models) {
      out << m.name << " auc=" << format_double(m.roc.auc) << " mcc=" << format_double(m.confusion.mcc) << '\n';
    }
    out << "report: " << r.report_path.string() << '\n';
    return kExitOk;
  });
}

int cmd_kernels(const std::filesystem::path& config_path, const RunOverrides& overrides, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const PipelineConfig config = with_overrides(config_path, overrides);
    const BasisKernels b = run_kernels(config, config.output_dir);
    for (std::size_t i = 0; i < b.specs.size(); ++i) {
      out << b.specs[i].name << " alignment=" << format_double(b.weights.alignments[i])
          << " weight=" << format_double(b.weights.weights[i]) << '\n';
    }
    if (b.weights.uniform_fallback) out << "uniform weights used\n";
    out << "wrote " << b.specs.size() + 1 << " matrices to " << config.output_dir.string() << '\n';
    return kExitOk;
  });
}

std::filesystem::path rejects_path_for(const std::filesystem::path& output_csv) {
  std::filesystem::path p = output_csv;
  p.replace_extension(".rejects.csv");
  return p;
}

int cmd_descriptors(const std::filesystem::path& input_csv, const std::filesystem::path& output_csv,
                    const DescriptorOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::ifstream in(input_csv);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + input_csv.string() + "'");
    const csv::Table table = csv::read(in);
    const DescriptorTable desc = compute_descriptor_table(table, options.smiles_column, options.id_column);

    std::ofstream o(output_csv, std::ios::binary);
    if (!o) throw Error(ErrorCode::Io, "cannot write '" + output_csv.string() + "'");
    std::vector<std::string> header{"id", "smiles"};
    for (std::string_view n : chem::DescriptorVector::names()) header.emplace_back(n);
    csv::write_row(o, header);
    for (const DescriptorRow& row : desc.rows) {
      std::vector<std::string> fields{row.id, row.smiles};
      for (double v : row.descriptors.values()) fields.push_back(format_double(v));
      csv::write_row(o, fields);
    }
    if (!o) throw Error(ErrorCode::Io, "write failed for '" + output_csv.string() + "'");

    const std::filesystem::path rejects = rejects_path_for(output_csv);
    std::ofstream r(rejects, std::ios::binary);
    if (!r) throw Error(ErrorCode::Io, "cannot write '" + rejects.string() + "'");
    csv::write_row(r, {"row", "id", "smiles", "reason"});
    for (const RejectedRow& row : desc.rejects) {
      csv::write_row(r, {std::to_string(row.source_row), row.id, row.smiles, row.reason});
    }
    out << desc.rows.size() << " molecules written, " << desc.rejects.size() << " rejected\n";
    return kExitOk;
  });
}

int cmd_score(const std::filesystem::path& model_path, const std::filesystem::path& input_csv,
              const std::filesystem::path& output_csv, const std::string& id_column, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const Json j = read_json(model_path);
    const std::string type = bundle_type(j);
    const Preprocessing prep = preprocessing_from_json(j.at("preprocessing"));

    std::ifstream in(input_csv);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + input_csv.string() + "'");
    const csv::Table table = csv::read(in);
    const auto id_col = table.column_index(id_column);
    std::vector<std::size_t> cols;
    for (const std::string& name : prep.feature_names) {
      const auto c = table.column_index(name);
      if (!c) throw Error(ErrorCode::MissingColumn, "feature column '" + name + "' not found");
      cols.push_back(*c);
    }
    Matrix raw(table.rows.size(), cols.size());
    std::vector<std::string> ids;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const auto& row = table.rows[r];
      ids.push_back(id_col && *id_col < row.size() ? row[*id_col] : std::to_string(r + 1));
      for (std::size_t k = 0; k < cols.size(); ++k) {
        const auto v = cols[k] < row.size() ? parse_double(trim(row[cols[k]])) : std::nullopt;
        if (!v) {
          throw Error(ErrorCode::InvalidSyntax,
                      "row " + std::to_string(r + 1) + ": column '" + prep.feature_names[k] + "' is not numeric");
        }
        raw(r, k) = *v;
      }
    }

    std::vector<double> scores;
    if (type == "svm") {
      scores = svm_bundle_from_json(j).score_raw(raw, ids);
    } else if (type == "gbm") {
      scores = gbm_bundle_from_json(j).score_raw(raw);
    } else {
      throw Error(ErrorCode::Config, "unknown model type '" + type + "'");
    }

    std::ofstream o(output_csv, std::ios::binary);
    if (!o) throw Error(ErrorCode::Io, "cannot write '" + output_csv.string() + "'");
    csv::write_row(o, {"id", "score"});
    for (std::size_t i = 0; i < scores.size(); ++i) csv::write_row(o, {ids[i], format_double(scores[i])});
    out << scores.size() << " rows scored\n";
    return kExitOk;
  });
}

int cmd_synth(const std::filesystem::path& out_dir, std::uint64_t seed, std::size_t n_train, std::size_t n_test,
              std::size_t dimension, double separation, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (n_train < 4 || n_test < 2 || dimension == 0) {
      throw Error(ErrorCode::InvalidParameter, "need n_train >= 4, n_test >= 2, dimension >= 1");
    }
    const TrainTest tt = synthetic_train_test({n_train, n_test, dimension, separation}, seed);
    std::filesystem::create_directories(out_dir);
    data::write_table((out_dir / "train.csv").string(), tt.train);
    data::write_table((out_dir / "test.csv").string(), tt.test);
    out << "wrote " << (out_dir / "train.csv").string() << " and " << (out_dir / "test.csv").string() << '\n';
    return kExitOk;
  });
}

}  // namespace qsar::pipeline
