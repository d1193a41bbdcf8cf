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

#include "qsar/kernels/cache.hpp"

#include <fstream>
#include <sstream>

#include "qsar/core/csv.hpp"
#include "qsar/core/error.hpp"
#include "qsar/core/format.hpp"
#include "qsar/core/hash.hpp"
#include "qsar/kernels/gram.hpp"

namespace qsar::kernels {

namespace {

constexpr std::string_view kMagic = "qmkl-kernel-matrix";

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += csv::escape(ids[i]);
  }
  return out;
}

std::string expect_field(std::istream& in, std::string_view name, const std::filesystem::path& path) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::Io, path.string() + ": truncated header");
  const std::string prefix = std::string(name) + " ";
  if (line == name) return {};
  if (line.compare(0, prefix.size(), prefix) != 0) {
    throw Error(ErrorCode::Io, path.string() + ": expected '" + std::string(name) + "' header line");
  }
  return line.substr(prefix.size());
}

std::uint64_t parse_hex(const std::string& text, const std::filesystem::path& path) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 16);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::Io, path.string() + ": bad hash '" + text + "'");
  }
}

}  // namespace

void write_kernel_file(const std::filesystem::path& path, const KernelMatrix& k, const KernelFileHeader& header) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
  out << kMagic << ' ' << kKernelFileVersion << '\n';
  out << "kernel " << header.kernel_name << '\n';
  out << "spec " << header.spec << '\n';
  out << "spec_hash " << to_hex(header.spec_hash) << '\n';
  out << "dataset_hash " << to_hex(header.dataset_hash) << '\n';
  out << "shape " << k.rows() << ' ' << k.cols() << '\n';
  out << "symmetric " << (k.symmetric ? 1 : 0) << '\n';
  out << "row_ids " << join_ids(k.row_ids) << '\n';
  out << "col_ids " << join_ids(k.col_ids) << '\n';
  out << "data\n";
  for (std::size_t i = 0; i < k.rows(); ++i) {
    for (std::size_t j = 0; j < k.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(k.values(i, j));
    }
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::Io, "failed writing '" + path.string() + "'");
}

KernelMatrix read_kernel_file(const std::filesystem::path& path, KernelFileHeader* header) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  const std::string version = expect_field(in, kMagic, path);
  if (version != std::to_string(kKernelFileVersion)) {
    throw Error(ErrorCode::Io, path.string() + ": unsupported kernel file version '" + version + "'");
  }
  KernelFileHeader h;
  h.kernel_name = expect_field(in, "kernel", path);
  h.spec = expect_field(in, "spec", path);
  h.spec_hash = parse_hex(expect_field(in, "spec_hash", path), path);
  h.dataset_hash = parse_hex(expect_field(in, "dataset_hash", path), path);
  std::istringstream shape(expect_field(in, "shape", path));
  std::size_t rows = 0, cols = 0;
  if (!(shape >> rows >> cols)) throw Error(ErrorCode::Io, path.string() + ": bad shape line");
  const std::string sym = expect_field(in, "symmetric", path);

  KernelMatrix k;
  k.symmetric = sym == "1";
  k.provenance = h.kernel_name;
  const std::string row_ids = expect_field(in, "row_ids", path);
  const std::string col_ids = expect_field(in, "col_ids", path);
  if (!row_ids.empty()) k.row_ids = csv::split_line(row_ids);
  if (!col_ids.empty()) k.col_ids = csv::split_line(col_ids);
  expect_field(in, "data", path);

  std::vector<double> values;
  values.reserve(rows * cols);
  std::string token;
  while (in >> token) {
    auto v = parse_double(token);
    if (!v) throw Error(ErrorCode::Io, path.string() + ": bad matrix value '" + token + "'");
    values.push_back(*v);
  }
  if (values.size() != rows * cols) throw Error(ErrorCode::Io, path.string() + ": value count does not match shape");
  k.values = Matrix(rows, cols, std::move(values));
  if (header) *header = h;
  return k;
}

std::uint64_t dataset_hash(const Matrix& rows, const Matrix& cols) {
  Fnv1a h;
  h.update(hash_matrix(rows));
  h.update(hash_matrix(cols));
  return h.digest();
}

KernelCache::KernelCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path KernelCache::path_for(std::uint64_t dataset, std::uint64_t spec) const {
  return dir_ / (to_hex(dataset) + "_" + to_hex(spec) + ".kmat");
}

std::optional<KernelMatrix> KernelCache::load(std::uint64_t dataset, std::uint64_t spec) const {
  const auto path = path_for(dataset, spec);
  if (!std::filesystem::exists(path)) return std::nullopt;
  KernelFileHeader h;
  KernelMatrix k = read_kernel_file(path, &h);
  if (h.dataset_hash != dataset || h.spec_hash != spec) return std::nullopt;
  return k;
}

void KernelCache::store(const KernelMatrix& k, const KernelSpec& spec, std::uint64_t dataset) const {
  write_kernel_file(path_for(dataset, spec.hash()), k, {spec.name, spec.describe(), spec.hash(), dataset});
}

KernelMatrix cached_gram(const KernelCache* cache, const Matrix& A, const Matrix& B, const KernelSpec& spec,
                         const std::vector<std::string>& row_ids, const std::vector<std::string>& col_ids) {
  const std::uint64_t key = dataset_hash(A, B);
  if (cache) {
    if (auto hit = cache->load(key, spec.hash())) {
      hit->row_ids = row_ids;
      hit->col_ids = col_ids;
      hit->provenance = spec.name;
      return *std::move(hit);
    }
  }
  KernelMatrix k = gram_matrix(A, B, spec, row_ids, col_ids);
  if (cache) cache->store(k, spec, key);
  return k;
}

}  // namespace qsar::kernels
