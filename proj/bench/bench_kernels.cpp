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

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qsar/data/pca.hpp"
#include "qsar/gbm/gbm.hpp"
#include "qsar/kernels/gram.hpp"

namespace {

qsar::Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  qsar::Matrix m(rows, cols);
  for (double& v : m.data()) v = u(rng);
  return m;
}

qsar::kernels::KernelSpec spec_for(int index) {
  return qsar::kernels::default_ensemble(4)[static_cast<std::size_t>(index)];
}

void BM_Gram(benchmark::State& state) {
  const auto X = random_matrix(static_cast<std::size_t>(state.range(0)), 4, 1);
  const auto spec = spec_for(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(qsar::kernels::gram_matrix(X, spec));
  state.SetLabel(spec.name);
}

void BM_GramSerial(benchmark::State& state) {
  const auto X = random_matrix(static_cast<std::size_t>(state.range(0)), 4, 1);
  const auto spec = spec_for(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(qsar::kernels::gram_matrix_serial(X, X, spec, true));
  state.SetLabel(spec.name);
}

void BM_Covariance(benchmark::State& state) {
  const auto X = random_matrix(354, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(qsar::data::covariance(X));
}

void BM_CovarianceSerial(benchmark::State& state) {
  const auto X = random_matrix(354, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(qsar::data::covariance_serial(X));
}

struct SplitInput {
  qsar::Matrix x;
  std::vector<double> target;
  std::vector<std::size_t> rows;
};

SplitInput split_input(std::size_t d) {
  SplitInput in{random_matrix(1000, d, 3), std::vector<double>(1000), std::vector<std::size_t>(1000)};
  std::mt19937_64 rng(4);
  std::normal_distribution<double> nd;
  for (std::size_t i = 0; i < 1000; ++i) {
    in.target[i] = nd(rng);
    in.rows[i] = i;
  }
  return in;
}

void BM_Split(benchmark::State& state) {
  const SplitInput in = split_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qsar::gbm::find_best_split(in.x, in.target, in.rows, 2));
}

void BM_SplitSerial(benchmark::State& state) {
  const SplitInput in = split_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qsar::gbm::find_best_split_serial(in.x, in.target, in.rows, 2));
}

}  // namespace

BENCHMARK(BM_Gram)->ArgsProduct({{100, 300}, {0, 1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramSerial)->ArgsProduct({{100, 300}, {0, 1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Covariance)->Arg(11)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CovarianceSerial)->Arg(11)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Split)->Arg(4)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SplitSerial)->Arg(4)->Arg(64)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
