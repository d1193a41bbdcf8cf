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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qsar/core/error.hpp"
#include "qsar/kernels/gram.hpp"
#include "qsar/svm/smo.hpp"

using namespace qsar;
using namespace qsar::svm;
using kernels::KernelMatrix;
using kernels::KernelSpec;

namespace {

Matrix points(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t d = rows.begin()->size();
  Matrix m(rows.size(), d);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

std::vector<std::string> ids_for(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  return ids;
}

// Independent score loop: explicit rbf, no library kernel code.
double brute_score(const SvmModel& m, const Matrix& train, std::span<const double> x, double gamma) {
  double f = m.bias;
  for (std::size_t i = 0; i < train.rows(); ++i) {
    double d2 = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) d2 += (x[j] - train(i, j)) * (x[j] - train(i, j));
    f += m.alpha_y[i] * std::exp(-gamma * d2);
  }
  return f;
}

void check_model_invariants(const SvmModel& m, std::span<const int> y) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.train_size(); ++i) {
    const double s = y[i] ? 1.0 : -1.0;
    const double alpha = m.alpha_y[i] * s;
    CHECK(alpha >= -1e-6);
    CHECK(alpha <= m.C + 1e-6);
    sum += m.alpha_y[i];
  }
  CHECK(std::abs(sum) <= 1e-6);
  for (std::size_t idx : m.support_indices) CHECK(m.alpha_y[idx] != 0.0);
}

void check_monotone(const SvmTrace& t) {
  REQUIRE(t.objective.size() == t.sweeps + 1);
  CHECK(t.objective.front() == 0.0);
  for (std::size_t i = 1; i < t.objective.size(); ++i) {
    CHECK(t.objective[i] >= t.objective[i - 1] - 1e-12 * (1.0 + std::abs(t.objective[i - 1])));
  }
}

struct Toy {
  Matrix X;
  std::vector<int> y;
  KernelMatrix K;
};

Toy random_toy(std::size_t n, std::uint64_t seed, double gamma) {
  std::mt19937_64 rng(seed);
  Toy t;
  t.X = oracle::random_matrix(n, 2, rng, -1.5, 1.5);
  for (std::size_t i = 0; i < n; ++i) t.y.push_back(t.X(i, 0) * t.X(i, 1) + 0.3 * t.X(i, 0) > 0 ? 1 : 0);
  t.y[0] = 1;
  t.y[1] = 0;
  t.K = kernels::gram_matrix(t.X, KernelSpec::rbf("r", gamma), ids_for(n));
  return t;
}

}  // namespace

TEST_CASE("two points on a line") {
  const Matrix X = points({{-1.0}, {1.0}});
  const int y[] = {0, 1};
  const KernelMatrix K = kernels::gram_matrix(X, KernelSpec::rbf("r", 1.0), ids_for(2));
  SvmParams p;
  p.C = 10.0;
  p.tol = 1e-8;
  const SvmModel m = train_svm(K, y, p);
  // symmetric problem: alpha_1 = alpha_2 = 1 / (1 - k12), bias 0
  const double alpha = 1.0 / (1.0 - std::exp(-4.0));
  CHECK(m.alpha_y[0] == doctest::Approx(-alpha).epsilon(1e-6));
  CHECK(m.alpha_y[1] == doctest::Approx(alpha).epsilon(1e-6));
  CHECK(std::abs(m.bias) < 1e-6);
  const auto scores = decision_scores(m, K);
  CHECK(predict_labels(scores) == std::vector<int>{0, 1});
  CHECK(scores[0] == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(scores[1] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("xor with an rbf kernel") {
  const Matrix X = points({{0.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}});
  const int y[] = {0, 0, 1, 1};
  const KernelMatrix K = kernels::gram_matrix(X, KernelSpec::rbf("r", 1.0), ids_for(4));
  SvmParams p;
  p.C = 10.0;
  SvmTrace trace;
  const SvmModel m = train_svm(K, y, p, &trace);
  CHECK(trace.converged);
  check_model_invariants(m, y);
  check_monotone(trace);
  CHECK(predict_labels(decision_scores(m, K)) == std::vector<int>{0, 0, 1, 1});

  // 5x5 grid over [-0.5, 1.5]^2
  Matrix grid(25, 2);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      grid(i * 5 + j, 0) = -0.5 + 0.5 * i;
      grid(i * 5 + j, 1) = -0.5 + 0.5 * j;
    }
  const KernelMatrix cross = kernels::gram_matrix(grid, X, KernelSpec::rbf("r", 1.0), {}, ids_for(4));
  const auto scores = decision_scores(m, cross);
  for (std::size_t t = 0; t < 25; ++t) {
    const double expected = brute_score(m, X, grid.row(t), 1.0);
    CHECK(scores[t] == doctest::Approx(expected).epsilon(1e-12));
    CHECK((scores[t] >= 0.0) == (expected >= 0.0));
  }
}

TEST_CASE("appending a duplicate of every point keeps the decision function") {
  const Matrix X = points({{-2.0, 0.1}, {-1.2, -0.4}, {-0.8, 0.9}, {0.9, 0.3}, {1.1, -1.0}, {2.0, 0.5}});
  const int y[] = {0, 0, 0, 1, 1, 1};
  Matrix X2(12, 2);
  std::vector<int> y2;
  for (std::size_t r = 0; r < 12; ++r) {
    X2(r, 0) = X(r % 6, 0);
    X2(r, 1) = X(r % 6, 1);
    y2.push_back(y[r % 6]);
  }
  const KernelSpec rbf = KernelSpec::rbf("r", 0.5);
  SvmParams p;
  p.C = 1000.0;
  p.tol = 1e-10;
  const SvmModel base = train_svm(kernels::gram_matrix(X, rbf, ids_for(6)), y, p);
  const SvmModel dup = train_svm(kernels::gram_matrix(X2, rbf, ids_for(12)), y2, p);
  std::mt19937_64 rng(9);
  const Matrix T = oracle::random_matrix(20, 2, rng, -3.0, 3.0);
  const auto s1 = decision_scores(base, kernels::gram_matrix(T, X, rbf, {}, ids_for(6)));
  const auto s2 = decision_scores(dup, kernels::gram_matrix(T, X2, rbf, {}, ids_for(12)));
  for (std::size_t i = 0; i < s1.size(); ++i) CHECK(std::abs(s1[i] - s2[i]) <= 1e-6);
}

TEST_CASE("invariants, monotone objective and free support vector KKT on random problems") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    CAPTURE(seed);
    const Toy t = random_toy(40, seed, 1.0);
    SvmParams p;
    p.C = seed % 2 ? 1.0 : 5.0;
    p.seed = seed;
    SvmTrace trace;
    const SvmModel m = train_svm(t.K, t.y, p, &trace);
    CHECK(trace.converged);
    check_model_invariants(m, t.y);
    check_monotone(trace);
    CHECK(trace.objective.back() == doctest::Approx(dual_objective(m.alpha_y, [&](std::size_t i, std::size_t j) {
                                                      return t.K(i, j);
                                                    })));
    const auto f = decision_scores(m, t.K);
    for (std::size_t i = 0; i < m.train_size(); ++i) {
      const double s = t.y[i] ? 1.0 : -1.0;
      const double alpha = m.alpha_y[i] * s;
      if (alpha > 1e-9 && alpha < m.C - 1e-9) CHECK(std::abs(f[i] - s) <= p.tol + 1e-9);
    }
  }
}

TEST_CASE("training is deterministic per seed") {
  const Toy t = random_toy(30, 42, 0.8);
  SvmParams p;
  p.seed = 5;
  const SvmModel a = train_svm(t.K, t.y, p);
  const SvmModel b = train_svm(t.K, t.y, p);
  CHECK(a.alpha_y == b.alpha_y);
  CHECK(a.bias == b.bias);
  CHECK(a.support_indices == b.support_indices);
  CHECK(a.train_ids == t.K.row_ids);
}

TEST_CASE("precomputed and on-the-fly kernels agree") {
  const Toy t = random_toy(30, 17, 1.3);
  SvmParams p;
  p.seed = 3;
  const SvmModel pre = train_svm(t.K, t.y, p);
  const KernelFunction fly = [&](std::size_t i, std::size_t j) {
    return kernels::rbf_value(t.X.row(i), t.X.row(j), 1.3);
  };
  const SvmModel otf = train_svm(fly, 30, t.y, p, nullptr, ids_for(30));
  REQUIRE(otf.train_size() == pre.train_size());
  for (std::size_t i = 0; i < 30; ++i) CHECK(std::abs(otf.alpha_y[i] - pre.alpha_y[i]) <= 1e-10);
  CHECK(std::abs(otf.bias - pre.bias) <= 1e-10);
}

TEST_CASE("all-zero model scores equal the bias") {
  SvmModel m;
  m.alpha_y = {0.0, 0.0, 0.0};
  m.bias = -0.25;
  m.train_ids = ids_for(3);
  KernelMatrix k;
  k.values = Matrix(4, 3, 0.7);
  k.col_ids = ids_for(3);
  for (double s : decision_scores(m, k)) CHECK(s == -0.25);
}

TEST_CASE("errors") {
  const Toy t = random_toy(10, 1, 1.0);
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  const std::vector<int> ones(10, 1);
  CHECK(code_of([&] { train_svm(t.K, ones, {}); }) == ErrorCode::SingleClassTraining);

  KernelMatrix skew = t.K;
  skew.values(0, 1) += 0.1;
  skew.symmetric = false;
  CHECK(code_of([&] { train_svm(skew, t.y, {}); }) == ErrorCode::NotSymmetric);

  std::vector<int> bad = t.y;
  bad[2] = 2;
  CHECK(code_of([&] { train_svm(t.K, bad, {}); }) == ErrorCode::NonBinaryLabel);

  const SvmModel m = train_svm(t.K, t.y, {});
  KernelMatrix cross = t.K;
  cross.col_ids[3] = "other";
  CHECK(code_of([&] { decision_scores(m, cross); }) == ErrorCode::IdMismatch);
  KernelMatrix narrow;
  narrow.values = Matrix(2, 9);
  CHECK(code_of([&] { decision_scores(m, narrow); }) == ErrorCode::IdMismatch);

  SvmParams p;
  p.C = 0.0;
  CHECK(code_of([&] { p.validate(); }) == ErrorCode::InvalidParameter);
}
