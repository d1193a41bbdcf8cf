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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qsar/core/error.hpp"
#include "qsar/gbm/gbm.hpp"

using namespace qsar;
using namespace qsar::gbm;

namespace {

// Brute force: every midpoint between sorted unique values, explicit partition sums.
Split brute_split(const Matrix& x, std::span<const double> t, std::span<const std::size_t> rows, std::size_t min_leaf) {
  Split best;
  double total = 0.0;
  for (std::size_t r : rows) total += t[r];
  const double base = total * total / static_cast<double>(rows.size());
  for (std::size_t f = 0; f < x.cols(); ++f) {
    std::set<double> values;
    for (std::size_t r : rows) values.insert(x(r, f));
    for (auto it = values.begin(); std::next(it) != values.end(); ++it) {
      const double thr = *it + 0.5 * (*std::next(it) - *it);
      double ls = 0.0, rs = 0.0;
      std::size_t ln = 0, rn = 0;
      for (std::size_t r : rows) {
        if (x(r, f) <= thr) {
          ls += t[r];
          ++ln;
        } else {
          rs += t[r];
          ++rn;
        }
      }
      if (ln < min_leaf || rn < min_leaf) continue;
      const double gain = ls * ls / ln + rs * rs / rn - base;
      if (gain > best.gain + 1e-12) best = {static_cast<int>(f), thr, gain};
    }
  }
  return best;
}

// Path trace oracle written against the node layout only.
double trace_path(const RegressionTree& t, std::span<const double> x) {
  std::size_t node = 0;
  for (std::size_t steps = 0; steps <= t.nodes.size(); ++steps) {
    const TreeNode& n = t.nodes[node];
    if (n.feature < 0) return n.value;
    node = static_cast<std::size_t>(x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right);
  }
  throw std::runtime_error("cycle in tree");
}

struct Toy {
  Matrix X;
  std::vector<int> y;
};

Toy toy(std::size_t n, std::size_t d, std::uint64_t seed, bool separable) {
  std::mt19937_64 rng(seed);
  Toy t;
  t.X = oracle::random_matrix(n, d, rng, -1.0, 1.0);
  std::uniform_real_distribution<double> noise(-0.4, 0.4);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = t.X(i, 0) - 0.5 * t.X(i, d - 1) + (separable ? 0.0 : noise(rng));
    t.y.push_back(z > 0 ? 1 : 0);
  }
  t.y[0] = 1;
  t.y[1] = 0;
  return t;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("one split separates two points") {
  Matrix X(2, 1);
  X(1, 0) = 1.0;
  const int y[] = {0, 1};
  GbmParams p;
  p.max_depth = 1;
  p.n_trees = 10;
  p.learning_rate = 0.5;
  p.min_leaf = 1;
  const GbmModel m = train_gbm(X, y, p);
  const auto s = gbm_scores(m, X);
  CHECK(s[0] < 0.0);
  CHECK(s[1] > 0.0);
  CHECK(m.init_score == 0.0);
  REQUIRE(m.trees.size() == 10);
  CHECK(m.trees[0].nodes[0].threshold == 0.5);
}

TEST_CASE("parameter validation") {
  Matrix X(4, 1);
  const int y[] = {0, 1, 0, 1};
  GbmParams p;
  p.n_trees = 0;
  CHECK(code_of([&] { train_gbm(X, y, p); }) == ErrorCode::InvalidParameter);
  p = {};
  p.max_depth = 0;
  CHECK(code_of([&] { p.validate(); }) == ErrorCode::InvalidParameter);
  p = {};
  p.learning_rate = 0.0;
  CHECK(code_of([&] { p.validate(); }) == ErrorCode::InvalidParameter);
  p.learning_rate = 1.5;
  CHECK(code_of([&] { p.validate(); }) == ErrorCode::InvalidParameter);
  p = {};
  p.learning_rate = 1.0;
  p.validate();

  const int same[] = {1, 1, 1, 1};
  CHECK(code_of([&] { train_gbm(X, same, {}); }) == ErrorCode::SingleClassTraining);
  p = {};
  p.min_leaf = 3;
  CHECK(code_of([&] { train_gbm(X, y, p); }) == ErrorCode::InvalidParameter);
  const int three[] = {0, 1, 0};
  CHECK(code_of([&] { train_gbm(X, three, {}); }) == ErrorCode::DimensionMismatch);
  const int two[] = {0, 2, 0, 1};
  CHECK(code_of([&] { train_gbm(X, two, {}); }) == ErrorCode::NonBinaryLabel);
}

TEST_CASE("constant features give the init score everywhere") {
  const Matrix X(6, 3, 0.25);
  const int y[] = {0, 1, 0, 1, 1, 0};
  const GbmModel m = train_gbm(X, y, {});
  CHECK(m.init_score == 0.0);
  for (double s : gbm_scores(m, X)) CHECK(s == 0.0);
  for (const RegressionTree& t : m.trees) {
    REQUIRE(t.nodes.size() == 1);
    CHECK(t.nodes[0].is_leaf());
  }
}

TEST_CASE("init score is the log-odds") {
  const Toy t = toy(20, 2, 1, true);
  const double pos = static_cast<double>(std::count(t.y.begin(), t.y.end(), 1));
  const GbmModel m = train_gbm(t.X, t.y, {});
  CHECK(m.init_score == doctest::Approx(std::log(pos / (20.0 - pos))).epsilon(1e-14));
}

TEST_CASE("direct evaluation") {
  GbmModel m;
  m.init_score = 0.3;
  m.learning_rate = 0.2;
  m.num_features = 2;
  const Matrix X(3, 2, 1.0);
  for (double s : gbm_scores(m, X)) CHECK(s == 0.3);

  RegressionTree stump;
  stump.nodes = {{1, 0.5, 1, 2, 0.0}, {-1, 0.0, -1, -1, -2.0}, {-1, 0.0, -1, -1, 4.0}};
  m.trees.push_back(stump);
  m.validate();
  Matrix Z(2, 2);
  Z(0, 1) = 0.4;
  Z(1, 1) = 0.6;
  const auto s = gbm_scores(m, Z);
  CHECK(s[0] == 0.3 + 0.2 * -2.0);
  CHECK(s[1] == 0.3 + 0.2 * 4.0);
  Z(0, 1) = 0.5;  // ties go left
  CHECK(gbm_scores(m, Z)[0] == 0.3 + 0.2 * -2.0);

  CHECK(code_of([&] { gbm_scores(m, Matrix(2, 3)); }) == ErrorCode::DimensionMismatch);
  m.trees[0].nodes[0].feature = 5;
  CHECK(code_of([&] { m.validate(); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("training deviance is non-increasing on separable data") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    CAPTURE(seed);
    const Toy t = toy(60, 3, seed, true);
    GbmTrace trace;
    GbmParams p;
    p.n_trees = 40;
    const GbmModel m = train_gbm(t.X, t.y, p, &trace);
    REQUIRE(trace.deviance.size() == 41);
    for (std::size_t k = 1; k < trace.deviance.size(); ++k) CHECK(trace.deviance[k] <= trace.deviance[k - 1]);
    CHECK(trace.deviance.back() == doctest::Approx(logistic_deviance(gbm_scores(m, t.X), t.y)).epsilon(1e-12));
    CHECK(trace.deviance.back() < trace.deviance.front());
  }
}

TEST_CASE("tree evaluation matches a path trace") {
  const Toy t = toy(80, 4, 7, false);
  const GbmModel m = train_gbm(t.X, t.y, {});
  m.validate();
  std::mt19937_64 rng(70);
  const Matrix Z = oracle::random_matrix(50, 4, rng, -1.5, 1.5);
  const auto scores = gbm_scores(m, Z);
  for (std::size_t i = 0; i < Z.rows(); ++i) {
    double s = m.init_score;
    for (const RegressionTree& tree : m.trees) {
      CHECK(tree.predict(Z.row(i)) == trace_path(tree, Z.row(i)));
      s += m.learning_rate * trace_path(tree, Z.row(i));
    }
    CHECK(scores[i] == doctest::Approx(s).epsilon(1e-13));
  }
}

TEST_CASE("split search") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CAPTURE(seed);
    std::mt19937_64 rng(seed);
    const Matrix X = oracle::random_matrix(40, 5, rng, -1.0, 1.0);
    std::normal_distribution<double> nd;
    std::vector<double> target(40);
    for (double& v : target) v = nd(rng);
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < 40; i += 1 + seed % 2) rows.push_back(i);
    const std::size_t min_leaf = 1 + seed % 3;
    const Split par = find_best_split(X, target, rows, min_leaf);
    const Split ser = find_best_split_serial(X, target, rows, min_leaf);
    CHECK(par.feature == ser.feature);
    CHECK(par.threshold == ser.threshold);
    CHECK(par.gain == ser.gain);
    const Split brute = brute_split(X, target, rows, min_leaf);
    CHECK(par.feature == brute.feature);
    CHECK(par.threshold == doctest::Approx(brute.threshold).epsilon(1e-14));
    CHECK(par.gain == doctest::Approx(brute.gain).epsilon(1e-9));
  }
}

TEST_CASE("split ties prefer the lowest feature") {
  Matrix X(4, 2);
  for (std::size_t i = 0; i < 4; ++i) X(i, 0) = X(i, 1) = static_cast<double>(i);
  const double target[] = {-1.0, -1.0, 1.0, 1.0};
  const std::size_t rows[] = {0, 1, 2, 3};
  const Split s = find_best_split(X, target, rows, 1);
  CHECK(s.feature == 0);
  CHECK(s.threshold == 1.5);
  CHECK(s.gain == doctest::Approx(4.0));
}

TEST_CASE("training is deterministic") {
  const Toy t = toy(50, 3, 3, false);
  CHECK(train_gbm(t.X, t.y, {}) == train_gbm(t.X, t.y, {}));
}

TEST_CASE("deviance") {
  const double s[] = {0.0, 0.0};
  const int y[] = {0, 1};
  CHECK(logistic_deviance(s, y) == doctest::Approx(2.0 * std::log(2.0)));
  const double big[] = {-800.0, 800.0};
  CHECK(logistic_deviance(big, y) == 0.0);
  const double wrong[] = {800.0, -800.0};
  CHECK(std::isfinite(logistic_deviance(wrong, y)));
  CHECK(logistic_deviance(wrong, y) == doctest::Approx(1600.0));
}
