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
#include <limits>
#include <random>
#include <sstream>

#include "qsar/core/csv.hpp"
#include "qsar/core/error.hpp"
#include "qsar/core/format.hpp"
#include "qsar/core/hash.hpp"
#include "qsar/core/matrix.hpp"
#include "qsar/core/rng.hpp"

using namespace qsar;

TEST_CASE("format_double round-trips random doubles") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 2000; ++i) {
    const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    const auto back = parse_double(format_double(v));
    REQUIRE(back.has_value());
    CHECK(*back == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("parse_double is strict") {
  CHECK_FALSE(parse_double("").has_value());
  CHECK_FALSE(parse_double("NA").has_value());
  CHECK_FALSE(parse_double("1.5x").has_value());
  CHECK_FALSE(parse_double("nan").has_value());
  CHECK_FALSE(parse_double("inf").has_value());
  CHECK(*parse_double("+3.25") == 3.25);
  CHECK(*parse_double("-1e-3") == -1e-3);
  CHECK(*parse_integer("42") == 42);
  CHECK_FALSE(parse_integer("4.2").has_value());
  CHECK(trim("  a b \t") == "a b");
}

TEST_CASE("csv reader handles quotes, BOM and blank lines") {
  std::istringstream in("\xEF\xBB\xBFid,name,value\n1,\"a,b\",2\n\n2,\"say \"\"hi\"\"\",3\n");
  const csv::Table t = csv::read(in);
  REQUIRE(t.header.size() == 3);
  CHECK(t.header[0] == "id");
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0][1] == "a,b");
  CHECK(t.rows[1][1] == "say \"hi\"");
  CHECK(t.column_index("value") == std::optional<std::size_t>(2));
  CHECK_FALSE(t.column_index("missing").has_value());
}

TEST_CASE("csv escape round-trips through split_line") {
  const std::vector<std::string> fields{"plain", "with,comma", "quote\"inside", ""};
  std::ostringstream out;
  csv::write_row(out, fields);
  std::string line = out.str();
  line.pop_back();
  CHECK(csv::split_line(line) == fields);
}

TEST_CASE("fnv1a matches the published test vectors") {
  Fnv1a empty;
  CHECK(empty.digest() == 0xcbf29ce484222325ULL);
  Fnv1a a;
  a.update(std::string_view("a"));
  CHECK(a.digest() == 0xaf63dc4c8601ec8cULL);
  Fnv1a foobar;
  foobar.update(std::string_view("foobar"));
  CHECK(foobar.digest() == 0x85944171f73967e8ULL);
  CHECK(to_hex(0xabcULL) == "0000000000000abc");
}

TEST_CASE("hash_matrix depends on shape and contents") {
  Matrix a(2, 3, 1.0), b(3, 2, 1.0), c(2, 3, 1.0);
  c(1, 2) = 1.0 + std::numeric_limits<double>::epsilon();
  CHECK(hash_matrix(a) == hash_matrix(Matrix(2, 3, 1.0)));
  CHECK(hash_matrix(a) != hash_matrix(b));
  CHECK(hash_matrix(a) != hash_matrix(c));
}

TEST_CASE("derive_seed separates streams and roots") {
  CHECK(derive_seed(7, "svm") == derive_seed(7, "svm"));
  CHECK(derive_seed(7, "svm") != derive_seed(7, "gbm"));
  CHECK(derive_seed(7, "svm") != derive_seed(8, "svm"));
  auto r1 = make_rng(7, "x");
  auto r2 = make_rng(7, "x");
  CHECK(r1() == r2());
}

TEST_CASE("matrix helpers") {
  Matrix a(2, 3, std::vector<double>{1, 2, 3, 4, 5, 6});
  const Matrix t = a.transpose();
  CHECK(t.rows() == 3);
  CHECK(t(2, 1) == 6.0);
  const Matrix p = multiply(a, t);
  CHECK(p(0, 0) == 14.0);
  CHECK(p(0, 1) == 32.0);
  CHECK(p(1, 1) == 77.0);
  const std::vector<std::size_t> rows{1, 0, 1};
  const Matrix s = select_rows(a, rows);
  CHECK(s.rows() == 3);
  CHECK(s(0, 0) == 4.0);
  CHECK(s(1, 2) == 3.0);
  CHECK(Matrix::identity(2)(1, 1) == 1.0);
  CHECK(a.column(1) == std::vector<double>{2, 5});
  CHECK_THROWS_AS(Matrix(2, 2, std::vector<double>{1, 2, 3}), Error);
}
