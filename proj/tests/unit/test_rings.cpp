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

#include "oracles.hpp"
#include "qsar/chem/rings.hpp"
#include "qsar/chem/smiles.hpp"

using namespace qsar::chem;

namespace {

std::size_t basis_dimension(const Molecule& m) {
  return m.bond_count() - m.atom_count() + m.connected_components();
}

void check_minimum_basis(const std::string& smiles) {
  INFO(smiles);
  const Molecule m = parse_smiles(smiles);
  const auto rings = perceive_rings(m);
  const std::size_t dim = basis_dimension(m);
  REQUIRE(rings.size() == dim);

  std::vector<std::uint64_t> masks;
  std::size_t length = 0;
  for (const Ring& r : rings) {
    const std::uint64_t mask = oracle::ring_mask(m, r);
    REQUIRE(mask != 0);  // consecutive ring atoms are bonded
    REQUIRE(static_cast<std::size_t>(std::popcount(mask)) == r.size());
    masks.push_back(mask);
    length += r.size();
  }
  CHECK(oracle::gf2_rank(masks) == dim);
  CHECK(length == oracle::minimum_basis_length(oracle::all_cycles(m), dim));
}

}  // namespace

TEST_CASE("acyclic and single rings") {
  CHECK(perceive_rings(parse_smiles("CCO")).empty());
  const auto benzene = perceive_rings(parse_smiles("c1ccccc1"));
  REQUIRE(benzene.size() == 1);
  CHECK(benzene[0] == Ring{0, 1, 2, 3, 4, 5});
}

TEST_CASE("naphthalene has two six-membered rings") {
  const Molecule m = parse_smiles("c1ccc2ccccc2c1");
  const auto rings = perceive_rings(m);
  REQUIRE(rings.size() == 2);
  CHECK(rings[0].size() == 6);
  CHECK(rings[1].size() == 6);
  // Brute force: the graph has exactly three simple cycles (6, 6, 10).
  const auto cycles = oracle::all_cycles(m);
  REQUIRE(cycles.size() == 3);
  std::vector<int> sizes;
  for (auto c : cycles) sizes.push_back(std::popcount(c));
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{6, 6, 10});
}

TEST_CASE("minimum cycle basis matches exhaustive search") {
  for (const char* s : {"c1ccc2ccccc2c1", "C1CC2CCC1C2", "C12C3C4C1C5C2C3C45", "c1ccc2c(c1)ccc1ccccc12",
                        "C1CC1C1CC1", "C1CCC2(CC1)CCCC2", "C1C2CC3CC1CC(C2)C3", "c1cc2ccc3cccc4ccc(c1)c2c34"}) {
    check_minimum_basis(s);
  }
}

TEST_CASE("ring listing is canonical") {
  for (const Ring& r : perceive_rings(parse_smiles("C1CC2CCC1C2"))) {
    CHECK(r.front() == *std::min_element(r.begin(), r.end()));
    CHECK(r[1] < r.back());
  }
  const auto rings = perceive_rings(parse_smiles("c1ccc2ccccc2c1"));
  CHECK(rings[0].front() <= rings[1].front());
}
