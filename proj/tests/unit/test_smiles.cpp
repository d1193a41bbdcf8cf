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

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qsar/chem/descriptors.hpp"
#include "qsar/chem/smiles.hpp"
#include "qsar/core/error.hpp"

using namespace qsar;
using namespace qsar::chem;

namespace {

ErrorCode code_of(std::string_view s, std::size_t* offset = nullptr) {
  try {
    parse_smiles(s);
  } catch (const ParseError& e) {
    if (offset) *offset = e.offset();
    return e.code();
  }
  FAIL("expected a parse error for '" << s << "'");
  return ErrorCode::Io;
}

// Equivalent spellings of the same molecule; each group is one molecule.
const std::vector<std::vector<std::string>> kCorpus = {
    {"CCO", "OCC", "C(O)C"},
    {"c1ccccc1", "c2ccccc2", "c1cc(ccc1)"},
    {"c1ccncc1", "n1ccccc1", "c1cnccc1"},
    {"CC(=O)O", "OC(C)=O", "C(C)(O)=O"},
    {"CC(N)=O", "NC(=O)C", "O=C(N)C"},
    {"Cc1ccccc1", "c1ccccc1C", "c1ccc(C)cc1"},
    {"Oc1ccccc1", "c1ccc(O)cc1"},
    {"Nc1ccccc1", "c1cc(N)ccc1"},
    {"c1ccc2ccccc2c1", "c1cccc2c1cccc2"},
    {"C1CCCCC1", "C1CCCC(C1)"},
    {"CCCC", "C(C)CC"},
    {"CC(C)C", "C(C)(C)C"},
    {"CC(=O)NC", "CNC(C)=O"},
    {"CCOC(C)=O", "O=C(OCC)C"},
    {"c1cc[nH]c1", "[nH]1cccc1"},
    {"c1ccoc1", "o1cccc1"},
    {"Cn1cnc2c1c(=O)n(C)c(=O)n2C", "Cn1c(=O)c2c(ncn2C)n(C)c1=O"},
    {"Clc1ccccc1", "c1ccc(Cl)cc1"},
    {"CC[NH3+].[Cl-]", "[Cl-].[NH3+]CC"},
    {"CC#N", "N#CC"},
    {"C1CN1", "N1CC1"},
    {"CS(=O)(=O)N", "NS(C)(=O)=O"},
};

void check_same_descriptors(const Molecule& a, const Molecule& b) {
  const auto va = compute_descriptors(a).values();
  const auto vb = compute_descriptors(b).values();
  for (std::size_t i = 0; i < va.size(); ++i) {
    INFO("descriptor " << DescriptorVector::names()[i]);
    CHECK(va[i] == doctest::Approx(vb[i]).epsilon(1e-12));
  }
}

}  // namespace

TEST_CASE("basic grammar") {
  const Molecule ethanol = parse_smiles("CCO");
  CHECK(ethanol.atom_count() == 3);
  CHECK(ethanol.bond_count() == 2);
  CHECK(ethanol.rings().empty());
  for (const Bond& b : ethanol.bonds()) CHECK(b.order == BondOrder::Single);

  const Molecule benzene = parse_smiles("c1ccccc1");
  CHECK(benzene.atom_count() == 6);
  CHECK(benzene.bond_count() == 6);
  for (const Atom& a : benzene.atoms()) CHECK(a.aromatic);
  for (const Bond& b : benzene.bonds()) CHECK(b.order == BondOrder::Aromatic);
  REQUIRE(benzene.rings().size() == 1);
  CHECK(benzene.rings()[0].size() == 6);

  const Molecule ammonium = parse_smiles("[NH4+]");
  REQUIRE(ammonium.atom_count() == 1);
  CHECK(ammonium.atoms()[0].formal_charge == 1);
  CHECK(ammonium.atoms()[0].explicit_h == std::optional<int>(4));
}

TEST_CASE("bracket details and ignored stereo/isotopes") {
  const Molecule m = parse_smiles("[13CH4]");
  CHECK(m.atoms()[0].total_h() == 4);
  const Molecule charged = parse_smiles("[O-]C");
  CHECK(charged.atoms()[0].formal_charge == -1);
  CHECK(charged.atoms()[0].total_h() == 0);
  CHECK(parse_smiles("[N++]").atoms()[0].formal_charge == 2);
  CHECK(parse_smiles("[N+2]").atoms()[0].formal_charge == 2);
  CHECK(parse_smiles("[C@@H](F)(Cl)Br").atom_count() == 4);
  CHECK(parse_smiles("F/C=C/F").bond_count() == 3);
  CHECK(parse_smiles("[CH3:7]C").atoms()[0].total_h() == 3);
}

TEST_CASE("ring closure forms") {
  const Molecule m = parse_smiles("C%10CC%10");
  REQUIRE(m.rings().size() == 1);
  CHECK(m.rings()[0].size() == 3);
  const Molecule bond_at_closure = parse_smiles("C=1CCC1");
  CHECK(bond_at_closure.bonds().back().order == BondOrder::Double);
  const Molecule reused = parse_smiles("C1CC1C1CC1");
  CHECK(reused.rings().size() == 2);
}

TEST_CASE("dot disconnection") {
  const Molecule m = parse_smiles("C.C");
  CHECK(m.atom_count() == 2);
  CHECK(m.bond_count() == 0);
  CHECK(m.connected_components() == 2);
}

TEST_CASE("implicit hydrogens") {
  CHECK(parse_smiles("C").atoms()[0].total_h() == 4);
  CHECK(parse_smiles("N").atoms()[0].total_h() == 3);
  CHECK(parse_smiles("O").atoms()[0].total_h() == 2);
  CHECK(parse_smiles("P").atoms()[0].total_h() == 3);
  CHECK(parse_smiles("S").atoms()[0].total_h() == 2);
  CHECK(parse_smiles("Cl").atoms()[0].total_h() == 1);
  const Molecule benzene = parse_smiles("c1ccccc1");
  for (const Atom& a : benzene.atoms()) CHECK(a.total_h() == 1);
  CHECK(parse_smiles("c1cc[nH]c1").atoms()[3].total_h() == 1);
  CHECK(parse_smiles("c1ccncc1").atoms()[3].total_h() == 0);
  CHECK(parse_smiles("C[N+](C)(C)C").atoms()[1].total_h() == 0);
  CHECK(parse_smiles("CS(=O)(=O)C").atoms()[1].total_h() == 0);
  CHECK(parse_smiles("C=O").atoms()[0].total_h() == 2);
  CHECK(parse_smiles("C#N").atoms()[0].total_h() == 1);
  CHECK(parse_smiles("CC(=O)[O-]").atoms()[3].total_h() == 0);
  CHECK(target_valence(Element::N, 1, 4) == 4);
  CHECK(target_valence(Element::O, -1, 1) == 1);
  CHECK(target_valence(Element::S, 0, 3) == 4);
  CHECK(target_valence(Element::P, 0, 4) == 5);
}

TEST_CASE("errors carry kinds and offsets") {
  std::size_t off = 99;
  CHECK(code_of("", &off) == ErrorCode::EmptyInput);
  CHECK(off == 0);
  CHECK(code_of("C(", &off) == ErrorCode::UnmatchedParenthesis);
  CHECK(off == 1);
  CHECK(code_of("C)", &off) == ErrorCode::UnmatchedParenthesis);
  CHECK(off == 1);
  CHECK(code_of("CC(C(C)", &off) == ErrorCode::UnmatchedParenthesis);
  CHECK(off == 2);
  CHECK(code_of("C1CC", &off) == ErrorCode::UnmatchedRingClosure);
  CHECK(off == 1);
  CHECK(code_of("*C", &off) == ErrorCode::UnknownAtomSymbol);
  CHECK(off == 0);
  CHECK(code_of("C[Na+]", &off) == ErrorCode::UnknownAtomSymbol);
  CHECK(off == 2);
  CHECK(code_of("CH") == ErrorCode::UnknownAtomSymbol);
  CHECK(code_of("C=") == ErrorCode::InvalidSyntax);
  CHECK(code_of("C==C") == ErrorCode::InvalidSyntax);
  CHECK(code_of("C()C") == ErrorCode::InvalidSyntax);
  CHECK(code_of("[CH4") == ErrorCode::InvalidSyntax);
  CHECK(code_of("C.") == ErrorCode::InvalidSyntax);
  CHECK(code_of("C11") == ErrorCode::InvalidSyntax);
  CHECK(code_of("C=1CCC#1") == ErrorCode::InvalidSyntax);
  CHECK(code_of("C%1C") == ErrorCode::InvalidSyntax);
}

TEST_CASE("parsing is total over random token strings") {
  const std::string alphabet = "CcNnOoSsBrlF()[]=#:-+123%0.H@/\\";
  std::mt19937_64 rng(2024);
  std::size_t parsed = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const std::size_t len = 1 + rng() % 14;
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
    try {
      const Molecule m = parse_smiles(s);
      ++parsed;
      for (const Atom& a : m.atoms()) REQUIRE(a.total_h() >= 0);
    } catch (const ParseError& e) {
      REQUIRE(e.offset() <= s.size());
    }
  }
  CHECK(parsed > 0);
}

TEST_CASE("corpus rewrites give isomorphic graphs and equal descriptors") {
  for (const auto& group : kCorpus) {
    const Molecule base = parse_smiles(group[0]);
    for (std::size_t i = 1; i < group.size(); ++i) {
      INFO(group[0] << " vs " << group[i]);
      const Molecule other = parse_smiles(group[i]);
      CHECK(oracle::isomorphic(base, other));
      check_same_descriptors(base, other);
    }
  }
}

TEST_CASE("writer round-trips at graph level, including shuffled orders") {
  for (const auto& group : kCorpus) {
    const Molecule base = parse_smiles(group[0]);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const std::string written = write_smiles(base, {seed});
      INFO(group[0] << " -> " << written);
      const Molecule back = parse_smiles(written);
      CHECK(oracle::isomorphic(base, back));
      check_same_descriptors(base, back);
    }
  }
}

TEST_CASE("writer uses %nn ring labels beyond nine open rings") {
  // Twelve separate cyclopropane rings joined in a chain keep several labels open at once.
  std::string s;
  for (int i = 0; i < 12; ++i) s += "C1CC1";
  const Molecule m = parse_smiles(s);
  CHECK(m.rings().size() == 12);
  CHECK(oracle::isomorphic(m, parse_smiles(write_smiles(m, {3}))));
}

TEST_CASE("the isomorphism oracle distinguishes real differences") {
  CHECK_FALSE(oracle::isomorphic(parse_smiles("CCO"), parse_smiles("COC")));
  CHECK_FALSE(oracle::isomorphic(parse_smiles("C=CC"), parse_smiles("CCC")));
  CHECK_FALSE(oracle::isomorphic(parse_smiles("c1ccccc1"), parse_smiles("C1CCCCC1")));
}
