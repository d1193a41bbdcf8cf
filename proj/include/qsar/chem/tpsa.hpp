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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qsar/chem/molecule.hpp"

namespace qsar::chem {

/// Local environment of a polar atom, as used to key the fragment table.
struct PolarEnvironment {
  Element element = Element::N;
  bool aromatic = false;
  int charge = 0;
  int hydrogens = 0;
  int single_bonds = 0;
  int double_bonds = 0;
  int triple_bonds = 0;
  int aromatic_bonds = 0;
  bool in_three_ring = false;

  friend bool operator==(const PolarEnvironment&, const PolarEnvironment&) = default;
};

/// Text key of an environment, e.g. "N.q0.h1.s2.d0.t0.a0.r0" or "n.q0.h0.s0.d0.t0.a2.r0".
std::string pattern_key(const PolarEnvironment& env);
PolarEnvironment parse_pattern_key(std::string_view key);

struct Fragment {
  PolarEnvironment env;
  double contribution = 0.0;
};

/// N/O polar-surface group contributions (A^2). The default table is compiled
/// from data/tpsa_fragments.txt.
class FragmentTable {
 public:
  static const FragmentTable& builtin();
  static FragmentTable parse(std::string_view text);
  static FragmentTable load(const std::string& path);

  const std::vector<Fragment>& fragments() const noexcept { return fragments_; }

  /// Exact match, or nullptr.
  const Fragment* find(const PolarEnvironment& env) const noexcept;
  /// Nearest entry with the same element and aromaticity (L1 distance over
  /// charge, H count and bond counts; ties go to the earlier line), or nullptr
  /// when the table has no entry for that element/aromaticity.
  const Fragment* closest(const PolarEnvironment& env) const noexcept;

 private:
  std::vector<Fragment> fragments_;
};

struct TpsaResult {
  double tpsa = 0.0;
  /// Polar atoms scored with the fallback rule.
  std::vector<std::size_t> unmatched_atoms;
};

PolarEnvironment polar_environment(const Molecule& mol, std::size_t atom);

TpsaResult tpsa_ertl(const Molecule& mol, const FragmentTable& table = FragmentTable::builtin());

}  // namespace qsar::chem
