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

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "qsar/chem/molecule.hpp"

namespace qsar::chem {

struct DescriptorVector {
  double mol_weight = 0.0;
  double heavy_atoms = 0.0;
  double num_hbd = 0.0;
  double num_hba = 0.0;
  double num_rotatable_bonds = 0.0;
  double num_aromatic_rings = 0.0;
  double fraction_csp3 = 0.0;
  double tpsa = 0.0;
  double bertz_ct = 0.0;
  double chi0n = 0.0;
  double chi1n = 0.0;

  static constexpr std::size_t kCount = 11;
  static const std::array<std::string_view, kCount>& names();
  std::array<double, kCount> values() const;
  std::vector<std::pair<std::string_view, double>> entries() const;
};

struct ChiIndices {
  double chi0n = 0.0;
  double chi1n = 0.0;
  /// Atoms with non-positive valence delta (e.g. methane carbon), skipped.
  std::size_t skipped_atoms = 0;
};

/// Kier-Hall valence delta (Zv − h) / (Z − Zv − 1).
double valence_delta(const Atom& atom) noexcept;

ChiIndices chi_indices(const Molecule& mol);

/// Simplified Bertz complexity: connection term over length-2 paths grouped
/// by (sorted endpoint degrees, sorted bond orders) plus element-count term.
double bertz_ct(const Molecule& mol);

double molecular_weight(const Molecule& mol);
std::size_t count_hbd(const Molecule& mol);
std::size_t count_hba(const Molecule& mol);
std::size_t count_rotatable_bonds(const Molecule& mol);
std::size_t count_aromatic_rings(const Molecule& mol);
double fraction_csp3(const Molecule& mol);

/// Requires rings to be perceived (parse_smiles does this).
DescriptorVector compute_descriptors(const Molecule& mol);

}  // namespace qsar::chem
