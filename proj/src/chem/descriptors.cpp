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

#include "qsar/chem/descriptors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "qsar/chem/tpsa.hpp"

namespace qsar::chem {

namespace {

// n·log2(n) with 0·log2(0) = 0.
double nlog2n(double n) { return n > 0.0 ? n * std::log2(n) : 0.0; }

bool has_double_bond_to_oxygen(const Molecule& mol, std::size_t atom) {
  for (std::size_t bi : mol.incident_bonds(atom)) {
    const Bond& b = mol.bonds()[bi];
    if (b.order == BondOrder::Double && mol.atoms()[b.other(atom)].element == Element::O) return true;
  }
  return false;
}

bool is_amide_bond(const Molecule& mol, const Bond& b) {
  const Element e1 = mol.atoms()[b.begin].element;
  const Element e2 = mol.atoms()[b.end].element;
  if (e1 == Element::C && e2 == Element::N) return has_double_bond_to_oxygen(mol, b.begin);
  if (e1 == Element::N && e2 == Element::C) return has_double_bond_to_oxygen(mol, b.end);
  return false;
}

bool is_sp3_carbon(const Molecule& mol, std::size_t atom) {
  const Atom& a = mol.atoms()[atom];
  if (a.element != Element::C || a.aromatic) return false;
  for (std::size_t bi : mol.incident_bonds(atom)) {
    const BondOrder o = mol.bonds()[bi].order;
    if (o != BondOrder::Single) return false;
  }
  return true;
}

}  // namespace

const std::array<std::string_view, DescriptorVector::kCount>& DescriptorVector::names() {
  static constexpr std::array<std::string_view, kCount> kNames = {
      "mol_weight", "heavy_atoms", "num_hbd", "num_hba",  "num_rotatable_bonds", "num_aromatic_rings",
      "fraction_csp3", "tpsa",     "bertz_ct", "chi0n", "chi1n",
  };
  return kNames;
}

std::array<double, DescriptorVector::kCount> DescriptorVector::values() const {
  return {mol_weight, heavy_atoms, num_hbd, num_hba, num_rotatable_bonds, num_aromatic_rings,
          fraction_csp3, tpsa, bertz_ct, chi0n, chi1n};
}

std::vector<std::pair<std::string_view, double>> DescriptorVector::entries() const {
  std::vector<std::pair<std::string_view, double>> out;
  const auto v = values();
  for (std::size_t i = 0; i < kCount; ++i) out.emplace_back(names()[i], v[i]);
  return out;
}

double valence_delta(const Atom& atom) noexcept {
  const int z = atomic_number(atom.element);
  const int zv = valence_electrons(atom.element);
  return static_cast<double>(zv - atom.total_h()) / static_cast<double>(z - zv - 1);
}

ChiIndices chi_indices(const Molecule& mol) {
  ChiIndices chi;
  std::vector<double> delta(mol.atom_count());
  for (std::size_t i = 0; i < mol.atom_count(); ++i) {
    delta[i] = valence_delta(mol.atoms()[i]);
    if (delta[i] <= 0.0) {
      ++chi.skipped_atoms;
      continue;
    }
    chi.chi0n += 1.0 / std::sqrt(delta[i]);
  }
  for (const Bond& b : mol.bonds()) {
    if (delta[b.begin] <= 0.0 || delta[b.end] <= 0.0) continue;
    chi.chi1n += 1.0 / std::sqrt(delta[b.begin] * delta[b.end]);
  }
  return chi;
}

double bertz_ct(const Molecule& mol) {
  using ConnectionClass = std::tuple<int, int, int, int>;
  std::map<ConnectionClass, std::size_t> classes;
  std::size_t paths = 0;
  for (std::size_t center = 0; center < mol.atom_count(); ++center) {
    const auto& inc = mol.incident_bonds(center);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const Bond& b1 = mol.bonds()[inc[i]];
        const Bond& b2 = mol.bonds()[inc[j]];
        const int d1 = mol.atoms()[b1.other(center)].degree;
        const int d2 = mol.atoms()[b2.other(center)].degree;
        const int o1 = static_cast<int>(b1.order);
        const int o2 = static_cast<int>(b2.order);
        ++classes[{std::min(d1, d2), std::max(d1, d2), std::min(o1, o2), std::max(o1, o2)}];
        ++paths;
      }
    }
  }
  double connect = 2.0 * nlog2n(static_cast<double>(paths));
  for (const auto& [key, count] : classes) connect -= nlog2n(static_cast<double>(count));

  std::map<Element, std::size_t> elements;
  for (const Atom& a : mol.atoms()) ++elements[a.element];
  double hetero = nlog2n(static_cast<double>(mol.atom_count()));
  for (const auto& [e, count] : elements) hetero -= nlog2n(static_cast<double>(count));
  return connect + hetero;
}

double molecular_weight(const Molecule& mol) {
  double w = 0.0;
  for (const Atom& a : mol.atoms()) w += atomic_weight(a.element) + kHydrogenWeight * a.total_h();
  return w;
}

std::size_t count_hbd(const Molecule& mol) {
  return static_cast<std::size_t>(std::count_if(mol.atoms().begin(), mol.atoms().end(), [](const Atom& a) {
    return (a.element == Element::N || a.element == Element::O) && a.total_h() >= 1;
  }));
}

std::size_t count_hba(const Molecule& mol) {
  return static_cast<std::size_t>(std::count_if(mol.atoms().begin(), mol.atoms().end(), [](const Atom& a) {
    return a.element == Element::N || a.element == Element::O;
  }));
}

std::size_t count_rotatable_bonds(const Molecule& mol) {
  const std::vector<bool> in_ring = mol.ring_bonds();
  std::size_t count = 0;
  for (std::size_t bi = 0; bi < mol.bond_count(); ++bi) {
    const Bond& b = mol.bonds()[bi];
    if (b.order != BondOrder::Single || in_ring[bi]) continue;
    if (mol.atoms()[b.begin].degree < 2 || mol.atoms()[b.end].degree < 2) continue;
    if (is_amide_bond(mol, b)) continue;
    ++count;
  }
  return count;
}

std::size_t count_aromatic_rings(const Molecule& mol) {
  return static_cast<std::size_t>(std::count_if(mol.rings().begin(), mol.rings().end(), [&](const Ring& r) {
    return std::all_of(r.begin(), r.end(), [&](std::size_t a) { return mol.atoms()[a].aromatic; });
  }));
}

double fraction_csp3(const Molecule& mol) {
  std::size_t carbons = 0, sp3 = 0;
  for (std::size_t i = 0; i < mol.atom_count(); ++i) {
    if (mol.atoms()[i].element != Element::C) continue;
    ++carbons;
    if (is_sp3_carbon(mol, i)) ++sp3;
  }
  return carbons == 0 ? 0.0 : static_cast<double>(sp3) / static_cast<double>(carbons);
}

DescriptorVector compute_descriptors(const Molecule& mol) {
  DescriptorVector d;
  d.mol_weight = molecular_weight(mol);
  d.heavy_atoms = static_cast<double>(mol.atom_count());
  d.num_hbd = static_cast<double>(count_hbd(mol));
  d.num_hba = static_cast<double>(count_hba(mol));
  d.num_rotatable_bonds = static_cast<double>(count_rotatable_bonds(mol));
  d.num_aromatic_rings = static_cast<double>(count_aromatic_rings(mol));
  d.fraction_csp3 = fraction_csp3(mol);
  d.tpsa = tpsa_ertl(mol).tpsa;
  d.bertz_ct = bertz_ct(mol);
  const ChiIndices chi = chi_indices(mol);
  d.chi0n = chi.chi0n;
  d.chi1n = chi.chi1n;
  return d;
}

}  // namespace qsar::chem
