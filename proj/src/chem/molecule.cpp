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

#include "qsar/chem/molecule.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "qsar/core/error.hpp"

namespace qsar::chem {

namespace {

struct ElementInfo {
  std::string_view symbol;
  int atomic_number;
  int valence_electrons;
  double weight;
  bool aromatic_allowed;
};

constexpr std::array<ElementInfo, 10> kElements = {{
    {"B", 5, 3, 10.81, true},
    {"C", 6, 4, 12.011, true},
    {"N", 7, 5, 14.007, true},
    {"O", 8, 6, 15.999, true},
    {"P", 15, 5, 30.974, true},
    {"S", 16, 6, 32.06, true},
    {"F", 9, 7, 18.998, false},
    {"Cl", 17, 7, 35.45, false},
    {"Br", 35, 7, 79.904, false},
    {"I", 53, 7, 126.904, false},
}};

const ElementInfo& info(Element e) noexcept { return kElements[static_cast<std::size_t>(e)]; }

}  // namespace

std::string_view symbol(Element e) noexcept { return info(e).symbol; }
int atomic_number(Element e) noexcept { return info(e).atomic_number; }
int valence_electrons(Element e) noexcept { return info(e).valence_electrons; }
double atomic_weight(Element e) noexcept { return info(e).weight; }
bool can_be_aromatic(Element e) noexcept { return info(e).aromatic_allowed; }

int valence_contribution(BondOrder order) noexcept {
  switch (order) {
    case BondOrder::Single: return 1;
    case BondOrder::Double: return 2;
    case BondOrder::Triple: return 3;
    case BondOrder::Aromatic: return 1;
  }
  return 1;
}

int target_valence(Element e, int charge, int bond_sum) noexcept {
  std::array<int, 3> allowed{};
  std::size_t count = 1;
  switch (e) {
    case Element::B: allowed = {3}; break;
    case Element::C: allowed = {4}; break;
    case Element::N: allowed = {3}; break;
    case Element::O: allowed = {2}; break;
    case Element::P: allowed = {3, 5}; count = 2; break;
    case Element::S: allowed = {2, 4, 6}; count = 3; break;
    default: allowed = {1}; break;
  }
  for (std::size_t k = 0; k < count; ++k) {
    int& v = allowed[k];
    switch (e) {
      case Element::C: v -= std::abs(charge); break;
      case Element::B: v -= charge; break;
      default: v += charge; break;
    }
    v = std::max(v, 0);
  }
  for (std::size_t k = 0; k < count; ++k)
    if (allowed[k] >= bond_sum) return allowed[k];
  return allowed[count - 1];
}

int implicit_hydrogens(Element e, bool aromatic, int charge, int bond_sum) noexcept {
  const int valence = target_valence(e, charge, bond_sum);
  return std::max(0, valence - bond_sum - (aromatic ? 1 : 0));
}

std::size_t Molecule::add_atom(const Atom& atom) {
  atoms_.push_back(atom);
  atoms_.back().degree = 0;
  adjacency_.emplace_back();
  return atoms_.size() - 1;
}

std::size_t Molecule::add_bond(std::size_t a, std::size_t b, BondOrder order) {
  if (a >= atoms_.size() || b >= atoms_.size()) {
    throw Error(ErrorCode::InvalidSyntax, "bond endpoint out of range");
  }
  if (a == b) throw Error(ErrorCode::InvalidSyntax, "bond from an atom to itself");
  if (find_bond(a, b)) throw Error(ErrorCode::InvalidSyntax, "duplicate bond between atoms");
  bonds_.push_back(Bond{a, b, order});
  const std::size_t index = bonds_.size() - 1;
  adjacency_[a].push_back(index);
  adjacency_[b].push_back(index);
  ++atoms_[a].degree;
  ++atoms_[b].degree;
  return index;
}

std::optional<std::size_t> Molecule::find_bond(std::size_t a, std::size_t b) const {
  if (a >= adjacency_.size()) return std::nullopt;
  for (std::size_t bi : adjacency_[a])
    if (bonds_[bi].other(a) == b) return bi;
  return std::nullopt;
}

void Molecule::assign_implicit_hydrogens() {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    Atom& atom = atoms_[i];
    if (atom.explicit_h) {
      atom.implicit_h = 0;
      continue;
    }
    int bond_sum = 0;
    for (std::size_t bi : adjacency_[i]) bond_sum += valence_contribution(bonds_[bi].order);
    atom.implicit_h = implicit_hydrogens(atom.element, atom.aromatic, atom.formal_charge, bond_sum);
  }
}

std::size_t Molecule::connected_components() const {
  std::vector<std::size_t> parent(atoms_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = atoms_.size();
  for (const Bond& b : bonds_) {
    const std::size_t ra = find(b.begin), rb = find(b.end);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components;
}

std::vector<bool> Molecule::ring_bonds() const {
  std::vector<bool> in_ring(bonds_.size(), false);
  for (const Ring& ring : rings_) {
    for (std::size_t k = 0; k < ring.size(); ++k) {
      if (auto bi = find_bond(ring[k], ring[(k + 1) % ring.size()])) in_ring[*bi] = true;
    }
  }
  return in_ring;
}

std::vector<bool> Molecule::ring_atoms() const {
  std::vector<bool> in_ring(atoms_.size(), false);
  for (const Ring& ring : rings_)
    for (std::size_t a : ring) in_ring[a] = true;
  return in_ring;
}

}  // namespace qsar::chem
