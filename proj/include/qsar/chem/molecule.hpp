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
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace qsar::chem {

enum class Element : std::uint8_t { B, C, N, O, P, S, F, Cl, Br, I };

std::string_view symbol(Element e) noexcept;
int atomic_number(Element e) noexcept;
int valence_electrons(Element e) noexcept;
double atomic_weight(Element e) noexcept;
/// Aromatic (lowercase) forms exist only for B, C, N, O, P, S.
bool can_be_aromatic(Element e) noexcept;

constexpr double kHydrogenWeight = 1.008;

enum class BondOrder : std::uint8_t { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

/// Contribution of a bond to its atoms' valence sums; aromatic bonds count 1
/// here and aromatic atoms receive one extra unit (see implicit_hydrogens).
int valence_contribution(BondOrder order) noexcept;

struct Atom {
  Element element = Element::C;
  bool aromatic = false;
  int formal_charge = 0;
  /// Set for bracket atoms (0 when the bracket gives no H count); empty for
  /// organic-subset atoms, whose hydrogens are implicit.
  std::optional<int> explicit_h;
  int implicit_h = 0;
  int degree = 0;

  int total_h() const noexcept { return explicit_h.value_or(implicit_h); }
};

struct Bond {
  std::size_t begin = 0;
  std::size_t end = 0;
  BondOrder order = BondOrder::Single;

  std::size_t other(std::size_t atom) const noexcept { return atom == begin ? end : begin; }
};

using Ring = std::vector<std::size_t>;

/// Heavy-atom molecular graph. Hydrogens are carried as counts on atoms.
class Molecule {
 public:
  std::size_t add_atom(const Atom& atom);
  /// Adds an undirected bond; rejects self-loops, out-of-range endpoints and
  /// duplicate atom pairs.
  std::size_t add_bond(std::size_t a, std::size_t b, BondOrder order);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::vector<Bond>& bonds() const noexcept { return bonds_; }
  const std::vector<Ring>& rings() const noexcept { return rings_; }
  std::size_t atom_count() const noexcept { return atoms_.size(); }
  std::size_t bond_count() const noexcept { return bonds_.size(); }

  /// Indices of bonds incident to `atom`, in insertion order.
  const std::vector<std::size_t>& incident_bonds(std::size_t atom) const { return adjacency_[atom]; }
  std::optional<std::size_t> find_bond(std::size_t a, std::size_t b) const;

  /// Assigns implicit hydrogens to atoms without an explicit count.
  void assign_implicit_hydrogens();
  void set_rings(std::vector<Ring> rings) { rings_ = std::move(rings); }

  std::size_t connected_components() const;

  /// Bonds that lie on at least one cycle.
  std::vector<bool> ring_bonds() const;
  std::vector<bool> ring_atoms() const;

 private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<Ring> rings_;
};

/// Default valence table, shifted by formal charge:
///   B 3, C 4, N 3 (P 3 or 5), O 2 (S 2, 4 or 6), halogens 1.
///   N/P-family and O/S-family gain +q for positive and lose |q| for negative
///   charge (NH4+ is 4, O- is 1); B gains |q| when negative, loses q when
///   positive; C and halogens lose |q| either way except X+ which is 2.
/// The smallest allowed valence not below the bond sum is chosen.
int target_valence(Element e, int charge, int bond_sum) noexcept;

/// max(0, valence − bond sum − aromatic unit), never negative.
int implicit_hydrogens(Element e, bool aromatic, int charge, int bond_sum) noexcept;

}  // namespace qsar::chem
