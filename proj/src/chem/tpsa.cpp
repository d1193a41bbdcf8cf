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

#include "qsar/chem/tpsa.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "qsar/core/error.hpp"
#include "qsar/core/format.hpp"

namespace qsar::chem {

// Generated at build time from data/tpsa_fragments.txt.
extern const char* const kBuiltinFragmentTable;

namespace {

int field_value(std::string_view field, char tag, std::string_view key) {
  if (field.empty() || field.front() != tag) {
    throw Error(ErrorCode::InvalidParameter, "malformed fragment key '" + std::string(key) + "'");
  }
  auto v = parse_integer(field.substr(1));
  if (!v) throw Error(ErrorCode::InvalidParameter, "malformed fragment key '" + std::string(key) + "'");
  return static_cast<int>(*v);
}

int distance(const PolarEnvironment& a, const PolarEnvironment& b) {
  return std::abs(a.charge - b.charge) + std::abs(a.hydrogens - b.hydrogens) +
         std::abs(a.single_bonds - b.single_bonds) + std::abs(a.double_bonds - b.double_bonds) +
         std::abs(a.triple_bonds - b.triple_bonds) + std::abs(a.aromatic_bonds - b.aromatic_bonds) +
         (a.in_three_ring != b.in_three_ring ? 1 : 0);
}

}  // namespace

std::string pattern_key(const PolarEnvironment& env) {
  std::string sym(symbol(env.element));
  if (env.aromatic) sym[0] = static_cast<char>(sym[0] - 'A' + 'a');
  std::ostringstream out;
  out << sym << ".q" << env.charge << ".h" << env.hydrogens << ".s" << env.single_bonds << ".d"
      << env.double_bonds << ".t" << env.triple_bonds << ".a" << env.aromatic_bonds << ".r"
      << (env.in_three_ring ? 1 : 0);
  return out.str();
}

PolarEnvironment parse_pattern_key(std::string_view key) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = key.find('.', start);
    parts.push_back(key.substr(start, dot == std::string_view::npos ? dot : dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  if (parts.size() != 8) {
    throw Error(ErrorCode::InvalidParameter, "fragment key needs 8 fields: '" + std::string(key) + "'");
  }
  PolarEnvironment env;
  const std::string_view el = parts[0];
  if (el == "N" || el == "n") {
    env.element = Element::N;
  } else if (el == "O" || el == "o") {
    env.element = Element::O;
  } else {
    throw Error(ErrorCode::InvalidParameter, "fragment element must be N, O, n or o: '" + std::string(key) + "'");
  }
  env.aromatic = el == "n" || el == "o";
  env.charge = field_value(parts[1], 'q', key);
  env.hydrogens = field_value(parts[2], 'h', key);
  env.single_bonds = field_value(parts[3], 's', key);
  env.double_bonds = field_value(parts[4], 'd', key);
  env.triple_bonds = field_value(parts[5], 't', key);
  env.aromatic_bonds = field_value(parts[6], 'a', key);
  env.in_three_ring = field_value(parts[7], 'r', key) != 0;
  return env;
}

FragmentTable FragmentTable::parse(std::string_view text) {
  FragmentTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key, value;
    if (!(fields >> key)) continue;
    if (!(fields >> value)) {
      throw Error(ErrorCode::InvalidParameter, "fragment table line " + std::to_string(line_no) + " has no value");
    }
    auto contribution = parse_double(value);
    if (!contribution || *contribution < 0.0) {
      throw Error(ErrorCode::InvalidParameter, "bad contribution on fragment table line " + std::to_string(line_no));
    }
    table.fragments_.push_back({parse_pattern_key(key), *contribution});
  }
  return table;
}

FragmentTable FragmentTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open fragment table '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const FragmentTable& FragmentTable::builtin() {
  static const FragmentTable table = parse(kBuiltinFragmentTable);
  return table;
}

const Fragment* FragmentTable::find(const PolarEnvironment& env) const noexcept {
  for (const Fragment& f : fragments_)
    if (f.env == env) return &f;
  return nullptr;
}

const Fragment* FragmentTable::closest(const PolarEnvironment& env) const noexcept {
  const Fragment* best = nullptr;
  int best_distance = std::numeric_limits<int>::max();
  for (const Fragment& f : fragments_) {
    if (f.env.element != env.element || f.env.aromatic != env.aromatic) continue;
    const int d = distance(f.env, env);
    if (d < best_distance) {
      best = &f;
      best_distance = d;
    }
  }
  return best;
}

PolarEnvironment polar_environment(const Molecule& mol, std::size_t atom) {
  const Atom& a = mol.atoms()[atom];
  PolarEnvironment env;
  env.element = a.element;
  env.aromatic = a.aromatic;
  env.charge = a.formal_charge;
  env.hydrogens = a.total_h();
  for (std::size_t bi : mol.incident_bonds(atom)) {
    switch (mol.bonds()[bi].order) {
      case BondOrder::Single: ++env.single_bonds; break;
      case BondOrder::Double: ++env.double_bonds; break;
      case BondOrder::Triple: ++env.triple_bonds; break;
      case BondOrder::Aromatic: ++env.aromatic_bonds; break;
    }
  }
  for (const Ring& ring : mol.rings()) {
    if (ring.size() != 3) continue;
    for (std::size_t member : ring)
      if (member == atom) env.in_three_ring = true;
  }
  return env;
}

TpsaResult tpsa_ertl(const Molecule& mol, const FragmentTable& table) {
  TpsaResult result;
  for (std::size_t i = 0; i < mol.atom_count(); ++i) {
    const Element e = mol.atoms()[i].element;
    if (e != Element::N && e != Element::O) continue;
    const PolarEnvironment env = polar_environment(mol, i);
    if (const Fragment* f = table.find(env)) {
      result.tpsa += f->contribution;
      continue;
    }
    result.unmatched_atoms.push_back(i);
    const Fragment* f = table.closest(env);
    if (!f) {
      // No entry with this aromaticity: fall back to the element alone.
      PolarEnvironment flipped = env;
      flipped.aromatic = !env.aromatic;
      f = table.closest(flipped);
    }
    if (f) result.tpsa += f->contribution;
  }
  return result;
}

}  // namespace qsar::chem
