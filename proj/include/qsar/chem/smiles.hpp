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

#include <cstdint>
#include <string>
#include <string_view>

#include "qsar/chem/molecule.hpp"

namespace qsar::chem {

/// Parses the supported SMILES subset:
///   organic-subset atoms B C N O P S F Cl Br I and aromatic b c n o p s;
///   bracket atoms [isotope? symbol chirality? Hn? charge? class?] where
///   isotopes, chirality (@, @@) and atom classes are read and ignored;
///   bonds - = # : with / and \ read as single bonds; branches; ring
///   closures 0-9 and %nn; '.' disconnection.
/// Implicit hydrogens are assigned and rings perceived before returning.
/// Throws ParseError naming the byte offset of the problem.
Molecule parse_smiles(std::string_view text);

struct WriteOptions {
  /// 0 keeps atom order and writes from atom 0; otherwise atoms and
  /// neighbor visits are shuffled with this seed (random equivalent SMILES).
  std::uint64_t shuffle_seed = 0;
};

/// Writes a non-canonical SMILES. Every atom is emitted in bracket form with
/// its hydrogen count and charge, every bond with an explicit symbol, so the
/// output re-parses to an isomorphic graph.
std::string write_smiles(const Molecule& mol, const WriteOptions& options = {});

}  // namespace qsar::chem
