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

#include <vector>

#include "qsar/chem/molecule.hpp"

namespace qsar::chem {

/// Minimum cycle basis (Horton candidates + GF(2) elimination). The basis has
/// |bonds| − |atoms| + components cycles. Each ring is listed starting at its
/// smallest atom index, walking toward the smaller of that atom's two ring
/// neighbors; rings are ordered by smallest member, then lexicographically.
std::vector<Ring> perceive_rings(const Molecule& mol);

}  // namespace qsar::chem
