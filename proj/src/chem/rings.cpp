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

#include "qsar/chem/rings.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <vector>

namespace qsar::chem {

namespace {

using BitVector = std::vector<std::uint64_t>;

struct Candidate {
  std::vector<std::size_t> atoms;  // canonical cycle order
  BitVector edges;
};

bool test_bit(const BitVector& v, std::size_t i) { return (v[i / 64] >> (i % 64)) & 1U; }
void set_bit(BitVector& v, std::size_t i) { v[i / 64] |= std::uint64_t{1} << (i % 64); }

std::optional<std::size_t> lowest_bit(const BitVector& v) {
  for (std::size_t w = 0; w < v.size(); ++w)
    if (v[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
  return std::nullopt;
}

std::vector<std::size_t> canonical_cycle(std::vector<std::size_t> cycle) {
  const auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

}  // namespace

std::vector<Ring> perceive_rings(const Molecule& mol) {
  const std::size_t n = mol.atom_count();
  const std::size_t m = mol.bond_count();
  const std::size_t target = m + mol.connected_components() - n;
  if (target == 0) return {};

  // Neighbor lists sorted by atom index make the BFS trees deterministic.
  std::vector<std::vector<std::size_t>> nbrs(n);
  for (const Bond& b : mol.bonds()) {
    nbrs[b.begin].push_back(b.end);
    nbrs[b.end].push_back(b.begin);
  }
  for (auto& l : nbrs) std::sort(l.begin(), l.end());

  const std::size_t words = (m + 63) / 64;
  std::vector<Candidate> candidates;
  std::set<BitVector> seen;
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  for (std::size_t root = 0; root < n; ++root) {
    std::vector<std::size_t> dist(n, kInf), parent(n, kInf);
    std::queue<std::size_t> queue;
    dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : nbrs[u]) {
        if (dist[v] == kInf) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push(v);
        }
      }
    }
    auto path_to_root = [&](std::size_t v) {
      std::vector<std::size_t> p;
      for (; v != root; v = parent[v]) p.push_back(v);
      p.push_back(root);
      return p;
    };

    for (std::size_t bi = 0; bi < m; ++bi) {
      const Bond& b = mol.bonds()[bi];
      if (dist[b.begin] == kInf || dist[b.end] == kInf) continue;
      // Tree edges never close a cycle through the root.
      if (parent[b.begin] == b.end || parent[b.end] == b.begin) continue;
      const auto px = path_to_root(b.begin);
      const auto py = path_to_root(b.end);
      std::vector<std::size_t> sx(px.begin(), px.end() - 1), sy(py.begin(), py.end() - 1);
      std::sort(sx.begin(), sx.end());
      std::sort(sy.begin(), sy.end());
      std::vector<std::size_t> common;
      std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(common));
      if (!common.empty()) continue;

      // cycle: x ... root ... y, closed by the bond (x, y)
      std::vector<std::size_t> cycle(px.begin(), px.end());
      for (auto it = py.rbegin() + 1; it != py.rend(); ++it) cycle.push_back(*it);
      if (cycle.size() < 3) continue;

      BitVector edges(words, 0);
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        set_bit(edges, *mol.find_bond(cycle[k], cycle[(k + 1) % cycle.size()]));
      }
      if (!seen.insert(edges).second) continue;
      candidates.push_back({canonical_cycle(std::move(cycle)), std::move(edges)});
    }
  }

  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.atoms.size() != b.atoms.size()) return a.atoms.size() < b.atoms.size();
    return a.atoms < b.atoms;
  });

  // Greedy selection of the shortest linearly independent cycles over GF(2).
  std::vector<std::pair<std::size_t, BitVector>> basis;
  std::vector<Ring> rings;
  for (const Candidate& c : candidates) {
    BitVector v = c.edges;
    for (const auto& [pivot, row] : basis) {
      if (test_bit(v, pivot))
        for (std::size_t w = 0; w < words; ++w) v[w] ^= row[w];
    }
    const auto pivot = lowest_bit(v);
    if (!pivot) continue;
    basis.emplace_back(*pivot, std::move(v));
    rings.push_back(c.atoms);
    if (rings.size() == target) break;
  }

  std::sort(rings.begin(), rings.end(), [](const Ring& a, const Ring& b) {
    if (a.front() != b.front()) return a.front() < b.front();
    return a < b;
  });
  return rings;
}

}  // namespace qsar::chem
