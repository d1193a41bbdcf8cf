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

#include "qsar/chem/smiles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "qsar/chem/rings.hpp"
#include "qsar/core/error.hpp"

namespace qsar::chem {

namespace {

struct PendingBond {
  BondOrder order;
  std::size_t offset;
};

struct OpenRing {
  std::size_t atom;
  std::optional<BondOrder> order;
  std::size_t offset;
};

std::optional<Element> element_from_symbol(std::string_view sym) {
  static constexpr std::pair<std::string_view, Element> kTable[] = {
      {"B", Element::B},  {"C", Element::C},   {"N", Element::N},   {"O", Element::O},
      {"P", Element::P},  {"S", Element::S},   {"F", Element::F},   {"Cl", Element::Cl},
      {"Br", Element::Br}, {"I", Element::I},
  };
  for (const auto& [s, e] : kTable)
    if (s == sym) return e;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Molecule run() {
    if (text_.empty()) throw ParseError(ErrorCode::EmptyInput, 0, "empty SMILES");
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') break;  // trailing title
      if (c == '[') {
        parse_bracket_atom();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '*') {
        parse_organic_atom();
      } else if (c == '-' || c == '=' || c == '#' || c == ':' || c == '/' || c == '\\') {
        parse_bond_symbol(c);
      } else if (c == '(') {
        if (!prev_) throw ParseError(ErrorCode::InvalidSyntax, pos_, "branch without a preceding atom");
        if (pending_) throw ParseError(ErrorCode::InvalidSyntax, pos_, "bond symbol before '('");
        branches_.push_back({*prev_, pos_});
        branch_has_atom_.push_back(false);
        ++pos_;
      } else if (c == ')') {
        if (branches_.empty()) {
          throw ParseError(ErrorCode::UnmatchedParenthesis, pos_, "')' without matching '('");
        }
        if (pending_) throw ParseError(ErrorCode::InvalidSyntax, pos_, "dangling bond before ')'");
        if (!branch_has_atom_.back()) throw ParseError(ErrorCode::InvalidSyntax, pos_, "empty branch");
        prev_ = branches_.back().first;
        branches_.pop_back();
        branch_has_atom_.pop_back();
        ++pos_;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::size_t start = pos_;
        ++pos_;
        ring_closure(c - '0', start);
      } else if (c == '%') {
        const std::size_t start = pos_;
        if (pos_ + 2 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_ + 2]))) {
          throw ParseError(ErrorCode::InvalidSyntax, pos_, "'%' needs two digits");
        }
        const int number = (text_[pos_ + 1] - '0') * 10 + (text_[pos_ + 2] - '0');
        pos_ += 3;
        ring_closure(number, start);
      } else if (c == '.') {
        if (pending_) throw ParseError(ErrorCode::InvalidSyntax, pos_, "bond symbol before '.'");
        if (!prev_) throw ParseError(ErrorCode::InvalidSyntax, pos_, "'.' without a preceding atom");
        prev_.reset();
        ++pos_;
      } else {
        throw ParseError(ErrorCode::InvalidSyntax, pos_, std::string("unexpected character '") + c + "'");
      }
    }
    if (pending_) throw ParseError(ErrorCode::InvalidSyntax, pending_->offset, "dangling bond");
    if (!branches_.empty()) {
      throw ParseError(ErrorCode::UnmatchedParenthesis, branches_.back().second, "'(' never closed");
    }
    if (!open_rings_.empty()) {
      std::size_t first = open_rings_.begin()->second.offset;
      for (const auto& [num, ring] : open_rings_) first = std::min(first, ring.offset);
      throw ParseError(ErrorCode::UnmatchedRingClosure, first, "ring bond never closed");
    }
    if (mol_.atom_count() == 0) throw ParseError(ErrorCode::EmptyInput, 0, "no atoms");
    if (!prev_ && text_[pos_ - 1] == '.') {
      throw ParseError(ErrorCode::InvalidSyntax, pos_ - 1, "trailing '.'");
    }

    mol_.set_rings(perceive_rings(mol_));
    demote_chain_aromatic_bonds();
    mol_.assign_implicit_hydrogens();
    return std::move(mol_);
  }

 private:
  void add_atom(const Atom& atom) {
    const std::size_t index = mol_.add_atom(atom);
    if (prev_) {
      BondOrder order;
      bool implied = false;
      if (pending_) {
        order = pending_->order;
      } else {
        implied = atom.aromatic && mol_.atoms()[*prev_].aromatic;
        order = implied ? BondOrder::Aromatic : BondOrder::Single;
      }
      const std::size_t bi = mol_.add_bond(*prev_, index, order);
      if (implied) implied_aromatic_.push_back(bi);
    }
    pending_.reset();
    prev_ = index;
    if (!branch_has_atom_.empty()) branch_has_atom_.back() = true;
  }

  void parse_organic_atom() {
    const std::size_t start = pos_;
    const char c = text_[pos_];
    Atom atom;
    if (c == 'C' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'l') {
      atom.element = Element::Cl;
      pos_ += 2;
    } else if (c == 'B' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'r') {
      atom.element = Element::Br;
      pos_ += 2;
    } else {
      const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      const bool lower = std::islower(static_cast<unsigned char>(c)) != 0;
      auto e = element_from_symbol(std::string_view(&upper, 1));
      if (!e || (lower && !can_be_aromatic(*e))) {
        throw ParseError(ErrorCode::UnknownAtomSymbol, start, std::string("unknown atom symbol '") + c + "'");
      }
      atom.element = *e;
      atom.aromatic = lower;
      ++pos_;
    }
    add_atom(atom);
  }

  void parse_bracket_atom() {
    const std::size_t start = pos_;
    const std::size_t close = text_.find(']', pos_);
    if (close == std::string_view::npos) {
      throw ParseError(ErrorCode::InvalidSyntax, start, "'[' never closed");
    }
    ++pos_;
    while (pos_ < close && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;  // isotope

    if (pos_ >= close) throw ParseError(ErrorCode::UnknownAtomSymbol, pos_, "bracket atom without symbol");
    Atom atom;
    const std::size_t sym_start = pos_;
    const char c = text_[pos_];
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::string sym(1, c);
      if (pos_ + 1 < close && std::islower(static_cast<unsigned char>(text_[pos_ + 1]))) {
        std::string two = sym + text_[pos_ + 1];
        if (element_from_symbol(two)) {
          sym = two;
        } else if (!(text_[pos_ + 1] == 'H' || text_[pos_ + 1] == '@')) {
          // Two-letter symbols outside the supported set, e.g. [Na] or [Se].
          throw ParseError(ErrorCode::UnknownAtomSymbol, sym_start, "unsupported element '" + two + "'");
        }
      }
      auto e = element_from_symbol(sym);
      if (!e) throw ParseError(ErrorCode::UnknownAtomSymbol, sym_start, "unsupported element '" + sym + "'");
      atom.element = *e;
      pos_ += sym.size();
    } else if (std::islower(static_cast<unsigned char>(c))) {
      if (pos_ + 1 < close && std::islower(static_cast<unsigned char>(text_[pos_ + 1]))) {
        throw ParseError(ErrorCode::UnknownAtomSymbol, sym_start,
                         "unsupported aromatic symbol '" + std::string(text_.substr(pos_, 2)) + "'");
      }
      const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      auto e = element_from_symbol(std::string_view(&upper, 1));
      if (!e || !can_be_aromatic(*e)) {
        throw ParseError(ErrorCode::UnknownAtomSymbol, sym_start, std::string("unknown aromatic symbol '") + c + "'");
      }
      atom.element = *e;
      atom.aromatic = true;
      ++pos_;
    } else {
      throw ParseError(ErrorCode::UnknownAtomSymbol, sym_start, std::string("unknown atom symbol '") + c + "'");
    }

    // Chirality is read and ignored.
    while (pos_ < close && text_[pos_] == '@') ++pos_;
    if (pos_ + 1 < close && std::isupper(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != 'H' &&
        std::isupper(static_cast<unsigned char>(text_[pos_ + 1]))) {
      pos_ += 2;  // @TH, @AL, @SP, @TB, @OH classes
      while (pos_ < close && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    int hydrogens = 0;
    if (pos_ < close && text_[pos_] == 'H') {
      ++pos_;
      hydrogens = 1;
      if (pos_ < close && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        hydrogens = 0;
        while (pos_ < close && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          hydrogens = hydrogens * 10 + (text_[pos_] - '0');
          ++pos_;
        }
      }
    }
    atom.explicit_h = hydrogens;

    if (pos_ < close && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const char sign = text_[pos_];
      ++pos_;
      int magnitude = 1;
      if (pos_ < close && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        magnitude = 0;
        while (pos_ < close && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          magnitude = magnitude * 10 + (text_[pos_] - '0');
          ++pos_;
        }
      } else {
        while (pos_ < close && text_[pos_] == sign) {
          ++magnitude;
          ++pos_;
        }
      }
      atom.formal_charge = sign == '+' ? magnitude : -magnitude;
    }

    if (pos_ < close && text_[pos_] == ':') {  // atom class, ignored
      ++pos_;
      if (pos_ >= close) throw ParseError(ErrorCode::InvalidSyntax, pos_, "empty atom class");
      while (pos_ < close && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ != close) {
      throw ParseError(ErrorCode::InvalidSyntax, pos_, "unexpected character inside bracket atom");
    }
    pos_ = close + 1;
    add_atom(atom);
  }

  void parse_bond_symbol(char c) {
    if (pending_) throw ParseError(ErrorCode::InvalidSyntax, pos_, "two consecutive bond symbols");
    if (!prev_) throw ParseError(ErrorCode::InvalidSyntax, pos_, "bond without a preceding atom");
    BondOrder order = BondOrder::Single;
    switch (c) {
      case '=': order = BondOrder::Double; break;
      case '#': order = BondOrder::Triple; break;
      case ':': order = BondOrder::Aromatic; break;
      default: order = BondOrder::Single; break;  // '-', and directional '/' '\'
    }
    pending_ = PendingBond{order, pos_};
    ++pos_;
  }

  void ring_closure(int number, std::size_t offset) {
    if (!prev_) throw ParseError(ErrorCode::InvalidSyntax, offset, "ring closure without a preceding atom");
    auto it = open_rings_.find(number);
    if (it == open_rings_.end()) {
      open_rings_[number] = OpenRing{*prev_, pending_ ? std::optional(pending_->order) : std::nullopt, offset};
      pending_.reset();
      return;
    }
    const OpenRing open = it->second;
    open_rings_.erase(it);
    std::optional<BondOrder> order = open.order;
    if (pending_) {
      if (order && *order != pending_->order) {
        throw ParseError(ErrorCode::InvalidSyntax, offset, "conflicting ring-closure bond symbols");
      }
      order = pending_->order;
    }
    if (open.atom == *prev_) throw ParseError(ErrorCode::InvalidSyntax, offset, "ring closure onto the same atom");
    if (mol_.find_bond(open.atom, *prev_)) {
      throw ParseError(ErrorCode::InvalidSyntax, offset, "ring closure duplicates an existing bond");
    }
    bool implied = false;
    if (!order) {
      implied = mol_.atoms()[open.atom].aromatic && mol_.atoms()[*prev_].aromatic;
      order = implied ? BondOrder::Aromatic : BondOrder::Single;
    }
    const std::size_t bi = mol_.add_bond(open.atom, *prev_, *order);
    if (implied) implied_aromatic_.push_back(bi);
    pending_.reset();
  }

  // An unmarked bond between two aromatic atoms is aromatic only inside a
  // ring; between ring systems (biphenyl) it is a single bond.
  void demote_chain_aromatic_bonds() {
    if (implied_aromatic_.empty()) return;
    const std::vector<bool> in_ring = mol_.ring_bonds();
    Molecule rebuilt;
    for (const Atom& a : mol_.atoms()) rebuilt.add_atom(a);
    std::vector<bool> demote(mol_.bond_count(), false);
    for (std::size_t bi : implied_aromatic_)
      if (!in_ring[bi]) demote[bi] = true;
    if (std::none_of(demote.begin(), demote.end(), [](bool d) { return d; })) return;
    for (std::size_t bi = 0; bi < mol_.bond_count(); ++bi) {
      const Bond& b = mol_.bonds()[bi];
      rebuilt.add_bond(b.begin, b.end, demote[bi] ? BondOrder::Single : b.order);
    }
    rebuilt.set_rings(mol_.rings());
    mol_ = std::move(rebuilt);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Molecule mol_;
  std::optional<std::size_t> prev_;
  std::optional<PendingBond> pending_;
  std::vector<std::pair<std::size_t, std::size_t>> branches_;  // (atom, offset of '(')
  std::vector<bool> branch_has_atom_;
  std::map<int, OpenRing> open_rings_;
  std::vector<std::size_t> implied_aromatic_;
};

char bond_symbol(BondOrder order) {
  switch (order) {
    case BondOrder::Single: return '-';
    case BondOrder::Double: return '=';
    case BondOrder::Triple: return '#';
    case BondOrder::Aromatic: return ':';
  }
  return '-';
}

std::string atom_token(const Atom& atom) {
  std::string out = "[";
  std::string sym(symbol(atom.element));
  if (atom.aromatic) sym[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(sym[0])));
  out += sym;
  const int h = atom.total_h();
  if (h > 0) {
    out += 'H';
    if (h > 1) out += std::to_string(h);
  }
  if (atom.formal_charge != 0) {
    out += atom.formal_charge > 0 ? '+' : '-';
    const int mag = std::abs(atom.formal_charge);
    if (mag > 1) out += std::to_string(mag);
  }
  out += ']';
  return out;
}

class Writer {
 public:
  Writer(const Molecule& mol, const WriteOptions& options) : mol_(mol) {
    const std::size_t n = mol.atom_count();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    neighbors_.resize(n);
    for (std::size_t a = 0; a < n; ++a) neighbors_[a] = mol.incident_bonds(a);
    if (options.shuffle_seed != 0) {
      std::mt19937_64 rng(options.shuffle_seed);
      std::shuffle(order_.begin(), order_.end(), rng);
      for (auto& nb : neighbors_) std::shuffle(nb.begin(), nb.end(), rng);
    }
    visit_time_.assign(n, kUnvisited);
    tree_bond_.assign(mol.bond_count(), false);
  }

  std::string run() {
    std::string out;
    for (std::size_t start : order_) {
      if (visit_time_[start] != kUnvisited) continue;
      discover(start);
      if (!out.empty()) out += '.';
      emit(start, std::nullopt, out);
    }
    return out;
  }

 private:
  static constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

  void discover(std::size_t root) {
    // Iterative DFS recording visit order and tree bonds; children are
    // recorded in neighbor order so emission can replay the same traversal.
    struct Frame {
      std::size_t atom;
      std::size_t next = 0;
    };
    std::vector<Frame> stack{{root}};
    visit_time_[root] = clock_++;
    children_.resize(mol_.atom_count());
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == neighbors_[f.atom].size()) {
        stack.pop_back();
        continue;
      }
      const std::size_t bi = neighbors_[f.atom][f.next++];
      const std::size_t other = mol_.bonds()[bi].other(f.atom);
      if (visit_time_[other] == kUnvisited) {
        visit_time_[other] = clock_++;
        tree_bond_[bi] = true;
        children_[f.atom].push_back(bi);
        stack.push_back({other});
      }
    }
  }

  int acquire_ring_number() {
    for (int k = 1;; ++k) {
      if (!in_use_.contains(k)) {
        in_use_.insert(k);
        return k;
      }
    }
  }

  static std::string ring_label(int k) {
    if (k < 10) return std::to_string(k);
    return "%" + std::to_string(k);
  }

  void emit(std::size_t atom, std::optional<std::size_t> via, std::string& out) {
    if (via) out += bond_symbol(mol_.bonds()[*via].order);
    out += atom_token(mol_.atoms()[atom]);
    for (std::size_t bi : neighbors_[atom]) {
      if (tree_bond_[bi]) continue;
      const std::size_t other = mol_.bonds()[bi].other(atom);
      if (visit_time_[other] > visit_time_[atom]) {
        const int k = acquire_ring_number();
        open_numbers_[bi] = k;
        out += bond_symbol(mol_.bonds()[bi].order);
        out += ring_label(k);
      } else {
        const int k = open_numbers_.at(bi);
        out += ring_label(k);
        in_use_.erase(k);
      }
    }
    const auto& kids = children_[atom];
    for (std::size_t c = 0; c < kids.size(); ++c) {
      const std::size_t child = mol_.bonds()[kids[c]].other(atom);
      if (c + 1 < kids.size()) {
        out += '(';
        emit(child, kids[c], out);
        out += ')';
      } else {
        emit(child, kids[c], out);
      }
    }
  }

  const Molecule& mol_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> visit_time_;
  std::vector<bool> tree_bond_;
  std::size_t clock_ = 0;
  std::set<int> in_use_;
  std::map<std::size_t, int> open_numbers_;
};

}  // namespace

Molecule parse_smiles(std::string_view text) { return Parser(text).run(); }

std::string write_smiles(const Molecule& mol, const WriteOptions& options) {
  return Writer(mol, options).run();
}

}  // namespace qsar::chem
