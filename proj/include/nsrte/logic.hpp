// Copyright 2026 The nsrte Authors.
//
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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nsrte {

/// Ground atom `pred(a)` or `pred(a, b)`. Arguments are Skolem constants or
/// attribute constants, never variables.
struct AmrAtom {
  std::string predicate;
  std::string first;
  std::optional<std::string> second;

  static AmrAtom monadic(std::string pred, std::string arg) {
    return {std::move(pred), std::move(arg), std::nullopt};
  }
  static AmrAtom dyadic(std::string pred, std::string arg1, std::string arg2) {
    return {std::move(pred), std::move(arg1), std::move(arg2)};
  }

  bool is_dyadic() const { return second.has_value(); }
  std::string to_string() const;

  auto operator<=>(const AmrAtom&) const = default;
  bool operator==(const AmrAtom&) const = default;
};

/// Propositional letter x<index>; indices start at 1.
struct PropLetter {
  std::uint32_t index = 0;

  std::string to_string() const { return "x" + std::to_string(index); }
  auto operator<=>(const PropLetter&) const = default;
  bool operator==(const PropLetter&) const = default;
};

/// Immutable formula over {True, leaf, conjunction, negation}. False is
/// written Not(True). Copies share structure.
template <typename Leaf>
class Formula {
 public:
  enum class Kind { kTrue, kLeaf, kAnd, kNot };

  Formula() : node_(true_node()) {}

  static Formula truth() { return Formula(); }
  static Formula falsity() { return negate(truth()); }

  static Formula leaf(Leaf value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kLeaf;
    n->leaf = std::move(value);
    return Formula(std::move(n));
  }

  /// Zero operands give True; one operand is returned unchanged.
  static Formula conj(std::vector<Formula> operands) {
    if (operands.empty()) return truth();
    if (operands.size() == 1) return std::move(operands.front());
    auto n = std::make_shared<Node>();
    n->kind = Kind::kAnd;
    n->children = std::move(operands);
    return Formula(std::move(n));
  }

  static Formula negate(Formula operand) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kNot;
    n->children.push_back(std::move(operand));
    return Formula(std::move(n));
  }

  Kind kind() const { return node_->kind; }
  bool is_true() const { return kind() == Kind::kTrue; }
  bool is_leaf() const { return kind() == Kind::kLeaf; }
  bool is_and() const { return kind() == Kind::kAnd; }
  bool is_not() const { return kind() == Kind::kNot; }
  bool is_false() const { return is_not() && operand().is_true(); }

  const Leaf& leaf_value() const {
    if (!is_leaf()) throw std::logic_error("formula is not a leaf");
    return *node_->leaf;
  }
  std::span<const Formula> children() const { return node_->children; }
  const Formula& operand() const {
    if (!is_not()) throw std::logic_error("formula is not a negation");
    return node_->children.front();
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.is_leaf()) return a.leaf_value() == b.leaf_value();
    return std::equal(a.children().begin(), a.children().end(), b.children().begin(),
                      b.children().end());
  }

  /// Post-order rebuild replacing each leaf with `fn(leaf)`, which must
  /// return a Formula over `Out`. Tree shape is preserved.
  template <typename Out, typename Fn>
  Formula<Out> map_leaves(Fn&& fn) const {
    switch (kind()) {
      case Kind::kTrue:
        return Formula<Out>::truth();
      case Kind::kLeaf:
        return fn(leaf_value());
      case Kind::kNot:
        return Formula<Out>::negate(operand().template map_leaves<Out>(fn));
      case Kind::kAnd: {
        std::vector<Formula<Out>> mapped;
        mapped.reserve(children().size());
        for (const auto& c : children()) mapped.push_back(c.template map_leaves<Out>(fn));
        return Formula<Out>::conj(std::move(mapped));
      }
    }
    return Formula<Out>::truth();
  }

  /// Leaves in left-to-right order, duplicates kept.
  template <typename Fn>
  void for_each_leaf(Fn&& fn) const {
    if (is_leaf()) {
      fn(leaf_value());
      return;
    }
    for (const auto& c : children()) c.for_each_leaf(fn);
  }

 private:
  struct Node {
    Kind kind = Kind::kTrue;
    std::optional<Leaf> leaf;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<const Node> true_node() {
    static const auto kTrueNode = std::make_shared<const Node>();
    return kTrueNode;
  }

  std::shared_ptr<const Node> node_;
};

using AmrFormula = Formula<AmrAtom>;
using AbstractFormula = Formula<PropLetter>;

/// Set of leaves, excluding True.
template <typename Leaf>
std::set<Leaf> atoms(const Formula<Leaf>& f) {
  std::set<Leaf> out;
  f.for_each_leaf([&](const Leaf& l) { out.insert(l); });
  return out;
}

/// Distinct leaves in order of first occurrence.
template <typename Leaf>
std::vector<Leaf> atoms_in_order(const Formula<Leaf>& f) {
  std::vector<Leaf> out;
  std::set<Leaf> seen;
  f.for_each_leaf([&](const Leaf& l) {
    if (seen.insert(l).second) out.push_back(l);
  });
  return out;
}

/// Drops True operands of conjunctions; an emptied conjunction becomes True
/// and a single survivor replaces its conjunction. Not(True) is kept as the
/// representation of False.
AbstractFormula simplify_true(const AbstractFormula& f);

/// Replaces every leaf in `letters` with True, without simplifying.
AbstractFormula substitute_true(const AbstractFormula& f, const std::set<PropLetter>& letters);

bool evaluate(const AbstractFormula& f, const std::set<PropLetter>& true_letters);

std::string to_string(const AmrFormula& f);
std::string to_string(const AbstractFormula& f);

/// Signed letter; DIMACS-style `as_int()` is negative when negated.
struct Literal {
  PropLetter letter;
  bool negated = false;

  int as_int() const {
    return negated ? -static_cast<int>(letter.index) : static_cast<int>(letter.index);
  }
  Literal operator~() const { return {letter, !negated}; }
  auto operator<=>(const Literal&) const = default;
  bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

struct Cnf {
  std::vector<Clause> clauses;
  // Highest letter index in use, including definition letters.
  std::uint32_t num_letters = 0;

  bool operator==(const Cnf&) const = default;
};

/// Clause-count cap for distributive conversion; larger results fall back to
/// definition letters.
inline constexpr std::size_t kDistributiveClauseCap = 10000;

/// Equisatisfiable clause form. Below the clause cap the result is logically
/// equivalent to `f`; above it, fresh letters are allocated after the highest
/// input letter. Tautological clauses are dropped and literals deduplicated.
Cnf to_cnf(const AbstractFormula& f, std::size_t clause_cap = kDistributiveClauseCap);

/// `p cnf <vars> <clauses>` followed by one zero-terminated line per clause.
std::string to_dimacs(const Cnf& cnf);

/// Inverse of to_dimacs. Comment lines (`c ...`) are skipped. Throws
/// std::invalid_argument on malformed input.
Cnf parse_dimacs(const std::string& text);

}  // namespace nsrte
