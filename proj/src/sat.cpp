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

#include "nsrte/sat.hpp"

#include "nsrte/error.hpp"

namespace nsrte {

namespace {

class Dpll {
 public:
  Dpll(const Cnf& cnf, std::uint64_t budget) : cnf_(cnf), budget_(budget) {}

  std::optional<std::vector<signed char>> solve() {
    std::vector<signed char> assignment(cnf_.num_letters + 1, 0);
    if (search(assignment)) return assignment;
    return std::nullopt;
  }

 private:
  static signed char value_of(const std::vector<signed char>& a, Literal l) {
    const signed char v = a[l.letter.index];
    return l.negated ? static_cast<signed char>(-v) : v;
  }

  static void assign(std::vector<signed char>& a, Literal l) {
    a[l.letter.index] = l.negated ? -1 : 1;
  }

  bool satisfied(const std::vector<signed char>& a, const Clause& c) const {
    for (const auto& l : c) {
      if (value_of(a, l) == 1) return true;
    }
    return false;
  }

  // Returns false on conflict.
  bool propagate(std::vector<signed char>& a) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& c : cnf_.clauses) {
        if (satisfied(a, c)) continue;
        const Literal* unit = nullptr;
        std::size_t open = 0;
        for (const auto& l : c) {
          if (value_of(a, l) == 0) {
            ++open;
            unit = &l;
          }
        }
        if (open == 0) return false;
        if (open == 1) {
          assign(a, *unit);
          changed = true;
        }
      }
      if (changed) continue;

      // Pure literals among open clauses.
      std::vector<unsigned char> seen(cnf_.num_letters + 1, 0);  // bit0 pos, bit1 neg
      for (const auto& c : cnf_.clauses) {
        if (satisfied(a, c)) continue;
        for (const auto& l : c) {
          if (value_of(a, l) == 0) seen[l.letter.index] |= l.negated ? 2 : 1;
        }
      }
      for (std::uint32_t v = 1; v <= cnf_.num_letters; ++v) {
        if (seen[v] == 1 || seen[v] == 2) {
          a[v] = seen[v] == 1 ? 1 : -1;
          changed = true;
        }
      }
    }
    return true;
  }

  bool search(std::vector<signed char>& a) {
    if (++branches_ > budget_) {
      throw SolverBudgetExceeded("DPLL exceeded " + std::to_string(budget_) + " branch nodes");
    }
    if (!propagate(a)) return false;
    std::uint32_t pick = 0;
    for (const auto& c : cnf_.clauses) {
      if (satisfied(a, c)) continue;
      for (const auto& l : c) {
        if (a[l.letter.index] == 0 && (pick == 0 || l.letter.index < pick)) pick = l.letter.index;
      }
    }
    if (pick == 0) return true;
    for (const signed char choice : {1, -1}) {
      std::vector<signed char> trial = a;
      trial[pick] = choice;
      if (search(trial)) {
        a = std::move(trial);
        return true;
      }
    }
    return false;
  }

  const Cnf& cnf_;
  std::uint64_t budget_;
  std::uint64_t branches_ = 0;
};

}  // namespace

SatResult is_satisfiable(const Cnf& cnf, std::uint64_t budget) {
  auto assignment = Dpll(cnf, budget).solve();
  if (!assignment) return {false, std::nullopt};
  std::vector<bool> model(assignment->size(), false);
  for (std::size_t i = 1; i < model.size(); ++i) model[i] = (*assignment)[i] == 1;
  return {true, std::move(model)};
}

bool entails(const AbstractFormula& phi, const AbstractFormula& alpha) {
  return !is_satisfiable(to_cnf(AbstractFormula::conj({phi, AbstractFormula::negate(alpha)})))
              .satisfiable;
}

bool contradicts(const AbstractFormula& phi, const AbstractFormula& alpha) {
  return !is_satisfiable(to_cnf(AbstractFormula::conj({phi, alpha}))).satisfiable;
}

bool brute_force_sat(const AbstractFormula& f) {
  const auto letters = atoms_in_order(f);
  if (letters.size() > 20) {
    throw TooManyLetters(std::to_string(letters.size()) + " letters exceed the 20-letter limit");
  }
  const std::uint32_t rows = 1u << letters.size();
  for (std::uint32_t row = 0; row < rows; ++row) {
    std::set<PropLetter> true_letters;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if ((row >> i) & 1u) true_letters.insert(letters[i]);
    }
    if (evaluate(f, true_letters)) return true;
  }
  return false;
}

}  // namespace nsrte
