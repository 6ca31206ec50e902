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

#include <cstdint>
#include <optional>
#include <vector>

#include "nsrte/logic.hpp"

namespace nsrte {

struct SatResult {
  bool satisfiable = false;
  // Indexed by letter; entry 0 unused. Present iff satisfiable.
  std::optional<std::vector<bool>> model;

  bool value(PropLetter l) const { return model && l.index < model->size() && (*model)[l.index]; }
};

inline constexpr std::uint64_t kDefaultBranchBudget = 10'000'000;

/// DPLL with unit propagation and pure-literal elimination. Branches on the
/// lowest unassigned letter of an open clause, trying true first. Letters
/// left free by the search are false in the model. Throws
/// SolverBudgetExceeded after `budget` branch nodes.
SatResult is_satisfiable(const Cnf& cnf, std::uint64_t budget = kDefaultBranchBudget);

/// True iff phi & ~alpha is unsatisfiable.
bool entails(const AbstractFormula& phi, const AbstractFormula& alpha);

/// True iff phi & alpha is unsatisfiable.
bool contradicts(const AbstractFormula& phi, const AbstractFormula& alpha);

/// Truth-table satisfiability. Throws TooManyLetters above 20 letters.
bool brute_force_sat(const AbstractFormula& f);

}  // namespace nsrte
