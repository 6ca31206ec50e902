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

// Test-only reference implementations. These deliberately avoid the
// library's evaluation, CNF and solver code paths.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nsrte/logic.hpp"

namespace nsrte::testing {

/// Truth-table satisfiability by direct recursive evaluation.
bool oracle_satisfiable(const AbstractFormula& f);

/// Satisfiability of a clause set by enumerating all assignments.
bool oracle_cnf_satisfiable(const Cnf& cnf);

/// True iff f and g agree on every assignment to the union of their letters.
bool oracle_equivalent(const AbstractFormula& f, const AbstractFormula& g);

/// Random {And, Not, True} formulas over letters x1..x<max_letters>.
class FormulaGenerator {
 public:
  FormulaGenerator(std::uint64_t seed, std::uint32_t max_letters)
      : rng_(seed), max_letters_(max_letters) {}

  AbstractFormula next(int depth = 4);
  /// Conjunction of 1-4 possibly negated letters.
  AbstractFormula next_claim();

 private:
  std::mt19937_64 rng_;
  std::uint32_t max_letters_;
};

std::string read_text(const std::string& path);
/// Records separated by blank lines; `#` comment lines are dropped.
std::vector<std::string> read_penman_corpus(const std::string& path);

}  // namespace nsrte::testing
