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

#include <doctest.h>

#include <chrono>

#include "nsrte/error.hpp"
#include "nsrte/sat.hpp"
#include "oracles.hpp"

using namespace nsrte;

namespace {

AbstractFormula x(std::uint32_t i) { return AbstractFormula::leaf(PropLetter{i}); }
AbstractFormula n(AbstractFormula f) { return AbstractFormula::negate(std::move(f)); }
AbstractFormula all(std::initializer_list<std::uint32_t> ids) {
  std::vector<AbstractFormula> parts;
  for (auto i : ids) parts.push_back(x(i));
  return AbstractFormula::conj(std::move(parts));
}

bool clause_satisfied(const Clause& c, const SatResult& r) {
  for (const auto& l : c) {
    if (r.value(l.letter) != l.negated) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("satisfiability examples") {
  const Cnf ab{{{Literal{PropLetter{1}, false}}, {Literal{PropLetter{2}, true}}}, 2};
  const SatResult r = is_satisfiable(ab);
  REQUIRE(r.satisfiable);
  CHECK(r.value(PropLetter{1}));
  CHECK_FALSE(r.value(PropLetter{2}));

  const Cnf contra{{{Literal{PropLetter{1}, false}}, {Literal{PropLetter{1}, true}}}, 1};
  CHECK_FALSE(is_satisfiable(contra).satisfiable);
  CHECK_FALSE(is_satisfiable(contra).model.has_value());
  CHECK(is_satisfiable(Cnf{{}, 0}).satisfiable);
  CHECK_FALSE(is_satisfiable(Cnf{{Clause{}}, 0}).satisfiable);
}

TEST_CASE("entailment and contradiction") {
  CHECK(entails(all({1, 2, 3, 4, 5, 6, 7, 8, 9}), all({7, 9})));
  CHECK(entails(x(1), x(1)));
  CHECK_FALSE(entails(x(1), x(2)));
  CHECK(contradicts(n(all({2, 3})), all({2, 3})));
  CHECK_FALSE(contradicts(x(1), x(2)));
  CHECK_FALSE(contradicts(n(all({1, 2, 3})), all({1, 2})));
}

TEST_CASE("brute force") {
  CHECK_FALSE(brute_force_sat(AbstractFormula::conj({x(1), n(x(1))})));
  CHECK(brute_force_sat(n(all({1, 2}))));
  std::vector<AbstractFormula> wide;
  for (std::uint32_t i = 1; i <= 21; ++i) wide.push_back(x(i));
  CHECK_THROWS_AS(brute_force_sat(AbstractFormula::conj(wide)), TooManyLetters);
  CHECK(brute_force_sat(x(40)));
}

TEST_CASE("solver agrees with the oracle; models satisfy every clause") {
  testing::FormulaGenerator gen(2024, 12);
  for (int i = 0; i < 1500; ++i) {
    const auto f = gen.next(5);
    const Cnf cnf = to_cnf(f);
    const SatResult r = is_satisfiable(cnf);
    REQUIRE(r.satisfiable == testing::oracle_satisfiable(f));
    CHECK(r.satisfiable == brute_force_sat(f));
    if (r.satisfiable) {
      for (const auto& c : cnf.clauses) CHECK(clause_satisfied(c, r));
    }
    const SatResult again = is_satisfiable(cnf);
    CHECK(again.model == r.model);
  }
}

TEST_CASE("budget exhaustion is reported") {
  // Pigeonhole 7 into 6: unsatisfiable and needs many branches.
  Cnf cnf;
  auto var = [](int p, int h) { return PropLetter{static_cast<std::uint32_t>(p * 6 + h + 1)}; };
  for (int p = 0; p < 7; ++p) {
    Clause c;
    for (int h = 0; h < 6; ++h) c.push_back({var(p, h), false});
    cnf.clauses.push_back(c);
  }
  for (int h = 0; h < 6; ++h)
    for (int p = 0; p < 7; ++p)
      for (int q = p + 1; q < 7; ++q) cnf.clauses.push_back({{var(p, h), true}, {var(q, h), true}});
  cnf.num_letters = 42;
  CHECK_THROWS_AS(is_satisfiable(cnf, 10), SolverBudgetExceeded);
  CHECK_FALSE(is_satisfiable(cnf).satisfiable);
}
