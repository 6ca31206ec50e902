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

#include "nsrte/amr_logic.hpp"
#include "nsrte/error.hpp"
#include "nsrte/penman.hpp"
#include "oracles.hpp"

using namespace nsrte;

namespace {

AmrFormula lower(const std::string& text) { return translate(normalize_graph(parse_penman(text))); }

}  // namespace

TEST_CASE("concept predicates drop the sense suffix only") {
  CHECK(concept_predicate("want-01") == "want");
  CHECK(concept_predicate("lean-over") == "lean_over");
  CHECK(concept_predicate("have-rel-role-91") == "have_rel_role");
  CHECK(concept_predicate("boy") == "boy");
}

TEST_CASE("negated node scopes its incoming edge and subtree") {
  const AmrFormula f = lower("(w / want-01 :arg0 (b / boy) :arg1 (g / go-01 :arg0 b :polarity -))");
  CHECK(to_string(f) == "want(w) & ARG0(w,b) & boy(b) & ~(ARG1(w,g) & go(g) & ARG0(g,b))");
}

TEST_CASE("single node") { CHECK(to_string(lower("(b / boy)")) == "boy(b)"); }

TEST_CASE("orange vest premise yields the expected atom set") {
  const AmrFormula f = lower(
      "(l / lean-over :ARG0 (m / man :location (v / vest :mod (o / orange))) :ARG1 (t / truck))");
  // Event-first argument order: ARG0(l,m), mod(v,o).
  const std::set<AmrAtom> expected = {
      AmrAtom::monadic("man", "m"),         AmrAtom::monadic("vest", "v"),
      AmrAtom::monadic("orange", "o"),      AmrAtom::dyadic("location", "m", "v"),
      AmrAtom::dyadic("mod", "v", "o"),     AmrAtom::monadic("lean_over", "l"),
      AmrAtom::dyadic("ARG0", "l", "m"),    AmrAtom::monadic("truck", "t"),
      AmrAtom::dyadic("ARG1", "l", "t")};
  CHECK(atoms(f) == expected);
  CHECK(to_string(f) ==
        "lean_over(l) & ARG0(l,m) & man(m) & location(m,v) & vest(v) & mod(v,o) & orange(o) & "
        "ARG1(l,t) & truck(t)");
}

TEST_CASE("negated root wraps the whole graph") {
  const AmrFormula f = lower(
      "(p / possible-01 :polarity - :ARG1 (w / walk-01 :ARG0 (y / you)) "
      ":time (s / sleep-01 :ARG0 y :location (b / bed)))");
  CHECK(to_string(f) ==
        "~(possible(p) & ARG1(p,w) & walk(w) & ARG0(w,y) & you(y) & time(p,s) & sleep(s) & "
        "ARG0(s,y) & location(s,b) & bed(b))");
}

TEST_CASE("constants become dyadic arguments") {
  const AmrFormula f = lower("(c / child :quant 2 :name (n / name :op1 \"Ann\"))");
  CHECK(to_string(f) == "child(c) & quant(c,2) & name(c,n) & name(n) & op1(n,\"Ann\")");
}

TEST_CASE("inverse roles are normalized before lowering") {
  const AmrFormula f = translate(parse_penman("(c / car :ARG1-of (r / red-02))"));
  CHECK(atoms(f).count(AmrAtom::dyadic("ARG1", "r", "c")) == 1);
}

TEST_CASE("ambiguous negation scope is rejected") {
  CHECK_THROWS_AS(lower("(a / and :op1 (g / go-01 :polarity -) :op2 g)"), UnsupportedGraph);
}

TEST_CASE("fixture corpus: atom counts, determinism, re-entrancy") {
  const auto corpus =
      testing::read_penman_corpus(std::string(NSRTE_FIXTURES) + "/penman_corpus.txt");
  for (const auto& text : corpus) {
    CAPTURE(text);
    const AmrGraph g = normalize_graph(parse_penman(text));
    const AmrFormula f = translate(g);
    CHECK(to_string(translate(normalize_graph(parse_penman(text)))) == to_string(f));

    const bool has_polarity =
        std::any_of(g.nodes.begin(), g.nodes.end(), [](const auto& n) { return n.negated; });
    if (!has_polarity) CHECK(atoms(f).size() == g.nodes.size() + g.edges.size());

    std::vector<AmrAtom> leaves;
    f.for_each_leaf([&](const AmrAtom& a) { leaves.push_back(a); });
    for (NodeId id = 0; id < g.nodes.size(); ++id) {
      const std::string& var = g.nodes[id].variable;
      std::size_t monadic = 0, dyadic_in = 0;
      for (const auto& a : leaves) {
        if (!a.is_dyadic() && a.first == var) ++monadic;
        if (a.is_dyadic() && a.second == var) ++dyadic_in;
      }
      CHECK(monadic == 1);
      CHECK(dyadic_in == g.in_edges(id).size());
    }
  }
}
