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

#include "nsrte/error.hpp"
#include "nsrte/penman.hpp"
#include "oracles.hpp"

using namespace nsrte;

namespace {

const char* kBoyWants = "(w / want-01 :arg0 (b / boy) :arg1 (g / go-01 :arg0 b))";
const char* kBoyDoesNotWant =
    "(w / want-01 :arg0 (b / boy) :arg1 (g / go-01 :arg0 b :polarity -))";

std::size_t error_position(const std::string& text) {
  try {
    parse_penman(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected ParseError for " << text);
  return 0;
}

}  // namespace

TEST_CASE("boy wants to go: three nodes, re-entrant arg0") {
  const AmrGraph g = parse_penman(kBoyWants);
  REQUIRE(g.nodes.size() == 3);
  CHECK(g.node(g.root).variable == "w");
  CHECK(g.node(g.root).concept_name == "want-01");
  REQUIRE(g.edges.size() == 3);
  const AmrEdge& last = g.edges[2];
  CHECK(g.node(last.source).variable == "g");
  CHECK(last.role == ":ARG0");
  REQUIRE(last.targets_node());
  CHECK(g.node(last.target_node()).variable == "b");
  for (const auto& n : g.nodes) CHECK_FALSE(n.negated);
}

TEST_CASE("single node graph") {
  const AmrGraph g = parse_penman("(b / boy)");
  CHECK(g.nodes.size() == 1);
  CHECK(g.edges.empty());
  CHECK_FALSE(g.node(g.root).negated);
  CHECK(serialize_penman(g) == "(b / boy)");
}

TEST_CASE("polarity attaches to the node and is not an edge") {
  const AmrGraph g = parse_penman(kBoyDoesNotWant);
  CHECK(g.edges.size() == 3);
  for (const auto& n : g.nodes) CHECK(n.negated == (n.variable == "g"));
  CHECK(serialize_penman(g).find(":polarity -") != std::string::npos);
}

TEST_CASE("malformed input raises ParseError") {
  CHECK_THROWS_AS(parse_penman("(w / want-01 :arg0 (b / boy"), ParseError);
  CHECK_THROWS_WITH_AS(parse_penman("(w / want-01 :arg0 (b / boy"),
                       doctest::Contains("unbalanced"), ParseError);
  CHECK_THROWS_WITH_AS(parse_penman("(b / boy))"), doctest::Contains("unbalanced"), ParseError);
  CHECK_THROWS_WITH_AS(parse_penman("(b / boy :ARG0 (b / girl))"),
                       doctest::Contains("duplicate"), ParseError);
  CHECK_THROWS_WITH_AS(parse_penman("(b :ARG0 (g / girl))"), doctest::Contains("missing concept"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_penman("(b / )"), doctest::Contains("missing concept"), ParseError);
  CHECK_THROWS_WITH_AS(parse_penman("(w / want-01 :ARG0 x)"), doctest::Contains("dangling"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_penman("(w / want-01 :polarity +)"), doctest::Contains("polarity"),
                       ParseError);
  CHECK_THROWS_AS(parse_penman(""), ParseError);
  CHECK_THROWS_AS(parse_penman("boy"), ParseError);
  CHECK_THROWS_AS(parse_penman("(c / city :name \"New York)"), ParseError);
  CHECK(error_position("(b / boy :ARG0 x)") == 15);
}

TEST_CASE("role case normalization") {
  CHECK(normalize_role(":arg0") == ":ARG0");
  CHECK(normalize_role(":Arg1-OF") == ":ARG1-of");
  CHECK(normalize_role(":Location") == ":location");
  CHECK(normalize_role(":op1") == ":op1");
  CHECK(is_inverse_role(":ARG0-of"));
  CHECK_FALSE(is_inverse_role(":consist-of"));
  CHECK_FALSE(is_inverse_role(":mod"));
}

TEST_CASE("constants and forward references") {
  const AmrGraph g =
      parse_penman("(v / visit-01 :ARG0 p :ARG1 (c / city :name \"Paris\") :quant 5 "
                   ":mode imperative :ARG2 (p / person))");
  REQUIRE(g.edges.size() == 6);
  CHECK(g.edges[0].targets_node());
  CHECK(g.node(g.edges[0].target_node()).variable == "p");
  CHECK(std::get<Constant>(g.edges[2].target).token == "\"Paris\"");
  CHECK(std::get<Constant>(g.edges[3].target).token == "5");
  CHECK(std::get<Constant>(g.edges[4].target).token == "imperative");
}

TEST_CASE("comments are ignored") {
  const AmrGraph g = parse_penman("# ::snt The boy.\n(b / boy)");
  CHECK(g.nodes.size() == 1);
}

TEST_CASE("normalize_graph flips inverse roles") {
  const AmrGraph g = parse_penman("(b / boy :ARG0-of (w / want-01))");
  const AmrGraph n = normalize_graph(g);
  REQUIRE(n.edges.size() == 1);
  CHECK(n.node(n.edges[0].source).variable == "w");
  CHECK(n.node(n.edges[0].target_node()).variable == "b");
  CHECK(n.edges[0].role == ":ARG0");

  const AmrGraph plain = parse_penman(kBoyWants);
  CHECK(structurally_equal(normalize_graph(plain), plain));
  CHECK(normalize_graph(plain).edges == plain.edges);
}

TEST_CASE("normalize_graph rejects a cycle exposed by inverse roles") {
  const AmrGraph g = parse_penman("(a / thing :ARG0-of (b / other :ARG0-of a))");
  CHECK_THROWS_AS(normalize_graph(g), CyclicGraph);
}

TEST_CASE("serialize writes inverse roles for nodes cut off from the root") {
  const AmrGraph n = normalize_graph(parse_penman("(b / boy :ARG0-of (w / want-01))"));
  const std::string text = serialize_penman(n);
  CHECK(text == "(b / boy :ARG0-of (w / want-01))");
  CHECK(structurally_equal(normalize_graph(parse_penman(text)), n));
}

TEST_CASE("fixture corpus: parse is total, round-trips, normalization idempotent") {
  const auto corpus = testing::read_penman_corpus(std::string(NSRTE_FIXTURES) + "/penman_corpus.txt");
  REQUIRE(corpus.size() >= 50);
  bool saw_polarity = false;
  bool saw_reentrancy = false;
  for (const auto& text : corpus) {
    CAPTURE(text);
    const AmrGraph g = parse_penman(text);
    for (const auto& n : g.nodes) saw_polarity = saw_polarity || n.negated;
    for (NodeId id = 0; id < g.nodes.size(); ++id) {
      saw_reentrancy = saw_reentrancy || g.in_edges(id).size() > 1;
    }
    const AmrGraph back = parse_penman(serialize_penman(g));
    CHECK(structurally_equal(back, g));
    const AmrGraph n = normalize_graph(g);
    CHECK(structurally_equal(normalize_graph(n), n));
    CHECK(structurally_equal(normalize_graph(parse_penman(serialize_penman(n))), n));
  }
  CHECK(saw_polarity);
  CHECK(saw_reentrancy);
}

TEST_CASE("structural equality ignores layout but not content") {
  const AmrGraph a = parse_penman("(w / want-01 :arg1 (g / go-01 :arg0 b) :arg0 (b / boy))");
  const AmrGraph b = parse_penman(kBoyWants);
  CHECK(structurally_equal(a, b));
  CHECK_FALSE(structurally_equal(b, parse_penman(kBoyDoesNotWant)));
  CHECK_FALSE(structurally_equal(b, parse_penman("(w / want-01 :arg0 (b / boy) :arg1 (g / go-01))")));
}
