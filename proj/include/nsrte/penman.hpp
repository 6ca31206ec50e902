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

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nsrte {

using NodeId = std::size_t;

struct AmrNode {
  std::string variable;
  std::string concept_name;
  // Set by `:polarity -`.
  bool negated = false;

  bool operator==(const AmrNode&) const = default;
};

/// Attribute value such as `5`, `"Paris"` or `imperative`. String literals
/// keep their quotes.
struct Constant {
  std::string token;
  bool operator==(const Constant&) const = default;
};

using EdgeTarget = std::variant<NodeId, Constant>;

struct AmrEdge {
  NodeId source = 0;
  std::string role;  // always starts with ':'
  EdgeTarget target;

  bool operator==(const AmrEdge&) const = default;

  bool targets_node() const { return std::holds_alternative<NodeId>(target); }
  NodeId target_node() const { return std::get<NodeId>(target); }
};

/// Rooted AMR graph. NodeIds index `nodes`; edges are kept in PENMAN source
/// order, which downstream translation relies on for stable conjunct order.
struct AmrGraph {
  NodeId root = 0;
  std::vector<AmrNode> nodes;
  std::vector<AmrEdge> edges;

  const AmrNode& node(NodeId id) const { return nodes.at(id); }
  // Linear lookup; graphs are sentence-sized.
  std::vector<std::size_t> out_edges(NodeId id) const;
  std::vector<std::size_t> in_edges(NodeId id) const;
};

/// Parses a single PENMAN s-expression. Throws ParseError.
///
/// A bare symbol in target position that names a variable defined anywhere
/// in the graph is a re-entrant reference; any other symbol is a constant.
/// An undefined symbol shaped like a variable (one letter, optional digits)
/// is reported as a dangling reference.
AmrGraph parse_penman(std::string_view text);

/// Serializes to single-line PENMAN. Edges whose source is not reachable
/// from the root by forward edges are written as inverse (`-of`) roles.
std::string serialize_penman(const AmrGraph& graph);

/// Rewrites every inverse role (`:ARG0-of`) to its forward role with source
/// and target swapped. Throws CyclicGraph if the result has a directed cycle.
AmrGraph normalize_graph(const AmrGraph& graph);

/// Compares root variable, node set, and edge set by variable names,
/// ignoring NodeId numbering and edge order.
bool structurally_equal(const AmrGraph& a, const AmrGraph& b);

/// `:arg0` -> `:ARG0`, `:ARG1-OF` -> `:ARG1-of`, `:Location` -> `:location`.
std::string normalize_role(std::string_view role);

/// True for `-of` roles that denote an inverse edge. Lexical roles such as
/// `:consist-of` are excluded.
bool is_inverse_role(std::string_view role);

}  // namespace nsrte
