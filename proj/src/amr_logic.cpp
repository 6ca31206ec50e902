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

#include "nsrte/amr_logic.hpp"

#include <algorithm>
#include <regex>

#include "nsrte/error.hpp"

namespace nsrte {

namespace {

class Lowering {
 public:
  explicit Lowering(const AmrGraph& g)
      : g_(g), visited_(g.nodes.size(), false), edge_done_(g.edges.size(), false) {}

  AmrFormula run() {
    std::vector<AmrFormula> top;
    visit_root(g_.root, top);
    // Nodes cut off from the root by normalization: start from those
    // without incoming edges, then anything left.
    for (NodeId n = 0; n < g_.nodes.size(); ++n) {
      if (!visited_[n] && g_.in_edges(n).empty()) visit_root(n, top);
    }
    for (NodeId n = 0; n < g_.nodes.size(); ++n) {
      if (!visited_[n]) visit_root(n, top);
    }
    return AmrFormula::conj(std::move(top));
  }

 private:
  AmrAtom monadic(NodeId n) const {
    return AmrAtom::monadic(concept_predicate(g_.nodes[n].concept_name), g_.nodes[n].variable);
  }

  AmrAtom dyadic(const AmrEdge& e) const {
    std::string pred = e.role.substr(1);
    std::string tgt = e.targets_node() ? g_.nodes[e.target_node()].variable
                                       : std::get<Constant>(e.target).token;
    return AmrAtom::dyadic(std::move(pred), g_.nodes[e.source].variable, std::move(tgt));
  }

  void check_scope(NodeId n) const {
    if (g_.nodes[n].negated && g_.in_edges(n).size() > 1) {
      throw UnsupportedGraph("negated node '" + g_.nodes[n].variable +
                             "' has more than one incoming edge");
    }
  }

  void visit_root(NodeId n, std::vector<AmrFormula>& out) {
    check_scope(n);
    if (g_.nodes[n].negated) {
      std::vector<AmrFormula> scope;
      visit(n, scope);
      out.push_back(AmrFormula::negate(AmrFormula::conj(std::move(scope))));
    } else {
      visit(n, out);
    }
  }

  void visit(NodeId n, std::vector<AmrFormula>& out) {
    visited_[n] = true;
    out.push_back(AmrFormula::leaf(monadic(n)));
    for (std::size_t i = 0; i < g_.edges.size(); ++i) {
      const AmrEdge& e = g_.edges[i];
      if (e.source != n || edge_done_[i]) continue;
      edge_done_[i] = true;
      if (!e.targets_node() || visited_[e.target_node()]) {
        out.push_back(AmrFormula::leaf(dyadic(e)));
        continue;
      }
      const NodeId t = e.target_node();
      check_scope(t);
      if (g_.nodes[t].negated) {
        std::vector<AmrFormula> scope{AmrFormula::leaf(dyadic(e))};
        visit(t, scope);
        out.push_back(AmrFormula::negate(AmrFormula::conj(std::move(scope))));
      } else {
        out.push_back(AmrFormula::leaf(dyadic(e)));
        visit(t, out);
      }
    }
  }

  const AmrGraph& g_;
  std::vector<bool> visited_;
  std::vector<bool> edge_done_;
};

}  // namespace

std::string concept_predicate(std::string_view concept_name) {
  static const std::regex kSense("-[0-9]+$");
  std::string pred = std::regex_replace(std::string(concept_name), kSense, "");
  std::replace(pred.begin(), pred.end(), '-', '_');
  return pred;
}

AmrFormula translate(const AmrGraph& graph) {
  const bool has_inverse = std::any_of(graph.edges.begin(), graph.edges.end(), [](const auto& e) {
    return is_inverse_role(e.role) && e.targets_node();
  });
  if (has_inverse) {
    const AmrGraph normalized = normalize_graph(graph);
    return Lowering(normalized).run();
  }
  return Lowering(graph).run();
}

}  // namespace nsrte
