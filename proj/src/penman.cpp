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

#include "nsrte/penman.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <tuple>
#include <unordered_map>

#include "nsrte/error.hpp"

namespace nsrte {

namespace {

enum class TokenKind { kOpen, kClose, kSlash, kRole, kString, kSymbol, kEnd };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;
};

bool is_delimiter(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
         c == '/' || c == '"';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {  // comment line, e.g. `# ::snt ...`
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (c == '(') {
      tokens.push_back({TokenKind::kOpen, "(", i++});
    } else if (c == ')') {
      tokens.push_back({TokenKind::kClose, ")", i++});
    } else if (c == '/') {
      tokens.push_back({TokenKind::kSlash, "/", i++});
    } else if (c == '"') {
      const std::size_t start = i++;
      while (i < n && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < n) ++i;
        ++i;
      }
      if (i >= n) throw ParseError(start, "unterminated string literal");
      ++i;
      tokens.push_back(
          {TokenKind::kString, std::string(text.substr(start, i - start)), start});
    } else {
      const std::size_t start = i;
      while (i < n && !is_delimiter(text[i])) ++i;
      std::string tok(text.substr(start, i - start));
      const TokenKind kind = tok.size() > 1 && tok[0] == ':' ? TokenKind::kRole
                                                              : TokenKind::kSymbol;
      if (tok == ":") throw ParseError(start, "empty role");
      tokens.push_back({kind, std::move(tok), start});
    }
  }
  tokens.push_back({TokenKind::kEnd, "", n});
  return tokens;
}

bool looks_like_variable(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  AmrGraph parse() {
    collect_definitions();
    if (peek().kind != TokenKind::kOpen) {
      throw ParseError(peek().pos, "expected '(' at start of graph");
    }
    graph_.nodes.resize(definitions_.size());
    graph_.root = parse_node();
    if (peek().kind != TokenKind::kEnd) {
      throw ParseError(peek().pos, peek().kind == TokenKind::kClose
                                       ? "unbalanced parentheses"
                                       : "trailing input after graph");
    }
    return std::move(graph_);
  }

 private:
  // First pass: every `( var /` introduces a variable. Ids follow definition
  // order so that forward references resolve.
  void collect_definitions() {
    for (std::size_t i = 0; i + 2 < tokens_.size(); ++i) {
      if (tokens_[i].kind == TokenKind::kOpen &&
          tokens_[i + 1].kind == TokenKind::kSymbol) {
        const Token& var = tokens_[i + 1];
        if (definitions_.count(var.text) != 0) {
          throw ParseError(var.pos, "duplicate variable '" + var.text + "'");
        }
        const NodeId id = definitions_.size();
        definitions_.emplace(var.text, id);
      }
    }
  }

  const Token& peek() const { return tokens_[cursor_]; }
  const Token& next() { return tokens_[cursor_++]; }

  [[noreturn]] void fail_at(const Token& tok, const std::string& reason) const {
    if (tok.kind == TokenKind::kEnd) throw ParseError(tok.pos, "unbalanced parentheses");
    throw ParseError(tok.pos, reason);
  }

  NodeId parse_node() {
    next();  // '('
    const Token& var = next();
    if (var.kind != TokenKind::kSymbol) fail_at(var, "expected variable");
    const NodeId id = definitions_.at(var.text);
    if (peek().kind != TokenKind::kSlash) fail_at(peek(), "missing concept for '" + var.text + "'");
    next();
    const Token& concept_tok = next();
    if (concept_tok.kind != TokenKind::kSymbol && concept_tok.kind != TokenKind::kString) {
      fail_at(concept_tok, "missing concept for '" + var.text + "'");
    }
    AmrNode& node = graph_.nodes[id];
    node.variable = var.text;
    node.concept_name = concept_tok.text;

    while (peek().kind != TokenKind::kClose) {
      const Token& role_tok = next();
      if (role_tok.kind != TokenKind::kRole) fail_at(role_tok, "expected role");
      const std::string role = normalize_role(role_tok.text);
      const Token& target = peek();
      if (role == ":polarity") {
        if (target.kind != TokenKind::kSymbol || target.text != "-") {
          fail_at(target, "only ':polarity -' is supported");
        }
        next();
        graph_.nodes[id].negated = true;
        continue;
      }
      switch (target.kind) {
        case TokenKind::kOpen: {
          const std::size_t edge_index = graph_.edges.size();
          graph_.edges.push_back({id, role, NodeId{0}});
          const NodeId child = parse_node();
          graph_.edges[edge_index].target = child;
          break;
        }
        case TokenKind::kString:
          next();
          graph_.edges.push_back({id, role, Constant{target.text}});
          break;
        case TokenKind::kSymbol: {
          next();
          auto it = definitions_.find(target.text);
          if (it != definitions_.end()) {
            graph_.edges.push_back({id, role, it->second});
          } else if (looks_like_variable(target.text)) {
            throw ParseError(target.pos, "dangling reference '" + target.text + "'");
          } else {
            graph_.edges.push_back({id, role, Constant{target.text}});
          }
          break;
        }
        default:
          fail_at(target, "expected role target");
      }
    }
    next();  // ')'
    return id;
  }

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
  std::unordered_map<std::string, NodeId> definitions_;
  AmrGraph graph_;
};

std::string inverse_of(const std::string& role) {
  if (is_inverse_role(role)) return role.substr(0, role.size() - 3);
  return role + "-of";
}

class Serializer {
 public:
  explicit Serializer(const AmrGraph& g)
      : g_(g), placed_(g.nodes.size(), false), emitted_(g.edges.size(), false),
        forward_reachable_(g.nodes.size(), false) {
    mark_forward(g.root);
  }

  std::string run() {
    write_node(g_.root);
    return std::move(out_);
  }

 private:
  void mark_forward(NodeId root) {
    std::vector<NodeId> stack{root};
    while (!stack.empty()) {
      const NodeId n = stack.back();
      stack.pop_back();
      if (forward_reachable_[n]) continue;
      forward_reachable_[n] = true;
      for (const auto& e : g_.edges) {
        if (e.source == n && e.targets_node()) stack.push_back(e.target_node());
      }
    }
  }

  void write_target(NodeId n) {
    if (placed_[n]) {
      out_ += g_.nodes[n].variable;
    } else {
      write_node(n);
    }
  }

  void write_node(NodeId n) {
    placed_[n] = true;
    const AmrNode& node = g_.nodes[n];
    out_ += "(" + node.variable + " / " + node.concept_name;
    for (std::size_t i = 0; i < g_.edges.size(); ++i) {
      const AmrEdge& e = g_.edges[i];
      if (emitted_[i] || e.source != n) continue;
      emitted_[i] = true;
      out_ += " " + e.role + " ";
      if (e.targets_node()) {
        write_target(e.target_node());
      } else {
        out_ += std::get<Constant>(e.target).token;
      }
    }
    for (std::size_t i = 0; i < g_.edges.size(); ++i) {
      const AmrEdge& e = g_.edges[i];
      if (emitted_[i] || !e.targets_node() || e.target_node() != n) continue;
      if (forward_reachable_[e.source]) continue;
      emitted_[i] = true;
      out_ += " " + inverse_of(e.role) + " ";
      write_target(e.source);
    }
    if (node.negated) out_ += " :polarity -";
    out_ += ")";
  }

  const AmrGraph& g_;
  std::vector<bool> placed_;
  std::vector<bool> emitted_;
  std::vector<bool> forward_reachable_;
  std::string out_;
};

}  // namespace

std::vector<std::size_t> AmrGraph::out_edges(NodeId id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].source == id) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> AmrGraph::in_edges(NodeId id) const {
  std::vector<std::size_t> in;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].targets_node() && edges[i].target_node() == id) in.push_back(i);
  }
  return in;
}

std::string normalize_role(std::string_view role) {
  std::string r(role);
  std::transform(r.begin(), r.end(), r.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (r.rfind(":arg", 0) == 0 && r.size() > 4 &&
      std::isdigit(static_cast<unsigned char>(r[4]))) {
    r[1] = 'A';
    r[2] = 'R';
    r[3] = 'G';
  }
  return r;
}

bool is_inverse_role(std::string_view role) {
  static const std::set<std::string_view> kLexical = {":consist-of", ":prep-out-of",
                                                      ":prep-on-behalf-of"};
  return role.size() > 4 && role.substr(role.size() - 3) == "-of" &&
         kLexical.count(role) == 0;
}

AmrGraph parse_penman(std::string_view text) { return Parser(text).parse(); }

std::string serialize_penman(const AmrGraph& graph) { return Serializer(graph).run(); }

AmrGraph normalize_graph(const AmrGraph& graph) {
  AmrGraph out = graph;
  for (AmrEdge& e : out.edges) {
    if (!is_inverse_role(e.role) || !e.targets_node()) continue;
    const NodeId tgt = e.target_node();
    e.target = e.source;
    e.source = tgt;
    e.role.resize(e.role.size() - 3);
  }

  // Three-colour DFS over node-to-node edges.
  enum Colour : char { kWhite, kGrey, kBlack };
  std::vector<Colour> colour(out.nodes.size(), kWhite);
  std::vector<std::vector<NodeId>> succ(out.nodes.size());
  for (const AmrEdge& e : out.edges) {
    if (e.targets_node()) succ[e.source].push_back(e.target_node());
  }
  for (NodeId start = 0; start < out.nodes.size(); ++start) {
    if (colour[start] != kWhite) continue;
    std::vector<std::pair<NodeId, std::size_t>> stack{{start, 0}};
    colour[start] = kGrey;
    while (!stack.empty()) {
      auto& [n, next_child] = stack.back();
      if (next_child == succ[n].size()) {
        colour[n] = kBlack;
        stack.pop_back();
        continue;
      }
      const NodeId child = succ[n][next_child++];
      if (colour[child] == kGrey) {
        throw CyclicGraph("cycle through node '" + out.nodes[child].variable + "'");
      }
      if (colour[child] == kWhite) {
        colour[child] = kGrey;
        stack.emplace_back(child, 0);
      }
    }
  }
  return out;
}

bool structurally_equal(const AmrGraph& a, const AmrGraph& b) {
  auto node_set = [](const AmrGraph& g) {
    std::vector<std::tuple<std::string, std::string, bool>> v;
    for (const auto& n : g.nodes) v.emplace_back(n.variable, n.concept_name, n.negated);
    std::sort(v.begin(), v.end());
    return v;
  };
  auto edge_set = [](const AmrGraph& g) {
    std::vector<std::tuple<std::string, std::string, std::string>> v;
    for (const auto& e : g.edges) {
      std::string tgt = e.targets_node() ? "v:" + g.nodes[e.target_node()].variable
                                         : "c:" + std::get<Constant>(e.target).token;
      v.emplace_back(g.nodes[e.source].variable, e.role, std::move(tgt));
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  if (a.nodes.empty() || b.nodes.empty()) return a.nodes.empty() && b.nodes.empty();
  return a.nodes[a.root].variable == b.nodes[b.root].variable &&
         node_set(a) == node_set(b) && edge_set(a) == edge_set(b);
}

}  // namespace nsrte
