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

#include "nsrte/logic.hpp"

#include <sstream>
#include <stdexcept>

namespace nsrte {

std::string AmrAtom::to_string() const {
  if (second) return predicate + "(" + first + "," + *second + ")";
  return predicate + "(" + first + ")";
}

AbstractFormula simplify_true(const AbstractFormula& f) {
  using Kind = AbstractFormula::Kind;
  switch (f.kind()) {
    case Kind::kTrue:
    case Kind::kLeaf:
      return f;
    case Kind::kNot:
      return AbstractFormula::negate(simplify_true(f.operand()));
    case Kind::kAnd: {
      std::vector<AbstractFormula> kept;
      for (const auto& c : f.children()) {
        AbstractFormula s = simplify_true(c);
        if (!s.is_true()) kept.push_back(std::move(s));
      }
      return AbstractFormula::conj(std::move(kept));
    }
  }
  return f;
}

AbstractFormula substitute_true(const AbstractFormula& f, const std::set<PropLetter>& letters) {
  return f.map_leaves<PropLetter>([&](const PropLetter& l) {
    return letters.count(l) != 0 ? AbstractFormula::truth() : AbstractFormula::leaf(l);
  });
}

bool evaluate(const AbstractFormula& f, const std::set<PropLetter>& true_letters) {
  using Kind = AbstractFormula::Kind;
  switch (f.kind()) {
    case Kind::kTrue:
      return true;
    case Kind::kLeaf:
      return true_letters.count(f.leaf_value()) != 0;
    case Kind::kNot:
      return !evaluate(f.operand(), true_letters);
    case Kind::kAnd:
      for (const auto& c : f.children()) {
        if (!evaluate(c, true_letters)) return false;
      }
      return true;
  }
  return false;
}

namespace {

template <typename Leaf>
void write_formula(std::ostream& os, const Formula<Leaf>& f, bool nested) {
  using Kind = typename Formula<Leaf>::Kind;
  switch (f.kind()) {
    case Kind::kTrue:
      os << "True";
      break;
    case Kind::kLeaf:
      os << f.leaf_value().to_string();
      break;
    case Kind::kNot:
      os << "~";
      write_formula(os, f.operand(), true);
      break;
    case Kind::kAnd: {
      if (nested) os << "(";
      bool first = true;
      for (const auto& c : f.children()) {
        if (!first) os << " & ";
        first = false;
        write_formula(os, c, true);
      }
      if (nested) os << ")";
      break;
    }
  }
}

// Negation-normal form with constants folded away except at the root.
struct Nnf {
  enum class Kind { kTrue, kFalse, kLit, kAnd, kOr } kind = Kind::kTrue;
  Literal lit;
  std::vector<Nnf> children;
};

Nnf make_junction(Nnf::Kind kind, std::vector<Nnf> parts) {
  // kind is kAnd or kOr. Absorbing constant short-circuits; identity drops.
  const auto absorbing = kind == Nnf::Kind::kAnd ? Nnf::Kind::kFalse : Nnf::Kind::kTrue;
  const auto identity = kind == Nnf::Kind::kAnd ? Nnf::Kind::kTrue : Nnf::Kind::kFalse;
  std::vector<Nnf> kept;
  for (auto& p : parts) {
    if (p.kind == absorbing) return Nnf{absorbing, {}, {}};
    if (p.kind == identity) continue;
    if (p.kind == kind) {
      for (auto& c : p.children) kept.push_back(std::move(c));
    } else {
      kept.push_back(std::move(p));
    }
  }
  if (kept.empty()) return Nnf{identity, {}, {}};
  if (kept.size() == 1) return std::move(kept.front());
  return Nnf{kind, {}, std::move(kept)};
}

Nnf to_nnf(const AbstractFormula& f, bool positive) {
  using Kind = AbstractFormula::Kind;
  switch (f.kind()) {
    case Kind::kTrue:
      return Nnf{positive ? Nnf::Kind::kTrue : Nnf::Kind::kFalse, {}, {}};
    case Kind::kLeaf:
      return Nnf{Nnf::Kind::kLit, Literal{f.leaf_value(), !positive}, {}};
    case Kind::kNot:
      return to_nnf(f.operand(), !positive);
    case Kind::kAnd: {
      std::vector<Nnf> parts;
      for (const auto& c : f.children()) parts.push_back(to_nnf(c, positive));
      return make_junction(positive ? Nnf::Kind::kAnd : Nnf::Kind::kOr, std::move(parts));
    }
  }
  return {};
}

// Sorts and deduplicates; returns false for a tautology.
bool normalize_clause(Clause& c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i].letter == c[i - 1].letter) return false;
  }
  return true;
}

struct CapExceeded {};

std::vector<Clause> distribute(const Nnf& n, std::size_t cap) {
  switch (n.kind) {
    case Nnf::Kind::kTrue:
      return {};
    case Nnf::Kind::kFalse:
      return {Clause{}};
    case Nnf::Kind::kLit:
      return {Clause{n.lit}};
    case Nnf::Kind::kAnd: {
      std::vector<Clause> out;
      for (const auto& c : n.children) {
        auto part = distribute(c, cap);
        if (out.size() + part.size() > cap) throw CapExceeded{};
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case Nnf::Kind::kOr: {
      std::vector<Clause> acc{Clause{}};
      for (const auto& c : n.children) {
        const auto part = distribute(c, cap);
        if (!part.empty() && acc.size() > cap / part.size()) throw CapExceeded{};
        std::vector<Clause> next;
        next.reserve(acc.size() * part.size());
        for (const auto& a : acc) {
          for (const auto& b : part) {
            Clause merged = a;
            merged.insert(merged.end(), b.begin(), b.end());
            if (normalize_clause(merged)) next.push_back(std::move(merged));
          }
        }
        acc = std::move(next);
      }
      return acc;
    }
  }
  return {};
}

class DefinitionEncoder {
 public:
  DefinitionEncoder(std::uint32_t first_free, std::vector<Clause>& out)
      : next_(first_free), out_(out) {}

  Literal encode(const Nnf& n) {
    if (n.kind == Nnf::Kind::kLit) return n.lit;
    std::vector<Literal> parts;
    for (const auto& c : n.children) parts.push_back(encode(c));
    const Literal d{PropLetter{next_++}, false};
    if (n.kind == Nnf::Kind::kAnd) {
      // d <-> (p1 & ... & pk)
      Clause back{d};
      for (const auto& p : parts) {
        out_.push_back({~d, p});
        back.push_back(~p);
      }
      out_.push_back(std::move(back));
    } else {
      // d <-> (p1 | ... | pk)
      Clause fwd{~d};
      for (const auto& p : parts) {
        out_.push_back({d, ~p});
        fwd.push_back(p);
      }
      out_.push_back(std::move(fwd));
    }
    return d;
  }

  std::uint32_t next_free() const { return next_; }

 private:
  std::uint32_t next_;
  std::vector<Clause>& out_;
};

}  // namespace

std::string to_string(const AmrFormula& f) {
  std::ostringstream os;
  write_formula(os, f, false);
  return os.str();
}

std::string to_string(const AbstractFormula& f) {
  std::ostringstream os;
  write_formula(os, f, false);
  return os.str();
}

Cnf to_cnf(const AbstractFormula& f, std::size_t clause_cap) {
  Cnf cnf;
  for (const auto& l : atoms(f)) cnf.num_letters = std::max(cnf.num_letters, l.index);

  const Nnf nnf = to_nnf(f, true);
  try {
    cnf.clauses = distribute(nnf, clause_cap);
  } catch (const CapExceeded&) {
    cnf.clauses.clear();
    DefinitionEncoder enc(cnf.num_letters + 1, cnf.clauses);
    const Literal root = enc.encode(nnf);
    cnf.clauses.push_back({root});
    cnf.num_letters = enc.next_free() - 1;
  }
  std::vector<Clause> kept;
  kept.reserve(cnf.clauses.size());
  for (auto& c : cnf.clauses) {
    if (normalize_clause(c)) kept.push_back(std::move(c));
  }
  cnf.clauses = std::move(kept);
  return cnf;
}

std::string to_dimacs(const Cnf& cnf) {
  std::ostringstream os;
  os << "p cnf " << cnf.num_letters << " " << cnf.clauses.size() << "\n";
  for (const auto& c : cnf.clauses) {
    for (const auto& l : c) os << l.as_int() << " ";
    os << "0\n";
  }
  return os.str();
}

Cnf parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Cnf cnf;
  bool header = false;
  std::size_t expected = 0;
  Clause current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      ls >> p >> fmt >> cnf.num_letters >> expected;
      if (!ls || fmt != "cnf") throw std::invalid_argument("bad DIMACS header: " + line);
      header = true;
      continue;
    }
    if (!header) throw std::invalid_argument("DIMACS clause before header");
    long v = 0;
    while (ls >> v) {
      if (v == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
      } else {
        const auto idx = static_cast<std::uint32_t>(v < 0 ? -v : v);
        if (idx > cnf.num_letters) throw std::invalid_argument("DIMACS literal out of range");
        current.push_back({PropLetter{idx}, v < 0});
      }
    }
  }
  if (!current.empty() || cnf.clauses.size() != expected) {
    throw std::invalid_argument("DIMACS clause count mismatch");
  }
  return cnf;
}

}  // namespace nsrte
