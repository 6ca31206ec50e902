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

#include "nsrte/relaxation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "nsrte/error.hpp"

namespace nsrte {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string> stems(const std::string& word) {
  static constexpr std::array<std::string_view, 5> kSuffixes = {"ing", "ed", "es", "s", "d"};
  std::vector<std::string> out{word};
  for (auto suffix : kSuffixes) {
    if (word.size() >= suffix.size() + 3 &&
        std::string_view(word).substr(word.size() - suffix.size()) == suffix) {
      out.push_back(word.substr(0, word.size() - suffix.size()));
    }
  }
  return out;
}

bool names_word(const std::string& predicate, const std::string& word) {
  if (predicate == word) return true;
  if (predicate.find('_') != std::string::npos) return false;
  for (const auto& a : stems(predicate)) {
    for (const auto& b : stems(word)) {
      if (a == b) return true;
      const auto& shorter = a.size() < b.size() ? a : b;
      const auto& longer = a.size() < b.size() ? b : a;
      if (shorter.size() >= 3 && longer.size() - shorter.size() <= 1 &&
          longer.compare(0, shorter.size(), shorter) == 0) {
        return true;
      }
    }
  }
  return false;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

SentenceTokens SentenceTokens::from_text(std::string_view text) {
  SentenceTokens out;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) out.words.push_back(std::move(current));
    current.clear();
  };
  for (const char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc) || c == '_' || c == '-' || c == '\'' || uc >= 0x80) {
      current += c;
    } else {
      flush();
    }
  }
  flush();
  return out;
}

std::optional<std::string> defining_predicate(const AmrFormula& ctx, std::string_view constant) {
  std::optional<std::string> found;
  ctx.for_each_leaf([&](const AmrAtom& a) {
    if (!found && !a.is_dyadic() && a.first == constant) found = a.predicate;
  });
  return found;
}

bool syntactic_match(const AmrAtom& a, const AmrAtom& b, const AmrFormula& ctx_a,
                     const AmrFormula& ctx_b) {
  if (a.predicate != b.predicate || a.is_dyadic() != b.is_dyadic()) return false;
  if (!a.is_dyadic()) return true;
  auto same_argument = [&](const std::string& x, const std::string& y) {
    const auto px = defining_predicate(ctx_a, x);
    const auto py = defining_predicate(ctx_b, y);
    if (!px && !py) return x == y;
    return px && py && *px == *py;
  };
  return same_argument(a.first, b.first) && same_argument(*a.second, *b.second);
}

std::optional<std::size_t> locate_predicate(const SentenceTokens& sentence,
                                            std::string_view predicate) {
  const std::string pred = lower(predicate);
  for (std::size_t i = 0; i < sentence.words.size(); ++i) {
    if (names_word(pred, lower(sentence.words[i]))) return i;
  }
  return std::nullopt;
}

std::vector<std::string> substring(const SentenceTokens& sentence, const AmrAtom& relation,
                                   const AmrFormula& ctx) {
  const std::string p = defining_predicate(ctx, relation.first).value_or(relation.first);
  const std::string q = defining_predicate(ctx, *relation.second).value_or(*relation.second);
  const auto i = locate_predicate(sentence, p);
  const auto j = locate_predicate(sentence, q);
  if (!i || !j) return {p, q};
  const auto [lo, hi] = std::minmax(*i, *j);
  return {sentence.words.begin() + static_cast<std::ptrdiff_t>(lo),
          sentence.words.begin() + static_cast<std::ptrdiff_t>(hi) + 1};
}

std::string match_text(const AmrAtom& atom, const FormulaSource& source) {
  if (!atom.is_dyadic()) return normalize_text(atom.predicate);
  return normalize_text(join(substring(source.sentence, atom, source.formula)));
}

std::optional<NeuroMatch> neuro_match(const AmrAtom& alpha, const FormulaSource& claim,
                                      const std::vector<FormulaSource>& premise_side,
                                      const SimilarityProvider& provider, const MatchConfig& cfg,
                                      std::size_t* missing) {
  const std::string alpha_text = match_text(alpha, claim);
  std::optional<NeuroMatch> best;
  for (std::size_t fi = 0; fi < premise_side.size(); ++fi) {
    for (const auto& beta : atoms_in_order(premise_side[fi].formula)) {
      if (beta.is_dyadic() != alpha.is_dyadic()) continue;
      const std::string beta_text = match_text(beta, premise_side[fi]);
      const auto score = provider.try_similarity(alpha_text, beta_text);
      if (!score) {
        if (missing) ++*missing;
        continue;
      }
      if (*score > cfg.tau && (!best || *score > best->score)) {
        best = NeuroMatch{AtomRef{fi, beta}, *score, alpha_text, beta_text};
      }
    }
  }
  return best;
}

PropLetter Translation::letter_of(const AtomRef& ref) const {
  auto it = letters_.find(ref);
  if (it == letters_.end()) {
    throw UnmappedAtom("no letter for " + ref.atom.to_string() + " in formula " +
                       std::to_string(ref.formula));
  }
  return it->second;
}

std::vector<AtomRef> Translation::atoms_of(PropLetter letter) const {
  std::vector<AtomRef> out;
  for (const auto& [ref, l] : letters_) {
    if (l == letter) out.push_back(ref);
  }
  return out;
}

Translation build_translation(const std::vector<FormulaSource>& premise_side,
                              const FormulaSource& claim, const SimilarityProvider* provider,
                              const MatchConfig& cfg) {
  std::vector<const FormulaSource*> sources;
  for (const auto& s : premise_side) sources.push_back(&s);
  sources.push_back(&claim);
  const std::size_t claim_index = premise_side.size();

  std::vector<AtomRef> refs;
  for (std::size_t fi = 0; fi < sources.size(); ++fi) {
    for (auto& atom : atoms_in_order(sources[fi]->formula)) refs.push_back({fi, std::move(atom)});
  }

  Translation g;
  g.claim_index_ = claim_index;
  DisjointSets sets(refs.size());
  std::vector<bool> has_premise_partner(refs.size(), false);

  for (std::size_t i = 0; i < refs.size(); ++i) {
    for (std::size_t j = i + 1; j < refs.size(); ++j) {
      const auto& a = refs[i];
      const auto& b = refs[j];
      if (!syntactic_match(a.atom, b.atom, sources[a.formula]->formula,
                           sources[b.formula]->formula)) {
        continue;
      }
      sets.unite(i, j);
      // i precedes j, so only j can be the claim atom of a cross match.
      if (b.formula == claim_index && a.formula != claim_index) {
        has_premise_partner[j] = true;
        g.provenance_.push_back({b, a, 1.0, MatchKind::kSyntactic, {}, {}});
      }
    }
  }

  if (provider != nullptr) {
    for (std::size_t j = 0; j < refs.size(); ++j) {
      if (refs[j].formula != claim_index || has_premise_partner[j]) continue;
      auto m = neuro_match(refs[j].atom, claim, premise_side, *provider, cfg,
                           &g.missing_embeddings_);
      if (!m) continue;
      const auto target = std::find(refs.begin(), refs.end(), m->premise_atom);
      sets.unite(j, static_cast<std::size_t>(target - refs.begin()));
      g.provenance_.push_back({refs[j], m->premise_atom, m->score, MatchKind::kNeuro,
                               std::move(m->claim_text), std::move(m->premise_text)});
    }
  }

  std::map<std::size_t, PropLetter> class_letter;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const std::size_t root = sets.find(i);
    auto [it, inserted] = class_letter.try_emplace(root, PropLetter{g.num_letters_ + 1});
    if (inserted) ++g.num_letters_;
    g.letters_.emplace(refs[i], it->second);
  }
  return g;
}

AbstractFormula abstract(const Translation& g, std::size_t formula_index, const AmrFormula& f) {
  return f.map_leaves<PropLetter>([&](const AmrAtom& a) {
    return AbstractFormula::leaf(g.letter_of(AtomRef{formula_index, a}));
  });
}

SimplifiedClaim simplify_claim(const AmrFormula& claim, const Translation& g) {
  std::set<std::string> constants;
  for (const auto& m : g.provenance()) {
    if (m.kind != MatchKind::kNeuro || !m.claim_atom.atom.is_dyadic()) continue;
    constants.insert(m.claim_atom.atom.first);
    constants.insert(*m.claim_atom.atom.second);
  }
  SimplifiedClaim out;
  std::set<AmrAtom> trued;
  const AbstractFormula raw = claim.map_leaves<PropLetter>([&](const AmrAtom& a) {
    if (!a.is_dyadic() && constants.count(a.first) != 0) {
      if (trued.insert(a).second) out.trued_atoms.push_back(a);
      return AbstractFormula::truth();
    }
    return AbstractFormula::leaf(g.letter_of(AtomRef{g.claim_index(), a}));
  });
  out.formula = simplify_true(raw);
  return out;
}

std::set<std::string> requested_texts(const std::vector<FormulaSource>& sources) {
  std::set<std::string> out;
  for (const auto& s : sources) {
    for (const auto& a : atoms(s.formula)) out.insert(match_text(a, s));
  }
  return out;
}

}  // namespace nsrte
