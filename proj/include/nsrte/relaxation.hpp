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
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nsrte/embedding.hpp"
#include "nsrte/logic.hpp"

namespace nsrte {

/// Words of a raw sentence. Punctuation separates words and is dropped;
/// letters, digits, `_`, `-` and `'` are word characters.
struct SentenceTokens {
  std::vector<std::string> words;

  static SentenceTokens from_text(std::string_view text);
  std::size_t size() const { return words.size(); }
};

struct MatchConfig {
  // Neuro-matching threshold; a candidate must score strictly above it.
  double tau = 0.6;
  std::optional<std::size_t> max_len;
};

/// A formula together with the sentence it represents.
struct FormulaSource {
  AmrFormula formula;
  SentenceTokens sentence;
};

/// An atom qualified by the formula it occurs in. Constants are local to a
/// sentence, so `t` in one formula and `t` in another are unrelated.
struct AtomRef {
  std::size_t formula = 0;
  AmrAtom atom;

  auto operator<=>(const AtomRef&) const = default;
  bool operator==(const AtomRef&) const = default;
};

enum class MatchKind { kSyntactic, kNeuro };

struct MatchRecord {
  AtomRef claim_atom;
  AtomRef premise_atom;
  double score = 1.0;  // 1.0 for syntactic matches
  MatchKind kind = MatchKind::kSyntactic;
  std::string claim_text;
  std::string premise_text;
};

/// Predicate of the monadic atom that defines `constant` in `ctx`, if any.
std::optional<std::string> defining_predicate(const AmrFormula& ctx, std::string_view constant);

/// `p(a) ~ p(b)`; `r(a,c) ~ r(b,d)` when the defining predicates of a/b and
/// of c/d agree pairwise. Constants without a defining atom (attribute
/// values) must be identical tokens.
bool syntactic_match(const AmrAtom& a, const AmrAtom& b, const AmrFormula& ctx_a,
                     const AmrFormula& ctx_b);

/// Index of the first word that `predicate` names, allowing inflection:
/// `touch` finds "touching", `sleep` finds "sleeps". Multi-word predicates
/// (`lean_over`) only match a word spelled identically.
std::optional<std::size_t> locate_predicate(const SentenceTokens& sentence,
                                            std::string_view predicate);

/// Words spanned by a dyadic atom's two argument predicates, or the two
/// predicate names themselves when either cannot be located.
std::vector<std::string> substring(const SentenceTokens& sentence, const AmrAtom& relation,
                                   const AmrFormula& ctx);

/// Text compared by embeddings: the predicate for a monadic atom, the
/// space-joined substring for a dyadic one. Normalized.
std::string match_text(const AmrAtom& atom, const FormulaSource& source);

struct NeuroMatch {
  AtomRef premise_atom;
  double score = 0.0;
  std::string claim_text;
  std::string premise_text;
};

/// Best premise-side atom of the same arity whose similarity to `alpha`
/// strictly exceeds tau; ties go to the earliest atom. Candidates without a
/// score are skipped and counted in `missing` when given.
std::optional<NeuroMatch> neuro_match(const AmrAtom& alpha, const FormulaSource& claim,
                                      const std::vector<FormulaSource>& premise_side,
                                      const SimilarityProvider& provider, const MatchConfig& cfg,
                                      std::size_t* missing = nullptr);

/// Letters assigned to the atoms of a set of formulas. Formula indices
/// 0..k-1 are the premise side (premise, then explanation); index k is the
/// claim.
class Translation {
 public:
  PropLetter letter_of(const AtomRef& ref) const;  // throws UnmappedAtom
  bool contains(const AtomRef& ref) const { return letters_.count(ref) != 0; }
  std::uint32_t num_letters() const { return num_letters_; }
  std::size_t claim_index() const { return claim_index_; }
  const std::vector<MatchRecord>& provenance() const { return provenance_; }
  std::size_t missing_embeddings() const { return missing_embeddings_; }
  /// Atoms sharing `letter`, in assignment order.
  std::vector<AtomRef> atoms_of(PropLetter letter) const;
  const std::map<AtomRef, PropLetter>& table() const { return letters_; }

 private:
  friend Translation build_translation(const std::vector<FormulaSource>&, const FormulaSource&,
                                       const SimilarityProvider*, const MatchConfig&);

  std::map<AtomRef, PropLetter> letters_;
  std::vector<MatchRecord> provenance_;
  std::uint32_t num_letters_ = 0;
  std::size_t claim_index_ = 0;
  std::size_t missing_embeddings_ = 0;
};

/// Letters shared exactly along the combined matching relation: syntactic
/// matching anywhere, plus each claim atom's best neuro match on the
/// premise side when it has no syntactic partner there. Matches are merged
/// transitively. Letters are dense from x1 in order of first occurrence,
/// premise side first. A null provider disables neuro matching.
Translation build_translation(const std::vector<FormulaSource>& premise_side,
                              const FormulaSource& claim, const SimilarityProvider* provider,
                              const MatchConfig& cfg);

/// Replaces each atom of formula `formula_index` by its letter.
AbstractFormula abstract(const Translation& g, std::size_t formula_index, const AmrFormula& f);

struct SimplifiedClaim {
  AbstractFormula formula;
  std::vector<AmrAtom> trued_atoms;  // claim atoms replaced by True
};

/// For every dyadic claim atom with a neuro match, the claim's monadic
/// atoms on both of its arguments become True; the result is then
/// simplified.
SimplifiedClaim simplify_claim(const AmrFormula& claim, const Translation& g);

/// Every text the matcher can ask the provider about for these formulas.
std::set<std::string> requested_texts(const std::vector<FormulaSource>& sources);

}  // namespace nsrte
