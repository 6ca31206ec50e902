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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsrte/embedding.hpp"
#include "nsrte/forgetting.hpp"
#include "nsrte/logic.hpp"
#include "nsrte/relaxation.hpp"

namespace nsrte {

/// A sentence and its PENMAN graph.
struct Instance {
  std::string sentence;
  std::string amr;
};

struct PipelineConfig {
  double tau = 0.6;
  bool use_forgetting = true;
  bool use_explanation = true;
  std::optional<std::size_t> max_len;
  // Share of forgettable letters actually forgotten (lowest indices first).
  double forget_fraction = 1.0;

  MatchConfig match_config() const { return {tau, max_len}; }
  /// Throws std::invalid_argument when tau or forget_fraction leave [0, 1].
  void validate() const;
};

enum class Label { kEntailment, kContradiction, kNeutral, kUnclassifiable };

std::string_view label_name(Label label);
std::optional<Label> parse_label(std::string_view name);

/// Maps the two consistency checks to a label:
///   phi & ~alpha inconsistent, phi* & alpha consistent -> entailment
///   phi & ~alpha consistent,   phi* & alpha inconsistent -> contradiction
///   both consistent -> neutral; both inconsistent -> unclassifiable.
Label label_from_checks(bool entail_check_consistent, bool contra_check_consistent);

struct ReasoningOutcome {
  bool entail_check = true;  // phi & ~alpha consistent
  bool contra_check = true;  // phi* & alpha consistent
  ForgetSet forgotten;
  AbstractFormula phi_star;
  Label label = Label::kNeutral;
};

/// The symbolic half of the pipeline on already-abstracted formulas.
ReasoningOutcome reason(const AbstractFormula& phi, const AbstractFormula& alpha,
                        const PipelineConfig& cfg);

struct LetterEntry {
  PropLetter letter;
  std::vector<std::pair<std::string, AmrAtom>> atoms;  // (source name, atom)
};

struct Trace {
  std::vector<std::string> sources;  // "premise", "explanation", "claim"
  std::vector<AmrFormula> formulas;  // indexed like `sources`
  std::vector<MatchRecord> matches;
  std::vector<AmrAtom> trued_claim_atoms;
  ForgetSet forgotten;
  AbstractFormula phi;
  AbstractFormula alpha;
  AbstractFormula phi_star;
  std::vector<LetterEntry> letters;
  std::size_t missing_embeddings = 0;

  std::vector<MatchRecord> neuro_matches() const;
};

struct ClassificationResult {
  Label label = Label::kNeutral;
  bool entail_check = true;
  bool contra_check = true;
  bool premise_consistent = true;
  Trace trace;
};

/// Full sentence-pair pipeline: parse and lower the graphs, build one
/// translation over premise (+ explanation) and claim, abstract, simplify
/// the claim, forget, then run both checks. Parse and lowering errors
/// propagate. A null provider disables neuro matching.
ClassificationResult classify(const Instance& premise, const Instance& claim,
                              const std::optional<Instance>& explanation,
                              const PipelineConfig& cfg, const SimilarityProvider* provider);

std::string format_trace(const ClassificationResult& result);
std::string trace_to_json(const ClassificationResult& result);

/// The sources `classify` would build, for substring enumeration.
std::vector<FormulaSource> lower_instances(const Instance& premise, const Instance& claim,
                                           const std::optional<Instance>& explanation);

}  // namespace nsrte
