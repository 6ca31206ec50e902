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

#include "nsrte/classifier.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "nsrte/amr_logic.hpp"
#include "nsrte/penman.hpp"
#include "nsrte/sat.hpp"

namespace nsrte {

void PipelineConfig::validate() const {
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must lie in [0, 1]");
  if (!(forget_fraction >= 0.0 && forget_fraction <= 1.0)) {
    throw std::invalid_argument("forget fraction must lie in [0, 1]");
  }
}

std::string_view label_name(Label label) {
  switch (label) {
    case Label::kEntailment:
      return "entailment";
    case Label::kContradiction:
      return "contradiction";
    case Label::kNeutral:
      return "neutral";
    case Label::kUnclassifiable:
      return "unclassifiable";
  }
  return "?";
}

std::optional<Label> parse_label(std::string_view name) {
  for (Label l : {Label::kEntailment, Label::kContradiction, Label::kNeutral,
                  Label::kUnclassifiable}) {
    if (label_name(l) == name) return l;
  }
  return std::nullopt;
}

Label label_from_checks(bool entail_check_consistent, bool contra_check_consistent) {
  if (!entail_check_consistent) {
    return contra_check_consistent ? Label::kEntailment : Label::kUnclassifiable;
  }
  return contra_check_consistent ? Label::kNeutral : Label::kContradiction;
}

ReasoningOutcome reason(const AbstractFormula& phi, const AbstractFormula& alpha,
                        const PipelineConfig& cfg) {
  ReasoningOutcome out;
  out.phi_star = phi;
  if (cfg.use_forgetting) {
    out.forgotten = limit_forget_set(forgettable_atoms(phi, alpha), cfg.forget_fraction);
    out.phi_star = forget(phi, out.forgotten);
  }
  out.entail_check = !entails(phi, alpha);
  out.contra_check = !contradicts(out.phi_star, alpha);
  out.label = label_from_checks(out.entail_check, out.contra_check);
  return out;
}

std::vector<MatchRecord> Trace::neuro_matches() const {
  std::vector<MatchRecord> out;
  for (const auto& m : matches) {
    if (m.kind == MatchKind::kNeuro) out.push_back(m);
  }
  return out;
}

std::vector<FormulaSource> lower_instances(const Instance& premise, const Instance& claim,
                                           const std::optional<Instance>& explanation) {
  auto lower = [](const Instance& inst) {
    return FormulaSource{translate(normalize_graph(parse_penman(inst.amr))),
                         SentenceTokens::from_text(inst.sentence)};
  };
  std::vector<FormulaSource> out{lower(premise)};
  if (explanation) out.push_back(lower(*explanation));
  out.push_back(lower(claim));
  return out;
}

ClassificationResult classify(const Instance& premise, const Instance& claim,
                              const std::optional<Instance>& explanation,
                              const PipelineConfig& cfg, const SimilarityProvider* provider) {
  cfg.validate();
  const bool with_explanation = cfg.use_explanation && explanation.has_value();
  auto sources = lower_instances(premise, claim,
                                 with_explanation ? explanation : std::optional<Instance>{});
  FormulaSource claim_source = std::move(sources.back());
  sources.pop_back();

  const Translation g = build_translation(sources, claim_source, provider, cfg.match_config());

  ClassificationResult result;
  Trace& trace = result.trace;
  trace.sources = {"premise"};
  if (with_explanation) trace.sources.push_back("explanation");
  trace.sources.push_back("claim");
  for (const auto& s : sources) trace.formulas.push_back(s.formula);
  trace.formulas.push_back(claim_source.formula);

  std::vector<AbstractFormula> premise_side;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    premise_side.push_back(abstract(g, i, sources[i].formula));
  }
  trace.phi = AbstractFormula::conj(std::move(premise_side));
  SimplifiedClaim simplified = simplify_claim(claim_source.formula, g);
  trace.alpha = simplified.formula;
  trace.trued_claim_atoms = std::move(simplified.trued_atoms);
  trace.matches = g.provenance();
  trace.missing_embeddings = g.missing_embeddings();

  const ReasoningOutcome outcome = reason(trace.phi, trace.alpha, cfg);
  trace.forgotten = outcome.forgotten;
  trace.phi_star = outcome.phi_star;
  result.label = outcome.label;
  result.entail_check = outcome.entail_check;
  result.contra_check = outcome.contra_check;
  result.premise_consistent = is_satisfiable(to_cnf(trace.phi)).satisfiable;

  for (std::uint32_t i = 1; i <= g.num_letters(); ++i) {
    LetterEntry entry{PropLetter{i}, {}};
    for (const auto& ref : g.atoms_of(PropLetter{i})) {
      entry.atoms.emplace_back(trace.sources[ref.formula], ref.atom);
    }
    trace.letters.push_back(std::move(entry));
  }
  return result;
}

std::string format_trace(const ClassificationResult& r) {
  const Trace& t = r.trace;
  std::ostringstream os;
  os << "label\t" << label_name(r.label) << "\n";
  os << "entail_check\t" << (r.entail_check ? "consistent" : "inconsistent") << "\n";
  os << "contra_check\t" << (r.contra_check ? "consistent" : "inconsistent") << "\n";
  for (std::size_t i = 0; i < t.sources.size(); ++i) {
    os << t.sources[i] << "\t" << to_string(t.formulas[i]) << "\n";
  }
  for (const auto& entry : t.letters) {
    os << "letter\t" << entry.letter.to_string();
    for (const auto& [src, atom] : entry.atoms) os << "\t" << src << ":" << atom.to_string();
    os << "\n";
  }
  for (const auto& m : t.neuro_matches()) {
    os << "neuro_match\t" << m.claim_atom.atom.to_string() << "\t"
       << t.sources[m.premise_atom.formula] << ":" << m.premise_atom.atom.to_string() << "\t"
       << m.score << "\t\"" << m.claim_text << "\" ~ \"" << m.premise_text << "\"\n";
  }
  for (const auto& a : t.trued_claim_atoms) os << "claim_true\t" << a.to_string() << "\n";
  os << "phi\t" << to_string(t.phi) << "\n";
  os << "alpha\t" << to_string(t.alpha) << "\n";
  os << "forgotten\t";
  bool first = true;
  for (const auto& l : t.forgotten) {
    os << (first ? "" : ",") << l.to_string();
    first = false;
  }
  os << "\n";
  os << "phi_star\t" << to_string(t.phi_star) << "\n";
  return os.str();
}

std::string trace_to_json(const ClassificationResult& r) {
  const Trace& t = r.trace;
  nlohmann::ordered_json j;
  j["label"] = label_name(r.label);
  j["entail_check_consistent"] = r.entail_check;
  j["contra_check_consistent"] = r.contra_check;
  j["premise_consistent"] = r.premise_consistent;
  for (std::size_t i = 0; i < t.sources.size(); ++i) {
    j["formulas"][t.sources[i]] = to_string(t.formulas[i]);
  }
  j["letters"] = nlohmann::ordered_json::array();
  for (const auto& entry : t.letters) {
    nlohmann::ordered_json e;
    e["letter"] = entry.letter.to_string();
    for (const auto& [src, atom] : entry.atoms) {
      e["atoms"].push_back({{"source", src}, {"atom", atom.to_string()}});
    }
    j["letters"].push_back(std::move(e));
  }
  j["matches"] = nlohmann::ordered_json::array();
  for (const auto& m : t.matches) {
    j["matches"].push_back({{"kind", m.kind == MatchKind::kNeuro ? "neuro" : "syntactic"},
                            {"claim_atom", m.claim_atom.atom.to_string()},
                            {"premise_source", t.sources[m.premise_atom.formula]},
                            {"premise_atom", m.premise_atom.atom.to_string()},
                            {"score", m.score}});
  }
  j["claim_true"] = nlohmann::ordered_json::array();
  for (const auto& a : t.trued_claim_atoms) j["claim_true"].push_back(a.to_string());
  j["phi"] = to_string(t.phi);
  j["alpha"] = to_string(t.alpha);
  j["forgotten"] = nlohmann::ordered_json::array();
  for (const auto& l : t.forgotten) j["forgotten"].push_back(l.to_string());
  j["phi_star"] = to_string(t.phi_star);
  j["missing_embeddings"] = t.missing_embeddings;
  return j.dump(2);
}

}  // namespace nsrte
