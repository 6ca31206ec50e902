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

#include <filesystem>
#include <fstream>

#include "nsrte/error.hpp"
#include "nsrte/harness.hpp"

using namespace nsrte;

namespace {

const std::string kFixtures = std::string(NSRTE_FIXTURES) + "/fixtures.jsonl";

SimilarityProvider stubs() {
  return SimilarityProvider::load_stub_file(std::string(NSRTE_FIXTURES) + "/stub_scores.tsv");
}

ItemOutcome scored(Label gold, Label pred) {
  ItemOutcome o;
  o.gold = gold;
  o.predicted = pred;
  o.status = ItemStatus::kScored;
  return o;
}

std::vector<ItemOutcome> confusion_outcomes() {
  constexpr Label E = Label::kEntailment, C = Label::kContradiction, N = Label::kNeutral;
  const std::size_t counts[3][3] = {{3, 1, 1}, {0, 4, 1}, {1, 1, 3}};
  const Label labels[3] = {E, C, N};
  std::vector<ItemOutcome> out;
  for (int g = 0; g < 3; ++g)
    for (int p = 0; p < 3; ++p)
      for (std::size_t k = 0; k < counts[g][p]; ++k) out.push_back(scored(labels[g], labels[p]));
  return out;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("nsrte_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string report_text(const MetricsReport& r, const PipelineConfig& cfg) {
  return format_report(r, {cfg, 0});
}

}  // namespace

TEST_CASE("metrics from a hand-computed confusion matrix") {
  const MetricsReport r = compute_metrics(confusion_outcomes());
  const auto& e = r.classes[0];
  CHECK(e.support == 5);
  CHECK(e.recall == 0.6);
  CHECK(e.precision == 0.75);
  CHECK(e.f1 == doctest::Approx(2 * 0.75 * 0.6 / 1.35));
  CHECK(r.classes[1].recall == 0.8);
  CHECK(r.classes[1].precision == 4.0 / 6.0);
  CHECK(r.classes[2].recall == 0.6);
  CHECK(r.classes[2].precision == 0.6);
  CHECK(r.correct == 10);
  CHECK(r.scored == 15);
  CHECK(r.accuracy == 10.0 / 15.0);
}

TEST_CASE("unclassifiable, failed and filtered items leave every denominator") {
  auto outcomes = confusion_outcomes();
  ItemOutcome u;
  u.gold = Label::kEntailment;
  u.predicted = Label::kUnclassifiable;
  u.status = ItemStatus::kUnclassifiable;
  // Turn one gold-entailment item into an unclassifiable one.
  outcomes[0] = u;
  ItemOutcome f;
  f.gold = Label::kNeutral;
  f.status = ItemStatus::kFailed;
  outcomes.push_back(f);
  ItemOutcome skip;
  skip.gold = Label::kContradiction;
  skip.status = ItemStatus::kFiltered;
  outcomes.push_back(skip);

  const MetricsReport r = compute_metrics(outcomes);
  CHECK(r.classes[0].support == 4);
  CHECK(r.classes[0].recall == 0.5);
  CHECK(r.classes[2].support == 5);
  CHECK(r.unclassifiable == 1);
  CHECK(r.unclassifiable_by_class[0] == 1);
  CHECK(r.failures == 1);
  CHECK(r.filtered == 1);
  CHECK(r.items == 17);
  CHECK(r.scored == 14);
  CHECK(r.accuracy == 9.0 / 14.0);
}

TEST_CASE("all correct and empty cases") {
  std::vector<ItemOutcome> ten;
  for (int i = 0; i < 10; ++i) {
    const Label l = kClasses[i % 3];
    ten.push_back(scored(l, l));
  }
  const MetricsReport r = compute_metrics(ten);
  CHECK(r.accuracy == 1.0);
  for (const auto& m : r.classes) CHECK(m.recall == 1.0);

  const MetricsReport none = compute_metrics({});
  CHECK(none.accuracy_undefined);
  CHECK(none.accuracy == 0.0);
  CHECK(none.classes[0].recall_undefined);
  CHECK_THROWS_AS(evaluate({}, {}, nullptr), DatasetError);
}

TEST_CASE("fixture evaluation") {
  const auto data = load_dataset(kFixtures);
  REQUIRE(data.size() == 15);
  const auto provider = stubs();
  const Evaluation ev = evaluate(data, {}, &provider);
  CHECK(ev.report.failures == 1);
  CHECK(ev.outcomes.back().status == ItemStatus::kFailed);
  CHECK(ev.report.unclassifiable == 1);
  CHECK(ev.report.scored == 13);
  for (std::size_t i = 0; i < data.size(); ++i) CHECK(ev.outcomes[i].id == data[i].id);

  const Evaluation parallel = evaluate(data, {}, &provider, {4, false});
  CHECK(report_text(parallel.report, {}) == report_text(ev.report, {}));
  CHECK(report_text(evaluate(data, {}, &provider).report, {}) == report_text(ev.report, {}));

  const Evaluation checked = evaluate(data, {}, &provider, {1, true});
  REQUIRE(checked.report.inconsistent_premises.has_value());
  CHECK(*checked.report.inconsistent_premises == 0);
  CHECK(report_text(checked.report, {}).find("inconsistent_premises\t0") != std::string::npos);
}

TEST_CASE("tau sweep identities") {
  const auto data = load_dataset(kFixtures);
  const auto provider = stubs();
  PipelineConfig cfg;
  const auto sweep = tau_sweep(data, {0.5, 0.55, 1.0}, cfg, &provider);
  REQUIRE(sweep.size() == 3);
  CHECK(report_text(sweep[0], cfg) == report_text(sweep[1], cfg));

  const auto strict = evaluate(data, cfg, nullptr).report;
  cfg.tau = 1.0;
  CHECK(report_text(sweep[2], cfg) == report_text(strict, cfg));
  CHECK_THROWS_AS(tau_sweep({}, {0.5}, cfg, &provider), DatasetError);
}

TEST_CASE("forgetting ablation only affects the contradiction check") {
  const auto data = load_dataset(kFixtures);
  const auto provider = stubs();
  PipelineConfig off;
  off.use_forgetting = false;
  const auto with = evaluate(data, {}, &provider);
  const auto without = evaluate(data, off, &provider);
  std::size_t changed = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& a = with.outcomes[i];
    const auto& b = without.outcomes[i];
    if (a.predicted == b.predicted) continue;
    ++changed;
    const bool to_neutral = a.predicted == Label::kContradiction && b.predicted == Label::kNeutral;
    const bool to_entail =
        a.predicted == Label::kUnclassifiable && b.predicted == Label::kEntailment;
    CHECK((to_neutral || to_entail));
  }
  CHECK(changed == 3);
  CHECK(without.report.classes[1].true_positive < with.report.classes[1].true_positive);
}

TEST_CASE("max_len filters long items") {
  const auto data = load_dataset(kFixtures);
  PipelineConfig cfg;
  cfg.max_len = 5;
  const auto ev = evaluate(data, cfg, nullptr);
  CHECK(ev.report.filtered > 0);
  CHECK(ev.outcomes[0].status == ItemStatus::kFiltered);
  CHECK(report_text(ev.report, cfg).find("max_len=5") != std::string::npos);
}

TEST_CASE("per-class sampling") {
  const auto data = load_dataset(kFixtures);
  const auto a = sample_per_class(data, 2, 42);
  const auto b = sample_per_class(data, 2, 42);
  REQUIRE(a.size() == 6);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].id == b[i].id);
  std::size_t per[3] = {0, 0, 0};
  for (const auto& d : a) {
    for (std::size_t c = 0; c < 3; ++c) per[c] += d.gold == kClasses[c];
  }
  CHECK(per[0] == 2);
  CHECK(per[1] == 2);
  CHECK(per[2] == 2);
  CHECK(sample_per_class(data, 100, 1).size() == data.size());
  bool differs = false;
  for (std::uint64_t seed = 0; seed < 20 && !differs; ++seed) {
    const auto c = sample_per_class(data, 2, seed);
    for (std::size_t i = 0; i < c.size(); ++i) differs |= c[i].id != a[i].id;
  }
  CHECK(differs);
}

TEST_CASE("dataset format") {
  const auto data = load_dataset(kFixtures);
  for (const auto& d : data) {
    const auto back = parse_dataset_line(dataset_line(d));
    CHECK(back.id == d.id);
    CHECK(back.premise_amr == d.premise_amr);
    CHECK(back.explanation_amr == d.explanation_amr);
    CHECK(back.gold == d.gold);
  }
  CHECK_THROWS_AS(parse_dataset_line("{not json"), DatasetError);
  CHECK_THROWS_AS(parse_dataset_line("[1]"), DatasetError);
  CHECK_THROWS_AS(parse_dataset_line(R"j({"id":"a","premise":"p","claim":"c"})j"), DatasetError);
  CHECK_THROWS_AS(parse_dataset_line(
                      R"j({"id":"a","premise":"p","claim":"c","premise_amr":"(a / b)",)j"
                      R"j("claim_amr":"(a / b)","label":"unclassifiable"})j"),
                  DatasetError);
  const auto bad = write_temp("bad.jsonl", dataset_line(data[0]) + "\n\n{oops}\n");
  try {
    load_dataset(bad);
    FAIL("expected DatasetError");
  } catch (const DatasetError& e) {
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
  CHECK_THROWS_AS(load_dataset("/nonexistent.jsonl"), DatasetError);
}

TEST_CASE("substring enumeration") {
  const auto data = load_dataset(kFixtures);
  const auto texts = enumerate_substrings(data, true);
  for (const char* t : {"lean_over man", "lean_over truck", "man is touching", "touching a truck",
                        "automobile", "car"}) {
    CHECK(texts.count(t) == 1);
  }
  CHECK(enumerate_substrings(data, false).size() <= texts.size());
}
