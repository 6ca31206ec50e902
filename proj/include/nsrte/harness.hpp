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

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nsrte/classifier.hpp"
#include "nsrte/embedding.hpp"

namespace nsrte {

/// One line of a dataset file (JSON object per line).
struct DatasetItem {
  std::string id;
  std::string premise_text;
  std::string claim_text;
  std::optional<std::string> explanation_text;
  std::string premise_amr;
  std::string claim_amr;
  std::optional<std::string> explanation_amr;
  Label gold = Label::kNeutral;  // never kUnclassifiable
};

/// Throws DatasetError naming the offending line.
std::vector<DatasetItem> load_dataset(const std::string& path);
DatasetItem parse_dataset_line(const std::string& line);
std::string dataset_line(const DatasetItem& item);

enum class ItemStatus { kScored, kUnclassifiable, kFailed, kFiltered };

struct ItemOutcome {
  std::string id;
  Label gold = Label::kNeutral;
  ItemStatus status = ItemStatus::kScored;
  std::optional<Label> predicted;  // set for kScored and kUnclassifiable
  std::string error;
  bool premise_consistent = true;
  std::size_t missing_embeddings = 0;
};

// Gold classes in report order.
inline constexpr std::array<Label, 3> kClasses = {Label::kEntailment, Label::kContradiction,
                                                  Label::kNeutral};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // scored items of this gold class
  std::size_t true_positive = 0;
  std::size_t predicted = 0;
  bool precision_undefined = false;
  bool recall_undefined = false;
  bool f1_undefined = false;
};

struct MetricsReport {
  std::array<ClassMetrics, 3> classes{};
  // confusion[gold][predicted] over scored items.
  std::array<std::array<std::size_t, 3>, 3> confusion{};
  double accuracy = 0.0;
  bool accuracy_undefined = false;
  std::size_t items = 0;
  std::size_t scored = 0;
  std::size_t correct = 0;
  std::size_t unclassifiable = 0;
  std::array<std::size_t, 3> unclassifiable_by_class{};
  std::size_t failures = 0;
  std::size_t filtered = 0;
  std::optional<std::size_t> inconsistent_premises;
};

/// Unclassifiable, failed and filtered items are left out of supports and
/// of the accuracy denominator.
MetricsReport compute_metrics(const std::vector<ItemOutcome>& outcomes);

struct EvalOptions {
  std::size_t jobs = 1;
  bool check_premise_consistency = false;
};

struct Evaluation {
  std::vector<ItemOutcome> outcomes;  // dataset order
  MetricsReport report;
};

/// Classifies every item; per-item errors are tallied, never thrown.
/// Throws DatasetError on an empty dataset.
Evaluation evaluate(const std::vector<DatasetItem>& dataset, const PipelineConfig& cfg,
                    const SimilarityProvider* provider, const EvalOptions& opts = {});

std::vector<MetricsReport> tau_sweep(const std::vector<DatasetItem>& dataset,
                                     const std::vector<double>& taus, const PipelineConfig& cfg,
                                     const SimilarityProvider* provider,
                                     const EvalOptions& opts = {});

/// Up to `per_class` items of each gold class, drawn with a seeded
/// Fisher-Yates shuffle; output keeps dataset order.
std::vector<DatasetItem> sample_per_class(const std::vector<DatasetItem>& dataset,
                                          std::size_t per_class, std::uint64_t seed);

struct ReportHeader {
  PipelineConfig cfg;
  std::uint64_t seed = 0;
};

/// Tab-separated report: a config line, one row per class (precision,
/// recall, F1, support, flags) and the overall counters.
std::string format_report(const MetricsReport& report, const ReportHeader& header);

/// Normalized texts the relaxation step may look up for this dataset.
std::set<std::string> enumerate_substrings(const std::vector<DatasetItem>& dataset,
                                           bool use_explanation);

}  // namespace nsrte
