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

#include "nsrte/harness.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <random>
#include <thread>

#include "nsrte/error.hpp"

namespace nsrte {

namespace {

using json = nlohmann::json;

std::size_t class_index(Label l) {
  switch (l) {
    case Label::kEntailment:
      return 0;
    case Label::kContradiction:
      return 1;
    case Label::kNeutral:
      return 2;
    case Label::kUnclassifiable:
      break;
  }
  throw std::logic_error("unclassifiable has no class index");
}

std::optional<std::string> optional_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<std::string>();
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

ItemOutcome run_item(const DatasetItem& item, const PipelineConfig& cfg,
                     const SimilarityProvider* provider) {
  ItemOutcome out;
  out.id = item.id;
  out.gold = item.gold;
  if (cfg.max_len) {
    const auto longest = std::max(SentenceTokens::from_text(item.premise_text).size(),
                                  SentenceTokens::from_text(item.claim_text).size());
    if (longest > *cfg.max_len) {
      out.status = ItemStatus::kFiltered;
      return out;
    }
  }
  std::optional<Instance> explanation;
  if (item.explanation_amr) {
    explanation = Instance{item.explanation_text.value_or(""), *item.explanation_amr};
  }
  try {
    const auto r = classify({item.premise_text, item.premise_amr},
                            {item.claim_text, item.claim_amr}, explanation, cfg, provider);
    out.predicted = r.label;
    out.status = r.label == Label::kUnclassifiable ? ItemStatus::kUnclassifiable
                                                   : ItemStatus::kScored;
    out.premise_consistent = r.premise_consistent;
    out.missing_embeddings = r.trace.missing_embeddings;
  } catch (const Error& e) {
    out.status = ItemStatus::kFailed;
    out.error = e.what();
  }
  return out;
}

}  // namespace

DatasetItem parse_dataset_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw DatasetError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw DatasetError("record is not a JSON object");
  try {
    DatasetItem item;
    const auto& id = j.at("id");
    item.id = id.is_string() ? id.get<std::string>() : id.dump();
    item.premise_text = j.at("premise").get<std::string>();
    item.claim_text = j.at("claim").get<std::string>();
    item.explanation_text = optional_string(j, "explanation");
    item.premise_amr = j.at("premise_amr").get<std::string>();
    item.claim_amr = j.at("claim_amr").get<std::string>();
    item.explanation_amr = optional_string(j, "explanation_amr");
    const auto label = parse_label(j.at("label").get<std::string>());
    if (!label || *label == Label::kUnclassifiable) {
      throw DatasetError("invalid gold label '" + j.at("label").get<std::string>() + "'");
    }
    item.gold = *label;
    return item;
  } catch (const json::exception& e) {
    throw DatasetError(std::string("bad record: ") + e.what());
  }
}

std::string dataset_line(const DatasetItem& item) {
  nlohmann::ordered_json j;
  j["id"] = item.id;
  j["premise"] = item.premise_text;
  j["claim"] = item.claim_text;
  if (item.explanation_text) j["explanation"] = *item.explanation_text;
  j["premise_amr"] = item.premise_amr;
  j["claim_amr"] = item.claim_amr;
  if (item.explanation_amr) j["explanation_amr"] = *item.explanation_amr;
  j["label"] = label_name(item.gold);
  return j.dump();
}

std::vector<DatasetItem> load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open dataset " + path);
  std::vector<DatasetItem> items;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      items.push_back(parse_dataset_line(line));
    } catch (const DatasetError& e) {
      throw DatasetError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return items;
}

MetricsReport compute_metrics(const std::vector<ItemOutcome>& outcomes) {
  MetricsReport r;
  r.items = outcomes.size();
  for (const auto& o : outcomes) {
    switch (o.status) {
      case ItemStatus::kFiltered:
        ++r.filtered;
        break;
      case ItemStatus::kFailed:
        ++r.failures;
        break;
      case ItemStatus::kUnclassifiable:
        ++r.unclassifiable;
        ++r.unclassifiable_by_class[class_index(o.gold)];
        break;
      case ItemStatus::kScored:
        ++r.scored;
        ++r.confusion[class_index(o.gold)][class_index(*o.predicted)];
        break;
    }
  }
  for (std::size_t c = 0; c < 3; ++c) {
    ClassMetrics& m = r.classes[c];
    m.true_positive = r.confusion[c][c];
    for (std::size_t k = 0; k < 3; ++k) {
      m.support += r.confusion[c][k];
      m.predicted += r.confusion[k][c];
    }
    r.correct += m.true_positive;
    m.recall_undefined = m.support == 0;
    m.precision_undefined = m.predicted == 0;
    m.recall = m.recall_undefined ? 0.0 : static_cast<double>(m.true_positive) / m.support;
    m.precision =
        m.precision_undefined ? 0.0 : static_cast<double>(m.true_positive) / m.predicted;
    m.f1_undefined = m.precision + m.recall == 0.0;
    m.f1 = m.f1_undefined ? 0.0 : 2.0 * m.precision * m.recall / (m.precision + m.recall);
  }
  r.accuracy_undefined = r.scored == 0;
  r.accuracy = r.accuracy_undefined ? 0.0 : static_cast<double>(r.correct) / r.scored;
  return r;
}

Evaluation evaluate(const std::vector<DatasetItem>& dataset, const PipelineConfig& cfg,
                    const SimilarityProvider* provider, const EvalOptions& opts) {
  if (dataset.empty()) throw DatasetError("dataset is empty");
  cfg.validate();
  Evaluation ev;
  ev.outcomes.resize(dataset.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < dataset.size(); i = next++) {
      ev.outcomes[i] = run_item(dataset[i], cfg, provider);
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(opts.jobs, 1, dataset.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }
  ev.report = compute_metrics(ev.outcomes);
  if (opts.check_premise_consistency) {
    std::size_t inconsistent = 0;
    for (const auto& o : ev.outcomes) {
      if ((o.status == ItemStatus::kScored || o.status == ItemStatus::kUnclassifiable) &&
          !o.premise_consistent) {
        ++inconsistent;
      }
    }
    ev.report.inconsistent_premises = inconsistent;
  }
  return ev;
}

std::vector<MetricsReport> tau_sweep(const std::vector<DatasetItem>& dataset,
                                     const std::vector<double>& taus, const PipelineConfig& cfg,
                                     const SimilarityProvider* provider,
                                     const EvalOptions& opts) {
  if (taus.empty()) throw std::invalid_argument("tau list is empty");
  if (dataset.empty()) throw DatasetError("dataset is empty");
  std::vector<MetricsReport> out;
  for (const double tau : taus) {
    PipelineConfig c = cfg;
    c.tau = tau;
    out.push_back(evaluate(dataset, c, provider, opts).report);
  }
  return out;
}

std::vector<DatasetItem> sample_per_class(const std::vector<DatasetItem>& dataset,
                                          std::size_t per_class, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // rejection-bounded draw
  auto draw = [&rng](std::uint64_t bound) {
    const std::uint64_t limit = rng.max() - rng.max() % bound;
    std::uint64_t x = 0;
    do {
      x = rng();
    } while (x >= limit);
    return x % bound;
  };
  std::vector<std::size_t> chosen;
  for (const Label cls : kClasses) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      if (dataset[i].gold == cls) idx.push_back(i);
    }
    for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[draw(i)]);
    idx.resize(std::min(idx.size(), per_class));
    chosen.insert(chosen.end(), idx.begin(), idx.end());
  }
  std::sort(chosen.begin(), chosen.end());
  std::vector<DatasetItem> out;
  for (const auto i : chosen) out.push_back(dataset[i]);
  return out;
}

std::string format_report(const MetricsReport& r, const ReportHeader& h) {
  std::string out = "# nsrte evaluation report\n";
  out += "config\ttau=" + fixed(h.cfg.tau) + "\tforgetting=" + (h.cfg.use_forgetting ? "on" : "off") +
         "\texplanation=" + (h.cfg.use_explanation ? "on" : "off") +
         "\tmax_len=" + (h.cfg.max_len ? std::to_string(*h.cfg.max_len) : "none") +
         "\tseed=" + std::to_string(h.seed) + "\n";
  out += "class\tprecision\trecall\tf1\tsupport\tflags\n";
  for (std::size_t c = 0; c < 3; ++c) {
    const auto& m = r.classes[c];
    std::string flags;
    auto flag = [&flags](bool set, const char* name) {
      if (!set) return;
      if (!flags.empty()) flags += ",";
      flags += name;
    };
    flag(m.precision_undefined, "precision_undefined");
    flag(m.recall_undefined, "recall_undefined");
    flag(m.f1_undefined, "f1_undefined");
    out += std::string(label_name(kClasses[c])) + "\t" + fixed(m.precision) + "\t" +
           fixed(m.recall) + "\t" + fixed(m.f1) + "\t" + std::to_string(m.support) + "\t" +
           (flags.empty() ? "-" : flags) + "\n";
  }
  out += "accuracy\t" + fixed(r.accuracy) + (r.accuracy_undefined ? "\taccuracy_undefined" : "") +
         "\n";
  out += "items\t" + std::to_string(r.items) + "\n";
  out += "scored\t" + std::to_string(r.scored) + "\n";
  out += "correct\t" + std::to_string(r.correct) + "\n";
  out += "unclassifiable\t" + std::to_string(r.unclassifiable);
  for (std::size_t c = 0; c < 3; ++c) {
    out += "\t" + std::string(label_name(kClasses[c])) + "=" +
           std::to_string(r.unclassifiable_by_class[c]);
  }
  out += "\n";
  out += "failures\t" + std::to_string(r.failures) + "\n";
  out += "filtered\t" + std::to_string(r.filtered) + "\n";
  out += "confusion";
  for (const auto& row : r.confusion) {
    out += "\t" + std::to_string(row[0]) + "/" + std::to_string(row[1]) + "/" +
           std::to_string(row[2]);
  }
  out += "\n";
  if (r.inconsistent_premises) {
    out += "inconsistent_premises\t" + std::to_string(*r.inconsistent_premises) + "\n";
  }
  return out;
}

std::set<std::string> enumerate_substrings(const std::vector<DatasetItem>& dataset,
                                           bool use_explanation) {
  std::set<std::string> out;
  for (const auto& item : dataset) {
    std::optional<Instance> explanation;
    if (use_explanation && item.explanation_amr) {
      explanation = Instance{item.explanation_text.value_or(""), *item.explanation_amr};
    }
    try {
      const auto texts = requested_texts(lower_instances(
          {item.premise_text, item.premise_amr}, {item.claim_text, item.claim_amr}, explanation));
      out.insert(texts.begin(), texts.end());
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace nsrte
