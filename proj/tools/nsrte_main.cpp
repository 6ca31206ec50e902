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

// Command-line front end.
//
//   nsrte classify --premise-amr p.amr --claim-amr c.amr --sentences s.txt \
//       --embeddings stub.tsv --tau 0.6
//   nsrte evaluate --dataset d.jsonl --embeddings vec.txt --tau 0.55 --report out.tsv
//   nsrte sweep --dataset d.jsonl --embeddings vec.txt --taus 0.5,0.55,0.6 --report out.tsv
//   nsrte enumerate-substrings --dataset d.jsonl
//
// Exit status: 0 on success, 2 on unreadable or malformed inputs, 1 otherwise.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nsrte/classifier.hpp"
#include "nsrte/embedding.hpp"
#include "nsrte/error.hpp"
#include "nsrte/harness.hpp"

namespace {

constexpr int kDatasetErrorExit = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nsrte::DatasetError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw nsrte::DatasetError("cannot write " + path);
  out << text;
}

struct CommonOptions {
  std::string embeddings;
  double tau = 0.6;
  bool no_forget = false;
  bool no_explanation = false;
  std::optional<std::size_t> max_len;
  double forget_fraction = 1.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--embeddings", embeddings,
                    "Vector file (#dim header) or stub score table; omit to disable neuro matching")
        ->check(CLI::ExistingFile);
    cmd->add_option("--tau", tau, "Neuro-matching threshold")->check(CLI::Range(0.0, 1.0));
    cmd->add_flag("--no-forget", no_forget, "Disable forgetting before the contradiction check");
    cmd->add_option("--forget-fraction", forget_fraction, "Share of forgettable letters to forget")
        ->check(CLI::Range(0.0, 1.0));
  }

  nsrte::PipelineConfig config() const {
    nsrte::PipelineConfig cfg;
    cfg.tau = tau;
    cfg.use_forgetting = !no_forget;
    cfg.use_explanation = !no_explanation;
    cfg.max_len = max_len;
    cfg.forget_fraction = forget_fraction;
    return cfg;
  }

  std::optional<nsrte::SimilarityProvider> provider() const {
    if (embeddings.empty()) return std::nullopt;
    return nsrte::SimilarityProvider::load(embeddings);
  }
};

std::vector<nsrte::DatasetItem> load_sampled(const std::string& path, std::size_t per_class,
                                             std::uint64_t seed) {
  auto dataset = nsrte::load_dataset(path);
  if (per_class > 0) dataset = nsrte::sample_per_class(dataset, per_class, seed);
  if (dataset.empty()) throw nsrte::DatasetError("dataset " + path + " has no items");
  return dataset;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neurosymbolic entailment / contradiction classifier over AMR graphs"};
  app.require_subcommand(1);

  // classify
  CommonOptions classify_opts;
  std::string premise_amr, claim_amr, explanation_amr, sentences_path;
  bool as_json = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one premise/claim pair");
  classify_cmd->add_option("--premise-amr", premise_amr, "PENMAN file for the premise")
      ->required()
      ->check(CLI::ExistingFile);
  classify_cmd->add_option("--claim-amr", claim_amr, "PENMAN file for the claim")
      ->required()
      ->check(CLI::ExistingFile);
  classify_cmd->add_option("--explanation-amr", explanation_amr, "PENMAN file for an explanation")
      ->check(CLI::ExistingFile);
  classify_cmd
      ->add_option("--sentences", sentences_path,
                   "Raw sentences, one per line: premise, claim, optional explanation")
      ->required()
      ->check(CLI::ExistingFile);
  classify_cmd->add_flag("--json", as_json, "Print the trace as JSON");
  classify_opts.attach(classify_cmd);

  // evaluate
  CommonOptions eval_opts;
  std::string dataset_path, report_path = "-";
  std::uint64_t seed = 0;
  std::size_t per_class = 0, jobs = 1;
  bool check_premises = false, enumerate = false, dry_run = false;
  auto* eval_cmd = app.add_subcommand("evaluate", "Evaluate a dataset and write a metrics report");
  eval_cmd->add_option("--dataset", dataset_path, "JSON-lines dataset")->required();
  eval_cmd->add_option("--report", report_path, "Report path ('-' for stdout)");
  eval_cmd->add_flag("--no-explanation", eval_opts.no_explanation, "Ignore explanations");
  eval_cmd->add_option("--max-len", eval_opts.max_len, "Skip items with longer sentences");
  eval_cmd->add_option("--seed", seed, "Seed for --per-class sampling");
  eval_cmd->add_option("--per-class", per_class, "Sample this many items per gold class");
  eval_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  eval_cmd->add_flag("--check-premise-consistency", check_premises,
                     "Also count items whose premise side is inconsistent");
  eval_cmd->add_flag("--enumerate-substrings", enumerate,
                     "Print every text the matcher may look up, then exit");
  eval_cmd->add_flag("--dry-run", dry_run,
                     "Report texts missing from the vector file instead of evaluating");
  eval_opts.attach(eval_cmd);

  // sweep
  CommonOptions sweep_opts;
  std::string sweep_dataset, sweep_report = "-";
  std::vector<double> taus;
  std::uint64_t sweep_seed = 0;
  std::size_t sweep_per_class = 0, sweep_jobs = 1;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a dataset at several thresholds");
  sweep_cmd->add_option("--dataset", sweep_dataset, "JSON-lines dataset")->required();
  sweep_cmd->add_option("--taus", taus, "Comma-separated thresholds")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--report", sweep_report, "Report path ('-' for stdout)");
  sweep_cmd->add_flag("--no-explanation", sweep_opts.no_explanation, "Ignore explanations");
  sweep_cmd->add_option("--max-len", sweep_opts.max_len, "Skip items with longer sentences");
  sweep_cmd->add_option("--seed", sweep_seed, "Seed for --per-class sampling");
  sweep_cmd->add_option("--per-class", sweep_per_class, "Sample this many items per gold class");
  sweep_cmd->add_option("--jobs", sweep_jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep_opts.attach(sweep_cmd);

  // enumerate-substrings
  std::string enum_dataset;
  bool enum_no_explanation = false;
  auto* enum_cmd = app.add_subcommand(
      "enumerate-substrings", "Print every text the matcher may look up for a dataset");
  enum_cmd->add_option("--dataset", enum_dataset, "JSON-lines dataset")->required();
  enum_cmd->add_flag("--no-explanation", enum_no_explanation, "Ignore explanations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) {
      std::istringstream lines(read_file(sentences_path));
      std::vector<std::string> sentences;
      for (std::string line; std::getline(lines, line);) {
        if (!line.empty()) sentences.push_back(line);
      }
      if (sentences.size() < 2) {
        throw nsrte::DatasetError(sentences_path + ": expected premise and claim sentences");
      }
      std::optional<nsrte::Instance> explanation;
      if (!explanation_amr.empty()) {
        explanation =
            nsrte::Instance{sentences.size() > 2 ? sentences[2] : "", read_file(explanation_amr)};
      }
      const auto provider = classify_opts.provider();
      const auto result = nsrte::classify({sentences[0], read_file(premise_amr)},
                                          {sentences[1], read_file(claim_amr)}, explanation,
                                          classify_opts.config(),
                                          provider ? &*provider : nullptr);
      std::cout << (as_json ? nsrte::trace_to_json(result) + "\n" : nsrte::format_trace(result));
      return 0;
    }

    if (*eval_cmd) {
      const auto dataset = load_sampled(dataset_path, per_class, seed);
      const auto cfg = eval_opts.config();
      if (enumerate || dry_run) {
        const auto texts = nsrte::enumerate_substrings(dataset, cfg.use_explanation);
        if (enumerate) {
          for (const auto& t : texts) std::cout << t << "\n";
          return 0;
        }
        const auto provider = eval_opts.provider();
        const auto* store = provider ? provider->vector_store() : nullptr;
        if (store == nullptr) throw std::invalid_argument("--dry-run needs a vector file");
        std::size_t missing = 0;
        for (const auto& t : texts) {
          if (store->vectors.count(t) == 0) {
            std::cout << "missing\t" << t << "\n";
            ++missing;
          }
        }
        std::cout << "missing_embeddings\t" << missing << "\n";
        return missing == 0 ? 0 : 1;
      }
      const auto provider = eval_opts.provider();
      const auto ev = nsrte::evaluate(dataset, cfg, provider ? &*provider : nullptr,
                                      {jobs, check_premises});
      write_output(report_path, nsrte::format_report(ev.report, {cfg, seed}));
      return 0;
    }

    if (*sweep_cmd) {
      const auto dataset = load_sampled(sweep_dataset, sweep_per_class, sweep_seed);
      const auto provider = sweep_opts.provider();
      const auto cfg = sweep_opts.config();
      const auto reports = nsrte::tau_sweep(dataset, taus, cfg, provider ? &*provider : nullptr,
                                            {sweep_jobs, false});
      std::string text;
      for (std::size_t i = 0; i < reports.size(); ++i) {
        nsrte::PipelineConfig c = cfg;
        c.tau = taus[i];
        if (i != 0) text += "\n";
        text += nsrte::format_report(reports[i], {c, sweep_seed});
      }
      write_output(sweep_report, text);
      return 0;
    }

    if (*enum_cmd) {
      for (const auto& t :
           nsrte::enumerate_substrings(nsrte::load_dataset(enum_dataset), !enum_no_explanation)) {
        std::cout << t << "\n";
      }
      return 0;
    }
  } catch (const nsrte::DatasetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDatasetErrorExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
