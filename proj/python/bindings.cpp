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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsrte/amr_logic.hpp"
#include "nsrte/classifier.hpp"
#include "nsrte/error.hpp"
#include "nsrte/forgetting.hpp"
#include "nsrte/harness.hpp"
#include "nsrte/penman.hpp"
#include "nsrte/sat.hpp"

namespace py = pybind11;
using namespace nsrte;

namespace {

std::set<PropLetter> to_letters(const std::vector<std::uint32_t>& ids) {
  std::set<PropLetter> out;
  for (auto i : ids) out.insert(PropLetter{i});
  return out;
}

std::vector<std::uint32_t> from_letters(const std::set<PropLetter>& letters) {
  std::vector<std::uint32_t> out;
  for (const auto& l : letters) out.push_back(l.index);
  return out;
}

PipelineConfig make_config(double tau, bool use_forgetting, bool use_explanation,
                           std::optional<std::size_t> max_len, double forget_fraction) {
  PipelineConfig cfg;
  cfg.tau = tau;
  cfg.use_forgetting = use_forgetting;
  cfg.use_explanation = use_explanation;
  cfg.max_len = max_len;
  cfg.forget_fraction = forget_fraction;
  return cfg;
}

py::dict class_dict(const ClassMetrics& m) {
  py::dict d;
  d["precision"] = m.precision;
  d["recall"] = m.recall;
  d["f1"] = m.f1;
  d["support"] = m.support;
  d["precision_undefined"] = m.precision_undefined;
  d["recall_undefined"] = m.recall_undefined;
  d["f1_undefined"] = m.f1_undefined;
  return d;
}

py::dict report_dict(const MetricsReport& r) {
  py::dict d;
  for (std::size_t c = 0; c < 3; ++c) {
    d[py::str(std::string(label_name(kClasses[c])))] = class_dict(r.classes[c]);
  }
  d["confusion"] = r.confusion;
  d["accuracy"] = r.accuracy;
  d["accuracy_undefined"] = r.accuracy_undefined;
  d["items"] = r.items;
  d["scored"] = r.scored;
  d["correct"] = r.correct;
  d["unclassifiable"] = r.unclassifiable;
  d["failures"] = r.failures;
  d["filtered"] = r.filtered;
  if (r.inconsistent_premises) d["inconsistent_premises"] = *r.inconsistent_premises;
  return d;
}

}  // namespace

PYBIND11_MODULE(_nsrte, m) {
  m.doc() = "Neurosymbolic textual entailment over AMR graphs";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<CyclicGraph>(m, "CyclicGraph", base.ptr());
  py::register_exception<UnsupportedGraph>(m, "UnsupportedGraph", base.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<ZeroVector>(m, "ZeroVector", base.ptr());
  py::register_exception<MissingEmbedding>(m, "MissingEmbedding", base.ptr());
  py::register_exception<DatasetError>(m, "DatasetError", base.ptr());
  py::register_exception<TooManyLetters>(m, "TooManyLetters", base.ptr());
  py::register_exception<SolverBudgetExceeded>(m, "SolverBudgetExceeded", base.ptr());

  // graphs
  py::class_<AmrGraph>(m, "AmrGraph")
      .def_property_readonly("root", [](const AmrGraph& g) { return g.root; })
      .def_property_readonly("nodes",
                             [](const AmrGraph& g) {
                               py::list out;
                               for (const auto& n : g.nodes) {
                                 out.append(py::make_tuple(n.variable, n.concept_name, n.negated));
                               }
                               return out;
                             })
      .def_property_readonly("edges",
                             [](const AmrGraph& g) {
                               py::list out;
                               for (const auto& e : g.edges) {
                                 const std::string target =
                                     e.targets_node() ? g.node(e.target_node()).variable
                                                      : std::get<Constant>(e.target).token;
                                 out.append(py::make_tuple(g.node(e.source).variable, e.role,
                                                           target));
                               }
                               return out;
                             })
      .def("__eq__", [](const AmrGraph& a, const AmrGraph& b) { return structurally_equal(a, b); })
      .def("__str__", [](const AmrGraph& g) { return serialize_penman(g); });

  m.def("parse_penman", &parse_penman, py::arg("text"));
  m.def("serialize_penman", &serialize_penman, py::arg("graph"));
  m.def("normalize_graph", &normalize_graph, py::arg("graph"));

  // formulas
  py::class_<AmrFormula>(m, "AmrFormula")
      .def("__str__", [](const AmrFormula& f) { return to_string(f); })
      .def("__eq__", [](const AmrFormula& a, const AmrFormula& b) { return a == b; })
      .def("atoms", [](const AmrFormula& f) {
        std::vector<std::string> out;
        for (const auto& a : atoms_in_order(f)) out.push_back(a.to_string());
        return out;
      });
  m.def("translate", &translate, py::arg("graph"));

  py::class_<AbstractFormula>(m, "Formula")
      .def("__str__", [](const AbstractFormula& f) { return to_string(f); })
      .def("__repr__", [](const AbstractFormula& f) { return "Formula(" + to_string(f) + ")"; })
      .def("__eq__", [](const AbstractFormula& a, const AbstractFormula& b) { return a == b; })
      .def("__and__",
           [](const AbstractFormula& a, const AbstractFormula& b) {
             return AbstractFormula::conj({a, b});
           })
      .def("__invert__", [](const AbstractFormula& a) { return AbstractFormula::negate(a); })
      .def("letters", [](const AbstractFormula& f) { return from_letters(atoms(f)); });
  m.def("letter", [](std::uint32_t i) { return AbstractFormula::leaf(PropLetter{i}); });
  m.def("true_", &AbstractFormula::truth);
  m.def("conj", [](std::vector<AbstractFormula> parts) { return AbstractFormula::conj(std::move(parts)); });
  m.def("simplify_true", &simplify_true);

  // reasoning
  m.def("is_satisfiable", [](const AbstractFormula& f) -> py::object {
    const Cnf cnf = to_cnf(f);
    const SatResult r = is_satisfiable(cnf);
    if (!r.satisfiable) return py::none();
    py::dict model;
    for (auto l : atoms(f)) model[py::int_(l.index)] = r.value(l);
    return std::move(model);
  }, "Returns a model over the formula's letters, or None");
  m.def("to_dimacs", [](const AbstractFormula& f) { return to_dimacs(to_cnf(f)); });
  m.def("entails", &entails, py::arg("phi"), py::arg("alpha"));
  m.def("contradicts", &contradicts, py::arg("phi_star"), py::arg("alpha"));
  m.def("forgettable_atoms", [](const AbstractFormula& phi, const AbstractFormula& alpha) {
    return from_letters(forgettable_atoms(phi, alpha));
  });
  m.def("forget", [](const AbstractFormula& f, const std::vector<std::uint32_t>& gamma) {
    return forget(f, to_letters(gamma));
  });

  // similarity
  m.def("cosine", [](const std::vector<double>& a, const std::vector<double>& b) {
    return cosine(a, b);
  });
  py::class_<SimilarityProvider>(m, "SimilarityProvider")
      .def_static("load", &SimilarityProvider::load, py::arg("path"))
      .def_static("from_vectors", &SimilarityProvider::from_vectors, py::arg("vectors"))
      .def_static("from_table", &SimilarityProvider::from_table, py::arg("entries"))
      .def("similarity", &SimilarityProvider::similarity)
      .def("__len__", &SimilarityProvider::size);

  // pipeline
  m.def(
      "classify_json",
      [](const std::pair<std::string, std::string>& premise,
         const std::pair<std::string, std::string>& claim,
         const std::optional<std::pair<std::string, std::string>>& explanation, double tau,
         bool use_forgetting, bool use_explanation, double forget_fraction,
         const SimilarityProvider* provider) {
        std::optional<Instance> e;
        if (explanation) e = Instance{explanation->first, explanation->second};
        const auto cfg = make_config(tau, use_forgetting, use_explanation, {}, forget_fraction);
        return trace_to_json(classify({premise.first, premise.second},
                                      {claim.first, claim.second}, e, cfg, provider));
      },
      py::arg("premise"), py::arg("claim"), py::arg("explanation") = py::none(),
      py::arg("tau") = 0.6, py::arg("use_forgetting") = true, py::arg("use_explanation") = true,
      py::arg("forget_fraction") = 1.0, py::arg("provider") = nullptr);

  m.def(
      "evaluate",
      [](const std::string& dataset, double tau, bool use_forgetting, bool use_explanation,
         std::optional<std::size_t> max_len, const SimilarityProvider* provider,
         std::size_t jobs, bool check_premise_consistency) {
        const auto items = load_dataset(dataset);
        const auto cfg = make_config(tau, use_forgetting, use_explanation, max_len, 1.0);
        Evaluation ev;
        {
          py::gil_scoped_release release;
          ev = nsrte::evaluate(items, cfg, provider, {jobs, check_premise_consistency});
        }
        py::dict out = report_dict(ev.report);
        out["text"] = format_report(ev.report, {cfg, 0});
        return out;
      },
      py::arg("dataset"), py::arg("tau") = 0.6, py::arg("use_forgetting") = true,
      py::arg("use_explanation") = true, py::arg("max_len") = py::none(),
      py::arg("provider") = nullptr, py::arg("jobs") = 1,
      py::arg("check_premise_consistency") = false);

  m.def(
      "enumerate_substrings",
      [](const std::string& dataset, bool use_explanation) {
        return enumerate_substrings(load_dataset(dataset), use_explanation);
      },
      py::arg("dataset"), py::arg("use_explanation") = true);
}
