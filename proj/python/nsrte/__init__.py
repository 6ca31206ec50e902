# Copyright 2026 The nsrte Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Neurosymbolic textual entailment over AMR graphs."""

import json

from ._nsrte import (
    AmrFormula,
    AmrGraph,
    CyclicGraph,
    DatasetError,
    DimensionMismatch,
    Error,
    Formula,
    MissingEmbedding,
    ParseError,
    SimilarityProvider,
    SolverBudgetExceeded,
    TooManyLetters,
    UnsupportedGraph,
    ZeroVector,
    conj,
    contradicts,
    cosine,
    entails,
    enumerate_substrings,
    evaluate,
    forget,
    forgettable_atoms,
    is_satisfiable,
    letter,
    normalize_graph,
    parse_penman,
    serialize_penman,
    simplify_true,
    to_dimacs,
    translate,
    true_,
)
from ._nsrte import classify_json as _classify_json


def classify(premise, claim, explanation=None, *, tau=0.6, use_forgetting=True,
             use_explanation=True, forget_fraction=1.0, provider=None):
    """Classify a (sentence, amr) pair; returns the trace as a dict."""
    return json.loads(_classify_json(premise, claim, explanation, tau, use_forgetting,
                                     use_explanation, forget_fraction, provider))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
