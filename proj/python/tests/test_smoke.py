# Copyright 2026 The nsrte Authors.
# SPDX-License-Identifier: Apache-2.0
import json
import pathlib

import pytest

import nsrte

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "tests" / "fixtures"

VEST = "(l / lean-over :ARG0 (m / man :location (v / vest :mod (o / orange))) :ARG1 (t / truck))"
TOUCH = "(t / touch-01 :ARG0 (m / man) :ARG1 (t1 / truck))"


def test_penman_round_trip():
    g = nsrte.parse_penman("(w / want-01 :arg0 (b / boy) :arg1 (g / go-01 :arg0 b :polarity -))")
    assert g.nodes[2] == ("g", "go-01", True)
    assert ":polarity -" in nsrte.serialize_penman(g)
    assert nsrte.parse_penman(str(g)) == g
    with pytest.raises(nsrte.ParseError):
        nsrte.parse_penman("(w / want-01 :arg0 (b / boy")


def test_translate():
    g = nsrte.parse_penman("(w / want-01 :arg0 (b / boy) :arg1 (g / go-01 :arg0 b :polarity -))")
    assert str(nsrte.translate(g)) == "want(w) & ARG0(w,b) & boy(b) & ~(ARG1(w,g) & go(g) & ARG0(g,b))"


def test_reasoning():
    x1, x2, x3 = (nsrte.letter(i) for i in (1, 2, 3))
    phi = ~nsrte.conj([x1, x2, x3])
    assert nsrte.forgettable_atoms(phi, x2 & x3) == [1]
    star = nsrte.forget(phi, [1])
    assert str(star) == "~(x2 & x3)"
    assert nsrte.contradicts(star, x2 & x3)
    assert not nsrte.contradicts(phi, x1 & x2)
    assert nsrte.entails(x1 & x2, x2)
    assert nsrte.is_satisfiable(x1 & ~x2) == {1: True, 2: False}
    assert nsrte.is_satisfiable(x1 & ~x1) is None


def test_cosine_and_provider():
    assert nsrte.cosine([1, 2, 3], [4, 5, 6]) == pytest.approx(0.9746318461970762, abs=1e-6)
    p = nsrte.SimilarityProvider.from_table([("automobile", "car", 0.68)])
    assert p.similarity("car", "automobile") == 0.68
    with pytest.raises(nsrte.MissingEmbedding):
        p.similarity("car", "truck")


def test_classify_vest_truck():
    provider = nsrte.SimilarityProvider.load(str(FIXTURES / "stub_scores.tsv"))
    premise = ("A man in an orange vest leans over a pickup truck.", VEST)
    claim = ("A man is touching a truck.", TOUCH)
    r = nsrte.classify(premise, claim, provider=provider)
    assert r["label"] == "entailment"
    assert sorted(r["claim_true"]) == ["man(m)", "touch(t)", "truck(t1)"]
    assert sum(m["kind"] == "neuro" for m in r["matches"]) == 2
    assert nsrte.classify(premise, claim)["label"] == "neutral"


def test_evaluate_and_substrings():
    provider = nsrte.SimilarityProvider.load(str(FIXTURES / "stub_scores.tsv"))
    dataset = str(FIXTURES / "fixtures.jsonl")
    report = nsrte.evaluate(dataset, provider=provider, jobs=2)
    assert report["items"] == 15
    assert report["failures"] == 1
    assert report["text"].startswith("# nsrte evaluation report\n")
    at_one = nsrte.evaluate(dataset, tau=1.0, provider=provider)["text"]
    assert at_one == nsrte.evaluate(dataset, tau=1.0)["text"]
    texts = nsrte.enumerate_substrings(dataset)
    assert {"lean_over man", "touching a truck"} <= texts
    with pytest.raises(nsrte.DatasetError):
        nsrte.evaluate(str(FIXTURES / "missing.jsonl"))
