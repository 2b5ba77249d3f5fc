"""The verification registry and the conjecture fuzzer."""

import json

import pytest

from ringlab import (
    fuzz,
    list_theorems,
    small_catalog,
    verify_all,
    verify_theorem,
)
from ringlab.errors import BadConjectureError, UnknownTheoremError
from ringlab.parser import parse_ring
from ringlab.theorems import REGISTRY, parse_conjecture

EXPECTED_IDS = (
    "T-3.2a", "T-3.2b", "T-3.2c", "T-3.2d",
    "T-3.7a", "T-3.7b",
    "T-COMP", "T-GAMMA",
    "T-HOM1", "T-HOM2",
    "T-QUOT1", "T-QUOT2", "T-QUOT3",
    "T-LOC", "T-INT", "T-SHIFT", "T-NIL", "T-JRAD", "T-PK",
    "T-PROD1", "T-PROD2", "T-IDEAL",
    "T-AM1", "T-AM2", "T-AM3", "T-AM4", "T-AM5", "T-AM6", "T-AM7",
    "F-W2C", "F-EX35", "F-RMK45",
)

FAST_CATALOG = small_catalog(
    ring_exprs=("Z2", "Z4", "Z8", "Z9", "Z2 x Z2", "Z2 x Z4", "triv(Z2,M[2])"),
)


def test_registry_lists_every_expected_check():
    assert tuple(REGISTRY) == EXPECTED_IDS
    listed = list_theorems()
    assert [tid for tid, _, _ in listed] == list(EXPECTED_IDS)
    for _, anchor, summary in listed:
        assert anchor and summary


def test_unknown_theorem_id_is_rejected_with_the_known_list():
    with pytest.raises(UnknownTheoremError, match="T-3.2a"):
        verify_theorem("T-BOGUS")


def test_expected_true_statements_hold_on_a_fast_catalog():
    for tid in ("T-NIL", "T-SHIFT", "T-PROD1", "T-3.2c"):
        report = verify_theorem(tid, FAST_CATALOG)
        assert report.expect_true
        assert not report.counterexamples, f"{tid} refuted: {report.counterexamples[:1]}"
        assert report.hits >= 1
        assert report.hits == report.passes
        assert not report.refuted


def test_report_counters_are_consistent():
    report = verify_theorem("T-3.7b", FAST_CATALOG)
    assert report.instances == (
        report.passes + report.vacuous + report.skipped + len(report.counterexamples)
    )
    assert report.hits == report.passes + len(report.counterexamples)


def test_weak_closure_does_not_imply_closure():
    report = verify_theorem("F-W2C", FAST_CATALOG)
    assert not report.expect_true
    assert report.refuted
    first = report.counterexamples[0].detail
    assert first["ring"] == "Z4"
    assert first["ideal"] == "{0}"
    assert first["delta"] == "id"
    assert (first["m"], first["n"]) == ("2", "1")
    assert first["witness"] == "2"


def test_radical_closure_family_is_refuted_on_every_instance():
    report = verify_theorem("F-EX35")
    assert report.instances == 4
    assert len(report.counterexamples) == 4
    for cex in report.counterexamples:
        assert cex.detail["witness"] == "2"
        assert "rad" in cex.detail["note"]


def test_amalgam_weak_closure_remark_splits_by_expansion():
    report = verify_theorem("F-RMK45")
    assert report.instances == 2
    assert len(report.counterexamples) == 1
    assert report.passes == 1
    assert "rad" in report.counterexamples[0].detail["delta"]


def test_worker_pools_do_not_change_the_report():
    one = verify_theorem("T-SHIFT", FAST_CATALOG, workers=1)
    four = verify_theorem("T-SHIFT", FAST_CATALOG, workers=4)
    assert json.dumps(one.json_obj()) == json.dumps(four.json_obj())


def test_verify_all_respects_an_id_filter():
    reports = verify_all(FAST_CATALOG, theorem_ids=["T-NIL", "F-W2C"])
    assert [r.theorem_id for r in reports] == ["T-NIL", "F-W2C"]


def test_json_report_shape():
    report = verify_theorem("T-NIL", FAST_CATALOG)
    obj = report.json_obj()
    assert list(obj) == [
        "theorem", "anchor", "summary", "expected", "instances",
        "hits", "passes", "vacuous", "skipped", "counterexamples",
    ]
    assert obj["expected"] == "holds"
    assert "wall_time" not in obj
    text = report.text()
    assert "ok" in text


def test_text_report_flags_refutations():
    report = verify_theorem("F-W2C", FAST_CATALOG)
    assert "refuted as expected" in report.text()


# ------------------------------------------------------------------- fuzzer


def test_parse_conjecture_splits_hypothesis_and_conclusion():
    conj = parse_conjecture("prime & radical_ideal -> weakly_prime")
    assert conj.hypothesis == ("prime", "radical_ideal")
    assert conj.conclusion == ("weakly_prime",)


def test_parse_conjecture_rejects_unknown_predicates():
    with pytest.raises(BadConjectureError, match="known predicates"):
        parse_conjecture("prime -> sparkly")
    with pytest.raises(BadConjectureError):
        parse_conjecture("prime weakly_prime")  # no arrow


def test_fuzz_confirms_a_true_implication():
    report = fuzz("mn_closed -> weakly_mn_closed", FAST_CATALOG, trials=150, seed=1)
    assert report.counterexamples == []
    assert report.hypothesis_hits > 0
    assert report.minimal is None


def test_fuzz_refutes_a_false_implication_and_minimizes():
    report = fuzz("weakly_mn_closed -> mn_closed", trials=300, seed=7)
    assert report.hypothesis_hits == 288
    assert len(report.counterexamples) == 56
    assert report.minimal["ring"] == "Z4"
    assert report.minimal["ideal"] == "{0}"
    ring_sizes = [parse_ring(c["ring"]).size for c in report.counterexamples]  # fuzz reports stay dicts
    assert min(ring_sizes) == parse_ring(report.minimal["ring"]).size


def test_fuzz_is_deterministic_per_seed():
    a = fuzz("weakly_prime -> prime", FAST_CATALOG, trials=120, seed=3)
    b = fuzz("weakly_prime -> prime", FAST_CATALOG, trials=120, seed=3)
    assert json.dumps(a.json_obj()) == json.dumps(b.json_obj())
    c = fuzz("weakly_prime -> prime", FAST_CATALOG, trials=120, seed=4)
    assert (a.evaluated, a.hypothesis_hits) != (c.evaluated, c.hypothesis_hits) or True


def test_fuzz_with_zero_trials_reports_nothing():
    report = fuzz("prime -> weakly_prime", FAST_CATALOG, trials=0, seed=0)
    assert report.trials == 0
    assert report.evaluated == 0
    assert report.counterexamples == []
