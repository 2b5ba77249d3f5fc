"""Acceptance gate: eight release criteria, one test (and one pass/fail
line under ``pytest -v``) per criterion.

Pinned tolerances live in the constants below; every other expected value
in this file is frozen from an independent hand or brute-force computation.
"""

import json
import time

from ringlab import (
    builtin_delta,
    check_expansion_axioms,
    check_fip,
    classify_mn,
    delta_amalgam,
    delta_idealization,
    delta_localization,
    delta_product,
    delta_quotient,
    enumerate_ideals,
    find_isomorphism,
    ideal_closure,
    inj_hom,
    localize,
    product_ideal_parts,
    small_catalog,
    triv_ideal,
    verify_all,
    verify_theorem,
    zmod,
)
from ringlab.classify import ABSORB_N_CAP
from ringlab.cli import main
from ringlab.constructions import (
    AmalgamRing,
    LocalizedRing,
    MultSet,
    ProductRing,
    QuotientRing,
    SubringRing,
    TrivialExtension,
    amalgamate,
)
from ringlab.errors import AxiomViolationError
from ringlab.ideals import unit_ideal, zero_ideal
from ringlab.parser import parse_ring
from ringlab.rings import Zmod

CLASSIFY_TIME_LIMIT_S = 1.0
REFUTATION_TIME_LIMIT_S = 1.0
VERIFY_TIME_LIMIT_S = 120.0
MIN_HITS_PER_THEOREM = 5
MAX_COUNTEREXAMPLE_RING_SIZE = 4


def _passed(n, text):
    print(f"criterion {n}: PASS - {text}")


def test_criterion_1_cli_classifies_the_reference_ideals_quickly(capsys):
    start = time.perf_counter()
    assert main(["classify", "Z8", "--ideal", "{0,4}"]) == 0
    z8_out = capsys.readouterr().out
    assert main(["classify", "Z4", "--ideal", "{0}"]) == 0
    z4_out = capsys.readouterr().out
    elapsed = time.perf_counter() - start

    assert "weakly (3,1)-closed delta-primary: true" in z8_out
    assert "weakly (2,1)-closed delta-primary: false  (witness 2)" in z8_out
    assert "weakly (2,1)-closed delta-primary: true" in z4_out
    assert "(2,1)-closed delta-primary: false  (witness 2)" in z4_out
    assert elapsed < CLASSIFY_TIME_LIMIT_S
    _passed(1, f"both reference classifications in {elapsed:.3f}s")


def test_criterion_2_documented_refutations_reproduce_fast():
    ex = verify_theorem("F-EX35")
    assert ex.refuted and len(ex.counterexamples) == ex.instances == 4
    for cex in ex.counterexamples:
        assert cex.detail["witness"] == "2"
        assert "rad" in cex.detail["note"]
    assert ex.wall_time < REFUTATION_TIME_LIMIT_S

    rm = verify_theorem("F-RMK45")
    assert rm.refuted and rm.instances == 2
    assert "rad" in rm.counterexamples[0].detail["note"]
    assert rm.wall_time < REFUTATION_TIME_LIMIT_S
    _passed(2, "radical-closure and amalgam-remark refutations reproduced")


def test_criterion_3_full_registry_holds_on_the_small_catalog():
    catalog = small_catalog()
    assert catalog.m_max == 4 and ABSORB_N_CAP == 3
    start = time.perf_counter()
    reports = verify_all(catalog, workers=1)
    elapsed = time.perf_counter() - start
    for report in reports:
        if report.expect_true:
            assert not report.counterexamples, (
                f"{report.theorem_id} refuted: "
                f"{report.counterexamples[0].detail}"
            )
            assert report.hits >= MIN_HITS_PER_THEOREM, report.theorem_id
        else:
            assert report.refuted, f"{report.theorem_id} should refute"
    assert elapsed < VERIFY_TIME_LIMIT_S
    _passed(3, f"{len(reports)} checks, single worker, {elapsed:.1f}s")


def test_criterion_4_weak_to_closed_converse_fails_on_a_tiny_ring(capsys):
    report = verify_theorem("F-W2C")
    assert report.refuted
    sizes = [parse_ring(c.detail["ring"]).size for c in report.counterexamples]
    assert min(sizes) <= MAX_COUNTEREXAMPLE_RING_SIZE
    assert main(["verify", "--theorem", "F-W2C"]) == 1
    capsys.readouterr()
    _passed(4, f"counterexample on a ring of size {min(sizes)}, exit code 1")


def test_criterion_5_product_predictions_match_direct_classification():
    catalog = small_catalog()
    checks = mismatches = 0
    for ring in catalog.rings():
        if not isinstance(ring, ProductRing):
            continue
        left, right = ring.left, ring.right
        delta_triples = [
            (delta_product(builtin_delta(left, ka), builtin_delta(right, kb), ring),
             builtin_delta(left, ka), builtin_delta(right, kb))
            for ka in ("id", "rad")
            for kb in ("id", "rad")
        ] + [
            (builtin_delta(ring, kind),
             builtin_delta(left, kind), builtin_delta(right, kind))
            for kind in ("id", "rad")
        ]
        pairs = [(m, n) for m in range(2, 5) for n in range(1, m)]
        for dx, d1, d2 in delta_triples:
            for ideal in enumerate_ideals(ring).proper():
                j1, j2 = product_ideal_parts(ideal)
                for m, n in pairs:
                    # block ideals: all three readings coincide
                    if not j2.is_proper:
                        checks += 1
                        factor_closed = classify_mn(j1, m, n, d1)[0]
                        if (
                            classify_mn(ideal, m, n, dx)[0] != factor_closed
                            or classify_mn(ideal, m, n, dx, weakly=True)[0]
                            != factor_closed
                        ):
                            mismatches += 1
                    # every proper ideal: split form of weakly-but-not-closed
                    checks += 1
                    weak_not_closed = (
                        classify_mn(ideal, m, n, dx, weakly=True)[0]
                        and not classify_mn(ideal, m, n, dx)[0]
                    )
                    if weak_not_closed != _split_prediction(
                        left, right, j1, j2, d1, d2, m, n
                    ):
                        mismatches += 1
    assert checks > 0 and mismatches == 0
    _passed(5, f"{checks} product readings, 100% agreement")


def _split_prediction(left, right, j1, j2, d1, d2, m, n):
    if not (j1.is_proper and j2.is_proper):
        return False

    def wnc(part, delta):
        return (
            classify_mn(part, m, n, delta, weakly=True)[0]
            and not classify_mn(part, m, n, delta)[0]
        )

    def tail_zero(factor, part):
        return all(
            factor.pow(y, m) == 0
            for y in range(factor.size)
            if factor.pow(y, m) in part.members
        )

    def nonzero_power(factor, part):
        return any(
            factor.pow(x, m) != 0 and factor.pow(x, m) in part.members
            for x in range(factor.size)
        )

    side_a = (
        wnc(j1, d1)
        and tail_zero(right, j2)
        and (not nonzero_power(left, j1) or classify_mn(j2, m, n, d2)[0])
    )
    side_b = (
        wnc(j2, d2)
        and tail_zero(left, j1)
        and (not nonzero_power(right, j2) or classify_mn(j1, m, n, d1)[0])
    )
    return side_a or side_b


def test_criterion_6_construction_invariants():
    catalog = small_catalog()
    amalgams = [r for r in catalog.rings() if isinstance(r, AmalgamRing)]
    assert amalgams
    for am in amalgams:
        assert am.size == am.A.size * len(am.J.members)

    t = parse_ring("triv(Z2,M[2])")
    zero_plus_module = triv_ideal(t, zero_ideal(t.base), t.module.elements())
    am = amalgamate(t.base, t, inj_hom(t), zero_plus_module)
    assert am.size == t.base.size * len(zero_plus_module.members)
    assert find_isomorphism(t, am) is not None

    z12 = zmod(12)
    odds = MultSet(z12, frozenset({1, 3, 5, 7, 9, 11}))
    assert localize(z12, odds)[0].size == 4
    away_from_3 = MultSet(
        z12, frozenset(range(12)) - ideal_closure(z12, [3]).members
    )
    assert localize(z12, away_from_3)[0].size == 3
    _passed(6, "amalgam sizes, idealization isomorphism, localization sizes")


def test_criterion_7_every_constructible_expansion_is_lawful():
    catalog = small_catalog()
    checked = 0
    for ring in catalog.rings():
        deltas = list(catalog.deltas(ring))
        if isinstance(ring, QuotientRing):
            deltas.append(delta_quotient(builtin_delta(ring.base, "rad"), ring))
        if isinstance(ring, ProductRing):
            deltas.append(
                delta_product(
                    builtin_delta(ring.left, "rad"),
                    builtin_delta(ring.right, "id"),
                    ring,
                )
            )
        if isinstance(ring, TrivialExtension):
            deltas.append(delta_idealization(builtin_delta(ring.base, "rad"), ring))
        if isinstance(ring, LocalizedRing):
            deltas.append(delta_localization(builtin_delta(ring.base, "rad"), ring))
        if isinstance(ring, AmalgamRing):
            sub = ring.subring()
            for ka, kb in (("id", "id"), ("rad", "rad"), ("rad", "id")):
                try:
                    deltas.append(
                        delta_amalgam(
                            builtin_delta(ring.A, ka), builtin_delta(sub, kb), ring
                        )
                    )
                except AxiomViolationError:
                    pass  # mixed pairs may lawfully fail to be expansions
        for delta in deltas:
            result = check_expansion_axioms(ring, delta, delta.supports)
            assert result.ok, f"{delta.label} on {ring.expr}: {result.kind}"
            checked += 1

    for ring in catalog.rings():
        if isinstance(ring, Zmod):
            for kind in ("id", "rad"):
                ok, _ = check_fip(builtin_delta(ring, kind))
                assert ok
    t = parse_ring("triv(Z2,M[2,2])")
    ok, pair = check_fip(builtin_delta(t, "addk", (1,)))
    assert not ok
    assert {pair[0].display, pair[1].display} == {"{0,2}", "{0,3}"}
    _passed(7, f"{checked} expansions re-validated, FIP split as documented")


def test_criterion_8_verification_is_deterministic_across_worker_counts(capsys):
    base = ["verify", "--catalog", "small", "--seed", "7", "--format", "json"]
    code_one = main(base + ["--workers", "1"])
    out_one = capsys.readouterr().out
    code_four = main(base + ["--workers", "4"])
    out_four = capsys.readouterr().out
    assert code_one == code_four
    assert out_one == out_four  # byte-identical machine-readable reports
    parsed = json.loads(out_one)
    assert len(parsed["reports"]) == 32
    _passed(8, "workers 1 and 4 emit byte-identical reports")
