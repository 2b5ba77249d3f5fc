"""The ring/ideal/expansion expression language."""

import pytest

from ringlab import zmod
from ringlab.errors import RinglabError
from ringlab.parser import parse_delta, parse_ideal, parse_ring


def test_ring_expressions_roundtrip():
    for expr in (
        "Z8",
        "Z2 x Z4",
        "triv(Z2,M[2,2])",
        "quot(Z16,{8})",
        "loc(Z12,{1,5,7,11})",
        "amal(Z8,Z4,canon,{2})",
    ):
        ring = parse_ring(expr)
        canonical = ring.expr
        assert parse_ring(canonical) is ring


def test_whitespace_is_insignificant():
    assert parse_ring(" triv( Z2 , M[2,2] ) ").expr == "triv(Z2,M[2,2])"
    assert parse_ring("Z2  x  Z4").expr == "Z2 x Z4"


def test_dup_canonicalizes_to_amal():
    dup = parse_ring("dup(Z4,{2})")
    assert dup is parse_ring("amal(Z4,Z4,id,{2})")
    # an explicit mapping spelling of the same (identity) hom hits the
    # same structural key, so it lands on the same interned ring
    assert dup is parse_ring("amal(Z4,Z4,map[0,1,2,3],{2})")
    assert dup.expr == "amal(Z4,Z4,id,{2})"


def test_product_requires_spaced_operator():
    with pytest.raises(RinglabError) as exc:
        parse_ring("Z4xZ2")
    assert exc.value.code == "syntax-error"
    assert exc.value.position == 2


def test_bad_modulus_reports_code_and_position():
    with pytest.raises(RinglabError) as exc:
        parse_ring("Z0")
    assert exc.value.code == "invalid-modulus"
    assert exc.value.position == 1


def test_amalgam_hom_mismatch_points_at_the_hom_token():
    with pytest.raises(RinglabError) as exc:
        parse_ring("amal(Z4,Z8,id,{2})")
    assert exc.value.code == "semantic-error"
    assert exc.value.position == 11


def test_parsed_sizes_are_correct():
    assert parse_ring("quot(Z16,{8})").size == 8
    assert parse_ring("loc(Z12,{1,5,7,11})").size == 12
    assert parse_ring("amal(Z8,Z4,canon,{2})").size == 16


def test_parse_ideal_closes_the_generators():
    z8 = zmod(8)
    assert parse_ideal(z8, "{4}").display == "{0,4}"
    assert parse_ideal(z8, "{3}").display == "{0,1,2,3,4,5,6,7}"
    with pytest.raises(RinglabError):
        parse_ideal(z8, "{9}")  # out of range


def test_parse_delta_labels_roundtrip():
    z12 = zmod(12)
    for label in ("id", "rad", "addk({6})", "comp(rad,id)"):
        assert parse_delta(z12, label).label == label
    q = parse_ring("quot(Z16,{8})")
    assert parse_delta(q, "q(rad)").label == "q(rad)"
    p = parse_ring("Z2 x Z4")
    assert parse_delta(p, "prod(rad,id)").label == "prod(rad,id)"
    t = parse_ring("triv(Z2,M[2])")
    assert parse_delta(t, "plus(rad)").label == "plus(rad)"
    am = parse_ring("amal(Z4,Z4,id,{2})")
    assert parse_delta(am, "bow(id,id)").label == "bow(id,id)"
    loc = parse_ring("loc(Z12,{1,3,9})")
    assert parse_delta(loc, "locext(rad)").label == "locext(rad)"


def test_parse_delta_shape_errors():
    z8 = zmod(8)
    with pytest.raises(RinglabError) as exc:
        parse_delta(z8, "prod(rad,id)")
    assert exc.value.code == "semantic-error"
    with pytest.raises(RinglabError) as exc:
        parse_delta(z8, "bogus")
    assert exc.value.code == "syntax-error"
