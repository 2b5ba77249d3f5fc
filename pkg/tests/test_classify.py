"""Closure classification: frozen readings plus structural properties."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab import (
    builtin_delta,
    classify_full,
    classify_mn,
    enumerate_ideals,
    ideal_closure,
    is_delta_primary,
    is_n_absorbing,
    is_n_absorbing_delta_primary,
    is_strongly_n_absorbing,
    unbreakable_zero_set,
    zmod,
)
from ringlab.errors import ImproperIdealError, NTooLargeError
from ringlab.ideals import unit_ideal, zero_ideal


def test_frozen_readings_on_z8():
    z8 = zmod(8)
    i = ideal_closure(z8, [4])
    assert classify_mn(i, 3, 1, weakly=True) == (True, None)
    assert classify_mn(i, 3, 1) == (False, 2)
    assert classify_mn(i, 2, 1, weakly=True) == (False, 2)
    assert classify_mn(i, 2, 1) == (False, 2)


def test_frozen_readings_on_z4():
    z4 = zmod(4)
    zero = zero_ideal(z4)
    assert classify_mn(zero, 2, 1, weakly=True) == (True, None)
    assert classify_mn(zero, 2, 1) == (False, 2)


def test_radical_delta_closes_every_small_power_ideal():
    for n in range(1, 5):
        ring = zmod(2 ** (n + 1))
        delta = builtin_delta(ring, "rad")
        ok, witness = classify_mn(zero_ideal(ring), n + 1, n, delta)
        assert ok and witness is None


def test_prime_and_weakly_prime_on_z6():
    zero = zero_ideal(zmod(6))
    assert is_delta_primary(zero) == (False, (2, 3))
    assert is_delta_primary(zero, weakly=True) == (True, None)


def test_delta_primary_with_radical_on_z12():
    z12 = zmod(12)
    i4 = ideal_closure(z12, [4])
    assert is_delta_primary(i4, builtin_delta(z12, "rad")) == (True, None)


def test_absorbing_witnesses_are_frozen():
    z8, z12 = zmod(8), zmod(12)
    assert is_n_absorbing(zero_ideal(z8), 2) == (False, (2, 2, 2))
    assert is_n_absorbing_delta_primary(
        zero_ideal(z8), 2, builtin_delta(z8, "id")
    ) == (False, (2, 1, 4))
    assert is_n_absorbing_delta_primary(
        ideal_closure(z12, [4]), 1, builtin_delta(z12, "id")
    ) == (False, (1, 0))


def test_strongly_absorbing_on_ideal_triples():
    z8 = zmod(8)
    evens = (0, 2, 4, 6)
    assert is_strongly_n_absorbing(zero_ideal(z8), 2) == (False, (evens, evens, evens))
    assert is_strongly_n_absorbing(zero_ideal(z8), 2, weakly=True) == (True, None)


def test_unbreakable_zero_set_frozen():
    z8 = zmod(8)
    i = ideal_closure(z8, [4])
    assert unbreakable_zero_set(i, 3, 1, builtin_delta(z8, "id")) == (2, 6)


def test_absorbing_bound_and_improper_ideals_are_rejected():
    z8 = zmod(8)
    with pytest.raises(NTooLargeError):
        is_n_absorbing(zero_ideal(z8), 4)
    with pytest.raises(ImproperIdealError):
        classify_mn(unit_ideal(z8), 2, 1)
    with pytest.raises(ValueError):
        classify_mn(zero_ideal(z8), 2, 0)


def test_classify_full_returns_eight_labelled_rows():
    z8 = zmod(8)
    rows = classify_full(ideal_closure(z8, [4]), 3, 1)
    assert list(rows) == [
        "(3,1)-closed",
        "weakly (3,1)-closed",
        "(3,1)-closed delta-primary",
        "weakly (3,1)-closed delta-primary",
        "delta-primary",
        "weakly delta-primary",
        "prime",
        "weakly prime",
    ]
    assert rows["weakly (3,1)-closed delta-primary"] == (True, None)
    assert rows["(3,1)-closed delta-primary"] == (False, 2)


ring_strategy = st.integers(2, 24).map(zmod)
mn_strategy = st.tuples(st.integers(2, 4), st.integers(1, 3)).filter(
    lambda mn: mn[1] < mn[0]
)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 24), div=st.integers(0, 5), mn=mn_strategy, kind=st.sampled_from(["id", "rad"]))
def test_unbreakable_set_tracks_the_weak_closed_gap(n, div, mn, kind):
    ring = zmod(n)
    lattice = enumerate_ideals(ring).proper()
    ideal = lattice[div % len(lattice)]
    m, k = mn
    delta = builtin_delta(ring, kind)
    weak, _ = classify_mn(ideal, m, k, delta, weakly=True)
    closed, _ = classify_mn(ideal, m, k, delta)
    witnesses = unbreakable_zero_set(ideal, m, k, delta)
    assert bool(witnesses) == (weak and not closed)
    for x in witnesses:
        assert ring.pow(x, m) == 0 and ring.pow(x, k) not in delta(ideal).members


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 24), div=st.integers(0, 5), m=st.integers(2, 4))
def test_weakly_closed_propagates_to_larger_second_exponents(n, div, m):
    ring = zmod(n)
    lattice = enumerate_ideals(ring).proper()
    ideal = lattice[div % len(lattice)]
    for k in range(1, m):
        if classify_mn(ideal, m, k, weakly=True)[0]:
            for bigger in range(k + 1, m + 1):
                assert classify_mn(ideal, m, bigger, weakly=True)[0]


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 24), div=st.integers(0, 5), mn=mn_strategy)
def test_closed_implies_weakly_closed(n, div, mn):
    ring = zmod(n)
    lattice = enumerate_ideals(ring).proper()
    ideal = lattice[div % len(lattice)]
    m, k = mn
    if classify_mn(ideal, m, k)[0]:
        assert classify_mn(ideal, m, k, weakly=True)[0]
