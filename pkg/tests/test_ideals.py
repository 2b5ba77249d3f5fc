"""Ideal enumeration, lattice structure, radicals, and quotients."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ringlab import (
    enumerate_ideals,
    ideal_closure,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    jacobson_radical,
    nilradical,
    quotient_ring,
    radical,
    zmod,
)
from ringlab.constructions import find_isomorphism
from ringlab.errors import RingMismatchError
from ringlab.ideals import (
    ideal_algebra,
    is_maximal_ideal,
    is_prime_ideal,
    principal_ideal,
    unit_ideal,
    zero_ideal,
)


def divisor_count(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


@given(n=st.integers(2, 48))
def test_cyclic_ring_has_one_ideal_per_divisor(n):
    assert len(enumerate_ideals(zmod(n))) == divisor_count(n)


def test_z12_lattice_is_sorted_and_complete():
    lat = enumerate_ideals(zmod(12))
    assert [i.display for i in lat] == [
        "{0}",
        "{0,6}",
        "{0,4,8}",
        "{0,3,6,9}",
        "{0,2,4,6,8,10}",
        "{0,1,2,3,4,5,6,7,8,9,10,11}",
    ]
    assert [i.display for i in lat.proper()] == [i.display for i in lat][:-1]
    for pos, ideal in enumerate(lat):
        assert lat.position(ideal) == pos
        assert lat.by_members(ideal.members) is ideal


def test_ideal_closure_and_display():
    z12 = zmod(12)
    i4 = ideal_closure(z12, [4])
    assert i4.sorted_members == (0, 4, 8)
    assert i4.display == "{0,4,8}"
    assert i4.gens_display == "{4,8}"
    assert ideal_closure(z12, i4.members).members == i4.members  # idempotent
    assert i4.contains(8) and not i4.contains(2)
    assert i4.issubset(ideal_closure(z12, [2]))


@given(
    n=st.integers(2, 24),
    gens1=st.sets(st.integers(0, 23), max_size=3),
    extra=st.sets(st.integers(0, 23), max_size=2),
)
def test_closure_is_monotone_in_the_generators(n, gens1, extra):
    z = zmod(n)
    a = ideal_closure(z, [g % n for g in gens1])
    b = ideal_closure(z, [g % n for g in gens1 | extra])
    assert a.members <= b.members


def test_ideal_algebra_on_z12():
    z12 = zmod(12)
    i4, i6 = ideal_closure(z12, [4]), ideal_closure(z12, [6])
    assert ideal_sum(i4, i6).display == "{0,2,4,6,8,10}"
    assert ideal_intersect(i4, i6).display == "{0}"
    assert ideal_product(i4, i6).display == "{0}"
    assert ideal_algebra("sum", i4, i6).members == ideal_sum(i4, i6).members
    with pytest.raises(RingMismatchError):
        ideal_sum(i4, ideal_closure(zmod(8), [4]))


def test_radicals_frozen_values():
    z12, z16 = zmod(12), zmod(16)
    assert radical(ideal_closure(z12, [4])).display == "{0,2,4,6,8,10}"
    assert nilradical(z12).sorted_members == (0, 6)
    assert jacobson_radical(z16).sorted_members == tuple(range(0, 16, 2))
    # finite commutative rings are artinian, so the two radicals agree
    for n in (4, 6, 8, 9, 12, 16):
        assert nilradical(zmod(n)).members == jacobson_radical(zmod(n)).members


def test_prime_and_maximal_flags_on_z12():
    z12 = zmod(12)
    i2, i3 = ideal_closure(z12, [2]), ideal_closure(z12, [3])
    assert is_prime_ideal(i2) and is_maximal_ideal(i2)
    assert is_prime_ideal(i3) and is_maximal_ideal(i3)
    for gens in ([0], [4], [6]):
        assert not is_prime_ideal(ideal_closure(z12, gens))
    assert not is_prime_ideal(unit_ideal(z12))


def test_zero_unit_principal_ideals():
    z8 = zmod(8)
    assert zero_ideal(z8).is_zero and zero_ideal(z8).is_proper
    assert not unit_ideal(z8).is_proper
    assert principal_ideal(z8, 2).sorted_members == (0, 2, 4, 6)
    assert zero_ideal(z8).gens_display == "{0}"


def test_quotient_ring_with_projection():
    z12 = zmod(12)
    i4 = ideal_closure(z12, [4])
    q, proj = quotient_ring(z12, i4)
    assert q.size == 4
    assert proj.kernel() == i4.members
    assert proj.is_surjective()
    for a in range(12):
        for b in range(12):
            assert proj.apply(z12.add(a, b)) == q.add(proj.apply(a), proj.apply(b))
    assert find_isomorphism(q, zmod(4)) is not None


def test_quotient_of_z16_by_8_is_z8():
    z16 = zmod(16)
    q, _ = quotient_ring(z16, ideal_closure(z16, [8]))
    assert q.size == 8
    assert find_isomorphism(q, zmod(8)) is not None
