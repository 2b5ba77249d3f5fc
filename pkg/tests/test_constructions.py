"""Products, idealizations, localizations, amalgams, and isomorphism search."""

import pytest

from ringlab import (
    MultSet,
    amalgam_ideal,
    amalgam_ideal_parts,
    amalgamate,
    duplicate,
    enumerate_ideals,
    hom_image,
    hom_preimage,
    ideal_closure,
    inj_hom,
    localize,
    mult_closure,
    product,
    product_ideal,
    product_ideal_parts,
    triv_ideal,
    triv_ideal_parts,
    trivial_extension,
    zmod,
)
from ringlab.constructions import canon_hom, find_isomorphism
from ringlab.errors import (
    InvalidMultSetError,
    NonHomogeneousIdealError,
    RinglabError,
    UnsupportedIdealShapeError,
)
from ringlab.ideals import unit_ideal, zero_ideal
from ringlab.parser import parse_ring


# ---------------------------------------------------------------- products


def test_every_ideal_of_a_product_of_cyclic_rings_splits():
    p = parse_ring("Z2 x Z4")
    lat = enumerate_ideals(p)
    assert len(lat) == 6  # 2 ideals in Z2 times 3 in Z4
    for ideal in lat:
        left, right = product_ideal_parts(ideal)
        assert product_ideal(p, left, right).members == ideal.members


# ------------------------------------------------------- trivial extensions


def test_trivial_extension_multiplication_law():
    t = trivial_extension(zmod(4), (4,))
    assert t.size == 16
    for i in range(t.size):
        for j in range(t.size):
            a, m = t.unpack(i)
            b, n = t.unpack(j)
            prod_r = t.base.mul(a, b)
            prod_m = t.module.add(t.module.scalar(a, n), t.module.scalar(b, m))
            assert t.mul(i, j) == t.pack(prod_r, prod_m)


def test_trivial_extension_ideal_counts():
    counts = {
        "triv(Z2,M[2])": 3,
        "triv(Z4,M[4])": 7,
        "triv(Z2,M[2,2])": 6,
        "triv(Z8,M[8])": 13,
    }
    for expr, expected in counts.items():
        assert len(enumerate_ideals(parse_ring(expr))) == expected


def test_triv_ideal_roundtrip_and_skew_ideals():
    t = parse_ring("triv(Z8,M[8])")
    split, skew = 0, 0
    for ideal in enumerate_ideals(t):
        try:
            base_part, module_part = triv_ideal_parts(ideal)
        except NonHomogeneousIdealError:
            skew += 1
            continue
        split += 1
        assert triv_ideal(t, base_part, module_part).members == ideal.members
    assert (split, skew) == (10, 3)


def test_trivial_extension_rejects_bad_module_dimension():
    with pytest.raises(RinglabError):
        trivial_extension(zmod(2), (3,))  # 3 does not divide char 2


# ------------------------------------------------------------ localizations


def test_mult_set_validation():
    z12 = zmod(12)
    with pytest.raises(InvalidMultSetError):
        MultSet(z12, frozenset({0, 1}))  # contains zero
    with pytest.raises(InvalidMultSetError):
        MultSet(z12, frozenset({3, 9}))  # missing one
    with pytest.raises(InvalidMultSetError):
        MultSet(z12, frozenset({1, 2}))  # not closed: 2*2=4 missing


def test_mult_closure_from_generators():
    z12 = zmod(12)
    assert sorted(mult_closure(z12, [3, 5]).members) == [1, 3, 5, 9]
    assert sorted(mult_closure(z12, []).members) == [1]


def test_localization_sizes_and_torsion():
    z12 = zmod(12)
    cases = [
        ([3], 4, {0, 4, 8}),
        ([2, 5], 3, None),
        ([5, 7, 11], 12, {0}),  # units only: nothing collapses
    ]
    for gens, size, torsion in cases:
        loc, can = localize(z12, mult_closure(z12, gens))
        assert loc.size == size
        if torsion is not None:
            assert loc.torsion == frozenset(torsion)
        assert can.kernel() == loc.torsion
    odds = MultSet(z12, frozenset({1, 3, 5, 7, 9, 11}))
    assert localize(z12, odds)[0].size == 4


# ----------------------------------------------------------------- amalgams


def test_amalgam_size_is_base_times_ideal():
    for expr in ("amal(Z4,Z4,id,{2})", "amal(Z8,Z4,canon,{2})"):
        am = parse_ring(expr)
        assert am.size == am.A.size * len(am.J.members)


def test_duplicate_canonicalizes_to_an_amalgam():
    z4 = zmod(4)
    am = duplicate(z4, ideal_closure(z4, [2]))
    assert am.expr == "amal(Z4,Z4,id,{2})"
    assert am is parse_ring("dup(Z4,{2})")
    for i in range(am.size):
        assert am.encode(*am.decode(i)) == i


def test_amalgam_subring_carrier():
    am = parse_ring("amal(Z8,Z4,canon,{2})")
    sub = am.subring()
    f, j = am.f, am.J
    expected = {f.codomain.add(f.apply(a), jj) for a in range(8) for jj in j.members}
    assert set(sub.carrier) == expected
    emb = sub.embedding()
    assert emb.is_injective()


def test_amalgam_ideal_shapes_roundtrip():
    z4 = zmod(4)
    am = duplicate(z4, ideal_closure(z4, [2]))
    ij = amalgam_ideal(am, "IJ", ideal_closure(z4, [2]))
    shape, part = amalgam_ideal_parts(ij)
    assert shape == "IJ" and part.members == ideal_closure(z4, [2]).members
    sub = am.subring()
    kbar = amalgam_ideal(am, "Kbar", zero_ideal(sub))
    shape2, part2 = amalgam_ideal_parts(kbar)
    assert shape2 == "Kbar" and part2.is_zero
    # the zero ideal of this amalgam fits neither canonical shape
    with pytest.raises(UnsupportedIdealShapeError):
        amalgam_ideal_parts(zero_ideal(am))


# ------------------------------------------------------- isomorphism search


def test_find_isomorphism_frozen_pairs():
    assert find_isomorphism(zmod(6), product(zmod(2), zmod(3))) is not None
    assert find_isomorphism(zmod(4), product(zmod(2), zmod(2))) is None
    t = parse_ring("triv(Z2,M[2])")
    am = amalgamate(t.base, t, inj_hom(t), triv_ideal(t, zero_ideal(t.base), t.module.elements()))
    assert find_isomorphism(t, am) is not None


# ------------------------------------------------------------- hom helpers


def test_hom_image_and_preimage():
    f = canon_hom(zmod(8), zmod(4))
    img = hom_image(f, ideal_closure(zmod(8), [2]))
    assert img.sorted_members == (0, 2)
    pre = hom_preimage(f, ideal_closure(zmod(4), [2]))
    assert pre.sorted_members == (0, 2, 4, 6)


def test_hom_image_warns_when_it_must_close_up():
    t = parse_ring("triv(Z2,M[2])")
    f = inj_hom(t)
    with pytest.warns(UserWarning, match="not an ideal"):
        img = hom_image(f, unit_ideal(t.base))
    assert img.display == "{0,1,2,3}"
