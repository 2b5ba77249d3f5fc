"""Core ring arithmetic, interning, size bounds, and homomorphisms."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab import characteristic, product, zmod
from ringlab.constructions import canon_hom, char_hom, inj_hom
from ringlab.errors import (
    HomInvalidError,
    InvalidModulusError,
    SizeBoundExceededError,
)
from ringlab.parser import parse_ring
from ringlab.rings import (
    DEFAULT_SIZE_BOUND,
    RingHom,
    additive_order,
    compose_hom,
    identity_hom,
    size_bound,
)

small_moduli = st.integers(min_value=2, max_value=64)


@given(n=small_moduli, a=st.integers(0, 200), b=st.integers(0, 200))
def test_zmod_matches_integer_arithmetic(n, a, b):
    r = zmod(n)
    x, y = a % n, b % n
    assert r.add(x, y) == (a + b) % n
    assert r.mul(x, y) == (a * b) % n
    assert r.neg(x) == (-a) % n
    assert r.sub(x, y) == (a - b) % n


@given(n=small_moduli, a=st.integers(0, 63), i=st.integers(1, 6), j=st.integers(1, 6))
def test_pow_is_additive_in_the_exponent(n, a, i, j):
    r = zmod(n)
    x = a % n
    assert r.pow(x, i + j) == r.mul(r.pow(x, i), r.pow(x, j))


def test_zmod_rejects_nonpositive_modulus():
    for bad in (0, -3):
        with pytest.raises(InvalidModulusError):
            zmod(bad)


def test_size_bound_env_override(monkeypatch):
    monkeypatch.setenv("RINGLAB_SIZE_BOUND", "10")
    assert size_bound() == 10
    with pytest.raises(SizeBoundExceededError):
        zmod(3989)  # modulus no other test constructs, so never interned
    monkeypatch.setenv("RINGLAB_SIZE_BOUND", "banana")
    assert size_bound() == DEFAULT_SIZE_BOUND


def test_rings_are_interned_by_structure():
    assert zmod(8) is zmod(8)
    assert product(zmod(2), zmod(4)) is product(zmod(2), zmod(4))
    assert parse_ring("Z8") is zmod(8)


def test_units_and_is_unit():
    z12 = zmod(12)
    assert sorted(z12.units()) == [1, 5, 7, 11]
    assert z12.is_unit(5) and not z12.is_unit(4)


def test_characteristic_and_additive_order():
    z12 = zmod(12)
    assert characteristic(z12) == 12
    assert additive_order(z12, 4) == 3
    assert additive_order(z12, 0) == 1


@given(m=st.integers(2, 16), n=st.integers(2, 16))
def test_characteristic_of_product_is_lcm(m, n):
    p = product(zmod(m), zmod(n))
    assert characteristic(p) == math.lcm(m, n)


def test_product_pack_unpack_roundtrip():
    p = product(zmod(3), zmod(4))
    for i in range(p.size):
        a, b = p.unpack(i)
        assert p.pack(a, b) == i
    assert p.mul(p.pack(2, 3), p.pack(2, 2)) == p.pack(1, 2)


def test_elem_wrapper_operations():
    z8 = zmod(8)
    e = z8.elem(3)
    assert (e + z8.elem(7)).index == 2
    assert (e * z8.elem(5)).index == 7
    assert (-e).index == 5
    assert (e ** 2).index == 1


def test_canon_hom_between_cyclic_rings():
    f = canon_hom(zmod(8), zmod(4))
    assert f.mapping == tuple(i % 4 for i in range(8))
    assert f.kernel() == frozenset({0, 4})
    assert f.is_surjective() and not f.is_injective()
    with pytest.raises(HomInvalidError):
        canon_hom(zmod(4), zmod(8))


def test_hom_composition_and_identity():
    f = canon_hom(zmod(8), zmod(4))
    g = canon_hom(zmod(4), zmod(2))
    gf = compose_hom(g, f)
    assert gf.mapping == canon_hom(zmod(8), zmod(2)).mapping
    ident = identity_hom(zmod(8))
    assert ident.display == "id"
    assert compose_hom(ident, ident).mapping == ident.mapping


def test_hom_validation_rejects_non_homomorphisms():
    with pytest.raises(HomInvalidError):
        RingHom(zmod(4), zmod(4), (0, 3, 2, 1))
    with pytest.raises(HomInvalidError):
        RingHom(zmod(4), zmod(2), (0, 0, 0, 0))  # does not send 1 to 1


def test_char_hom_exists_only_when_characteristic_matches():
    assert char_hom(zmod(4), zmod(8)) is None
    f = char_hom(zmod(4), product(zmod(4), zmod(2)))
    assert f is not None and f.apply(1) == f.codomain.pack(1, 1)


def test_inj_hom_embeds_the_base_of_an_extension():
    t = parse_ring("triv(Z2,M[2])")
    f = inj_hom(t)
    assert f.domain is t.base and f.codomain is t
    assert f.is_injective()
