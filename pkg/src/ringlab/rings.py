"""Finite commutative rings with identity, represented over index carriers.

Every ring's elements are the integers ``0 .. size-1`` with ``0`` the additive
identity.  A ring is identified by a structural ``key`` (a nested tuple naming
the construction) and carries a canonical DSL expression ``expr`` that parses
back to an equal ring.  Constructors intern rings by key, so structurally
identical constructions return the same object.

Operation tables are precomputed for rings of size at most ``_TABLE_LIMIT``
and exposed as ``add_table`` / ``mul_table`` for hot loops; larger rings fall
back to the raw evaluators.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import (
    HomInvalidError,
    InvalidModulusError,
    RingMismatchError,
    SizeBoundExceededError,
)

DEFAULT_SIZE_BOUND = 4096
_TABLE_LIMIT = 256

_INTERNED: dict[tuple, "FiniteRing"] = {}


def size_bound() -> int:
    """Largest ring size the library will construct.

    Override with the ``RINGLAB_SIZE_BOUND`` environment variable; values that
    do not parse as a positive integer fall back to the default.
    """
    raw = os.environ.get("RINGLAB_SIZE_BOUND", "").strip()
    if raw.isdigit() and int(raw) > 0:
        return int(raw)
    return DEFAULT_SIZE_BOUND


class FiniteRing:
    """Base class; subclasses implement ``_raw_add``/``_raw_mul``/``_raw_neg``.

    Subclasses must assign any fields used by the raw evaluators *before*
    calling ``super().__init__``, which builds the operation tables.
    """

    def __init__(self, size: int, one: int, key: tuple, expr: str):
        bound = size_bound()
        if size > bound:
            raise SizeBoundExceededError(
                f"ring of size {size} exceeds size bound {bound}"
            )
        self.size = size
        self.one = one
        self.key = key
        self.expr = expr
        self.add_table: list[tuple[int, ...]] | None = None
        self.mul_table: list[tuple[int, ...]] | None = None
        self._neg_table: tuple[int, ...] | None = None
        if size <= _TABLE_LIMIT:
            self._build_tables()
        self._unit_memo: dict[int, bool] = {}
        self._check_identities()
        # Caches attached lazily by other modules (ideal lattice, radicals).
        self._lattice = None

    # -- raw operations (override in subclasses) ---------------------------
    def _raw_add(self, i: int, j: int) -> int:
        raise NotImplementedError

    def _raw_mul(self, i: int, j: int) -> int:
        raise NotImplementedError

    def _raw_neg(self, i: int) -> int:
        raise NotImplementedError

    # -- table plumbing ----------------------------------------------------
    def _build_tables(self) -> None:
        n = self.size
        self.add_table = [
            tuple(self._raw_add(i, j) for j in range(n)) for i in range(n)
        ]
        self.mul_table = [
            tuple(self._raw_mul(i, j) for j in range(n)) for i in range(n)
        ]
        self._neg_table = tuple(self._raw_neg(i) for i in range(n))

    def _check_identities(self) -> None:
        for x in range(self.size):
            if self.add(0, x) != x:
                raise AssertionError(f"{self.expr}: 0 is not additively neutral")
            if self.mul(self.one, x) != x:
                raise AssertionError(f"{self.expr}: 1 is not multiplicatively neutral")

    # -- arithmetic on indices ----------------------------------------------
    def add(self, i: int, j: int) -> int:
        if self.add_table is not None:
            return self.add_table[i][j]
        return self._raw_add(i, j)

    def mul(self, i: int, j: int) -> int:
        if self.mul_table is not None:
            return self.mul_table[i][j]
        return self._raw_mul(i, j)

    def neg(self, i: int) -> int:
        if self._neg_table is not None:
            return self._neg_table[i]
        return self._raw_neg(i)

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg(j))

    def pow(self, i: int, k: int) -> int:
        """``i`` raised to the ``k``-th power, ``k >= 0`` (``i**0 == 1``)."""
        if k < 0:
            raise ValueError("negative exponent")
        result = self.one
        base = i
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    # -- elements ------------------------------------------------------------
    def elements(self) -> range:
        return range(self.size)

    def elem(self, i: int) -> "Elem":
        if not 0 <= i < self.size:
            raise ValueError(f"element index {i} out of range for {self.expr}")
        return Elem(self, i)

    def _format(self, i: int) -> str:
        return str(i)

    def elem_name(self, i: int) -> str:
        return self._format(i)

    def is_unit(self, i: int) -> bool:
        memo = self._unit_memo
        if i not in memo:
            memo[i] = any(self.mul(i, j) == self.one for j in range(self.size))
        return memo[i]

    def units(self) -> list[int]:
        return [i for i in range(self.size) if self.is_unit(i)]

    # -- identity -------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteRing) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"<Ring {self.expr} (size {self.size})>"


@dataclass(frozen=True)
class Elem:
    """An element of a ring, for convenience arithmetic in tests and scripts.

    Operators require both operands to be elements of the same ring.
    """

    ring: FiniteRing
    index: int

    def _coerced(self, other: object) -> "Elem | None":
        if not isinstance(other, Elem):
            return None
        if other.ring != self.ring:
            raise RingMismatchError(
                f"elements of {self.ring.expr} and {other.ring.expr} cannot be combined"
            )
        return other

    def __add__(self, other: object):
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return Elem(self.ring, self.ring.add(self.index, rhs.index))

    def __sub__(self, other: object):
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return Elem(self.ring, self.ring.sub(self.index, rhs.index))

    def __mul__(self, other: object):
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return Elem(self.ring, self.ring.mul(self.index, rhs.index))

    def __neg__(self):
        return Elem(self.ring, self.ring.neg(self.index))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return Elem(self.ring, self.ring.pow(self.index, k))

    @property
    def name(self) -> str:
        return self.ring.elem_name(self.index)

    def is_zero(self) -> bool:
        return self.index == 0

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.index)

    def __repr__(self) -> str:
        return f"{self.name} in {self.ring.expr}"


class Zmod(FiniteRing):
    """The ring of integers modulo ``n``."""

    def __init__(self, n: int):
        if n < 1:
            raise InvalidModulusError(f"modulus must be a positive integer, got {n}")
        self.n = n
        super().__init__(n, 1 % n, ("zmod", n), f"Z{n}")

    def _raw_add(self, i: int, j: int) -> int:
        return (i + j) % self.n

    def _raw_mul(self, i: int, j: int) -> int:
        return (i * j) % self.n

    def _raw_neg(self, i: int) -> int:
        return (-i) % self.n


class ProductRing(FiniteRing):
    """Direct product with componentwise operations.

    The carrier packs a pair ``(i, j)`` as ``i * right.size + j``, which makes
    the packing associative: ``(A x B) x C`` and ``A x (B x C)`` index their
    triples identically.  The ``product`` factory left-normalizes nesting, so
    the right factor of a constructed product is never itself a product.
    """

    def __init__(self, left: FiniteRing, right: FiniteRing):
        self.left = left
        self.right = right
        self._rsize = right.size
        one = left.one * right.size + right.one
        key = ("product", left.key, right.key)
        expr = f"{left.expr} x {right.expr}"
        super().__init__(left.size * right.size, one, key, expr)

    def pack(self, i: int, j: int) -> int:
        return i * self._rsize + j

    def unpack(self, k: int) -> tuple[int, int]:
        return divmod(k, self._rsize)

    def _raw_add(self, i: int, j: int) -> int:
        a1, b1 = divmod(i, self._rsize)
        a2, b2 = divmod(j, self._rsize)
        return self.left.add(a1, a2) * self._rsize + self.right.add(b1, b2)

    def _raw_mul(self, i: int, j: int) -> int:
        a1, b1 = divmod(i, self._rsize)
        a2, b2 = divmod(j, self._rsize)
        return self.left.mul(a1, a2) * self._rsize + self.right.mul(b1, b2)

    def _raw_neg(self, i: int) -> int:
        a, b = divmod(i, self._rsize)
        return self.left.neg(a) * self._rsize + self.right.neg(b)

    def _format(self, i: int) -> str:
        a, b = divmod(i, self._rsize)
        return f"({self.left.elem_name(a)}, {self.right.elem_name(b)})"


def _lookup_or_register(key: tuple, build) -> FiniteRing:
    ring = _INTERNED.get(key)
    if ring is None:
        ring = _INTERNED.setdefault(key, build())
    return ring


def zmod(n: int) -> Zmod:
    if n < 1:
        raise InvalidModulusError(f"modulus must be a positive integer, got {n}")
    return _lookup_or_register(("zmod", n), lambda: Zmod(n))


def _product_factors(ring: FiniteRing) -> list[FiniteRing]:
    if isinstance(ring, ProductRing):
        return _product_factors(ring.left) + [ring.right]
    return [ring]


def product(r1: FiniteRing, r2: FiniteRing) -> ProductRing:
    """Direct product, left-normalized over all nested factors."""
    factors = _product_factors(r1) + _product_factors(r2)
    ring = factors[0]
    for factor in factors[1:]:
        key = ("product", ring.key, factor.key)
        ring = _lookup_or_register(key, lambda r=ring, f=factor: ProductRing(r, f))
    return ring


def characteristic(ring: FiniteRing) -> int:
    """Additive order of 1 (equals 1 exactly for the zero ring)."""
    k, acc = 1, ring.one
    while acc != 0:
        acc = ring.add(acc, ring.one)
        k += 1
    return k


def additive_order(ring: FiniteRing, i: int) -> int:
    k, acc = 1, i
    while acc != 0:
        acc = ring.add(acc, i)
        k += 1
    return k


@dataclass(frozen=True)
class RingHom:
    """A unital ring homomorphism given by its full value table.

    Validation is exhaustive: additivity and multiplicativity are checked on
    every pair of domain elements, and ``1 -> 1``.
    """

    domain: FiniteRing
    codomain: FiniteRing
    mapping: tuple[int, ...]
    display: str = field(default="map", compare=False)

    def __post_init__(self):
        dom, cod, f = self.domain, self.codomain, self.mapping
        if len(f) != dom.size:
            raise HomInvalidError(
                f"mapping has {len(f)} entries for a domain of size {dom.size}"
            )
        if any(not 0 <= v < cod.size for v in f):
            raise HomInvalidError("mapping value out of range for the codomain")
        if f[0] != 0:
            raise HomInvalidError("homomorphism must send 0 to 0")
        if f[dom.one] != cod.one:
            raise HomInvalidError("homomorphism must send 1 to 1")
        for a in range(dom.size):
            fa = f[a]
            for b in range(a, dom.size):
                if f[dom.add(a, b)] != cod.add(fa, f[b]):
                    raise HomInvalidError(
                        f"not additive on ({dom.elem_name(a)}, {dom.elem_name(b)})"
                    )
                if f[dom.mul(a, b)] != cod.mul(fa, f[b]):
                    raise HomInvalidError(
                        f"not multiplicative on ({dom.elem_name(a)}, {dom.elem_name(b)})"
                    )

    def apply(self, i: int) -> int:
        return self.mapping[i]

    def __call__(self, x: Elem) -> Elem:
        if x.ring != self.domain:
            raise RingMismatchError(
                f"hom domain is {self.domain.expr}, got element of {x.ring.expr}"
            )
        return Elem(self.codomain, self.mapping[x.index])

    def image(self) -> frozenset[int]:
        return frozenset(self.mapping)

    def kernel(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.mapping) if v == 0)

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == self.domain.size

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.codomain.size

    def __repr__(self) -> str:
        return f"<Hom {self.display}: {self.domain.expr} -> {self.codomain.expr}>"


def identity_hom(ring: FiniteRing) -> RingHom:
    return RingHom(ring, ring, tuple(range(ring.size)), display="id")


def compose_hom(outer: RingHom, inner: RingHom) -> RingHom:
    """``outer . inner`` (apply ``inner`` first)."""
    if inner.codomain != outer.domain:
        raise RingMismatchError("homomorphisms do not compose: codomain/domain differ")
    mapping = tuple(outer.mapping[v] for v in inner.mapping)
    return RingHom(
        inner.domain,
        outer.codomain,
        mapping,
        display=f"({outer.display} . {inner.display})",
    )
