"""Ring constructions beyond products: modules and trivial extensions,
localizations at multiplicative sets, amalgamations along a homomorphism,
and the ideal-transport helpers (images, preimages, shape decompositions)
the rest of the library builds on.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import prod

from .errors import (
    HomInvalidError,
    InvalidMultSetError,
    NonHomogeneousIdealError,
    NotAnIdealError,
    RingMismatchError,
    SemanticExprError,
    UnsupportedIdealShapeError,
)
from .rings import (
    Elem,
    FiniteRing,
    ProductRing,
    RingHom,
    Zmod,
    additive_order,
    characteristic,
    identity_hom,
    zmod,
    _lookup_or_register,
)
from .ideals import (
    Ideal,
    QuotientRing,
    enumerate_ideals,
    _closure_members,
)


# --------------------------------------------------------------------------
# modules over modular rings, and trivial extensions
# --------------------------------------------------------------------------

def _int_rep(ring: FiniteRing, i: int) -> int:
    """An integer representative of ``i`` for rings built from Z_n."""
    if isinstance(ring, Zmod):
        return i
    if isinstance(ring, QuotientRing):
        return _int_rep(ring.base, ring.reps[i])
    raise SemanticExprError(
        f"no canonical module action for base ring {ring.expr}"
    )


class RModule:
    """The module Z_d1 x ... x Z_dk over a modular base ring.

    Elements are mixed-radix indices (most significant component first, so
    the all-zero element is index 0).  Module axioms are verified
    exhaustively at construction.
    """

    def __init__(self, base: FiniteRing, dims):
        dims = tuple(int(d) for d in dims)
        if not dims or any(d < 1 for d in dims):
            raise SemanticExprError(f"invalid module dimensions {dims}")
        self.base = base
        self.dims = dims
        self.size = prod(dims)
        weights = []
        w = 1
        for d in reversed(dims):
            weights.append(w)
            w *= d
        self._weights = tuple(reversed(weights))
        self._reps = [_int_rep(base, r) for r in range(base.size)]
        self._check_axioms()

    def unpack(self, i: int) -> tuple[int, ...]:
        out = []
        for d, w in zip(self.dims, self._weights):
            out.append((i // w) % d)
        return tuple(out)

    def pack(self, comps) -> int:
        return sum(c * w for c, w in zip(comps, self._weights))

    def add(self, i: int, j: int) -> int:
        a, b = self.unpack(i), self.unpack(j)
        return self.pack((x + y) % d for x, y, d in zip(a, b, self.dims))

    def neg(self, i: int) -> int:
        return self.pack((-x) % d for x, d in zip(self.unpack(i), self.dims))

    def scalar(self, r: int, i: int) -> int:
        rep = self._reps[r]
        return self.pack((rep * x) % d for x, d in zip(self.unpack(i), self.dims))

    def format(self, i: int) -> str:
        comps = self.unpack(i)
        if len(comps) == 1:
            return str(comps[0])
        return "(" + ",".join(str(c) for c in comps) + ")"

    def elements(self) -> range:
        return range(self.size)

    def _check_axioms(self) -> None:
        base = self.base
        for r in range(base.size):
            for s in range(base.size):
                rs = base.mul(r, s)
                radds = base.add(r, s)
                for m in range(self.size):
                    if self.scalar(r, self.scalar(s, m)) != self.scalar(rs, m):
                        raise SemanticExprError(
                            f"module dims {self.dims} are not compatible with "
                            f"{base.expr}: scalar action is not associative"
                        )
                    if self.scalar(radds, m) != self.add(
                        self.scalar(r, m), self.scalar(s, m)
                    ):
                        raise SemanticExprError(
                            f"module dims {self.dims} are not compatible with "
                            f"{base.expr}: scalar action is not additive"
                        )
        for m in range(self.size):
            if self.scalar(base.one, m) != m:
                raise SemanticExprError(
                    f"module dims {self.dims}: 1 does not act as identity"
                )


class TrivialExtension(FiniteRing):
    """R (+) M with multiplication (r, m)(s, n) = (rs, rn + sm).

    The carrier packs (r, m) as r * |M| + m.
    """

    def __init__(self, base: FiniteRing, module: RModule):
        self.base = base
        self.module = module
        self._msize = module.size
        dims_text = ",".join(str(d) for d in module.dims)
        key = ("triv", base.key, module.dims)
        expr = f"triv({base.expr},M[{dims_text}])"
        super().__init__(base.size * module.size, base.one * module.size, key, expr)

    def pack(self, r: int, m: int) -> int:
        return r * self._msize + m

    def unpack(self, i: int) -> tuple[int, int]:
        return divmod(i, self._msize)

    def _raw_add(self, i: int, j: int) -> int:
        r1, m1 = divmod(i, self._msize)
        r2, m2 = divmod(j, self._msize)
        return self.base.add(r1, r2) * self._msize + self.module.add(m1, m2)

    def _raw_mul(self, i: int, j: int) -> int:
        r1, m1 = divmod(i, self._msize)
        r2, m2 = divmod(j, self._msize)
        mixed = self.module.add(
            self.module.scalar(r1, m2), self.module.scalar(r2, m1)
        )
        return self.base.mul(r1, r2) * self._msize + mixed

    def _raw_neg(self, i: int) -> int:
        r, m = divmod(i, self._msize)
        return self.base.neg(r) * self._msize + self.module.neg(m)

    def _format(self, i: int) -> str:
        r, m = divmod(i, self._msize)
        return f"({self.base.elem_name(r)}, {self.module.format(m)})"


def trivial_extension(base: FiniteRing, dims) -> TrivialExtension:
    dims = tuple(int(d) for d in dims)
    key = ("triv", base.key, dims)
    return _lookup_or_register(
        key, lambda: TrivialExtension(base, RModule(base, dims))
    )


def triv_ideal(triv: TrivialExtension, base_ideal: Ideal, module_part) -> Ideal:
    """The homogeneous ideal I (+) N, validated as an ideal of the extension."""
    if base_ideal.ring != triv.base:
        raise RingMismatchError("base ideal does not belong to the extension's base")
    members = frozenset(
        triv.pack(r, m) for r in base_ideal.members for m in module_part
    )
    return Ideal(triv, members)


def triv_ideal_parts(ideal: Ideal) -> tuple[Ideal, frozenset[int]]:
    """Split a homogeneous ideal of R (+) M into (I, N).

    Raises when the ideal is not of the product shape I (+) N; skew ideals
    (such as the one generated by (2, 1) in Z4 (+) Z4) do exist.
    """
    ring = ideal.ring
    if not isinstance(ring, TrivialExtension):
        raise UnsupportedIdealShapeError(
            f"not an ideal of a trivial extension: {ring.expr}"
        )
    base_part = {r for r in range(ring.base.size)
                 if any(ring.pack(r, m) in ideal.members
                        for m in range(ring.module.size))}
    module_part = {m for m in range(ring.module.size)
                   if any(ring.pack(r, m) in ideal.members for r in base_part)}
    rebuilt = {ring.pack(r, m) for r in base_part for m in module_part}
    if rebuilt != ideal.members:
        raise NonHomogeneousIdealError(
            f"ideal {ideal.display} of {ring.expr} is not of the form I (+) N"
        )
    return Ideal(ring.base, frozenset(base_part)), frozenset(module_part)


# --------------------------------------------------------------------------
# product-ring ideal transport
# --------------------------------------------------------------------------

def product_ideal(ring: ProductRing, i1: Ideal, i2: Ideal) -> Ideal:
    if i1.ring != ring.left or i2.ring != ring.right:
        raise RingMismatchError("component ideals do not match the product's factors")
    members = frozenset(
        ring.pack(a, b) for a in i1.members for b in i2.members
    )
    return Ideal(ring, members)


def product_ideal_parts(ideal: Ideal) -> tuple[Ideal, Ideal]:
    """Split an ideal of R1 x R2 into its component ideals.

    Every ideal of a direct product splits this way (project along the
    idempotents (1,0) and (0,1)).
    """
    ring = ideal.ring
    if not isinstance(ring, ProductRing):
        raise UnsupportedIdealShapeError(
            f"not an ideal of a product ring: {ring.expr}"
        )
    left = {ring.unpack(i)[0] for i in ideal.members}
    right = {ring.unpack(i)[1] for i in ideal.members}
    rebuilt = {ring.pack(a, b) for a in left for b in right}
    if rebuilt != ideal.members:
        raise UnsupportedIdealShapeError(
            f"ideal {ideal.display} of {ring.expr} does not split componentwise"
        )
    return Ideal(ring.left, frozenset(left)), Ideal(ring.right, frozenset(right))


# --------------------------------------------------------------------------
# localization
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MultSet:
    """A multiplicative set: contains 1, closed under products, omits 0."""

    ring: FiniteRing
    members: frozenset[int]

    def __post_init__(self):
        ring, members = self.ring, self.members
        if ring.one not in members:
            raise InvalidMultSetError("a multiplicative set must contain 1")
        if 0 in members:
            raise InvalidMultSetError("a multiplicative set must not contain 0")
        for s in members:
            for t in members:
                if ring.mul(s, t) not in members:
                    raise InvalidMultSetError(
                        f"not multiplicatively closed: {s} * {t}"
                    )

    @property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


def mult_closure(ring: FiniteRing, gens) -> MultSet:
    """The multiplicative set generated by ``gens`` (and 1)."""
    members = {ring.one}
    frontier = [ring.one]
    for g in gens:
        if not 0 <= g < ring.size:
            raise InvalidMultSetError(f"generator out of range: {g}")
        if g not in members:
            members.add(g)
            frontier.append(g)
    while frontier:
        x = frontier.pop()
        for g in list(members):
            y = ring.mul(x, g)
            if y not in members:
                members.add(y)
                frontier.append(y)
    if 0 in members:
        raise InvalidMultSetError(
            "multiplicative closure of the generators contains 0"
        )
    return MultSet(ring, frozenset(members))


class LocalizedRing(FiniteRing):
    """The localization S^-1 R of a finite ring.

    Elements are equivalence classes of pairs (r, s) with s in S, where
    (r, s) ~ (r', s') iff some t in S kills rs' - r's.  Since the torsion
    set T = { x : exists t in S with t x = 0 } is an ideal, the relation
    reduces to rs' - r's in T, which is how classes are computed.
    """

    def __init__(self, base: FiniteRing, mset: MultSet):
        self.base = base
        self.mset = mset
        s_sorted = mset.sorted_members
        torsion = frozenset(
            x for x in range(base.size)
            if any(base.mul(t, x) == 0 for t in s_sorted)
        )
        self.torsion = torsion
        reps: list[tuple[int, int]] = []
        pair_class: dict[tuple[int, int], int] = {}
        for r in range(base.size):
            for s in s_sorted:
                for idx, (r0, s0) in enumerate(reps):
                    if base.sub(base.mul(r, s0), base.mul(r0, s)) in torsion:
                        pair_class[(r, s)] = idx
                        break
                else:
                    pair_class[(r, s)] = len(reps)
                    reps.append((r, s))
        self.reps = tuple(reps)
        self.pair_class = pair_class
        set_text = "{" + ",".join(str(s) for s in s_sorted) + "}"
        key = ("loc", base.key, s_sorted)
        expr = f"loc({base.expr},{set_text})"
        super().__init__(
            len(reps), pair_class[(base.one, base.one)], key, expr
        )

    def _raw_add(self, i: int, j: int) -> int:
        r, s = self.reps[i]
        rp, sp = self.reps[j]
        num = self.base.add(self.base.mul(r, sp), self.base.mul(rp, s))
        return self.pair_class[(num, self.base.mul(s, sp))]

    def _raw_mul(self, i: int, j: int) -> int:
        r, s = self.reps[i]
        rp, sp = self.reps[j]
        return self.pair_class[(self.base.mul(r, rp), self.base.mul(s, sp))]

    def _raw_neg(self, i: int) -> int:
        r, s = self.reps[i]
        return self.pair_class[(self.base.neg(r), s)]

    def _format(self, i: int) -> str:
        r, s = self.reps[i]
        return f"{self.base.elem_name(r)}/{self.base.elem_name(s)}"


def localize(base: FiniteRing, mset: MultSet) -> tuple[LocalizedRing, RingHom]:
    """The localization together with the canonical map r -> r/1."""
    if mset.ring != base:
        raise RingMismatchError("multiplicative set does not belong to the ring")
    key = ("loc", base.key, mset.sorted_members)
    ring = _lookup_or_register(key, lambda: LocalizedRing(base, mset))
    mapping = tuple(ring.pair_class[(r, base.one)] for r in range(base.size))
    return ring, RingHom(base, ring, mapping, display="loc")


# --------------------------------------------------------------------------
# amalgamation along a homomorphism
# --------------------------------------------------------------------------

class AmalgamRing(FiniteRing):
    """A join^f J: pairs (a, f(a)+j) in A x B under componentwise operations.

    The carrier is indexed as a * |J| + (position of j in sorted J), which
    puts (0, 0) at index 0.
    """

    def __init__(self, A: FiniteRing, B: FiniteRing, f: RingHom, J: Ideal):
        self.A = A
        self.B = B
        self.f = f
        self.J = J
        js = J.sorted_members
        self.jsorted = js
        self.jpos = {j: p for p, j in enumerate(js)}
        self._jsize = len(js)
        self._sub: SubringRing | None = None
        key = ("amal", A.key, B.key, f.mapping, js)
        expr = (
            f"amal({A.expr},{B.expr},{_hom_display(f)},{J.gens_display})"
        )
        super().__init__(A.size * len(js), A.one * len(js), key, expr)

    def decode(self, i: int) -> tuple[int, int]:
        """Index -> (a, b) with b = f(a) + j in B."""
        a, p = divmod(i, self._jsize)
        return a, self.B.add(self.f.mapping[a], self.jsorted[p])

    def encode(self, a: int, b: int) -> int:
        j = self.B.sub(b, self.f.mapping[a])
        return a * self._jsize + self.jpos[j]

    def _raw_add(self, i: int, k: int) -> int:
        a1, p1 = divmod(i, self._jsize)
        a2, p2 = divmod(k, self._jsize)
        j = self.B.add(self.jsorted[p1], self.jsorted[p2])
        return self.A.add(a1, a2) * self._jsize + self.jpos[j]

    def _raw_mul(self, i: int, k: int) -> int:
        a1, b1 = self.decode(i)
        a2, b2 = self.decode(k)
        a = self.A.mul(a1, a2)
        j = self.B.sub(self.B.mul(b1, b2), self.f.mapping[a])
        return a * self._jsize + self.jpos[j]

    def _raw_neg(self, i: int) -> int:
        a, p = divmod(i, self._jsize)
        return self.A.neg(a) * self._jsize + self.jpos[self.B.neg(self.jsorted[p])]

    def _format(self, i: int) -> str:
        a, b = self.decode(i)
        return f"({self.A.elem_name(a)}, {self.B.elem_name(b)})"

    def subring(self) -> "SubringRing":
        """The subring f(A) + J of B that the second coordinate ranges over."""
        if self._sub is None:
            carrier = sorted(
                {
                    self.B.add(self.f.mapping[a], j)
                    for a in range(self.A.size)
                    for j in self.jsorted
                }
            )
            self._sub = _lookup_or_register(
                ("subring", self.B.key, self.f.mapping, self.jsorted),
                lambda: SubringRing(self, tuple(carrier)),
            )
        return self._sub


class SubringRing(FiniteRing):
    """The subring f(A) + J of the amalgam's codomain B.

    Elements are positions into the sorted carrier of B-indices; 0 sits at
    position 0 because the carrier contains 0 and is sorted.
    """

    def __init__(self, amalgam: AmalgamRing, carrier: tuple[int, ...]):
        self.ambient = amalgam.B
        self.carrier = carrier
        self.pos = {b: p for p, b in enumerate(carrier)}
        key = ("subring", amalgam.B.key, amalgam.f.mapping, amalgam.jsorted)
        expr = f"subimage({amalgam.expr})"
        super().__init__(len(carrier), self.pos[amalgam.B.one], key, expr)

    def _raw_add(self, i: int, j: int) -> int:
        return self.pos[self.ambient.add(self.carrier[i], self.carrier[j])]

    def _raw_mul(self, i: int, j: int) -> int:
        return self.pos[self.ambient.mul(self.carrier[i], self.carrier[j])]

    def _raw_neg(self, i: int) -> int:
        return self.pos[self.ambient.neg(self.carrier[i])]

    def _format(self, i: int) -> str:
        return self.ambient.elem_name(self.carrier[i])

    def embedding(self) -> RingHom:
        return RingHom(self, self.ambient, self.carrier, display="embed")


def _hom_display(f: RingHom) -> str:
    if f.display in ("id", "canon", "inj") or f.display.startswith("map["):
        return f.display
    return "map[" + ",".join(str(v) for v in f.mapping) + "]"


def amalgamate(A: FiniteRing, B: FiniteRing, f: RingHom, J: Ideal) -> AmalgamRing:
    if f.domain != A or f.codomain != B:
        raise HomInvalidError(
            f"homomorphism {f.display} does not map {A.expr} into {B.expr}"
        )
    if J.ring != B:
        raise RingMismatchError("amalgamation ideal must live in the codomain")
    key = ("amal", A.key, B.key, f.mapping, J.sorted_members)
    return _lookup_or_register(key, lambda: AmalgamRing(A, B, f, J))


def duplicate(A: FiniteRing, I: Ideal) -> AmalgamRing:
    """The amalgamated duplication of A along I (amalgamation with f = id)."""
    return amalgamate(A, A, identity_hom(A), I)


def amalgam_ideal(amalgam: AmalgamRing, shape: str, X: Ideal) -> Ideal:
    """Build an ideal of the amalgam from one of the two canonical shapes.

    shape "IJ":   X is an ideal of A;  members are (i, f(i)+j), i in X, j in J.
    shape "Kbar": X is an ideal of the subring f(A)+J;  members are the
                  pairs whose second coordinate lies in X.
    """
    js = amalgam._jsize
    if shape == "IJ":
        if X.ring != amalgam.A:
            raise RingMismatchError("IJ-shaped ideal needs an ideal of A")
        members = frozenset(
            a * js + p for a in X.members for p in range(js)
        )
        return Ideal(amalgam, members)
    if shape == "Kbar":
        sub = amalgam.subring()
        if X.ring != sub:
            raise RingMismatchError("Kbar-shaped ideal needs an ideal of f(A)+J")
        in_b = {sub.carrier[k] for k in X.members}
        members = frozenset(
            i for i in range(amalgam.size) if amalgam.decode(i)[1] in in_b
        )
        return Ideal(amalgam, members)
    raise ValueError(f"unknown amalgam ideal shape {shape!r}")


def amalgam_ideal_parts(ideal: Ideal) -> tuple[str, Ideal]:
    """Recognize an amalgam ideal as IJ- or Kbar-shaped.

    When an ideal matches both shapes the IJ decomposition is preferred.
    Raises when the ideal is neither.
    """
    ring = ideal.ring
    if not isinstance(ring, AmalgamRing):
        raise UnsupportedIdealShapeError(
            f"not an ideal of an amalgamation: {ring.expr}"
        )
    js = ring._jsize
    a_part = {i // js for i in ideal.members}
    if ideal.members == {a * js + p for a in a_part for p in range(js)}:
        try:
            return "IJ", Ideal(ring.A, frozenset(a_part))
        except NotAnIdealError:
            pass
    sub = ring.subring()
    b_part = {ring.decode(i)[1] for i in ideal.members}
    if ideal.members == {
        i for i in range(ring.size) if ring.decode(i)[1] in b_part
    }:
        try:
            return "Kbar", Ideal(sub, frozenset(sub.pos[b] for b in b_part))
        except NotAnIdealError:
            pass
    raise UnsupportedIdealShapeError(
        f"ideal {ideal.display} of {ring.expr} is neither IJ- nor Kbar-shaped"
    )


# --------------------------------------------------------------------------
# homomorphism helpers and ideal transport along maps
# --------------------------------------------------------------------------

def canon_hom(domain: Zmod, codomain: Zmod) -> RingHom:
    """The reduction Z_n -> Z_m for m dividing n."""
    if not isinstance(domain, Zmod) or not isinstance(codomain, Zmod):
        raise HomInvalidError("canon expects modular rings on both sides")
    if domain.n % codomain.n != 0:
        raise HomInvalidError(
            f"no canonical map Z{domain.n} -> Z{codomain.n}: "
            f"{codomain.n} does not divide {domain.n}"
        )
    return RingHom(
        domain, codomain, tuple(x % codomain.n for x in range(domain.n)),
        display="canon",
    )


def inj_hom(target: TrivialExtension) -> RingHom:
    """The inclusion r -> (r, 0) of the base into its trivial extension."""
    if not isinstance(target, TrivialExtension):
        raise HomInvalidError("inj expects a trivial extension as codomain")
    mapping = tuple(target.pack(r, 0) for r in range(target.base.size))
    return RingHom(target.base, target, mapping, display="inj")


def char_hom(domain: Zmod, codomain: FiniteRing) -> RingHom | None:
    """The map x -> x * 1 from Z_k, when the codomain's characteristic
    divides k; None otherwise."""
    if domain.n % characteristic(codomain) != 0:
        return None
    mapping = []
    acc = 0
    for _ in range(domain.n):
        mapping.append(acc)
        acc = codomain.add(acc, codomain.one)
    display = "canon" if isinstance(codomain, Zmod) else "map"
    return RingHom(domain, codomain, tuple(mapping), display=display)


def hom_preimage(f: RingHom, J: Ideal) -> Ideal:
    if J.ring != f.codomain:
        raise RingMismatchError("preimage expects an ideal of the codomain")
    members = frozenset(
        a for a in range(f.domain.size) if f.mapping[a] in J.members
    )
    return Ideal(f.domain, members)


def hom_image(f: RingHom, I: Ideal) -> Ideal:
    """The ideal generated by f(I); warns if f(I) itself is not an ideal."""
    if I.ring != f.domain:
        raise RingMismatchError("image expects an ideal of the domain")
    raw = frozenset(f.mapping[i] for i in I.members)
    closed = _closure_members(f.codomain, raw)
    if closed != raw:
        warnings.warn(
            f"image of {I.display} under {f.display} is not an ideal; "
            "closing up",
            stacklevel=2,
        )
    return Ideal(f.codomain, closed)


def hom_ideal(mode: str, f: RingHom, X: Ideal) -> Ideal:
    ops = {"image": hom_image, "preimage": hom_preimage}
    if mode not in ops:
        raise ValueError(f"unknown ideal transport mode {mode!r}")
    return ops[mode](f, X)


# --------------------------------------------------------------------------
# isomorphism search
# --------------------------------------------------------------------------

def _profile(ring: FiniteRing, x: int) -> tuple:
    nil_index = 0
    p = x
    for k in range(1, ring.size + 1):
        if p == 0:
            nil_index = k
            break
        p = ring.mul(p, x)
    return (
        additive_order(ring, x),
        nil_index,
        ring.mul(x, x) == x,
        ring.is_unit(x),
    )


def find_isomorphism(r1: FiniteRing, r2: FiniteRing) -> list[int] | None:
    """A ring isomorphism r1 -> r2 as an index mapping, or None.

    Backtracking over invariant-matched candidates; intended for small
    carriers (profile pruning keeps size <= 16 fast).
    """
    if r1.size != r2.size:
        return None
    n = r1.size
    prof1 = [_profile(r1, x) for x in range(n)]
    prof2 = [_profile(r2, x) for x in range(n)]
    if sorted(prof1) != sorted(prof2):
        return None
    candidates = {
        x: [y for y in range(n) if prof2[y] == prof1[x]] for x in range(n)
    }
    mapping = [-1] * n
    used = [False] * n

    def consistent(x: int, y: int) -> bool:
        for a in range(n):
            fa = mapping[a]
            if fa == -1:
                continue
            s = mapping[r1.add(a, x)]
            if s != -1 and r2.add(fa, y) != s:
                return False
            p = mapping[r1.mul(a, x)]
            if p != -1 and r2.mul(fa, y) != p:
                return False
        return True

    def backtrack(x: int) -> bool:
        if x == n:
            return all(
                mapping[r1.add(a, b)] == r2.add(mapping[a], mapping[b])
                and mapping[r1.mul(a, b)] == r2.mul(mapping[a], mapping[b])
                for a in range(n)
                for b in range(n)
            )
        for y in candidates[x]:
            if used[y] or not consistent(x, y):
                continue
            mapping[x] = y
            used[y] = True
            if backtrack(x + 1):
                return True
            mapping[x] = -1
            used[y] = False
        return False

    return list(mapping) if backtrack(0) else None
