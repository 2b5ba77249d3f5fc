"""Expansion functions on ideal lattices.

An expansion function maps ideals to ideals so that every ideal is contained
in its image and the map is monotone with respect to inclusion.  Some derived
expansions are only defined on ideals of a particular shape (componentwise
ideals of a product, homogeneous ideals of a trivial extension, the two
canonical shapes of amalgam ideals); those carry a ``supports`` predicate and
raise outside their domain.

Every expansion carries a canonical DSL label; two expansions on the same
ring with the same label are interchangeable, and counterexample reports can
be replayed by parsing the label back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AxiomViolationError,
    RingMismatchError,
    UnsupportedIdealShapeError,
)
from .rings import FiniteRing, ProductRing, RingHom
from .ideals import (
    Ideal,
    QuotientRing,
    enumerate_ideals,
    ideal_closure,
    ideal_intersect,
    ideal_sum,
    radical,
    zero_ideal,
)
from .constructions import (
    AmalgamRing,
    LocalizedRing,
    SubringRing,
    TrivialExtension,
    amalgam_ideal,
    amalgam_ideal_parts,
    hom_image,
    hom_preimage,
    localize,
    product_ideal,
    product_ideal_parts,
    triv_ideal,
    triv_ideal_parts,
)

_VALIDATE_LIMIT = 512

_DELTA_INTERNED: dict[tuple, "ExpansionFn"] = {}


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of checking the two expansion axioms over a lattice."""

    ok: bool
    kind: str | None = None  # "expansive" or "monotone"
    witness: tuple = ()

    def describe(self) -> str:
        if self.ok:
            return "ok"
        if self.kind == "expansive":
            return f"not expansive at {self.witness[0].display}"
        i, j = self.witness
        return f"not monotone on {i.display} <= {j.display}"


def _sample_ideals(ring: FiniteRing) -> list[Ideal]:
    seen = {}
    for x in range(min(ring.size, 12)):
        ideal = ideal_closure(ring, [x])
        seen.setdefault(ideal.members, ideal)
    return sorted(seen.values(), key=lambda i: (len(i), i.sorted_members))


def check_expansion_axioms(ring: FiniteRing, fn, supports=None) -> AxiomCheck:
    """Check expansiveness and monotonicity of ``fn`` over the ring's ideals.

    Exhaustive over the full lattice for rings of size at most 512; sampled
    on principal ideals above that.  Ideals outside ``supports`` (and pairs
    with an unsupported member) are not checked.
    """
    if ring.size <= _VALIDATE_LIMIT:
        pool = list(enumerate_ideals(ring))
    else:
        pool = _sample_ideals(ring)
    if supports is not None:
        pool = [ideal for ideal in pool if supports(ideal)]
    images = []
    for ideal in pool:
        image = fn(ideal)
        if not ideal.members <= image.members:
            return AxiomCheck(False, "expansive", (ideal,))
        images.append(image)
    for a, first in enumerate(pool):
        for b, second in enumerate(pool):
            if a == b or not first.members <= second.members:
                continue
            if not images[a].members <= images[b].members:
                return AxiomCheck(False, "monotone", (first, second))
    return AxiomCheck(True)


class ExpansionFn:
    """A validated expansion function with a canonical label.

    ``validated_exhaustively`` is False when the ring was too large for a
    full-lattice axiom check and sampling was used instead.
    """

    def __init__(self, ring: FiniteRing, label: str, fn, supports=None):
        self.ring = ring
        self.label = label
        self._fn = fn
        self._supports = supports
        self._cache: dict[frozenset, Ideal] = {}
        self.validated_exhaustively = ring.size <= _VALIDATE_LIMIT
        check = check_expansion_axioms(ring, fn, supports)
        if not check.ok:
            raise AxiomViolationError(
                f"{label} is not an expansion function on {ring.expr}: "
                f"{check.describe()}"
            )

    def supports(self, ideal: Ideal) -> bool:
        if ideal.ring != self.ring:
            return False
        return self._supports is None or self._supports(ideal)

    def __call__(self, ideal: Ideal) -> Ideal:
        if ideal.ring != self.ring:
            raise RingMismatchError(
                f"expansion {self.label} lives on {self.ring.expr}, "
                f"got an ideal of {ideal.ring.expr}"
            )
        cached = self._cache.get(ideal.members)
        if cached is None:
            if self._supports is not None and not self._supports(ideal):
                raise UnsupportedIdealShapeError(
                    f"expansion {self.label} does not support ideal "
                    f"{ideal.display} of {self.ring.expr}"
                )
            cached = self._fn(ideal)
            self._cache[ideal.members] = cached
        return cached

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExpansionFn)
            and self.ring.key == other.ring.key
            and self.label == other.label
        )

    def __hash__(self) -> int:
        return hash((self.ring.key, self.label))

    def __repr__(self) -> str:
        return f"<ExpansionFn {self.label} on {self.ring.expr}>"


def _interned_delta(ring: FiniteRing, label: str, build) -> ExpansionFn:
    key = (ring.key, label)
    delta = _DELTA_INTERNED.get(key)
    if delta is None:
        delta = _DELTA_INTERNED.setdefault(key, build())
    return delta


def builtin_delta(ring: FiniteRing, kind: str, gens=()) -> ExpansionFn:
    """The stock expansions: identity, radical, and sum-with-a-fixed-ideal."""
    if kind == "id":
        return _interned_delta(
            ring, "id", lambda: ExpansionFn(ring, "id", lambda i: i)
        )
    if kind == "rad":
        return _interned_delta(
            ring, "rad", lambda: ExpansionFn(ring, "rad", radical)
        )
    if kind == "addk":
        fixed = ideal_closure(ring, gens)
        label = f"addk({fixed.gens_display})"
        return _interned_delta(
            ring, label,
            lambda: ExpansionFn(ring, label, lambda i: ideal_sum(i, fixed)),
        )
    raise ValueError(f"unknown builtin expansion {kind!r}")


def delta_compose(outer: ExpansionFn, inner: ExpansionFn) -> ExpansionFn:
    """outer(inner(I)), labelled comp(outer,inner)."""
    if outer.ring != inner.ring:
        raise RingMismatchError("composed expansions must live on the same ring")
    label = f"comp({outer.label},{inner.label})"

    def supports(ideal: Ideal) -> bool:
        return inner.supports(ideal) and outer.supports(inner(ideal))

    sup = None if inner._supports is None and outer._supports is None else supports
    return _interned_delta(
        outer.ring, label,
        lambda: ExpansionFn(outer.ring, label, lambda i: outer(inner(i)), sup),
    )


def check_fip(delta: ExpansionFn) -> tuple[bool, tuple[Ideal, Ideal] | None]:
    """Does delta(I & J) == delta(I) & delta(J) hold on the whole lattice?

    Pairs are scanned in lattice order (position i <= j); the first failing
    pair is returned.  Pairs involving unsupported ideals are skipped.
    """
    lattice = list(enumerate_ideals(delta.ring))
    for a, first in enumerate(lattice):
        if not delta.supports(first):
            continue
        for second in lattice[a:]:
            if not delta.supports(second):
                continue
            meet = ideal_intersect(first, second)
            if not delta.supports(meet):
                continue
            lhs = delta(meet)
            rhs = ideal_intersect(delta(first), delta(second))
            if lhs.members != rhs.members:
                return False, (first, second)
    return True, None


# --------------------------------------------------------------------------
# derived expansions on constructed rings
# --------------------------------------------------------------------------

def delta_quotient(delta: ExpansionFn, quotient: QuotientRing) -> ExpansionFn:
    """The induced expansion on R/I: push forward delta of the pullback."""
    if delta.ring != quotient.base:
        raise RingMismatchError(
            "quotient expansion needs an expansion on the base ring"
        )
    projection = RingHom(
        quotient.base, quotient, quotient.coset_of, display="canon"
    )
    label = f"q({delta.label})"

    def fn(ideal: Ideal) -> Ideal:
        return hom_image(projection, delta(hom_preimage(projection, ideal)))

    def supports(ideal: Ideal) -> bool:
        return delta.supports(hom_preimage(projection, ideal))

    sup = None if delta._supports is None else supports
    return _interned_delta(
        quotient, label, lambda: ExpansionFn(quotient, label, fn, sup)
    )


def delta_product(d1: ExpansionFn, d2: ExpansionFn, ring: ProductRing) -> ExpansionFn:
    """Componentwise expansion on a product ring."""
    if ring.left != d1.ring or ring.right != d2.ring:
        raise RingMismatchError(
            "product expansion components must match the product's factors"
        )
    label = f"prod({d1.label},{d2.label})"

    def fn(ideal: Ideal) -> Ideal:
        left, right = product_ideal_parts(ideal)
        return product_ideal(ring, d1(left), d2(right))

    def supports(ideal: Ideal) -> bool:
        try:
            left, right = product_ideal_parts(ideal)
        except UnsupportedIdealShapeError:
            return False
        return d1.supports(left) and d2.supports(right)

    sup = None if d1._supports is None and d2._supports is None else supports
    return _interned_delta(ring, label, lambda: ExpansionFn(ring, label, fn, sup))


def delta_idealization(delta: ExpansionFn, triv: TrivialExtension) -> ExpansionFn:
    """On R (+) M, send the homogeneous ideal I (+) N to delta(I) (+) M.

    Only homogeneous ideals are supported; skew ideals raise.
    """
    if delta.ring != triv.base:
        raise RingMismatchError(
            "idealization expansion needs an expansion on the base ring"
        )
    label = f"plus({delta.label})"
    full_module = frozenset(range(triv.module.size))

    def fn(ideal: Ideal) -> Ideal:
        base_part, _ = triv_ideal_parts(ideal)
        return triv_ideal(triv, delta(base_part), full_module)

    def supports(ideal: Ideal) -> bool:
        try:
            base_part, _ = triv_ideal_parts(ideal)
        except UnsupportedIdealShapeError:
            return False
        return delta.supports(base_part)

    return _interned_delta(triv, label, lambda: ExpansionFn(triv, label, fn, supports))


def delta_amalgam(
    delta: ExpansionFn, delta1: ExpansionFn, amalgam: AmalgamRing
) -> ExpansionFn:
    """On A join^f J: IJ-shaped ideals map through delta on A, Kbar-shaped
    ideals through delta1 on the subring f(A)+J.

    Ideals matching both shapes use the IJ route.  Mismatched choices of
    (delta, delta1) can genuinely fail the monotonicity axiom across
    mixed-shape inclusions, in which case construction raises.
    """
    sub = amalgam.subring()
    if delta.ring != amalgam.A:
        raise RingMismatchError("first expansion must live on A")
    if delta1.ring != sub:
        raise RingMismatchError("second expansion must live on f(A)+J")
    label = f"bow({delta.label},{delta1.label})"

    def fn(ideal: Ideal) -> Ideal:
        shape, part = amalgam_ideal_parts(ideal)
        if shape == "IJ":
            return amalgam_ideal(amalgam, "IJ", delta(part))
        return amalgam_ideal(amalgam, "Kbar", delta1(part))

    def supports(ideal: Ideal) -> bool:
        try:
            shape, part = amalgam_ideal_parts(ideal)
        except UnsupportedIdealShapeError:
            return False
        if shape == "IJ":
            return delta.supports(part)
        return delta1.supports(part)

    return _interned_delta(
        amalgam, label, lambda: ExpansionFn(amalgam, label, fn, supports)
    )


def delta_localization(delta: ExpansionFn, local: LocalizedRing) -> ExpansionFn:
    """On S^-1 R: extend delta of the contraction along the canonical map."""
    if delta.ring != local.base:
        raise RingMismatchError(
            "localization expansion needs an expansion on the base ring"
        )
    _, canonical = localize(local.base, local.mset)
    label = f"locext({delta.label})"

    def fn(ideal: Ideal) -> Ideal:
        return hom_image(canonical, delta(hom_preimage(canonical, ideal)))

    def supports(ideal: Ideal) -> bool:
        return delta.supports(hom_preimage(canonical, ideal))

    sup = None if delta._supports is None else supports
    return _interned_delta(local, label, lambda: ExpansionFn(local, label, fn, sup))


def is_delta_gamma_hom(f: RingHom, delta: ExpansionFn, gamma: ExpansionFn) -> bool:
    """Does delta(f^-1(J)) == f^-1(gamma(J)) hold for every ideal J of the
    codomain?  Unsupported ideals on either side count as failure."""
    if delta.ring != f.domain or gamma.ring != f.codomain:
        raise RingMismatchError(
            "expansions must live on the homomorphism's domain and codomain"
        )
    for J in enumerate_ideals(f.codomain):
        if not gamma.supports(J):
            return False
        pulled = hom_preimage(f, J)
        if not delta.supports(pulled):
            return False
        if delta(pulled).members != hom_preimage(f, gamma(J)).members:
            return False
    return True
