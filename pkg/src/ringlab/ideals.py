"""Ideals, ideal lattices, radicals, and quotient rings.

Ideals are immutable sets of element indices validated at construction.  The
full ideal lattice of a ring is enumerated by breadth-first closure (adjoin
one element, close under addition and external multiplication) and cached on
the ring.  Lattice order is deterministic: by size, then by sorted members.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RingMismatchError, NotAnIdealError, SizeBoundExceededError
from .rings import FiniteRing, RingHom, size_bound, _lookup_or_register


@dataclass(frozen=True)
class Ideal:
    """An ideal of a finite commutative ring, as a frozenset of indices."""

    ring: FiniteRing
    members: frozenset[int]

    def __post_init__(self):
        ring, members = self.ring, self.members
        if 0 not in members:
            raise NotAnIdealError("an ideal must contain 0")
        if any(not 0 <= x < ring.size for x in members):
            raise NotAnIdealError("ideal member out of range")
        for x in members:
            for y in members:
                if ring.add(x, y) not in members:
                    raise NotAnIdealError(
                        f"not closed under addition: {x} + {y}"
                    )
            for r in range(ring.size):
                if ring.mul(r, x) not in members:
                    raise NotAnIdealError(
                        f"not closed under multiplication: {r} * {x}"
                    )

    @property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @property
    def is_proper(self) -> bool:
        return len(self.members) != self.ring.size

    @property
    def is_zero(self) -> bool:
        return len(self.members) == 1

    def contains(self, i: int) -> bool:
        return i in self.members

    def issubset(self, other: "Ideal") -> bool:
        return self.members <= other.members

    @property
    def display(self) -> str:
        return "{" + ",".join(str(x) for x in self.sorted_members) + "}"

    @property
    def gens_display(self) -> str:
        """Generator-set text for DSL round-trips (nonzero members, or {0})."""
        nonzero = [x for x in self.sorted_members if x != 0]
        if not nonzero:
            return "{0}"
        return "{" + ",".join(str(x) for x in nonzero) + "}"

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.sorted_members)

    def __repr__(self) -> str:
        return f"<Ideal {self.display} of {self.ring.expr}>"


def _closure_members(ring: FiniteRing, seed) -> frozenset[int]:
    """Members of the smallest ideal containing ``seed``.

    Scalar-saturate the seed, then close additively.  The additive closure of
    a scalar-saturated set is already scalar-saturated, since r*(x+y) = rx+ry,
    and a finite additive submonoid is a subgroup, so the result is an ideal.
    """
    saturated = {0}
    for g in seed:
        for r in range(ring.size):
            saturated.add(ring.mul(r, g))
    group = {0}
    frontier = [0]
    sat = tuple(saturated)
    while frontier:
        x = frontier.pop()
        for g in sat:
            y = ring.add(x, g)
            if y not in group:
                group.add(y)
                frontier.append(y)
    return frozenset(group)


def ideal_closure(ring: FiniteRing, gens) -> Ideal:
    """The ideal generated by ``gens`` (an iterable of element indices)."""
    gens = list(gens)
    if any(not 0 <= g < ring.size for g in gens):
        raise NotAnIdealError(
            f"generator out of range for {ring.expr}: {gens}"
        )
    return Ideal(ring, _closure_members(ring, gens))


def principal_ideal(ring: FiniteRing, g: int) -> Ideal:
    return ideal_closure(ring, [g])


def zero_ideal(ring: FiniteRing) -> Ideal:
    return Ideal(ring, frozenset({0}))


def unit_ideal(ring: FiniteRing) -> Ideal:
    return Ideal(ring, frozenset(range(ring.size)))


class IdealLattice:
    """All ideals of a ring, in deterministic (size, members) order."""

    def __init__(self, ring: FiniteRing, ideals: tuple[Ideal, ...]):
        self.ring = ring
        self.ideals = ideals
        self._position = {ideal.members: k for k, ideal in enumerate(ideals)}

    def __iter__(self):
        return iter(self.ideals)

    def __len__(self) -> int:
        return len(self.ideals)

    def __getitem__(self, k: int) -> Ideal:
        return self.ideals[k]

    def proper(self) -> tuple[Ideal, ...]:
        return tuple(ideal for ideal in self.ideals if ideal.is_proper)

    def position(self, ideal: Ideal) -> int:
        return self._position[ideal.members]

    def by_members(self, members) -> Ideal:
        return self.ideals[self._position[frozenset(members)]]

    def __repr__(self) -> str:
        return f"<IdealLattice of {self.ring.expr}: {len(self.ideals)} ideals>"


def enumerate_ideals(ring: FiniteRing) -> IdealLattice:
    """Enumerate every ideal of ``ring`` by breadth-first closure."""
    if ring._lattice is not None:
        return ring._lattice
    if ring.size > size_bound():
        raise SizeBoundExceededError(
            f"ideal enumeration on ring of size {ring.size} exceeds "
            f"size bound {size_bound()}"
        )
    zero = frozenset({0})
    seen = {zero}
    queue = [zero]
    while queue:
        current = queue.pop()
        for a in range(ring.size):
            if a in current:
                continue
            grown = _closure_members(ring, current | {a})
            if grown not in seen:
                seen.add(grown)
                queue.append(grown)
    ordered = sorted(seen, key=lambda m: (len(m), tuple(sorted(m))))
    lattice = IdealLattice(ring, tuple(Ideal(ring, m) for m in ordered))
    ring._lattice = lattice
    return lattice


def _require_same_ring(i: Ideal, j: Ideal) -> FiniteRing:
    if i.ring != j.ring:
        raise RingMismatchError(
            f"ideals of {i.ring.expr} and {j.ring.expr} cannot be combined"
        )
    return i.ring


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    ring = _require_same_ring(i, j)
    return Ideal(ring, _closure_members(ring, i.members | j.members))


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    ring = _require_same_ring(i, j)
    pairwise = {ring.mul(a, b) for a in i.members for b in j.members}
    return Ideal(ring, _closure_members(ring, pairwise))


def ideal_intersect(i: Ideal, j: Ideal) -> Ideal:
    ring = _require_same_ring(i, j)
    return Ideal(ring, i.members & j.members)


def ideal_algebra(mode: str, i: Ideal, j: Ideal) -> Ideal:
    ops = {"sum": ideal_sum, "product": ideal_product, "intersect": ideal_intersect}
    if mode not in ops:
        raise ValueError(f"unknown ideal operation {mode!r}")
    return ops[mode](i, j)


def radical(ideal: Ideal) -> Ideal:
    """All x with x^k in the ideal for some k >= 1."""
    ring = ideal.ring
    members = set()
    for x in range(ring.size):
        power = x
        seen = set()
        while power not in seen:
            if power in ideal.members:
                members.add(x)
                break
            seen.add(power)
            power = ring.mul(power, x)
    return Ideal(ring, frozenset(members))


_NILRADICAL: dict[tuple, Ideal] = {}
_JACOBSON: dict[tuple, Ideal] = {}


def nilradical(ring: FiniteRing) -> Ideal:
    cached = _NILRADICAL.get(ring.key)
    if cached is None:
        cached = _NILRADICAL.setdefault(ring.key, radical(zero_ideal(ring)))
    return cached


def jacobson_radical(ring: FiniteRing) -> Ideal:
    """All x such that 1 - x*r is a unit for every r."""
    cached = _JACOBSON.get(ring.key)
    if cached is not None:
        return cached
    unit_set = frozenset(ring.units())
    members = frozenset(
        x
        for x in range(ring.size)
        if all(
            ring.sub(ring.one, ring.mul(x, r)) in unit_set
            for r in range(ring.size)
        )
    )
    return _JACOBSON.setdefault(ring.key, Ideal(ring, members))


def is_prime_ideal(ideal: Ideal) -> bool:
    """Proper, and ab in I implies a in I or b in I."""
    if not ideal.is_proper:
        return False
    ring = ideal.ring
    outside = [a for a in range(ring.size) if a not in ideal.members]
    return all(
        ring.mul(a, b) not in ideal.members
        for a in outside
        for b in outside
    )


def is_maximal_ideal(ideal: Ideal) -> bool:
    """Proper, and contained in no proper ideal other than itself."""
    if not ideal.is_proper:
        return False
    lattice = enumerate_ideals(ideal.ring)
    return all(
        not (ideal.members < other.members)
        for other in lattice.proper()
    )


class QuotientRing(FiniteRing):
    """Quotient by an ideal; elements are cosets indexed in first-seen order.

    Scanning base elements in index order makes the zero coset (the ideal
    itself) land at index 0.
    """

    def __init__(self, base: FiniteRing, ideal: Ideal):
        self.base = base
        self.ideal = ideal
        coset_of: list[int | None] = [None] * base.size
        reps: list[int] = []
        cosets: list[frozenset[int]] = []
        for x in range(base.size):
            if coset_of[x] is None:
                label = len(reps)
                coset = frozenset(base.add(x, i) for i in ideal.members)
                for y in coset:
                    coset_of[y] = label
                reps.append(x)
                cosets.append(coset)
        self.reps = tuple(reps)
        self.cosets = tuple(cosets)
        self.coset_of = tuple(coset_of)
        key = ("quotient", base.key, ideal.sorted_members)
        expr = f"quot({base.expr},{ideal.gens_display})"
        super().__init__(len(reps), self.coset_of[base.one], key, expr)

    def _raw_add(self, i: int, j: int) -> int:
        return self.coset_of[self.base.add(self.reps[i], self.reps[j])]

    def _raw_mul(self, i: int, j: int) -> int:
        return self.coset_of[self.base.mul(self.reps[i], self.reps[j])]

    def _raw_neg(self, i: int) -> int:
        return self.coset_of[self.base.neg(self.reps[i])]

    def _format(self, i: int) -> str:
        return f"[{self.base.elem_name(self.reps[i])}]"


def quotient_ring(base: FiniteRing, ideal: Ideal) -> tuple[QuotientRing, RingHom]:
    """The quotient ring together with the natural projection."""
    if ideal.ring != base:
        raise RingMismatchError("ideal does not belong to the ring being quotiented")
    key = ("quotient", base.key, ideal.sorted_members)
    ring = _lookup_or_register(key, lambda: QuotientRing(base, ideal))
    projection = RingHom(base, ring, ring.coset_of, display="canon")
    return ring, projection
