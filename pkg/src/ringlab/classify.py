"""Membership tests for the ideal classes the verifier reasons about.

Every classifier returns ``(holds, witness)`` where ``witness`` is ``None``
when the property holds and otherwise the first violating datum in a fixed
deterministic order (elements ascending, tuples lexicographic, ideal tuples
in lattice order).  Witnesses make counterexample reports replayable.

The ``weakly`` variants exempt hypotheses whose product is zero: a weakly-X
ideal may fail X only on tuples that multiply to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations

from .errors import ImproperIdealError, NTooLargeError
from .ideals import Ideal, enumerate_ideals, ideal_product, zero_ideal
from .expansions import ExpansionFn

ABSORB_N_CAP = 3


@dataclass(frozen=True)
class MNParams:
    """Exponent pair for power-closure properties; both must be >= 1."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("exponents must be positive")


def _require_proper(ideal: Ideal) -> None:
    if not ideal.is_proper:
        raise ImproperIdealError(
            f"classification needs a proper ideal, got all of {ideal.ring.expr}"
        )


def _target_members(ideal: Ideal, delta: ExpansionFn | None):
    return (delta(ideal) if delta is not None else ideal).members


def classify_mn(
    ideal: Ideal,
    m: int,
    n: int,
    delta: ExpansionFn | None = None,
    weakly: bool = False,
) -> tuple[bool, int | None]:
    """Is every a with a^m in I (nonzero if weakly) such that a^n lands in
    delta(I)?  With delta omitted the target is I itself."""
    _require_proper(ideal)
    MNParams(m, n)
    return _classify_mn(ideal, m, n, delta, weakly)


@lru_cache(maxsize=None)
def _classify_mn(ideal, m, n, delta, weakly):
    ring = ideal.ring
    members = ideal.members
    target = _target_members(ideal, delta)
    for a in range(ring.size):
        am = ring.pow(a, m)
        if am not in members or (weakly and am == 0):
            continue
        if ring.pow(a, n) not in target:
            return False, a
    return True, None


def is_delta_primary(
    ideal: Ideal,
    delta: ExpansionFn | None = None,
    weakly: bool = False,
) -> tuple[bool, tuple[int, int] | None]:
    """ab in I (nonzero if weakly) forces a in I or b in delta(I).

    With delta omitted this is the (weakly) prime ideal test.
    """
    _require_proper(ideal)
    return _is_delta_primary(ideal, delta, weakly)


@lru_cache(maxsize=None)
def _is_delta_primary(ideal, delta, weakly):
    ring = ideal.ring
    members = ideal.members
    target = _target_members(ideal, delta)
    for a in range(ring.size):
        a_in = a in members
        for b in range(ring.size):
            ab = ring.mul(a, b)
            if ab not in members or (weakly and ab == 0):
                continue
            if not (a_in or b in target):
                return False, (a, b)
    return True, None


def _check_absorb_n(n: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if n > ABSORB_N_CAP:
        raise NTooLargeError(
            f"absorbing checks are capped at n={ABSORB_N_CAP}, got n={n}"
        )


def _product(ring, xs) -> int:
    out = ring.one
    for x in xs:
        out = ring.mul(out, x)
    return out


def is_n_absorbing(
    ideal: Ideal, n: int, weakly: bool = False
) -> tuple[bool, tuple[int, ...] | None]:
    """Every product of n+1 elements in I (nonzero if weakly) already has
    some n of its factors multiplying into I.

    The predicate is symmetric, so scanning sorted tuples finds the
    lexicographically first violating tuple.
    """
    _require_proper(ideal)
    _check_absorb_n(n)
    return _is_n_absorbing(ideal, n, weakly)


@lru_cache(maxsize=None)
def _is_n_absorbing(ideal, n, weakly):
    ring = ideal.ring
    members = ideal.members
    for combo in combinations_with_replacement(range(ring.size), n + 1):
        full = _product(ring, combo)
        if full not in members or (weakly and full == 0):
            continue
        if not any(
            _product(ring, combo[:k] + combo[k + 1:]) in members
            for k in range(n + 1)
        ):
            return False, combo
    return True, None


def is_n_absorbing_delta_primary(
    ideal: Ideal,
    n: int,
    delta: ExpansionFn | None = None,
    weakly: bool = False,
) -> tuple[bool, tuple[int, ...] | None]:
    """x1..x_{n+1} in I (nonzero if weakly) forces x1..xn in I, or some
    drop-one product x1..xhat_k..x_{n+1} with k < n into delta(I).

    The conclusion is not symmetric in the factors, so each violating
    multiset is re-scanned over its orderings to recover the global
    lexicographically first ordered witness.
    """
    _require_proper(ideal)
    _check_absorb_n(n)
    return _is_n_absorbing_delta_primary(ideal, n, delta, weakly)


@lru_cache(maxsize=None)
def _is_n_absorbing_delta_primary(ideal, n, delta, weakly):
    ring = ideal.ring
    members = ideal.members
    target = _target_members(ideal, delta)

    def violates(order) -> bool:
        if _product(ring, order[:n]) in members:
            return False
        return not any(
            _product(ring, order[:k] + order[k + 1:]) in target
            for k in range(n - 1)
        )

    best = None
    for combo in combinations_with_replacement(range(ring.size), n + 1):
        if best is not None and combo >= best:
            break
        full = _product(ring, combo)
        if full not in members or (weakly and full == 0):
            continue
        for order in sorted(set(permutations(combo))):
            if best is not None and order >= best:
                break
            if violates(order):
                best = order
                break
    return (best is None), best


def is_strongly_n_absorbing(
    ideal: Ideal, n: int, weakly: bool = False
) -> tuple[bool, tuple[tuple[int, ...], ...] | None]:
    """The ideal-level analogue of n-absorbing: a product of n+1 ideals
    inside I (nonzero if weakly) has some n of them multiplying into I.

    Witnesses are tuples of sorted member tuples in lattice order.
    """
    _require_proper(ideal)
    _check_absorb_n(n)
    return _is_strongly_n_absorbing(ideal, n, weakly)


_PAIR_PRODUCTS: dict[tuple, Ideal] = {}


def _ideal_product_memo(a: Ideal, b: Ideal) -> Ideal:
    key = (a.ring.key, a.members, b.members)
    out = _PAIR_PRODUCTS.get(key)
    if out is None:
        out = _PAIR_PRODUCTS.setdefault(key, ideal_product(a, b))
    return out


def _fold_product(ring, ideals) -> Ideal:
    out = None
    for ideal in ideals:
        out = ideal if out is None else _ideal_product_memo(out, ideal)
    if out is None:
        return zero_ideal(ring)
    return out


@lru_cache(maxsize=None)
def _is_strongly_n_absorbing(ideal, n, weakly):
    ring = ideal.ring
    lattice = list(enumerate_ideals(ring))
    for combo in combinations_with_replacement(range(len(lattice)), n + 1):
        factors = [lattice[i] for i in combo]
        full = _fold_product(ring, factors)
        if not full.members <= ideal.members:
            continue
        if weakly and full.is_zero:
            continue
        if not any(
            _fold_product(ring, factors[:k] + factors[k + 1:]).members
            <= ideal.members
            for k in range(n + 1)
        ):
            return False, tuple(f.sorted_members for f in factors)
    return True, None


def unbreakable_zero_set(
    ideal: Ideal,
    m: int,
    n: int,
    delta: ExpansionFn | None = None,
) -> tuple[int, ...]:
    """Elements a with a^m = 0 but a^n outside delta(I).

    These are exactly the elements on which the weakly test exempts what the
    plain test would flag, so the set is nonempty iff the ideal is weakly
    (m,n)-closed delta-primary without being (m,n)-closed delta-primary.
    """
    _require_proper(ideal)
    MNParams(m, n)
    ring = ideal.ring
    target = _target_members(ideal, delta)
    return tuple(
        a
        for a in range(ring.size)
        if ring.pow(a, m) == 0 and ring.pow(a, n) not in target
    )


def classify_full(
    ideal: Ideal, m: int, n: int, delta: ExpansionFn | None = None
) -> dict[str, tuple[bool, object]]:
    """All power-closure and primality classifications for one (I, m, n, delta)."""
    out = {
        f"({m},{n})-closed": classify_mn(ideal, m, n),
        f"weakly ({m},{n})-closed": classify_mn(ideal, m, n, weakly=True),
        f"({m},{n})-closed delta-primary": classify_mn(ideal, m, n, delta),
        f"weakly ({m},{n})-closed delta-primary": classify_mn(
            ideal, m, n, delta, weakly=True
        ),
        "delta-primary": is_delta_primary(ideal, delta),
        "weakly delta-primary": is_delta_primary(ideal, delta, weakly=True),
        "prime": is_delta_primary(ideal),
        "weakly prime": is_delta_primary(ideal, weakly=True),
    }
    return out
