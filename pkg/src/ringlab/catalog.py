"""Ring catalogs: the named defaults plus line-oriented catalog files.

A catalog bundles the rings to sweep with the parameter ranges used when
instantiating checks (exponent caps, which expansion kinds to build, the
vacuity threshold, and the tuple budget that keeps element-tuple scans
bounded).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeBoundExceededError
from .rings import FiniteRing, size_bound
from .ideals import enumerate_ideals
from .expansions import ExpansionFn, builtin_delta
from .parser import parse_ring

SMALL_RING_EXPRS: tuple[str, ...] = (
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11",
    "Z12", "Z13", "Z14", "Z15", "Z16",
    "Z2 x Z2", "Z2 x Z4", "Z4 x Z2", "Z3 x Z3",
    "triv(Z2,M[2])", "triv(Z4,M[4])", "triv(Z2,M[2,2])", "triv(Z8,M[8])",
    "dup(Z4,{2})", "amal(Z4,Z4,id,{2})",
    "quot(Z16,{8})", "loc(Z12,{1,5,7,11})",
)


@dataclass(frozen=True)
class Catalog:
    """Rings plus parameter ranges for the verifier and fuzzer.

    m ranges over 2..m_max with n < m; absorbing checks cap their n at
    absorb_n_max; element-tuple scans are skipped (and counted) when
    |R|^(n+1) would exceed tuple_budget.
    """

    ring_exprs: tuple[str, ...] = SMALL_RING_EXPRS
    size_cap: int | None = None
    m_max: int = 4
    absorb_n_max: int = 3
    delta_kinds: tuple[str, ...] = ("id", "rad", "addk")
    addk_per_ring: int = 2
    min_hits: int = 5
    tuple_budget: int = 300_000

    def rings(self) -> list[FiniteRing]:
        """Parse every expression, deduplicating by structural identity."""
        cap = self.size_cap if self.size_cap is not None else size_bound()
        out: list[FiniteRing] = []
        seen = set()
        for expr in self.ring_exprs:
            ring = parse_ring(expr)
            if ring.size > cap:
                raise SizeBoundExceededError(
                    f"catalog ring {expr} has size {ring.size} > {cap}"
                )
            if ring.key not in seen:
                seen.add(ring.key)
                out.append(ring)
        return out

    def deltas(self, ring: FiniteRing) -> list[ExpansionFn]:
        """The expansions to instantiate on one ring, in a fixed order:
        id, rad, then sum-with-ideal for the first addk_per_ring nonzero
        proper ideals in lattice order."""
        out = []
        for kind in self.delta_kinds:
            if kind in ("id", "rad"):
                out.append(builtin_delta(ring, kind))
            elif kind == "addk":
                picked = 0
                for ideal in enumerate_ideals(ring):
                    if picked >= self.addk_per_ring:
                        break
                    if ideal.is_zero or not ideal.is_proper:
                        continue
                    out.append(
                        builtin_delta(ring, "addk", ideal.sorted_members)
                    )
                    picked += 1
            else:
                raise ValueError(f"unknown delta kind {kind!r}")
        return out

    def mn_pairs(self) -> list[tuple[int, int]]:
        """Exponent pairs (m, n) with 2 <= m <= m_max and 1 <= n < m."""
        return [
            (m, n) for m in range(2, self.m_max + 1) for n in range(1, m)
        ]


def small_catalog(**overrides) -> Catalog:
    return Catalog(**overrides)


def load_catalog(path: str, **overrides) -> Catalog:
    """Read a catalog file: one ring expression per line, '#' comments."""
    exprs = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            stripped = line.split("#", 1)[0].strip()
            if stripped:
                exprs.append(stripped)
    return Catalog(ring_exprs=tuple(exprs), **overrides)
