"""Registry of machine-checkable transfer statements and a conjecture fuzzer.

Every registry entry compiles a catalog of rings into a deterministic list
of instance thunks.  Each thunk classifies one concrete tuple (ring, ideal,
expansion, exponents) and reports one of four statuses:

* ``pass``            -- hypothesis held and the conclusion checked out,
* ``counterexample``  -- hypothesis held but the conclusion failed,
* ``vacuous``         -- the hypothesis (or an enabling gate) was false,
* ``skipped``         -- the instance was not evaluated (tuple budget,
                         side condition, or an expansion that does not
                         exist on the derived ring).

Entries whose id starts with ``T-`` state facts expected to verify with
zero counterexamples; the ``F-`` entries encode claims that are known to be
wrong, so their counterexample lists are the interesting output.  For
biconditional statements every evaluated instance counts as a hit and a
``counterexample`` records a mismatch between the two sides.

Reports merge worker results by instance ordinal, so the JSON output is
byte-identical regardless of the worker count.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from time import perf_counter
from typing import Callable

from .catalog import Catalog, small_catalog
from .classify import (
    ABSORB_N_CAP,
    classify_mn,
    is_delta_primary,
    is_n_absorbing,
    is_n_absorbing_delta_primary,
    is_strongly_n_absorbing,
    unbreakable_zero_set,
)
from .constructions import (
    AmalgamRing,
    MultSet,
    TrivialExtension,
    amalgam_ideal,
    amalgam_ideal_parts,
    amalgamate,
    canon_hom,
    duplicate,
    hom_image,
    hom_preimage,
    inj_hom,
    localize,
    mult_closure,
    product_ideal,
    product_ideal_parts,
    triv_ideal,
)
from .errors import (
    AxiomViolationError,
    BadConjectureError,
    UnknownTheoremError,
)
from .expansions import (
    ExpansionFn,
    builtin_delta,
    check_fip,
    delta_amalgam,
    delta_compose,
    delta_idealization,
    delta_localization,
    delta_product,
    delta_quotient,
    is_delta_gamma_hom,
)
from .ideals import (
    Ideal,
    enumerate_ideals,
    ideal_closure,
    ideal_product,
    jacobson_radical,
    is_prime_ideal,
    nilradical,
    principal_ideal,
    quotient_ring,
    radical,
    zero_ideal,
    unit_ideal,
)
from .rings import (
    FiniteRing,
    ProductRing,
    RingHom,
    Zmod,
    characteristic,
    identity_hom,
    size_bound,
    zmod,
)

PASS = "pass"
COUNTEREXAMPLE = "counterexample"
VACUOUS = "vacuous"
SKIPPED = "skipped"

Outcome = tuple[str, dict]
Thunk = Callable[[], Outcome]


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class InstanceOutcome:
    ordinal: int
    status: str
    detail: dict


@dataclass
class TheoremReport:
    theorem_id: str
    anchor: str
    summary: str
    expect_true: bool
    instances: int
    hits: int
    passes: int
    vacuous: int
    skipped: int
    counterexamples: list[InstanceOutcome]
    wall_time: float

    @property
    def refuted(self) -> bool:
        return bool(self.counterexamples)

    def json_obj(self) -> dict:
        """A JSON-ready object; wall time is excluded so output is stable."""
        return {
            "theorem": self.theorem_id,
            "anchor": self.anchor,
            "summary": self.summary,
            "expected": "holds" if self.expect_true else "fails",
            "instances": self.instances,
            "hits": self.hits,
            "passes": self.passes,
            "vacuous": self.vacuous,
            "skipped": self.skipped,
            "counterexamples": [
                {"ordinal": c.ordinal, **c.detail} for c in self.counterexamples
            ],
        }

    def text(self, max_counterexamples: int = 5) -> str:
        verdict = "REFUTED" if self.refuted else "ok"
        if not self.expect_true:
            verdict = (
                "refuted as expected" if self.refuted else "NOT REFUTED"
            )
        lines = [
            f"{self.theorem_id} [{self.anchor}] {verdict}: "
            f"instances={self.instances} hits={self.hits} "
            f"passes={self.passes} vacuous={self.vacuous} "
            f"skipped={self.skipped} "
            f"counterexamples={len(self.counterexamples)} "
            f"({self.wall_time:.2f}s)"
        ]
        for c in self.counterexamples[:max_counterexamples]:
            fields = " ".join(f"{k}={v}" for k, v in c.detail.items())
            lines.append(f"  #{c.ordinal}: {fields}")
        extra = len(self.counterexamples) - max_counterexamples
        if extra > 0:
            lines.append(f"  ... and {extra} more")
        return "\n".join(lines)


@dataclass(frozen=True)
class TheoremCheck:
    theorem_id: str
    anchor: str
    summary: str
    expect_true: bool
    build: Callable[[Catalog], list[Thunk]]


REGISTRY: dict[str, TheoremCheck] = {}


def _register(theorem_id: str, anchor: str, summary: str, expect_true: bool = True):
    def wrap(build):
        REGISTRY[theorem_id] = TheoremCheck(
            theorem_id, anchor, summary, expect_true, build
        )
        return build

    return wrap


# --------------------------------------------------------------------------
# shared helpers
# --------------------------------------------------------------------------

def _b(ideal: Ideal, m: int, n: int, delta=None, weakly: bool = False) -> bool:
    return classify_mn(ideal, m, n, delta, weakly)[0]


def _wnc(ideal: Ideal, m: int, n: int, delta) -> bool:
    """Weakly (m,n)-closed delta-primary but not (m,n)-closed delta-primary."""
    return _b(ideal, m, n, delta, weakly=True) and not _b(ideal, m, n, delta)


def _semi_absorbing(ideal: Ideal, n: int, delta, weakly: bool) -> bool:
    """Every a with a^(n+1) in I (nonzero if weakly) has a^n in delta(I)."""
    ring = ideal.ring
    target = delta(ideal).members if delta is not None else ideal.members
    for a in range(ring.size):
        p = ring.pow(a, n + 1)
        if p not in ideal.members or (weakly and p == 0):
            continue
        if ring.pow(a, n) not in target:
            return False
    return True


def _detail(ring: FiniteRing, **fields) -> dict:
    out = {"ring": ring.expr}
    for key, value in fields.items():
        if value is None:
            continue
        if isinstance(value, Ideal):
            out[key] = value.display
        elif isinstance(value, ExpansionFn):
            out[key] = value.label
        else:
            out[key] = str(value)
    return out


def _vac(detail: dict, note: str | None = None) -> Outcome:
    if note:
        detail["note"] = note
    return VACUOUS, detail


def _skip(detail: dict, note: str) -> Outcome:
    detail["note"] = note
    return SKIPPED, detail


def _judge(ok: bool, detail: dict, **extras) -> Outcome:
    if ok:
        return PASS, detail
    for key, value in extras.items():
        if value is not None:
            detail[key] = str(value)
    return COUNTEREXAMPLE, detail


def _ring_setups(catalog: Catalog):
    for ring in catalog.rings():
        lattice = enumerate_ideals(ring)
        yield ring, list(lattice.proper()), catalog.deltas(ring)


def _extension(hom: RingHom, ideal: Ideal) -> Ideal:
    """The ideal of the codomain generated by the image of ``ideal``."""
    return ideal_closure(
        hom.codomain, [hom.mapping[i] for i in ideal.members]
    )


def _budget_ok(catalog: Catalog, ring: FiniteRing, n: int) -> bool:
    return ring.size ** (n + 1) <= catalog.tuple_budget


# --------------------------------------------------------------------------
# T-3.2a .. T-3.2d: power-closure consequences of absorbing hypotheses
# --------------------------------------------------------------------------

def _inst_semi_equiv(ideal, delta, n) -> Outcome:
    detail = _detail(ideal.ring, ideal=ideal, delta=delta, n=n)
    lhs = _semi_absorbing(ideal, n, delta, weakly=True)
    rhs = _b(ideal, n + 1, n, delta, weakly=True)
    return _judge(
        lhs == rhs, detail,
        note=None if lhs == rhs else f"semi-absorbing={lhs} closure={rhs}",
    )


@_register(
    "T-3.2a",
    "3.2(1)",
    "weakly semi-n delta-primary is the same as weakly (n+1,n)-closed "
    "delta-primary",
)
def _build_t32a(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, deltas in _ring_setups(catalog):
        for ideal in proper:
            for delta in deltas:
                for n in range(1, catalog.m_max):
                    thunks.append(partial(_inst_semi_equiv, ideal, delta, n))
    return thunks


def _inst_absorbing_to_closed(catalog, ideal, delta, n) -> Outcome:
    detail = _detail(ideal.ring, ideal=ideal, delta=delta, n=n)
    if not _budget_ok(catalog, ideal.ring, n):
        return _skip(detail, "tuple budget exceeded")
    if not is_n_absorbing_delta_primary(ideal, n, delta, weakly=True)[0]:
        return _vac(detail)
    ok, witness = classify_mn(ideal, n + 1, n, delta, weakly=True)
    return _judge(
        ok, detail,
        witness=None if ok else ideal.ring.elem_name(witness),
    )


@_register(
    "T-3.2b",
    "3.2(2)",
    "weakly n-absorbing delta-primary ideals are weakly (n+1,n)-closed "
    "delta-primary",
)
def _build_t32b(catalog: Catalog) -> list[Thunk]:
    thunks = []
    n_top = min(catalog.absorb_n_max, catalog.m_max - 1)
    for ring, proper, deltas in _ring_setups(catalog):
        for ideal in proper:
            for delta in deltas:
                for n in range(1, n_top + 1):
                    thunks.append(
                        partial(_inst_absorbing_to_closed, catalog, ideal, delta, n)
                    )
    return thunks


def _inst_closed_downward(ideal, delta, m, n) -> Outcome:
    detail = _detail(ideal.ring, ideal=ideal, delta=delta, m=m, n=n)
    if not _b(ideal, m, n, delta, weakly=True):
        return _vac(detail)
    for k in range(n, m + 1):
        ok, witness = classify_mn(ideal, m, k, delta, weakly=True)
        if not ok:
            detail["k"] = str(k)
            return _judge(False, detail, witness=ideal.ring.elem_name(witness))
    return PASS, detail


@_register(
    "T-3.2c",
    "3.2(3)",
    "weakly (m,n)-closed delta-primary implies weakly (m,k)-closed "
    "delta-primary for every k between n and m",
)
def _build_t32c(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, deltas in _ring_setups(catalog):
        for ideal in proper:
            for delta in deltas:
                for m, n in catalog.mn_pairs():
                    thunks.append(partial(_inst_closed_downward, ideal, delta, m, n))
    return thunks


def _inst_absorbing_all_m(catalog, ideal, delta, n) -> Outcome:
    detail = _detail(ideal.ring, ideal=ideal, delta=delta, n=n)
    if not _budget_ok(catalog, ideal.ring, n):
        return _skip(detail, "tuple budget exceeded")
    if not is_n_absorbing(ideal, n, weakly=True)[0]:
        return _vac(detail)
    for m in range(1, catalog.m_max + 1):
        ok, witness = classify_mn(ideal, m, n, delta, weakly=True)
        if not ok:
            detail["m"] = str(m)
            return _judge(False, detail, witness=ideal.ring.elem_name(witness))
    return PASS, detail


@_register(
    "T-3.2d",
    "3.2(4)",
    "weakly n-absorbing ideals are weakly (m,n)-closed delta-primary for "
    "every m and every expansion",
)
def _build_t32d(catalog: Catalog) -> list[Thunk]:
    thunks = []
    n_top = min(catalog.absorb_n_max, catalog.m_max - 1)
    for ring, proper, deltas in _ring_setups(catalog):
        for ideal in proper:
            for delta in deltas:
                for n in range(1, n_top + 1):
                    thunks.append(
                        partial(_inst_absorbing_all_m, catalog, ideal, delta, n)
                    )
    return thunks


# --------------------------------------------------------------------------
# T-3.7a / T-3.7b: transfer along a larger expansion, and from the image
# --------------------------------------------------------------------------

def _inst_monotone_transfer(ideal, delta, gamma, m, n) -> Outcome:
    detail = _detail(
        ideal.ring, ideal=ideal, delta=delta, gamma=gamma, m=m, n=n
    )
    if not delta(ideal).members <= gamma(ideal).members:
        return _vac(detail, "delta(I) not inside gamma(I)")
    if not _b(ideal, m, n, delta, weakly=True):
        return _vac(detail)
    ok, witness = classify_mn(ideal, m, n, gamma, weakly=True)
    return _judge(
        ok, detail, witness=None if ok else ideal.ring.elem_name(witness)
    )


@_register(
    "T-3.7a",
    "3.7(1)",
    "if delta(I) sits inside gamma(I), weakly closed delta-primary "
    "transfers to gamma",
)
def _build_t37a(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, deltas in _ring_setups(catalog):
        for ideal in proper:
            for delta in deltas:
                for gamma in deltas:
                    if delta.label == gamma.label:
                        continue
                    for m, n in catalog.mn_pairs():
                        thunks.append(
                            partial(_inst_monotone_transfer, ideal, delta, gamma, m, n)
                        )
    return thunks


def _inst_image_closed(ideal, delta, m, n) -> Outcome:
    detail = _detail(ideal.ring, ideal=ideal, delta=delta, m=m, n=n)
    image = delta(ideal)
    if not image.is_proper:
        return _vac(detail, "delta(I) is the whole ring")
    if not _b(image, m, n, None, weakly=True):
        return _vac(detail)
    ok, witness = classify_mn(ideal, m, n, delta, weakly=True)
    return _judge(
        ok, detail, witness=None if ok else ideal.ring.elem_name(witness)
    )


@_register(
    "T-3.7b",
    "3.7(2)",
    "if delta(I) is a weakly (m,n)-closed ideal then I is weakly "
    "(m,n)-closed delta-primary",
)
def _build_t37b(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, deltas in _ring_setups(catalog):
        for ideal in proper:
            for delta in deltas:
                for m, n in catalog.mn_pairs():
                    thunks.append(partial(_inst_image_closed, ideal, delta, m, n))
    return thunks


# --------------------------------------------------------------------------
# T-COMP / T-GAMMA: composing two expansions
# --------------------------------------------------------------------------

def _inst_composition(ideal, delta, gamma, m, n) -> Outcome:
    detail = _detail(
        ideal.ring, ideal=ideal, delta=delta, gamma=gamma, m=m, n=n
    )
    ring = ideal.ring
    dz = delta(zero_ideal(ring))
    if not dz.is_proper:
        return _vac(detail, "delta(0) is the whole ring")
    if not _b(dz, m, n, gamma):
        return _vac(detail)
    comp = delta_compose(gamma, delta)
    lhs = _b(ideal, m, n, comp, weakly=True)
    rhs = _b(ideal, m, n, comp)
    return _judge(
        lhs == rhs, detail,
        note=None if lhs == rhs else f"weakly={lhs} closed={rhs}",
    )


@_register(
    "T-COMP",
    "composition",
    "when delta(0) is (m,n)-closed gamma-primary, weakly and plain "
    "(m,n)-closed (gamma o delta)-primary coincide",
)
def _build_tcomp(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, deltas in _ring_setups(catalog):
        for ideal in proper:
            for delta in deltas:
                for gamma in deltas:
                    for m, n in catalog.mn_pairs():
                        thunks.append(
                            partial(_inst_composition, ideal, delta, gamma, m, n)
                        )
    return thunks


def _inst_gamma_precondition(ideal, delta, gamma, m, n) -> Outcome:
    detail = _detail(
        ideal.ring, ideal=ideal, delta=delta, gamma=gamma, m=m, n=n
    )
    image = gamma(ideal)
    if not image.is_proper:
        return _vac(detail, "gamma(I) is the whole ring")
    if not _b(image, m, n, delta, weakly=True):
        return _vac(detail)
    comp = delta_compose(delta, gamma)
    ok, witness = classify_mn(ideal, m, n, comp, weakly=True)
    return _judge(
        ok, detail, witness=None if ok else ideal.ring.elem_name(witness)
    )


@_register(
    "T-GAMMA",
    "gamma-composition",
    "if gamma(I) is weakly (m,n)-closed delta-primary then I is weakly "
    "(m,n)-closed (delta o gamma)-primary",
)
def _build_tgamma(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, deltas in _ring_setups(catalog):
        for ideal in proper:
            for delta in deltas:
                for gamma in deltas:
                    for m, n in catalog.mn_pairs():
                        thunks.append(
                            partial(_inst_gamma_precondition, ideal, delta, gamma, m, n)
                        )
    return thunks


# --------------------------------------------------------------------------
# T-HOM1 / T-HOM2: transport along compatible homomorphisms
# --------------------------------------------------------------------------

def _hom_text(f: RingHom) -> str:
    return f"{f.display}: {f.domain.expr} -> {f.codomain.expr}"


def _hom_delta_pairs(hom, dom_deltas, cod_deltas, diagonal_only):
    for delta in dom_deltas:
        for gamma in cod_deltas:
            if diagonal_only and delta.label != gamma.label:
                continue
            yield delta, gamma


def _inst_hom_pullback(f, delta, gamma, compat, ideal, m, n) -> Outcome:
    detail = _detail(
        f.codomain, hom=_hom_text(f), ideal=ideal, delta=delta,
        gamma=gamma, m=m, n=n,
    )
    if not compat:
        return _vac(detail, "not a delta-gamma homomorphism")
    if not _b(ideal, m, n, gamma, weakly=True):
        return _vac(detail)
    pulled = hom_preimage(f, ideal)
    ok, witness = classify_mn(pulled, m, n, delta, weakly=True)
    return _judge(
        ok, detail, witness=None if ok else f.domain.elem_name(witness)
    )


@_register(
    "T-HOM1",
    "hom(1)",
    "pulling a weakly gamma-primary ideal back along an injective "
    "delta-gamma homomorphism gives a weakly delta-primary ideal",
)
def _build_thom1(catalog: Catalog) -> list[Thunk]:
    thunks = []
    setups = {ring.key: (ring, proper, deltas)
              for ring, proper, deltas in _ring_setups(catalog)}
    homs: list[tuple[RingHom, bool]] = []
    for ring, _, _ in setups.values():
        if isinstance(ring, TrivialExtension) and ring.base.key in setups:
            homs.append((inj_hom(ring), False))
    for ring, _, _ in setups.values():
        homs.append((identity_hom(ring), True))
    for f, diagonal_only in homs:
        dom_deltas = catalog.deltas(f.domain)
        _, cod_proper, cod_deltas = setups.get(
            f.codomain.key,
            (f.codomain, list(enumerate_ideals(f.codomain).proper()),
             catalog.deltas(f.codomain)),
        )
        for delta, gamma in _hom_delta_pairs(
            f, dom_deltas, cod_deltas, diagonal_only
        ):
            compat = is_delta_gamma_hom(f, delta, gamma)
            for ideal in cod_proper:
                for m, n in catalog.mn_pairs():
                    thunks.append(
                        partial(_inst_hom_pullback, f, delta, gamma, compat, ideal, m, n)
                    )
    return thunks


def _inst_hom_pushforward(f, delta, gamma, compat, ideal, m, n) -> Outcome:
    detail = _detail(
        f.domain, hom=_hom_text(f), ideal=ideal, delta=delta,
        gamma=gamma, m=m, n=n,
    )
    if not compat:
        return _vac(detail, "not a delta-gamma homomorphism")
    if not f.kernel() <= ideal.members:
        return _vac(detail, "kernel not inside I")
    if not _b(ideal, m, n, delta, weakly=True):
        return _vac(detail)
    pushed = hom_image(f, ideal)
    ok, witness = classify_mn(pushed, m, n, gamma, weakly=True)
    return _judge(
        ok, detail, witness=None if ok else f.codomain.elem_name(witness)
    )


@_register(
    "T-HOM2",
    "hom(2)",
    "pushing a weakly delta-primary ideal containing the kernel forward "
    "along a surjective delta-gamma homomorphism stays weakly gamma-primary",
)
def _build_thom2(catalog: Catalog) -> list[Thunk]:
    thunks = []
    setups = [(ring, proper, deltas) for ring, proper, deltas in _ring_setups(catalog)]
    zmods = [ring for ring, _, _ in setups if isinstance(ring, Zmod)]
    homs: list[tuple[RingHom, bool]] = []
    for big in zmods:
        for small in zmods:
            if small.n < big.n and big.n % small.n == 0:
                homs.append((canon_hom(big, small), False))
    for ring, _, _ in setups:
        homs.append((identity_hom(ring), True))
    by_key = {ring.key: (ring, proper, deltas) for ring, proper, deltas in setups}
    for f, diagonal_only in homs:
        _, dom_proper, dom_deltas = by_key[f.domain.key]
        cod_deltas = (
            dom_deltas if f.codomain.key == f.domain.key
            else by_key[f.codomain.key][2]
        )
        for delta, gamma in _hom_delta_pairs(
            f, dom_deltas, cod_deltas, diagonal_only
        ):
            compat = is_delta_gamma_hom(f, delta, gamma)
            for ideal in dom_proper:
                for m, n in catalog.mn_pairs():
                    thunks.append(
                        partial(_inst_hom_pushforward, f, delta, gamma, compat, ideal, m, n)
                    )
    return thunks


# --------------------------------------------------------------------------
# T-QUOT1 / T-QUOT2 / T-QUOT3: passing to and lifting from a quotient
# --------------------------------------------------------------------------

def _quotient_setups(catalog: Catalog):
    for ring, proper, deltas in _ring_setups(catalog):
        for inner in proper:
            quotient, projection = quotient_ring(ring, inner)
            outers = [big for big in proper if inner.members <= big.members]
            images = {
                big.sorted_members: hom_image(projection, big) for big in outers
            }
            for delta in deltas:
                dq = delta_quotient(delta, quotient)
                yield ring, inner, outers, images, delta, dq


def _inst_quot_down(inner, outer, image, delta, dq, m, n) -> Outcome:
    detail = _detail(
        inner.ring, inner=inner, ideal=outer, delta=delta, m=m, n=n
    )
    if not _b(outer, m, n, delta, weakly=True):
        return _vac(detail)
    ok, witness = classify_mn(image, m, n, dq, weakly=True)
    return _judge(
        ok, detail, witness=None if ok else image.ring.elem_name(witness)
    )


@_register(
    "T-QUOT1",
    "quotient(1)",
    "a weakly closed delta-primary ideal stays weakly closed for the "
    "induced expansion on the quotient by a smaller ideal",
)
def _build_tquot1(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, inner, outers, images, delta, dq in _quotient_setups(catalog):
        for outer in outers:
            image = images[outer.sorted_members]
            for m, n in catalog.mn_pairs():
                thunks.append(
                    partial(_inst_quot_down, inner, outer, image, delta, dq, m, n)
                )
    return thunks


def _inst_quot_lift_closed(inner, outer, image, delta, dq, m, n) -> Outcome:
    detail = _detail(
        inner.ring, inner=inner, ideal=outer, delta=delta, m=m, n=n
    )
    if not _b(inner, m, n, delta):
        return _vac(detail)
    if not _b(image, m, n, dq, weakly=True):
        return _vac(detail)
    ok, witness = classify_mn(outer, m, n, delta)
    return _judge(
        ok, detail, witness=None if ok else inner.ring.elem_name(witness)
    )


@_register(
    "T-QUOT2",
    "quotient(2)",
    "a closed delta-primary inner ideal plus a weakly closed image lifts "
    "the closed property to the outer ideal",
)
def _build_tquot2(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, inner, outers, images, delta, dq in _quotient_setups(catalog):
        for outer in outers:
            image = images[outer.sorted_members]
            for m, n in catalog.mn_pairs():
                thunks.append(
                    partial(_inst_quot_lift_closed, inner, outer, image, delta, dq, m, n)
                )
    return thunks


def _inst_quot_lift_weak(inner, outer, image, delta, dq, m, n) -> Outcome:
    detail = _detail(
        inner.ring, inner=inner, ideal=outer, delta=delta, m=m, n=n
    )
    if not _b(inner, m, n, delta, weakly=True):
        return _vac(detail)
    if not _b(image, m, n, dq, weakly=True):
        return _vac(detail)
    ok, witness = classify_mn(outer, m, n, delta, weakly=True)
    return _judge(
        ok, detail, witness=None if ok else inner.ring.elem_name(witness)
    )


@_register(
    "T-QUOT3",
    "quotient(3)",
    "a weakly closed inner ideal plus a weakly closed image lifts the "
    "weakly closed property to the outer ideal",
)
def _build_tquot3(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, inner, outers, images, delta, dq in _quotient_setups(catalog):
        for outer in outers:
            image = images[outer.sorted_members]
            for m, n in catalog.mn_pairs():
                thunks.append(
                    partial(_inst_quot_lift_weak, inner, outer, image, delta, dq, m, n)
                )
    return thunks


# --------------------------------------------------------------------------
# T-LOC: localization, with the all-primes converse as a second instance kind
# --------------------------------------------------------------------------

def _mult_set_family(ring: FiniteRing, limit: int = 4) -> list[MultSet]:
    """The first few distinct saturated generator closures, element order."""
    out: list[MultSet] = []
    seen = set()
    for s in range(1, ring.size):
        try:
            mset = mult_closure(ring, [s])
        except Exception:
            continue
        if mset.members in seen:
            continue
        seen.add(mset.members)
        out.append(mset)
        if len(out) >= limit:
            break
    return out


def _loc_side_condition(can, local, delta, ideal, dloc, extended) -> bool:
    return dloc(extended).members == _extension(can, delta(ideal)).members


def _inst_localize(ideal, delta, m, n, mset, local, can, dloc) -> Outcome:
    detail = _detail(
        ideal.ring, kind="mult-set", ideal=ideal, delta=delta, m=m, n=n,
        mult_set="{" + ",".join(map(str, mset.sorted_members)) + "}",
    )
    if ideal.members & mset.members:
        return _vac(detail, "I meets S")
    extended = _extension(can, ideal)
    if not _loc_side_condition(can, local, delta, ideal, dloc, extended):
        return _skip(detail, "extension does not commute with delta")
    if not _b(ideal, m, n, delta, weakly=True):
        return _vac(detail)
    ok, witness = classify_mn(extended, m, n, dloc, weakly=True)
    return _judge(
        ok, detail, witness=None if ok else local.elem_name(witness)
    )


def _inst_localize_primes(ideal, delta, m, n, prime_data) -> Outcome:
    detail = _detail(ideal.ring, kind="primes", ideal=ideal, delta=delta, m=m, n=n)
    for prime, local, can, dloc in prime_data:
        if not ideal.members <= prime.members:
            return _vac(detail, f"I not inside prime {prime.display}")
        extended = _extension(can, ideal)
        if not _loc_side_condition(can, local, delta, ideal, dloc, extended):
            detail["prime"] = prime.display
            return _skip(detail, "extension does not commute with delta")
        if not _b(extended, m, n, dloc, weakly=True):
            detail["prime"] = prime.display
            return _vac(detail, "not weakly closed at this prime")
    ok, witness = classify_mn(ideal, m, n, delta, weakly=True)
    return _judge(
        ok, detail, witness=None if ok else ideal.ring.elem_name(witness)
    )


@_register(
    "T-LOC",
    "localization",
    "weakly closed delta-primary ideals extend to localizations when the "
    "expansion commutes with extension; conversely, weakly closed at every "
    "prime forces weakly closed globally",
)
def _build_tloc(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, deltas in _ring_setups(catalog):
        for mset in _mult_set_family(ring):
            local, can = localize(ring, mset)
            for delta in deltas:
                dloc = delta_localization(delta, local)
                for ideal in proper:
                    for m, n in catalog.mn_pairs():
                        thunks.append(
                            partial(_inst_localize, ideal, delta, m, n, mset, local, can, dloc)
                        )
    for ring, proper, deltas in _ring_setups(catalog):
        primes = [p for p in enumerate_ideals(ring) if is_prime_ideal(p)]
        for delta in deltas:
            prime_data = []
            for prime in primes:
                complement = frozenset(range(ring.size)) - prime.members
                mset = MultSet(ring, complement)
                local, can = localize(ring, mset)
                prime_data.append(
                    (prime, local, can, delta_localization(delta, local))
                )
            for ideal in proper:
                for m, n in catalog.mn_pairs():
                    thunks.append(
                        partial(_inst_localize_primes, ideal, delta, m, n, prime_data)
                    )
    return thunks


# --------------------------------------------------------------------------
# T-INT: intersecting two ideals with a shared expansion image
# --------------------------------------------------------------------------

def _inst_intersection(first, second, delta, m, n) -> Outcome:
    detail = _detail(
        first.ring, ideal=first, second=second, delta=delta, m=m, n=n
    )
    if delta(first).members != delta(second).members:
        return _vac(detail, "delta images differ")
    if not (_b(first, m, n, delta, weakly=True)
            and _b(second, m, n, delta, weakly=True)):
        return _vac(detail)
    meet = Ideal(first.ring, first.members & second.members)
    ok, witness = classify_mn(meet, m, n, delta, weakly=True)
    return _judge(
        ok, detail, witness=None if ok else first.ring.elem_name(witness)
    )


@_register(
    "T-INT",
    "intersection",
    "for expansions with the finite-intersection property, two weakly "
    "closed delta-primary ideals with equal delta images intersect to one",
)
def _build_tint(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, deltas in _ring_setups(catalog):
        for delta in deltas:
            ok, pair = check_fip(delta)
            if not ok:
                detail = _detail(ring, delta=delta)
                note = (
                    "no finite-intersection property: fails at "
                    f"{pair[0].display}, {pair[1].display}"
                )
                thunks.append(partial(lambda d, t: (SKIPPED, {**d, "note": t}), detail, note))
                continue
            for i, first in enumerate(proper):
                for second in proper[i + 1:]:
                    for m, n in catalog.mn_pairs():
                        thunks.append(
                            partial(_inst_intersection, first, second, delta, m, n)
                        )
    return thunks


# --------------------------------------------------------------------------
# T-SHIFT / T-NIL: structure of the exempted elements
# --------------------------------------------------------------------------

def _inst_shift(ideal, delta, m, n) -> Outcome:
    detail = _detail(ideal.ring, ideal=ideal, delta=delta, m=m, n=n)
    if not _b(ideal, m, n, delta, weakly=True):
        return _vac(detail)
    exempt = unbreakable_zero_set(ideal, m, n, delta)
    if not exempt:
        return _vac(detail, "no exempted elements")
    ring = ideal.ring
    for x in exempt:
        for i in ideal.members:
            if ring.pow(ring.add(x, i), m) != 0:
                return _judge(
                    False, detail,
                    witness=f"x={ring.elem_name(x)} i={ring.elem_name(i)}",
                )
    return PASS, detail


@_register(
    "T-SHIFT",
    "shift",
    "shifting an exempted element by anything in the ideal keeps the m-th "
    "power at zero",
)
def _build_tshift(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, deltas in _ring_setups(catalog):
        for ideal in proper:
            for delta in deltas:
                for m, n in catalog.mn_pairs():
                    thunks.append(partial(_inst_shift, ideal, delta, m, n))
    return thunks


def _is_prime_int(k: int) -> bool:
    return k >= 2 and all(k % d for d in range(2, int(k ** 0.5) + 1))


def _inst_nil(ideal, delta, m, n) -> Outcome:
    detail = _detail(ideal.ring, ideal=ideal, delta=delta, m=m, n=n)
    if not _wnc(ideal, m, n, delta):
        return _vac(detail)
    ring = ideal.ring
    nil = nilradical(ring)
    if not ideal.members <= nil.members:
        stray = next(x for x in ideal.sorted_members if x not in nil.members)
        return _judge(False, detail, witness=f"{ring.elem_name(stray)} not nilpotent")
    if characteristic(ring) == m and _is_prime_int(m):
        for x in ideal.members:
            if ring.pow(x, m) != 0:
                return _judge(
                    False, detail,
                    witness=f"{ring.elem_name(x)}^{m} nonzero at prime characteristic",
                )
    return PASS, detail


@_register(
    "T-NIL",
    "nil",
    "weakly-but-not closed delta-primary ideals consist of nilpotents; at "
    "prime characteristic m every member has zero m-th power",
)
def _build_tnil(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, deltas in _ring_setups(catalog):
        for ideal in proper:
            for delta in deltas:
                for m, n in catalog.mn_pairs():
                    thunks.append(partial(_inst_nil, ideal, delta, m, n))
    return thunks


# --------------------------------------------------------------------------
# T-JRAD: principal powers of Jacobson-radical elements
# --------------------------------------------------------------------------

def _inst_jrad(ring, a, n, delta) -> Outcome:
    power = ring.pow(a, n + 1)
    ideal = principal_ideal(ring, power)
    detail = _detail(
        ring, element=ring.elem_name(a), ideal=ideal, delta=delta, n=n
    )
    if delta(ideal).members != ideal.members:
        return _skip(detail, "delta moves the ideal")
    lhs = _semi_absorbing(ideal, n, delta, weakly=True)
    rhs = power == 0
    return _judge(
        lhs == rhs, detail,
        note=None if lhs == rhs else f"weakly semi-absorbing={lhs} power-zero={rhs}",
    )


@_register(
    "T-JRAD",
    "jacobson",
    "for a in the Jacobson radical with delta fixing a^(n+1)R, weakly "
    "semi-n delta-primary holds exactly when a^(n+1) = 0",
)
def _build_tjrad(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, deltas in _ring_setups(catalog):
        jrad = jacobson_radical(ring)
        for a in jrad.sorted_members:
            for n in range(1, catalog.m_max):
                for delta in deltas:
                    thunks.append(partial(_inst_jrad, ring, a, n, delta))
    return thunks


# --------------------------------------------------------------------------
# T-PK: division structure of prime-power moduli
# --------------------------------------------------------------------------

def _inst_prime_power(ring, p, c, k, delta, m, n) -> Outcome:
    ideal = principal_ideal(ring, pow(p, k) % ring.size)
    detail = _detail(
        ring, ideal=ideal, delta=delta, m=m, n=n, p=p, c=c, k=k
    )
    if not _wnc(ideal, m, n, delta):
        return _vac(detail)
    a, b = divmod(k, m)
    ok = (
        b != 0
        and k + 1 <= c <= m * (a + 1)
        and n * (a + 1) < k
    )
    return _judge(
        ok, detail,
        note=None if ok else f"k={a}*{m}+{b}, bounds violated",
    )


@_register(
    "T-PK",
    "prime-power",
    "in Z_(p^c) a weakly-but-not closed (p^k) pins k mod m nonzero and "
    "squeezes c and n against the quotient of k by m",
)
def _build_tpk(catalog: Catalog) -> list[Thunk]:
    thunks = []
    cap = min(128, catalog.size_cap or size_bound())
    for p in (2, 3):
        c = 2
        while p ** c <= cap:
            ring = zmod(p ** c)
            deltas = catalog.deltas(ring)
            for k in range(3, c):
                for m in range(2, min(k - 1, catalog.m_max) + 1):
                    for n in range(1, m):
                        for delta in deltas:
                            thunks.append(
                                partial(_inst_prime_power, ring, p, c, k, delta, m, n)
                            )
            c += 1
    return thunks


# --------------------------------------------------------------------------
# T-PROD1 / T-PROD2: ideals of a direct product
# --------------------------------------------------------------------------

def _product_setups(catalog: Catalog):
    for ring, proper, deltas in _ring_setups(catalog):
        if not isinstance(ring, ProductRing):
            continue
        left, right = ring.left, ring.right
        left_deltas = catalog.deltas(left)
        right_deltas = catalog.deltas(right)
        for d1 in left_deltas:
            for d2 in right_deltas:
                dx = delta_product(d1, d2, ring)
                yield ring, proper, d1, d2, dx


def _inst_product_factor(ring, d1, d2, dx, ideal, m, n) -> Outcome:
    block = product_ideal(ring, ideal, unit_ideal(ring.right))
    detail = _detail(
        ring, ideal=block, factor_ideal=ideal, delta=dx, m=m, n=n
    )
    weak_block = _b(block, m, n, dx, weakly=True)
    closed_factor = _b(ideal, m, n, d1)
    closed_block = _b(block, m, n, dx)
    ok = weak_block == closed_factor == closed_block
    return _judge(
        ok, detail,
        note=None if ok else (
            f"weakly I1xR2={weak_block} closed I1={closed_factor} "
            f"closed I1xR2={closed_block}"
        ),
    )


@_register(
    "T-PROD1",
    "product(1)",
    "for a block ideal I1 x R2, weakly closed, closed on the factor, and "
    "closed on the block are all the same condition",
)
def _build_tprod1(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, d1, d2, dx in _product_setups(catalog):
        factor_proper = list(enumerate_ideals(ring.left).proper())
        for ideal in factor_proper:
            for m, n in catalog.mn_pairs():
                thunks.append(
                    partial(_inst_product_factor, ring, d1, d2, dx, ideal, m, n)
                )
    return thunks


def _inst_product_full(ring, d1, d2, dx, ideal, m, n) -> Outcome:
    detail = _detail(ring, ideal=ideal, delta=dx, m=m, n=n)
    left, right = ring.left, ring.right
    j1, j2 = product_ideal_parts(ideal)
    lhs = _wnc(ideal, m, n, dx)

    def tail_zero(factor, part):
        return all(
            factor.pow(y, m) == 0
            for y in range(factor.size)
            if factor.pow(y, m) in part.members
        )

    def has_nonzero_power(factor, part):
        return any(
            factor.pow(x, m) != 0 and factor.pow(x, m) in part.members
            for x in range(factor.size)
        )

    rhs = False
    if j1.is_proper and j2.is_proper:
        side_a = (
            _wnc(j1, m, n, d1)
            and tail_zero(right, j2)
            and (not has_nonzero_power(left, j1) or _b(j2, m, n, d2))
        )
        side_b = (
            _wnc(j2, m, n, d2)
            and tail_zero(left, j1)
            and (not has_nonzero_power(right, j2) or _b(j1, m, n, d1))
        )
        rhs = side_a or side_b
    return _judge(
        lhs == rhs, detail,
        note=None if lhs == rhs else f"weakly-not-closed={lhs} split-form={rhs}",
    )


@_register(
    "T-PROD2",
    "product(2)",
    "an ideal of a product is weakly-but-not closed exactly when both "
    "parts are proper and one side carries the failure with the other "
    "side's m-th powers collapsing",
)
def _build_tprod2(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, d1, d2, dx in _product_setups(catalog):
        for ideal in proper:
            for m, n in catalog.mn_pairs():
                thunks.append(
                    partial(_inst_product_full, ring, d1, d2, dx, ideal, m, n)
                )
    return thunks


# --------------------------------------------------------------------------
# T-IDEAL: the trivial extension R (+) M
# --------------------------------------------------------------------------

def _module_repeat(module, w: int, times: int) -> int:
    acc = 0
    for _ in range(times):
        acc = module.add(acc, w)
    return acc


def _inst_idealization(triv, delta, dplus, ideal, m, n) -> Outcome:
    full = frozenset(triv.module.elements())
    block = triv_ideal(triv, ideal, full)
    detail = _detail(triv, ideal=block, base_ideal=ideal, delta=dplus, m=m, n=n)
    lhs = _wnc(block, m, n, dplus)
    rhs = False
    if _wnc(ideal, m, n, delta):
        base = triv.base
        rhs = all(
            _module_repeat(
                triv.module, triv.module.scalar(base.pow(x, m - 1), w), m
            ) == 0
            for x in unbreakable_zero_set(ideal, m, n, delta)
            for w in triv.module.elements()
        )
    return _judge(
        lhs == rhs, detail,
        note=None if lhs == rhs else f"extension={lhs} base-form={rhs}",
    )


@_register(
    "T-IDEAL",
    "idealization",
    "I (+) M is weakly-but-not closed exactly when I is and every "
    "exempted x kills the module via m copies of x^(m-1)M",
)
def _build_tideal(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, deltas in _ring_setups(catalog):
        if not isinstance(ring, TrivialExtension):
            continue
        base_proper = list(enumerate_ideals(ring.base).proper())
        for delta in catalog.deltas(ring.base):
            dplus = delta_idealization(delta, ring)
            for ideal in base_proper:
                for m, n in catalog.mn_pairs():
                    thunks.append(
                        partial(_inst_idealization, ring, delta, dplus, ideal, m, n)
                    )
    return thunks


# --------------------------------------------------------------------------
# T-AM1 .. T-AM7: amalgamated algebras A join^f J
# --------------------------------------------------------------------------

_BOW_CACHE: dict[tuple, tuple[str, object]] = {}


def _bow_for(amalgam: AmalgamRing, delta: ExpansionFn, delta1: ExpansionFn):
    key = (amalgam.key, delta.label, delta1.label)
    hit = _BOW_CACHE.get(key)
    if hit is None:
        try:
            hit = ("ok", delta_amalgam(delta, delta1, amalgam))
        except AxiomViolationError as err:
            hit = ("bad", str(err))
        _BOW_CACHE[key] = hit
    return hit


def _amalgam_family(catalog: Catalog) -> list[AmalgamRing]:
    family: list[AmalgamRing] = []
    seen = set()

    def push(am: AmalgamRing):
        if am.key not in seen:
            seen.add(am.key)
            family.append(am)

    rings = catalog.rings()
    for ring in rings:
        if isinstance(ring, AmalgamRing):
            push(ring)
    for ring in rings:
        if isinstance(ring, Zmod) and ring.size <= 16:
            lattice = enumerate_ideals(ring)
            choices = [zero_ideal(ring)]
            for ideal in lattice:
                if ideal.is_proper and not ideal.is_zero:
                    choices.append(ideal)
                    break
            for ideal in choices:
                push(duplicate(ring, ideal))
    for ring in rings:
        if isinstance(ring, TrivialExtension):
            full = frozenset(ring.module.elements())
            block = triv_ideal(ring, zero_ideal(ring.base), full)
            push(amalgamate(ring.base, ring, inj_hom(ring), block))
    for big, small, gens in ((8, 4, (2,)), (16, 4, (2,))):
        dom, cod = zmod(big), zmod(small)
        push(
            amalgamate(
                dom, cod, canon_hom(dom, cod), ideal_closure(cod, gens)
            )
        )
    return family


def _amalgam_setups(catalog: Catalog):
    """Amalgams with their expansion pairs; invalid pairs surface as skips."""
    for amalgam in _amalgam_family(catalog):
        sub = amalgam.subring()
        pairs = []
        skips = []
        for delta in catalog.deltas(amalgam.A):
            for delta1 in catalog.deltas(sub):
                status, payload = _bow_for(amalgam, delta, delta1)
                if status == "ok":
                    pairs.append((delta, delta1, payload))
                else:
                    skips.append((delta, delta1, payload))
        yield amalgam, sub, pairs, skips


def _skip_thunk(detail: dict, note: str) -> Thunk:
    return partial(lambda d, t: (SKIPPED, {**d, "note": t}), detail, note)


def _inst_am_closed_equiv(amalgam, delta, bow, ideal, m, n) -> Outcome:
    block = amalgam_ideal(amalgam, "IJ", ideal)
    detail = _detail(
        amalgam, ideal=block, base_ideal=ideal, delta=bow, m=m, n=n
    )
    lhs = _b(ideal, m, n, delta)
    rhs = _b(block, m, n, bow)
    return _judge(
        lhs == rhs, detail,
        note=None if lhs == rhs else f"closed base={lhs} closed amalgam={rhs}",
    )


@_register(
    "T-AM1",
    "4.1",
    "I is closed delta-primary exactly when the block ideal I join J is "
    "closed for the paired expansion",
)
def _build_tam1(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for amalgam, sub, pairs, skips in _amalgam_setups(catalog):
        a_proper = list(enumerate_ideals(amalgam.A).proper())
        for delta, delta1, note in skips:
            detail = _detail(amalgam, delta=delta, delta1=delta1)
            thunks.append(_skip_thunk(detail, note))
        for delta, delta1, bow in pairs:
            for ideal in a_proper:
                for m, n in catalog.mn_pairs():
                    thunks.append(
                        partial(_inst_am_closed_equiv, amalgam, delta, bow, ideal, m, n)
                    )
    return thunks


def _inst_am_weak_equiv(amalgam, delta, bow, ideal, m, n) -> Outcome:
    block = amalgam_ideal(amalgam, "IJ", ideal)
    detail = _detail(
        amalgam, ideal=block, base_ideal=ideal, delta=bow, m=m, n=n
    )
    lhs = _wnc(block, m, n, bow)
    rhs = False
    if _wnc(ideal, m, n, delta):
        A, B, f = amalgam.A, amalgam.B, amalgam.f
        rhs = all(
            B.pow(B.add(f.mapping[a], j), m) == 0
            for a in unbreakable_zero_set(ideal, m, n, delta)
            for j in amalgam.J.members
        )
    return _judge(
        lhs == rhs, detail,
        note=None if lhs == rhs else f"amalgam={lhs} base-form={rhs}",
    )


@_register(
    "T-AM2",
    "4.2",
    "I join J is weakly-but-not closed exactly when I is and every "
    "exempted a has (f(a)+j)^m = 0 for all j in J",
)
def _build_tam2(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for amalgam, sub, pairs, skips in _amalgam_setups(catalog):
        a_proper = list(enumerate_ideals(amalgam.A).proper())
        for delta, delta1, note in skips:
            detail = _detail(amalgam, delta=delta, delta1=delta1)
            thunks.append(_skip_thunk(detail, note))
        for delta, delta1, bow in pairs:
            for ideal in a_proper:
                for m, n in catalog.mn_pairs():
                    thunks.append(
                        partial(_inst_am_weak_equiv, amalgam, delta, bow, ideal, m, n)
                    )
    return thunks


def _ideal_power(ideal: Ideal, exponent: int) -> Ideal:
    acc = ideal
    for _ in range(exponent - 1):
        acc = ideal_product(acc, ideal)
    return acc


def _inst_am_char(amalgam, delta, bow, ideal, m, n, gate) -> Outcome:
    block = amalgam_ideal(amalgam, "IJ", ideal)
    detail = _detail(
        amalgam, ideal=block, base_ideal=ideal, delta=bow, m=m, n=n
    )
    if not gate:
        return _vac(detail, "characteristic or J^m gate fails")
    lhs = _wnc(block, m, n, bow)
    rhs = _wnc(ideal, m, n, delta)
    return _judge(
        lhs == rhs, detail,
        note=None if lhs == rhs else f"amalgam={lhs} base={rhs}",
    )


@_register(
    "T-AM3",
    "4.3",
    "when the subring f(A)+J has characteristic m and J^m = 0, "
    "weakly-but-not closed passes between I and I join J unchanged",
)
def _build_tam3(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for amalgam, sub, pairs, skips in _amalgam_setups(catalog):
        a_proper = list(enumerate_ideals(amalgam.A).proper())
        char = characteristic(sub)
        for delta, delta1, note in skips:
            detail = _detail(amalgam, delta=delta, delta1=delta1)
            thunks.append(_skip_thunk(detail, note))
        for delta, delta1, bow in pairs:
            for m, n in catalog.mn_pairs():
                gate = char == m and _ideal_power(amalgam.J, m).is_zero
                for ideal in a_proper:
                    thunks.append(
                        partial(_inst_am_char, amalgam, delta, bow, ideal, m, n, gate)
                    )
    return thunks


def _inst_am_dup(amalgam, delta, bow, ideal, m, n) -> Outcome:
    block = amalgam_ideal(amalgam, "IJ", ideal)
    detail = _detail(
        amalgam, ideal=block, base_ideal=ideal, delta=bow, m=m, n=n
    )
    lhs = _wnc(block, m, n, bow)
    rhs = False
    if _wnc(ideal, m, n, delta):
        A = amalgam.A
        rhs = all(
            A.pow(A.add(a, i), m) == 0
            for a in unbreakable_zero_set(ideal, m, n, delta)
            for i in amalgam.J.members
        )
    return _judge(
        lhs == rhs, detail,
        note=None if lhs == rhs else f"duplication={lhs} base-form={rhs}",
    )


@_register(
    "T-AM4",
    "4.4",
    "in a duplication A join I, a block K join I is weakly-but-not closed "
    "exactly when K is and exempted shifts a+i have zero m-th power",
)
def _build_tam4(catalog: Catalog) -> list[Thunk]:
    thunks = []
    identity_mapping = None
    for amalgam, sub, pairs, skips in _amalgam_setups(catalog):
        if amalgam.A.key != amalgam.B.key:
            continue
        if amalgam.f.mapping != tuple(range(amalgam.A.size)):
            continue
        a_proper = list(enumerate_ideals(amalgam.A).proper())
        for delta, delta1, note in skips:
            detail = _detail(amalgam, delta=delta, delta1=delta1)
            thunks.append(_skip_thunk(detail, note))
        for delta, delta1, bow in pairs:
            for ideal in a_proper:
                for m, n in catalog.mn_pairs():
                    thunks.append(
                        partial(_inst_am_dup, amalgam, delta, bow, ideal, m, n)
                    )
    return thunks


def _inst_am_vs_idealization(triv, amalgam, delta, dplus, bow, ideal, m, n) -> Outcome:
    full = frozenset(triv.module.elements())
    ext_block = triv_ideal(triv, ideal, full)
    am_block = amalgam_ideal(amalgam, "IJ", ideal)
    detail = _detail(
        amalgam, ideal=am_block, base_ideal=ideal, delta=bow,
        extension_delta=dplus, m=m, n=n,
    )
    same_weak = (
        _b(ext_block, m, n, dplus, weakly=True)
        == _b(am_block, m, n, bow, weakly=True)
    )
    same_closed = (
        _b(ext_block, m, n, dplus) == _b(am_block, m, n, bow)
    )
    ok = same_weak and same_closed
    return _judge(
        ok, detail,
        note=None if ok else f"weak-match={same_weak} closed-match={same_closed}",
    )


@_register(
    "T-AM5",
    "4.5",
    "amalgamating along the inclusion into R (+) M with J = 0 (+) M "
    "classifies block ideals exactly like the trivial extension",
)
def _build_tam5(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring in catalog.rings():
        if not isinstance(ring, TrivialExtension):
            continue
        base = ring.base
        full = frozenset(ring.module.elements())
        block = triv_ideal(ring, zero_ideal(base), full)
        amalgam = amalgamate(base, ring, inj_hom(ring), block)
        sub = amalgam.subring()
        base_proper = list(enumerate_ideals(base).proper())
        for kind in ("id", "rad"):
            delta = builtin_delta(base, kind)
            delta1 = builtin_delta(sub, kind)
            dplus = delta_idealization(delta, ring)
            status, payload = _bow_for(amalgam, delta, delta1)
            if status == "bad":
                detail = _detail(amalgam, delta=delta, delta1=delta1)
                thunks.append(_skip_thunk(detail, payload))
                continue
            for ideal in base_proper:
                for m, n in catalog.mn_pairs():
                    thunks.append(
                        partial(
                            _inst_am_vs_idealization,
                            ring, amalgam, delta, dplus, payload, ideal, m, n,
                        )
                    )
    return thunks


def _inst_am_kbar_closed(amalgam, sub, delta1, bow, kideal, m, n) -> Outcome:
    block = amalgam_ideal(amalgam, "Kbar", kideal)
    detail = _detail(
        amalgam, ideal=block, sub_ideal=kideal, delta=bow, delta1=delta1,
        m=m, n=n,
    )
    if amalgam_ideal_parts(block)[0] != "Kbar":
        return _skip(detail, "ideal is also first-coordinate shaped; "
                             "the expansion routes it through delta")
    lhs = _b(block, m, n, bow)
    rhs = _b(kideal, m, n, delta1)
    return _judge(
        lhs == rhs, detail,
        note=None if lhs == rhs else f"amalgam={lhs} subring={rhs}",
    )


@_register(
    "T-AM6",
    "4.6",
    "a second-coordinate ideal Kbar is closed for the paired expansion "
    "exactly when K is closed delta1-primary in f(A)+J",
)
def _build_tam6(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for amalgam, sub, pairs, skips in _amalgam_setups(catalog):
        sub_proper = list(enumerate_ideals(sub).proper())
        for delta, delta1, note in skips:
            detail = _detail(amalgam, delta=delta, delta1=delta1)
            thunks.append(_skip_thunk(detail, note))
        for delta, delta1, bow in pairs:
            for kideal in sub_proper:
                for m, n in catalog.mn_pairs():
                    thunks.append(
                        partial(_inst_am_kbar_closed, amalgam, sub, delta1, bow, kideal, m, n)
                    )
    return thunks


def _inst_am_kbar_weak(amalgam, sub, delta1, bow, kideal, m, n) -> Outcome:
    block = amalgam_ideal(amalgam, "Kbar", kideal)
    detail = _detail(
        amalgam, ideal=block, sub_ideal=kideal, delta=bow, delta1=delta1,
        m=m, n=n,
    )
    if amalgam_ideal_parts(block)[0] != "Kbar":
        return _skip(detail, "ideal is also first-coordinate shaped; "
                             "the expansion routes it through delta")
    lhs = _wnc(block, m, n, bow)
    rhs = False
    if _wnc(kideal, m, n, delta1):
        exempt = {
            sub.carrier[u]
            for u in unbreakable_zero_set(kideal, m, n, delta1)
        }
        A = amalgam.A
        rhs = all(
            A.pow(a, m) == 0
            for t in amalgam.elements()
            for a, b in (amalgam.decode(t),)
            if b in exempt
        )
    return _judge(
        lhs == rhs, detail,
        note=None if lhs == rhs else f"amalgam={lhs} subring-form={rhs}",
    )


@_register(
    "T-AM7",
    "4.7",
    "Kbar is weakly-but-not closed exactly when K is and every carrier "
    "pair over an exempted f(a)+j has a^m = 0",
)
def _build_tam7(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for amalgam, sub, pairs, skips in _amalgam_setups(catalog):
        sub_proper = list(enumerate_ideals(sub).proper())
        for delta, delta1, note in skips:
            detail = _detail(amalgam, delta=delta, delta1=delta1)
            thunks.append(_skip_thunk(detail, note))
        for delta, delta1, bow in pairs:
            for kideal in sub_proper:
                for m, n in catalog.mn_pairs():
                    thunks.append(
                        partial(_inst_am_kbar_weak, amalgam, sub, delta1, bow, kideal, m, n)
                    )
    return thunks


# --------------------------------------------------------------------------
# known-false claims
# --------------------------------------------------------------------------

def _inst_weak_implies_closed(ideal, delta, m, n) -> Outcome:
    detail = _detail(ideal.ring, ideal=ideal, delta=delta, m=m, n=n)
    if not _b(ideal, m, n, delta, weakly=True):
        return _vac(detail)
    ok, witness = classify_mn(ideal, m, n, delta)
    return _judge(
        ok, detail, witness=None if ok else ideal.ring.elem_name(witness)
    )


@_register(
    "F-W2C",
    "rem(converse)",
    "claim that weakly (m,n)-closed delta-primary already implies the "
    "plain version; fails as soon as zero has nilpotent roots",
    expect_true=False,
)
def _build_fw2c(catalog: Catalog) -> list[Thunk]:
    thunks = []
    for ring, proper, deltas in _ring_setups(catalog):
        for ideal in proper:
            for delta in deltas:
                for m, n in catalog.mn_pairs():
                    thunks.append(
                        partial(_inst_weak_implies_closed, ideal, delta, m, n)
                    )
    return thunks


def _inst_zero_not_closed(n) -> Outcome:
    ring = zmod(2 ** (n + 1))
    ideal = zero_ideal(ring)
    delta = builtin_delta(ring, "rad")
    detail = _detail(ring, ideal=ideal, delta=delta, m=n + 1, n=n)
    closed = _b(ideal, n + 1, n, delta)
    if not closed:
        return PASS, detail
    detail["witness"] = "2"
    detail["note"] = "2 is in rad({0}), so the closure test succeeds"
    return COUNTEREXAMPLE, detail


@_register(
    "F-EX35",
    "exa(radical)",
    "claim that (0) in Z_(2^(n+1)) is not (n+1,n)-closed rad-primary; "
    "refuted because every even element lies in rad((0))",
    expect_true=False,
)
def _build_fex35(catalog: Catalog) -> list[Thunk]:
    return [partial(_inst_zero_not_closed, n) for n in range(1, 5)]


def _inst_amalgam_claim(kind) -> Outcome:
    base = zmod(8)
    triv = None
    for ring in (small_catalog().rings()):
        if isinstance(ring, TrivialExtension) and ring.base.key == base.key:
            triv = ring
            break
    if triv is None:
        from .parser import parse_ring

        triv = parse_ring("triv(Z8,M[8])")
    full = frozenset(triv.module.elements())
    block = triv_ideal(triv, zero_ideal(base), full)
    amalgam = amalgamate(base, triv, inj_hom(triv), block)
    sub = amalgam.subring()
    bow = delta_amalgam(
        builtin_delta(base, kind), builtin_delta(sub, kind), amalgam
    )
    target = amalgam_ideal(amalgam, "IJ", zero_ideal(base))
    detail = _detail(amalgam, ideal=target, delta=bow, m=3, n=1)
    weakly, witness = classify_mn(target, 3, 1, bow, weakly=True)
    if not weakly:
        detail["witness"] = amalgam.elem_name(witness)
        return PASS, detail
    detail["note"] = (
        "weakly (3,1)-closed holds; with rad both sides land in the radical"
        if kind == "rad"
        else "weakly (3,1)-closed holds"
    )
    return COUNTEREXAMPLE, detail


@_register(
    "F-RMK45",
    "rem(amalgam)",
    "claim that 0 join (0 (+) M) over Z8 is never weakly (3,1)-closed for "
    "paired expansions; true for the identity pair, refuted for radicals",
    expect_true=False,
)
def _build_frmk45(catalog: Catalog) -> list[Thunk]:
    return [partial(_inst_amalgam_claim, kind) for kind in ("id", "rad")]


# --------------------------------------------------------------------------
# verification driver
# --------------------------------------------------------------------------

def list_theorems() -> list[tuple[str, str, str]]:
    return [
        (check.theorem_id, check.anchor, check.summary)
        for check in REGISTRY.values()
    ]


def verify_theorem(
    theorem_id: str,
    catalog: Catalog | None = None,
    workers: int = 1,
) -> TheoremReport:
    check = REGISTRY.get(theorem_id)
    if check is None:
        known = ", ".join(REGISTRY)
        raise UnknownTheoremError(
            f"unknown theorem id {theorem_id!r} (known: {known})"
        )
    catalog = catalog if catalog is not None else small_catalog()
    start = perf_counter()
    thunks = check.build(catalog)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda thunk: thunk(), thunks))
    else:
        outcomes = [thunk() for thunk in thunks]
    passes = vacuous = skipped = 0
    counterexamples: list[InstanceOutcome] = []
    for ordinal, (status, detail) in enumerate(outcomes):
        if status == PASS:
            passes += 1
        elif status == VACUOUS:
            vacuous += 1
        elif status == SKIPPED:
            skipped += 1
        else:
            counterexamples.append(InstanceOutcome(ordinal, status, detail))
    hits = passes + len(counterexamples)
    return TheoremReport(
        theorem_id=check.theorem_id,
        anchor=check.anchor,
        summary=check.summary,
        expect_true=check.expect_true,
        instances=len(outcomes),
        hits=hits,
        passes=passes,
        vacuous=vacuous,
        skipped=skipped,
        counterexamples=counterexamples,
        wall_time=perf_counter() - start,
    )


def verify_all(
    catalog: Catalog | None = None,
    theorem_ids: list[str] | None = None,
    workers: int = 1,
) -> list[TheoremReport]:
    ids = theorem_ids if theorem_ids is not None else list(REGISTRY)
    return [verify_theorem(tid, catalog, workers) for tid in ids]


# --------------------------------------------------------------------------
# conjecture fuzzer
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Conjecture:
    text: str
    hypothesis: tuple[str, ...]
    conclusion: tuple[str, ...]


@dataclass(frozen=True)
class _FuzzContext:
    ring: FiniteRing
    ideal: Ideal
    delta: ExpansionFn
    m: int
    n: int
    budget: int


def _guard_absorbing(ctx: _FuzzContext) -> bool:
    return (
        ctx.n <= ABSORB_N_CAP
        and ctx.ring.size ** (ctx.n + 1) <= ctx.budget
    )


def _atom_n_absorbing(ctx, weakly):
    if not _guard_absorbing(ctx):
        return None
    return is_n_absorbing(ctx.ideal, ctx.n, weakly)[0]


def _atom_n_absorbing_primary(ctx, weakly):
    if not _guard_absorbing(ctx):
        return None
    return is_n_absorbing_delta_primary(ctx.ideal, ctx.n, ctx.delta, weakly)[0]


def _atom_strongly(ctx, weakly):
    if ctx.n > ABSORB_N_CAP:
        return None
    return is_strongly_n_absorbing(ctx.ideal, ctx.n, weakly)[0]


def _atom_principal(ctx):
    return any(
        principal_ideal(ctx.ring, g).members == ctx.ideal.members
        for g in range(ctx.ring.size)
    )


CONJECTURE_ATOMS: dict[str, Callable[[_FuzzContext], bool | None]] = {
    "mn_closed": lambda c: _b(c.ideal, c.m, c.n),
    "weakly_mn_closed": lambda c: _b(c.ideal, c.m, c.n, weakly=True),
    "mn_closed_delta_primary": lambda c: _b(c.ideal, c.m, c.n, c.delta),
    "weakly_mn_closed_delta_primary": lambda c: _b(
        c.ideal, c.m, c.n, c.delta, weakly=True
    ),
    "semi_absorbing": lambda c: _semi_absorbing(c.ideal, c.n, c.delta, False),
    "weakly_semi_absorbing": lambda c: _semi_absorbing(
        c.ideal, c.n, c.delta, True
    ),
    "prime": lambda c: is_delta_primary(c.ideal)[0],
    "weakly_prime": lambda c: is_delta_primary(c.ideal, weakly=True)[0],
    "delta_primary": lambda c: is_delta_primary(c.ideal, c.delta)[0],
    "weakly_delta_primary": lambda c: is_delta_primary(
        c.ideal, c.delta, weakly=True
    )[0],
    "n_absorbing": lambda c: _atom_n_absorbing(c, False),
    "weakly_n_absorbing": lambda c: _atom_n_absorbing(c, True),
    "n_absorbing_delta_primary": lambda c: _atom_n_absorbing_primary(c, False),
    "weakly_n_absorbing_delta_primary": lambda c: _atom_n_absorbing_primary(
        c, True
    ),
    "strongly_n_absorbing": lambda c: _atom_strongly(c, False),
    "weakly_strongly_n_absorbing": lambda c: _atom_strongly(c, True),
    "has_unbreakable_zero": lambda c: bool(
        unbreakable_zero_set(c.ideal, c.m, c.n, c.delta)
    ),
    "subset_nil": lambda c: c.ideal.members
    <= nilradical(c.ring).members,
    "subset_jacobson": lambda c: c.ideal.members
    <= jacobson_radical(c.ring).members,
    "radical_ideal": lambda c: radical(c.ideal).members == c.ideal.members,
    "maximal": lambda c: is_maximal_ideal(c.ideal),
    "principal": _atom_principal,
    "zero_ideal": lambda c: c.ideal.is_zero,
    "delta_fixed": lambda c: c.delta(c.ideal).members == c.ideal.members,
    "delta_fip": lambda c: check_fip(c.delta)[0],
}


def parse_conjecture(text: str) -> Conjecture:
    if "->" not in text:
        raise BadConjectureError(
            "a conjecture reads 'atoms -> atoms', e.g. "
            "'weakly_mn_closed & subset_nil -> mn_closed'"
        )
    lhs, _, rhs = text.partition("->")

    def side(chunk: str, label: str) -> tuple[str, ...]:
        atoms = tuple(a.strip() for a in chunk.split("&"))
        if any(not a for a in atoms):
            raise BadConjectureError(f"empty predicate on the {label} side")
        for atom in atoms:
            if atom not in CONJECTURE_ATOMS:
                known = ", ".join(sorted(CONJECTURE_ATOMS))
                raise BadConjectureError(
                    f"unknown predicate {atom!r}; known predicates: {known}"
                )
        return atoms

    return Conjecture(text, side(lhs, "hypothesis"), side(rhs, "conclusion"))


@dataclass
class FuzzReport:
    conjecture: str
    seed: int
    trials: int
    evaluated: int
    skipped: int
    hypothesis_hits: int
    passes: int
    counterexamples: list[dict]
    minimal: dict | None

    def json_obj(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "seed": self.seed,
            "trials": self.trials,
            "evaluated": self.evaluated,
            "skipped": self.skipped,
            "hypothesis_hits": self.hypothesis_hits,
            "passes": self.passes,
            "counterexamples": self.counterexamples,
            "minimal": self.minimal,
        }

    def text(self) -> str:
        lines = [
            f"conjecture: {self.conjecture}",
            f"seed={self.seed} trials={self.trials} evaluated={self.evaluated} "
            f"skipped={self.skipped} hypothesis_hits={self.hypothesis_hits} "
            f"passes={self.passes} counterexamples={len(self.counterexamples)}",
        ]
        if self.minimal is not None:
            fields = " ".join(f"{k}={v}" for k, v in self.minimal.items())
            lines.append(f"minimal counterexample: {fields}")
        return "\n".join(lines)


def fuzz(
    conjecture: str,
    catalog: Catalog | None = None,
    trials: int = 200,
    seed: int = 0,
) -> FuzzReport:
    parsed = parse_conjecture(conjecture)
    catalog = catalog if catalog is not None else small_catalog()
    rng = random.Random(seed)
    pool = [
        (ring, proper, deltas)
        for ring, proper, deltas in _ring_setups(catalog)
    ]
    mn = catalog.mn_pairs()
    evaluated = skipped = hits = passes = 0
    found: list[tuple[tuple, dict]] = []
    for _ in range(trials):
        ring, proper, deltas = pool[rng.randrange(len(pool))]
        ideal = proper[rng.randrange(len(proper))]
        delta = deltas[rng.randrange(len(deltas))]
        m, n = mn[rng.randrange(len(mn))]
        ctx = _FuzzContext(ring, ideal, delta, m, n, catalog.tuple_budget)

        def run_side(atoms) -> bool | None:
            for atom in atoms:
                value = CONJECTURE_ATOMS[atom](ctx)
                if value is None:
                    return None
                if not value:
                    return False
            return True

        hyp = run_side(parsed.hypothesis)
        if hyp is None:
            skipped += 1
            continue
        evaluated += 1
        if not hyp:
            continue
        concl = run_side(parsed.conclusion)
        if concl is None:
            evaluated -= 1
            skipped += 1
            continue
        hits += 1
        if concl:
            passes += 1
        else:
            detail = _detail(ring, ideal=ideal, delta=delta, m=m, n=n)
            key = (ring.size, ring.expr, ideal.sorted_members, delta.label, m, n)
            found.append((key, detail))
    minimal = min(found, key=lambda item: item[0])[1] if found else None
    return FuzzReport(
        conjecture=parsed.text,
        seed=seed,
        trials=trials,
        evaluated=evaluated,
        skipped=skipped,
        hypothesis_hits=hits,
        passes=passes,
        counterexamples=[detail for _, detail in found],
        minimal=minimal,
    )
