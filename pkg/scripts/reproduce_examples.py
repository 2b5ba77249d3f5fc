#!/usr/bin/env python3
"""Walk through the library's reference examples, printing each computation.

Covers: the Z8 and Z4 closure readings, the radical-expansion closure family,
the amalgam weak-closure remark, the diamond-lattice intersection failure,
the mixed amalgam expansion that is not monotone, and localization collapse.

Usage: python3 scripts/reproduce_examples.py
"""

import sys

from ringlab import (
    MultSet,
    builtin_delta,
    check_fip,
    classify_mn,
    delta_amalgam,
    duplicate,
    ideal_closure,
    localize,
    mult_closure,
    unbreakable_zero_set,
    verify_theorem,
    zmod,
)
from ringlab.errors import AxiomViolationError
from ringlab.ideals import zero_ideal
from ringlab.parser import parse_ring


def section(title):
    print()
    print(title)
    print("-" * len(title))


def show_reading(ideal, m, n, delta=None, weakly=False):
    ok, witness = classify_mn(ideal, m, n, delta, weakly=weakly)
    kind = f"weakly ({m},{n})-closed" if weakly else f"({m},{n})-closed"
    tail = "" if witness is None else f"  (witness {witness})"
    print(f"  {ideal.ring.expr}, I={ideal.display}: {kind} "
          f"delta-primary: {str(ok).lower()}{tail}")


def main() -> int:
    section("{0,4} in Z8: weakly closed for (3,1) but not (2,1)")
    z8 = zmod(8)
    i = ideal_closure(z8, [4])
    show_reading(i, 3, 1, weakly=True)
    show_reading(i, 2, 1, weakly=True)
    show_reading(i, 3, 1)
    print(f"  elements with x^3=0 but x^1 outside the ideal: "
          f"{unbreakable_zero_set(i, 3, 1, builtin_delta(z8, 'id'))}")

    section("the zero ideal of Z4 separates weakly closed from closed")
    zero4 = zero_ideal(zmod(4))
    show_reading(zero4, 2, 1, weakly=True)
    show_reading(zero4, 2, 1)

    section("with the radical expansion, (0) in Z_2^(n+1) is (n+1,n)-closed")
    for n in range(1, 5):
        ring = zmod(2 ** (n + 1))
        delta = builtin_delta(ring, "rad")
        ok, _ = classify_mn(zero_ideal(ring), n + 1, n, delta)
        print(f"  Z{ring.size}: (n+1,n)=({n + 1},{n}) closed under rad: "
              f"{str(ok).lower()}  (2^{n + 1} = 0 and 2 lies in rad((0)))")
    print()
    print(verify_theorem("F-EX35").text())

    section("gluing Z8 to its idealization along 0(+)M: weak closure depends on the expansion")
    print(verify_theorem("F-RMK45").text())

    section("intersections: sum-with-{0,1} on triv(Z2,M[2,2]) breaks the property")
    t = parse_ring("triv(Z2,M[2,2])")
    delta = builtin_delta(t, "addk", (1,))
    ok, pair = check_fip(delta)
    print(f"  check_fip({delta.label}) on {t.expr}: {ok}")
    if not ok:
        a, b = pair
        inter = a.members & b.members
        print(f"  witness pair {a.display} and {b.display}: both map into the "
              f"expansion, their intersection {sorted(inter)} does not")
    for n in (2, 8, 12, 16):
        for kind in ("id", "rad"):
            assert check_fip(builtin_delta(zmod(n), kind))[0]
    print("  id and rad keep the property on every cyclic ring checked")

    section("mixed amalgam expansions can fail monotonicity")
    z8 = zmod(8)
    am = duplicate(z8, ideal_closure(z8, [4]))
    sub = am.subring()
    for ka, kb in (("id", "id"), ("rad", "rad"), ("rad", "id"), ("id", "rad")):
        try:
            delta_amalgam(builtin_delta(z8, ka), builtin_delta(sub, kb), am)
            print(f"  bow({ka},{kb}) on {am.expr}: expansion")
        except AxiomViolationError as err:
            print(f"  bow({ka},{kb}) on {am.expr}: REJECTED ({err})")

    section("localizing Z12 collapses according to the inverted set")
    z12 = zmod(12)
    for label, mset in (
        ("powers of 3 with units", mult_closure(z12, [3])),
        ("everything outside (3)",
         MultSet(z12, frozenset(range(12)) - ideal_closure(z12, [3]).members)),
        ("units only", mult_closure(z12, [5, 7, 11])),
    ):
        loc, _ = localize(z12, mset)
        print(f"  S = {sorted(mset.members)} ({label}): "
              f"{loc.size} elements, torsion {sorted(loc.torsion)}")

    print()
    print("done")
    return 0


if __name__ == "__main__":
    sys.exit(main())
