"""Text DSLs for rings, ideals, and expansion functions.

Ring grammar (whitespace between tokens is ignored)::

    ring  := term ('x' term)*
    term  := 'Z' nat
           | 'quot' '(' ring ',' set ')'
           | 'loc'  '(' ring ',' set ')'
           | 'triv' '(' ring ',' 'M' '[' nats ']' ')'
           | 'amal' '(' ring ',' ring ',' hom ',' set ')'
           | 'dup'  '(' ring ',' set ')'
    hom   := 'id' | 'canon' | 'inj' | 'map' '[' nats ']'
    set   := '{' nats '}'
    nats  := nat (',' nat)*

'x' builds product rings (left associative).  Sets denote generators: the
ideal generated by them for quot/amal/dup, the multiplicative closure for
loc.  Homomorphisms in amal: 'id' needs equal rings, 'canon' the canonical
surjection (Z n -> Z m with m | n, or a ring onto its quotient), 'inj' the
embedding of a ring into its trivial extension, 'map[...]' an explicit image
table indexed by domain element.

Expansion grammar, relative to a ring::

    delta := 'id' | 'rad'
           | 'addk' '(' set ')'    (add a fixed ideal)
           | 'comp' '(' delta ',' delta ')'
           | 'q'    '(' delta ')'  (quotient ring; inner delta on the base)
           | 'prod' '(' delta ',' delta ')'   (product ring, per factor)
           | 'plus' '(' delta ')'  (trivial extension; inner on the base)
           | 'bow'  '(' delta ',' delta ')'   (amalgam: on A, on f(A)+J)
           | 'locext' '(' delta ')' (localization; inner on the base)

Syntax problems raise ``RingSyntaxError`` and semantic ones
``SemanticExprError`` / the constructor's own error, each carrying the
0-based offset of the offending token.  Canonical forms round-trip:
``parse_ring(r.expr) is r`` and ``parse_delta(ring, d.label) == d``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RinglabError, RingSyntaxError, SemanticExprError
from .rings import (
    FiniteRing,
    ProductRing,
    RingHom,
    Zmod,
    identity_hom,
    product,
    zmod,
)
from .ideals import Ideal, QuotientRing, ideal_closure, quotient_ring
from .constructions import (
    AmalgamRing,
    LocalizedRing,
    TrivialExtension,
    amalgamate,
    canon_hom,
    inj_hom,
    localize,
    mult_closure,
    trivial_extension,
)
from .expansions import (
    ExpansionFn,
    builtin_delta,
    delta_amalgam,
    delta_compose,
    delta_idealization,
    delta_localization,
    delta_product,
    delta_quotient,
)

@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "name", "end", or the punctuation character itself
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    out = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Token("num", text[i:j], i))
            i = j
        elif c.isalpha():
            j = i + 1
            while j < n and text[j].isalpha():
                j += 1
            out.append(_Token("name", text[i:j], i))
            i = j
        elif c in "()[]{},":
            out.append(_Token(c, c, i))
            i += 1
        else:
            raise RingSyntaxError(f"unexpected character {c!r}", i)
    out.append(_Token("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.at = 0

    def peek(self) -> _Token:
        return self.tokens[self.at]

    def take(self) -> _Token:
        tok = self.tokens[self.at]
        self.at += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.take()
        if tok.kind != kind:
            raise RingSyntaxError(
                f"expected {kind!r}, got {tok.text!r}", tok.pos
            )
        return tok

    def done(self) -> None:
        tok = self.peek()
        if tok.kind != "end":
            raise RingSyntaxError(f"trailing input {tok.text!r}", tok.pos)

    def number(self) -> tuple[int, int]:
        tok = self.expect("num")
        return int(tok.text), tok.pos

    def nat_list(self) -> list[tuple[int, int]]:
        out = [self.number()]
        while self.peek().kind == ",":
            self.take()
            out.append(self.number())
        return out

    def nat_set(self) -> tuple[list[int], int]:
        brace = self.expect("{")
        values = [v for v, _ in self.nat_list()]
        self.expect("}")
        return values, brace.pos

    @staticmethod
    def build(pos: int, fn, *args):
        """Run a constructor, pinning its error to a source position."""
        try:
            return fn(*args)
        except RinglabError as e:
            if e.position is None:
                raise type(e)(e.message, position=pos) from None
            raise

    # ---- rings ----

    def ring(self) -> FiniteRing:
        out = self.term()
        while self.peek().kind == "name" and self.peek().text == "x":
            self.take()
            out = product(out, self.term())
        # 'Z4 x Z2' tokenizes 'x' as a name only when separated by spaces;
        # glued forms like 'Z4xZ2' keep 'xZ' inside one name and fail above,
        # which is intentional: products need spaces around 'x'.
        return out

    def term(self) -> FiniteRing:
        tok = self.expect("name")
        if tok.text == "Z":
            n, pos = self.number()
            return self.build(pos, zmod, n)
        if tok.text == "quot":
            self.expect("(")
            base = self.ring()
            self.expect(",")
            gens, pos = self.nat_set()
            self.expect(")")
            ideal = self.build(pos, ideal_closure, base, gens)
            return self.build(pos, quotient_ring, base, ideal)[0]
        if tok.text == "loc":
            self.expect("(")
            base = self.ring()
            self.expect(",")
            gens, pos = self.nat_set()
            self.expect(")")
            mset = self.build(pos, mult_closure, base, gens)
            return self.build(pos, localize, base, mset)[0]
        if tok.text == "triv":
            self.expect("(")
            base = self.ring()
            self.expect(",")
            mtok = self.expect("name")
            if mtok.text != "M":
                raise RingSyntaxError(
                    f"expected module 'M', got {mtok.text!r}", mtok.pos
                )
            self.expect("[")
            dims = [v for v, _ in self.nat_list()]
            self.expect("]")
            self.expect(")")
            return self.build(mtok.pos, trivial_extension, base, tuple(dims))
        if tok.text == "amal":
            self.expect("(")
            A = self.ring()
            self.expect(",")
            B = self.ring()
            self.expect(",")
            f = self.hom(A, B)
            self.expect(",")
            gens, pos = self.nat_set()
            self.expect(")")
            J = self.build(pos, ideal_closure, B, gens)
            return self.build(tok.pos, amalgamate, A, B, f, J)
        if tok.text == "dup":
            self.expect("(")
            A = self.ring()
            self.expect(",")
            gens, pos = self.nat_set()
            self.expect(")")
            I = self.build(pos, ideal_closure, A, gens)
            return self.build(tok.pos, amalgamate, A, A, identity_hom(A), I)
        raise RingSyntaxError(f"unknown ring form {tok.text!r}", tok.pos)

    def hom(self, A: FiniteRing, B: FiniteRing) -> RingHom:
        tok = self.expect("name")
        if tok.text == "id":
            if A != B:
                raise SemanticExprError(
                    "hom 'id' needs equal source and target rings", tok.pos
                )
            return identity_hom(A)
        if tok.text == "canon":
            if isinstance(B, QuotientRing) and B.base == A:
                return RingHom(A, B, B.coset_of, display="canon")
            if not (isinstance(A, Zmod) and isinstance(B, Zmod)):
                raise SemanticExprError(
                    "hom 'canon' needs Z n -> Z m or a ring onto its quotient",
                    tok.pos,
                )
            return self.build(tok.pos, canon_hom, A, B)
        if tok.text == "inj":
            if not (isinstance(B, TrivialExtension) and B.base == A):
                raise SemanticExprError(
                    "hom 'inj' needs the target to be a trivial extension "
                    "of the source",
                    tok.pos,
                )
            return inj_hom(B)
        if tok.text == "map":
            self.expect("[")
            values = [v for v, _ in self.nat_list()]
            self.expect("]")
            display = f"map[{','.join(str(v) for v in values)}]"
            return self.build(
                tok.pos, RingHom, A, B, tuple(values), display
            )
        raise RingSyntaxError(f"unknown homomorphism {tok.text!r}", tok.pos)

    # ---- expansions ----

    def delta(self, ring: FiniteRing) -> ExpansionFn:
        tok = self.expect("name")
        if tok.text in ("id", "rad"):
            return builtin_delta(ring, tok.text)
        if tok.text == "addk":
            self.expect("(")
            gens, pos = self.nat_set()
            self.expect(")")
            self.build(pos, ideal_closure, ring, gens)
            return self.build(pos, builtin_delta, ring, "addk", tuple(gens))
        if tok.text == "comp":
            self.expect("(")
            outer = self.delta(ring)
            self.expect(",")
            inner = self.delta(ring)
            self.expect(")")
            return self.build(tok.pos, delta_compose, outer, inner)
        if tok.text == "q":
            if not isinstance(ring, QuotientRing):
                raise SemanticExprError(
                    f"'q' needs a quotient ring, got {ring.expr}", tok.pos
                )
            self.expect("(")
            inner = self.delta(ring.base)
            self.expect(")")
            return self.build(tok.pos, delta_quotient, inner, ring)
        if tok.text == "prod":
            if not isinstance(ring, ProductRing):
                raise SemanticExprError(
                    f"'prod' needs a product ring, got {ring.expr}", tok.pos
                )
            self.expect("(")
            d1 = self.delta(ring.left)
            self.expect(",")
            d2 = self.delta(ring.right)
            self.expect(")")
            return self.build(tok.pos, delta_product, d1, d2, ring)
        if tok.text == "plus":
            if not isinstance(ring, TrivialExtension):
                raise SemanticExprError(
                    f"'plus' needs a trivial extension, got {ring.expr}",
                    tok.pos,
                )
            self.expect("(")
            inner = self.delta(ring.base)
            self.expect(")")
            return self.build(tok.pos, delta_idealization, inner, ring)
        if tok.text == "bow":
            if not isinstance(ring, AmalgamRing):
                raise SemanticExprError(
                    f"'bow' needs an amalgamated ring, got {ring.expr}", tok.pos
                )
            self.expect("(")
            d = self.delta(ring.A)
            self.expect(",")
            d1 = self.delta(ring.subring())
            self.expect(")")
            return self.build(tok.pos, delta_amalgam, d, d1, ring)
        if tok.text == "locext":
            if not isinstance(ring, LocalizedRing):
                raise SemanticExprError(
                    f"'locext' needs a localized ring, got {ring.expr}", tok.pos
                )
            self.expect("(")
            inner = self.delta(ring.base)
            self.expect(")")
            return self.build(tok.pos, delta_localization, inner, ring)
        raise RingSyntaxError(f"unknown expansion {tok.text!r}", tok.pos)


def parse_ring(text: str) -> FiniteRing:
    p = _Parser(text)
    out = p.ring()
    p.done()
    return out


def parse_ideal(ring: FiniteRing, text: str) -> Ideal:
    """'{a,b,...}' generates an ideal; members may be any generators."""
    p = _Parser(text)
    gens, pos = p.nat_set()
    p.done()
    return _Parser.build(pos, ideal_closure, ring, gens)


def parse_delta(ring: FiniteRing, text: str) -> ExpansionFn:
    p = _Parser(text)
    out = p.delta(ring)
    p.done()
    return out
