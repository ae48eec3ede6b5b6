"""Recursive-descent parser for the ring-spec mini-language.

Grammar (whitespace is insignificant)::

    spec  := atom ('x' atom)*
    atom  := base ('[' var ']' '/' '(' poly ')')*
    base  := 'Z/' nat | 'GF(' nat ')' | '(' spec ')'
    poly  := term (('+' | '-') term)*
    term  := int ['*'] [var ['^' nat]] | var ['^' nat]

Examples: ``Z/12``, ``GF(4)``, ``Z/2[x]/(x^2)``, ``Z/2 x Z/3 x Z/3``.
"""

from __future__ import annotations

from .rings import FiniteRing, ModularRing, PolynomialQuotient, ProductRing, galois_field

__all__ = ["ParseError", "parse_ring_spec"]


class ParseError(ValueError):
    """Malformed input; ``position`` is a 0-based offset into the source text."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # -- lexing helpers ---------------------------------------------------
    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self._skip()
        return self.text.startswith(s, self.pos)

    def eat(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.eat(s):
            self.error(f"expected {s!r}")

    def error(self, message: str, position: int | None = None):
        raise ParseError(message, self.text, self.pos if position is None else position)

    def nat(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        return int(self.text[start:self.pos])

    def ident(self) -> str:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if start == self.pos:
            self.error("expected a variable name")
        return self.text[start:self.pos]

    # -- grammar ----------------------------------------------------------
    def spec(self) -> FiniteRing:
        factors = [self.atom()]
        while self.eat("x"):
            factors.append(self.atom())
        return factors[0] if len(factors) == 1 else ProductRing(tuple(factors))

    def atom(self) -> FiniteRing:
        ring = self.base()
        while self.eat("["):
            var = self.ident()
            self.expect("]")
            self.expect("/")
            self.expect("(")
            start = self.pos
            coeffs = self.poly(var)
            self.expect(")")
            ring = self._quotient(ring, var, coeffs, start)
        return ring

    def base(self) -> FiniteRing:
        start = self.pos
        if self.eat("Z/"):
            n = self.nat()
            if n < 1:
                self.error("modulus must be >= 1", start)
            return ModularRing(n)
        if self.eat("GF("):
            q = self.nat()
            self.expect(")")
            try:
                return galois_field(q)
            except ValueError as exc:
                self.error(str(exc), start)
        if self.eat("("):
            ring = self.spec()
            self.expect(")")
            return ring
        self.error("expected 'Z/', 'GF(' or '('")

    def poly(self, var: str) -> dict[int, int]:
        coeffs: dict[int, int] = {}
        sign = 1
        if self.eat("-"):
            sign = -1
        else:
            self.eat("+")
        while True:
            c, e = self.term(var)
            coeffs[e] = coeffs.get(e, 0) + sign * c
            if self.eat("+"):
                sign = 1
            elif self.eat("-"):
                sign = -1
            else:
                return coeffs

    def term(self, var: str) -> tuple[int, int]:
        self._skip()
        coef = None
        if self.pos < len(self.text) and self.text[self.pos].isdigit():
            coef = self.nat()
            self.eat("*")
        self._skip()
        if self.pos < len(self.text) and self.text[self.pos].isalpha():
            at = self.pos
            name = self.ident()
            if name != var:
                self.error(f"unknown variable {name!r} (expected {var!r})", at)
            exp = self.nat() if self.eat("^") else 1
            return (1 if coef is None else coef), exp
        if coef is None:
            self.error("expected a polynomial term")
        return coef, 0

    def _quotient(self, base: FiniteRing, var: str, coeffs: dict[int, int], start: int) -> FiniteRing:
        deg = max((e for e, c in coeffs.items() if c != 0), default=-1)
        if deg < 1:
            self.error("quotient polynomial must have degree >= 1", start)
        lifted = tuple(base.from_int(coeffs.get(e, 0)) for e in range(deg + 1))
        if lifted[-1] != base.one_index:
            self.error("quotient polynomial is not monic", start)
        return PolynomialQuotient(base, lifted, var)


def parse_ring_spec(text: str) -> FiniteRing:
    """Parse a ring spec such as ``"Z/2[x]/(x^2+x+1) x Z/3"``."""
    p = _Parser(text)
    ring = p.spec()
    p._skip()
    if p.pos != len(text):
        p.error("unexpected trailing input")
    return ring
