"""Finite commutative rings built from ``Z/n``, monic polynomial quotients and products.

Elements are encoded as integers in ``range(ring.size)`` through a fixed
mixed-radix encoding of their additive coordinates: an element is a vector in
``Z/n1 x ... x Z/nk`` (``ring.moduli``), coordinate 0 least significant.
All set-level algorithms (additive closures, matrix groups) run on these
integer indices; :class:`RingElement` is the user-facing wrapper.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod
from typing import Iterator, Sequence

from sympy import factorint

from .abelian import finite_quotient

__all__ = [
    "FiniteRing",
    "ModularRing",
    "PolynomialQuotient",
    "ProductRing",
    "RingElement",
    "galois_field",
    "units",
    "is_local",
    "LocalInfo",
]

# rings at most this large get cached add/mul tables
TABLE_LIMIT = 1024


class FiniteRing:
    """Base class; subclasses define ``moduli`` and the index-level ``_mul``."""

    moduli: tuple[int, ...]

    def _mul(self, i: int, j: int) -> int:
        raise NotImplementedError

    def _one_index(self) -> int:
        raise NotImplementedError

    # -- encoding ---------------------------------------------------------
    @cached_property
    def size(self) -> int:
        return prod(self.moduli)

    @cached_property
    def _radix(self) -> tuple[int, ...]:
        out, acc = [], 1
        for n in self.moduli:
            out.append(acc)
            acc *= n
        return tuple(out)

    def encode(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.moduli):
            raise ValueError(f"expected {len(self.moduli)} coordinates")
        return sum((c % n) * r for c, n, r in zip(coords, self.moduli, self._radix))

    def decode(self, index: int) -> tuple[int, ...]:
        out = []
        for n in self.moduli:
            index, c = divmod(index, n)
            out.append(c)
        return tuple(out)

    # -- index arithmetic -------------------------------------------------
    def _add_raw(self, i: int, j: int) -> int:
        return self.encode([a + b for a, b in zip(self.decode(i), self.decode(j))])

    def _neg_raw(self, i: int) -> int:
        return self.encode([-a for a in self.decode(i)])

    @cached_property
    def add_table(self) -> list[list[int]] | None:
        if self.size > TABLE_LIMIT:
            return None
        return [[self._add_raw(i, j) for j in range(self.size)] for i in range(self.size)]

    @cached_property
    def mul_table(self) -> list[list[int]] | None:
        if self.size > TABLE_LIMIT:
            return None
        n = self.size
        table = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                table[i][j] = table[j][i] = self._mul(i, j)
        return table

    def add(self, i: int, j: int) -> int:
        t = self.add_table
        return t[i][j] if t is not None else self._add_raw(i, j)

    def mul(self, i: int, j: int) -> int:
        t = self.mul_table
        return t[i][j] if t is not None else self._mul(i, j)

    def neg(self, i: int) -> int:
        return self._neg_raw(i)

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg(j))

    def scale(self, k: int, i: int) -> int:
        """Integer multiple ``k * x`` of the element with index ``i``."""
        return self.encode([k * c for c in self.decode(i)])

    @property
    def zero_index(self) -> int:
        return 0

    @cached_property
    def one_index(self) -> int:
        return self._one_index()

    def from_int(self, k: int) -> int:
        return self.scale(k, self.one_index)

    @cached_property
    def basis_indices(self) -> tuple[int, ...]:
        """Indices of the additive coordinate unit vectors."""
        k = len(self.moduli)
        return tuple(self.encode([1 if i == j else 0 for j in range(k)]) for i in range(k))

    # -- user facing ------------------------------------------------------
    def element(self, index: int) -> RingElement:
        return RingElement(self, index % self.size if self.size else 0)

    def __call__(self, value: int | Sequence[int]) -> RingElement:
        """``R(3)`` is the integer 3 in ``R``; ``R((c0, c1, ...))`` uses coordinates."""
        if isinstance(value, int):
            return RingElement(self, self.from_int(value))
        return RingElement(self, self.encode(value))

    @property
    def zero(self) -> RingElement:
        return RingElement(self, 0)

    @property
    def one(self) -> RingElement:
        return RingElement(self, self.one_index)

    def elements(self) -> Iterator[RingElement]:
        for i in range(self.size):
            yield RingElement(self, i)

    def __len__(self) -> int:
        return self.size

    @cached_property
    def unit_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.size) if self._index_is_unit(i))

    @cached_property
    def _unit_set(self) -> frozenset[int]:
        return frozenset(self.unit_indices)

    def is_unit_index(self, i: int) -> bool:
        return i in self._unit_set

    def _index_is_unit(self, i: int) -> bool:
        # multiplication by x is additive; x is a unit iff it is surjective,
        # i.e. the images of the additive basis generate everything
        if self.size == 1:
            return True
        images = [self.decode(self.mul(i, b)) for b in self.basis_indices]
        return finite_quotient(self.moduli, images).is_trivial

    @cached_property
    def _inverse_cache(self) -> dict[int, int]:
        return {}

    def inverse_index(self, i: int) -> int:
        cache = self._inverse_cache
        if i in cache:
            return cache[i]
        if not self.is_unit_index(i):
            raise ZeroDivisionError(f"{self.element(i)} is not a unit in {self}")
        one = self.one_index
        prev, y = one, i
        while y != one:
            prev, y = y, self.mul(y, i)
        cache[i] = prev
        cache[prev] = i
        return prev

    def format_index(self, i: int) -> str:
        raise NotImplementedError


@dataclass(frozen=True, eq=True)
class ModularRing(FiniteRing):
    """``Z/n`` for ``n >= 1``; ``Z/1`` is the zero ring."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be >= 1, got {self.n}")

    @property
    def moduli(self) -> tuple[int, ...]:
        return (self.n,)

    def _mul(self, i: int, j: int) -> int:
        return i * j % self.n

    def _one_index(self) -> int:
        return 1 % self.n

    def _add_raw(self, i: int, j: int) -> int:
        return (i + j) % self.n

    def _neg_raw(self, i: int) -> int:
        return -i % self.n

    def _index_is_unit(self, i: int) -> bool:
        return gcd(i, self.n) == 1

    def format_index(self, i: int) -> str:
        return str(i)

    def __str__(self) -> str:
        return f"Z/{self.n}"


@dataclass(frozen=True, eq=True)
class PolynomialQuotient(FiniteRing):
    """``base[var]/(f)`` for a monic ``f``; ``coeffs`` lists ``f`` from degree 0 up.

    Coefficients are element indices of ``base``; the last one must be ``1``.
    """

    base: FiniteRing
    coeffs: tuple[int, ...]
    var: str = "x"

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("quotient polynomial must have degree >= 1")
        if self.coeffs[-1] != self.base.one_index:
            raise ValueError("quotient polynomial is not monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def moduli(self) -> tuple[int, ...]:
        return self.base.moduli * self.degree

    def _split(self, i: int) -> list[int]:
        q = self.base.size
        out = []
        for _ in range(self.degree):
            i, c = divmod(i, q)
            out.append(c)
        return out

    def _join(self, cs: Sequence[int]) -> int:
        q = self.base.size
        return sum(c * q ** k for k, c in enumerate(cs))

    def _mul(self, i: int, j: int) -> int:
        B = self.base
        a, b = self._split(i), self._split(j)
        k = self.degree
        prod_ = [0] * (2 * k - 1)
        for s, x in enumerate(a):
            if x == 0:
                continue
            for t, y in enumerate(b):
                if y:
                    prod_[s + t] = B.add(prod_[s + t], B.mul(x, y))
        # reduce with x^k = -(f_0 + ... + f_{k-1} x^{k-1})
        for top in range(2 * k - 2, k - 1, -1):
            c = prod_[top]
            if c == 0:
                continue
            prod_[top] = 0
            for s in range(k):
                f = self.coeffs[s]
                if f:
                    prod_[top - k + s] = B.sub(prod_[top - k + s], B.mul(c, f))
        return self._join(prod_[:k])

    def _one_index(self) -> int:
        return self._join([self.base.one_index] + [0] * (self.degree - 1))

    def format_index(self, i: int) -> str:
        terms = []
        for k, c in enumerate(self._split(i)):
            if c == 0:
                continue
            cs = self.base.format_index(c)
            if " " in cs or "+" in cs:
                cs = f"({cs})"
            if k == 0:
                terms.append(cs)
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                terms.append(mono if cs == "1" else f"{cs}*{mono}")
        return " + ".join(terms) if terms else "0"

    def _poly_str(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            cs = self._coeff_str(c)
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if not mono:
                terms.append(cs)
            else:
                terms.append(mono if cs == "1" else f"{cs}{mono}")
        return "+".join(terms)

    def _coeff_str(self, c: int) -> str:
        # written as an integer whenever the coefficient is one, as the ring-spec grammar needs
        B = self.base
        for k in range(B.size):
            if B.from_int(k) == c:
                return str(k)
        return f"({B.format_index(c)})"

    def __str__(self) -> str:
        return f"{_wrap(self.base)}[{self.var}]/({self._poly_str()})"


@dataclass(frozen=True, eq=True)
class ProductRing(FiniteRing):
    """Direct product ``R1 x ... x Rk`` with componentwise operations."""

    factors: tuple[FiniteRing, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a product needs at least one factor")

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(m for f in self.factors for m in f.moduli)

    def _split(self, i: int) -> list[int]:
        out = []
        for f in self.factors:
            i, c = divmod(i, f.size)
            out.append(c)
        return out

    def _join(self, cs: Sequence[int]) -> int:
        acc, out = 1, 0
        for f, c in zip(self.factors, cs):
            out += c * acc
            acc *= f.size
        return out

    def _mul(self, i: int, j: int) -> int:
        return self._join([f.mul(a, b) for f, a, b in zip(self.factors, self._split(i), self._split(j))])

    def _one_index(self) -> int:
        return self._join([f.one_index for f in self.factors])

    def _index_is_unit(self, i: int) -> bool:
        return all(f.is_unit_index(c) for f, c in zip(self.factors, self._split(i)))

    def format_index(self, i: int) -> str:
        return "(" + ", ".join(f.format_index(c) for f, c in zip(self.factors, self._split(i))) + ")"

    def __str__(self) -> str:
        return " x ".join(_wrap(f) for f in self.factors)


def _wrap(R: FiniteRing) -> str:
    return f"({R})" if isinstance(R, ProductRing) else str(R)


class RingElement:
    """An element of a :class:`FiniteRing`, stored by its encoding index."""

    __slots__ = ("ring", "index")

    def __init__(self, ring: FiniteRing, index: int):
        self.ring = ring
        self.index = index

    @property
    def parent(self) -> FiniteRing:
        return self.ring

    @property
    def coords(self) -> tuple[int, ...]:
        return self.ring.decode(self.index)

    def _coerce(self, other) -> int:
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError(f"cannot combine elements of {self.ring} and {other.ring}")
            return other.index
        if isinstance(other, int):
            return self.ring.from_int(other)
        raise TypeError(f"unsupported operand {other!r}")

    def __add__(self, other) -> RingElement:
        return RingElement(self.ring, self.ring.add(self.index, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other) -> RingElement:
        return RingElement(self.ring, self.ring.sub(self.index, self._coerce(other)))

    def __rsub__(self, other) -> RingElement:
        return RingElement(self.ring, self.ring.sub(self._coerce(other), self.index))

    def __mul__(self, other) -> RingElement:
        if isinstance(other, int):
            return RingElement(self.ring, self.ring.scale(other, self.index))
        return RingElement(self.ring, self.ring.mul(self.index, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, self.ring.neg(self.index))

    def __pow__(self, k: int) -> RingElement:
        if k < 0:
            return self.inverse() ** (-k)
        r = self.ring.one
        for _ in range(k):
            r = r * self
        return r

    def __truediv__(self, other) -> RingElement:
        return self * RingElement(self.ring, self._coerce(other)).inverse()

    def is_unit(self) -> bool:
        return self.ring.is_unit_index(self.index)

    def inverse(self) -> RingElement:
        return RingElement(self.ring, self.ring.inverse_index(self.index))

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return self.index == other.index and (self.ring is other.ring or self.ring == other.ring)
        if isinstance(other, int):
            return self.index == self.ring.from_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.index))

    def __repr__(self) -> str:
        return f"RingElement({self.ring}, {self.ring.format_index(self.index)})"

    def __str__(self) -> str:
        return self.ring.format_index(self.index)


def units(R: FiniteRing) -> list[RingElement]:
    """All invertible elements of ``R`` in index order (``Z/1`` gives ``[0]``)."""
    return [RingElement(R, i) for i in R.unit_indices]


@dataclass(frozen=True)
class LocalInfo:
    is_local: bool
    maximal_ideal: frozenset[int]     # element indices; empty when not local
    residue_size: int | None
    maximal_ideal_squared: frozenset[int]


def additive_span(R: FiniteRing, gens: Sequence[int]) -> frozenset[int]:
    """Additive subgroup of ``R`` generated by the given element indices."""
    span = {0}
    for g in gens:
        if g in span:
            continue
        new = set(span)
        frontier = list(span)
        while frontier:
            nxt = []
            for s in frontier:
                t = R.add(s, g)
                if t not in new:
                    new.add(t)
                    nxt.append(t)
            frontier = nxt
        span = new
    return frozenset(span)


def is_local(R: FiniteRing) -> LocalInfo:
    """Decide locality: the non-units must be closed under addition."""
    if R.size == 1:
        # the zero ring has no maximal ideal
        return LocalInfo(False, frozenset(), None, frozenset())
    non_units = [i for i in range(R.size) if not R.is_unit_index(i)]
    nu = set(non_units)
    for a in non_units:
        for b in non_units:
            if R.add(a, b) not in nu:
                return LocalInfo(False, frozenset(), None, frozenset())
    m = frozenset(non_units)
    m2 = additive_span(R, sorted({R.mul(a, b) for a in non_units for b in non_units}))
    return LocalInfo(True, m, R.size // len(m), m2)


def _is_prime_power(q: int) -> tuple[int, int] | None:
    f = factorint(q)
    if len(f) != 1:
        return None
    (p, k), = f.items()
    return p, k


def _poly_rem_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    # coefficient lists from degree 0; b monic
    a = a[:]
    while len(a) >= len(b):
        c = a[-1] % p
        shift = len(a) - len(b)
        if c:
            for i, bc in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bc) % p
        a.pop()
    return a


def _irreducible_mod_p(f: list[int], p: int) -> bool:
    k = len(f) - 1
    for deg in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            g = list(low) + [1]
            if not any(_poly_rem_mod_p(f, g, p)):
                return False
    return True


def galois_field(q: int) -> FiniteRing:
    """``GF(q)``: ``Z/p`` for prime ``q``, else ``Z/p[x]/(f)`` with ``f`` the first
    monic irreducible of degree ``k`` when coefficient vectors are compared
    from the ``x^(k-1)`` coefficient down to the constant term."""
    pk = _is_prime_power(q) if q > 1 else None
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    p, k = pk
    if k == 1:
        return ModularRing(p)
    for high_first in itertools.product(range(p), repeat=k):
        f = list(reversed(high_first)) + [1]
        if f[0] and _irreducible_mod_p(f, p):
            return PolynomialQuotient(ModularRing(p), tuple(f))
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover
