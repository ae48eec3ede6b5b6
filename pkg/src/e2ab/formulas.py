"""Closed forms for ``E_2^ab`` over ``Z[1/m]`` and over quadratic integer rings.

``od_ab`` gives the tabulated answer for ``d < 0`` and the gcd formulas for
``O_d/M`` when ``d > 0``; ``od_m_oracle`` recomputes ``O_d/M`` from lattice
generators with no gcd shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .abelian import AbelianGroup
from .matrices import E, Mat2, identity
from .msubgroup import LatticeSubgroup, m_subgroup_quadratic
from .quadratic import QuadInt, QuadraticOrder, is_squarefree

__all__ = [
    "zinv_ab",
    "pslinv_ab",
    "FundamentalUnit",
    "fundamental_unit",
    "od_ab",
    "od_ab_as_stated",
    "od_m_oracle",
    "od_m_lattice",
    "od_refined_ab",
    "EXCEPTIONAL_D",
    "exceptional_symbol",
    "minus_eleven_witness",
    "is_minus_identity",
]

EXCEPTIONAL_D = (-2, -7, -11)

# E_2(O_d)^ab for d < 0
_NEGATIVE_TABLE = {
    -1: AbelianGroup(0, (2, 2)),
    -2: AbelianGroup(1, (6,)),
    -3: AbelianGroup(0, (3,)),
    -7: AbelianGroup(1, (4,)),
    -11: AbelianGroup(1, (3,)),
}
_NEGATIVE_DEFAULT = AbelianGroup(1, (12,))


def _check_positive_squarefree(m: int):
    if m < 1 or not (m == 1 or is_squarefree(m)):
        raise ValueError(f"m = {m} must be a square-free positive integer")


def zinv_ab(m: int) -> AbelianGroup:
    """``SL_2(Z[1/m])^ab``."""
    _check_positive_squarefree(m)
    two, three = m % 2 == 0, m % 3 == 0
    return AbelianGroup.cyclic({(True, True): 1, (True, False): 3,
                                (False, True): 4, (False, False): 12}[two, three])


def pslinv_ab(m: int) -> AbelianGroup:
    """``PSL_2(Z[1/m])^ab``."""
    _check_positive_squarefree(m)
    two, three = m % 2 == 0, m % 3 == 0
    return AbelianGroup.cyclic({(True, True): 1, (True, False): 3,
                                (False, True): 2, (False, False): 6}[two, three])


@dataclass(frozen=True)
class FundamentalUnit:
    """``u = a + b*theta > 1`` generating ``O_d^x`` together with ``-1``."""

    d: int
    a: int
    b: int
    norm: int

    @property
    def order(self) -> QuadraticOrder:
        return QuadraticOrder(self.d)

    def as_quadint(self) -> QuadInt:
        return QuadInt(self.order, self.a, self.b)

    def __float__(self) -> float:
        return float(self.as_quadint())


def fundamental_unit(d: int) -> FundamentalUnit:
    """Fundamental unit of ``O_d`` for square-free ``d > 1``.

    Expands ``theta`` (``sqrt d``, or ``(1 + sqrt d)/2`` when ``d = 1 mod 4``)
    as a continued fraction through the exact surd recurrence
    ``(P + sqrt d)/Q``. The first convergent ``p/q`` whose associated element
    has norm ``+-1`` gives the unit: ``p + q sqrt d`` with ``p^2 - dq^2 = +-1``,
    respectively ``((2p - q) + q sqrt d)/2`` with ``(2p - q)^2 - dq^2 = +-4``.
    """
    if d <= 1 or not is_squarefree(d):
        raise ValueError(f"d = {d} must be a square-free integer > 1")
    r = isqrt(d)
    omega = d % 4 == 1
    P, Q = (1, 2) if omega else (0, 1)
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    seen = set()
    while True:
        a_k = (P + r) // Q
        p_prev, p = p, a_k * p + p_prev
        q_prev, q = q, a_k * q + q_prev
        if omega:
            x, y = 2 * p - q, q
            n4 = x * x - d * y * y
            if n4 in (4, -4):
                return FundamentalUnit(d, p - q, q, n4 // 4)
        else:
            n = p * p - d * q * q
            if n in (1, -1):
                return FundamentalUnit(d, p, q, n)
        P = a_k * Q - P
        Q = (d - P * P) // Q
        if (P, Q) in seen:
            raise AssertionError("continued fraction period ended without a unit")  # pragma: no cover
        seen.add((P, Q))


def _cyclic_pair(m: int, n: int) -> AbelianGroup:
    return AbelianGroup.from_invariants([m, n])


def od_ab_as_stated(d: int, unit: FundamentalUnit | None = None) -> AbelianGroup:
    """``O_d/M`` for ``d > 0`` from the literal four-case gcd closed form.

    Kept for comparison: its ``d = 1 mod 4``, ``N(u) = 1`` case reads the
    quotient coordinatewise and is too small for some ``d`` (57 is the first).
    ``od_ab`` uses the corrected invariants.
    """
    u = unit or fundamental_unit(d)
    a, b = u.a, u.b
    if d % 4 != 1:
        if u.norm == 1:
            return _cyclic_pair(2 * gcd(b * d, 3 * a + 3, 6), 2 * b)
        return _cyclic_pair(2 * gcd(a, 3), 2 * gcd(a, 3 * b))
    if u.norm == 1:
        return _cyclic_pair(gcd(b, 6 * (a - 1), 12), gcd(b * d, 12 * (a - 1) + 6 * b, 24))
    return _cyclic_pair(gcd(2 * a + b, 6 * (a - 1), 12), gcd(2 * a + b, 6 * b))


def _od_positive(d: int, u: FundamentalUnit) -> AbelianGroup:
    a, b = u.a, u.b
    if d % 4 == 1 and u.norm == 1:
        # O_d/(u^2 - 1) = Z/b x Z/bd, further divided by (6(a-1), 12(a-1) + 6b)
        # and (12, 24); invariants from the gcds of the entries and 2x2 minors
        first = gcd(b, 6 * (a - 1), 12)
        minors = b * gcd(b * d, 12 * (a - 1) + 6 * b, 24, 6 * (a - 1) * d, 12 * d)
        return _cyclic_pair(first, minors // first)
    return od_ab_as_stated(d, u)


def od_ab(d: int) -> AbelianGroup:
    """``E_2(O_d)^ab`` for ``d < 0``; the finite group ``O_d/M`` (which surjects
    onto ``E_2(O_d)^ab``) for ``d > 0``."""
    QuadraticOrder(d)  # validates d
    if d < 0:
        return _NEGATIVE_TABLE.get(d, _NEGATIVE_DEFAULT)
    return _od_positive(d, fundamental_unit(d))


def od_m_lattice(d: int, unit_power_bound: int | None = None) -> LatticeSubgroup:
    O = QuadraticOrder(d)
    if d < 0:
        return m_subgroup_quadratic(O)
    u = fundamental_unit(d).as_quadint()
    return m_subgroup_quadratic(O, u, unit_power_bound=unit_power_bound)


def od_m_oracle(d: int) -> AbelianGroup:
    """``O_d/M`` straight from the lattice generators of ``M``."""
    return od_m_lattice(d).quotient()


def exceptional_symbol(d: int) -> tuple[str, QuadInt]:
    """Element of ``K_2(2, O_d)`` (or of ``U(O_d)`` for ``d = -11``) and its exact
    image in ``O_d`` before reducing modulo ``M``.

    ``d = -2``: ``<-sqrt(-2), sqrt(-2)>_12``; ``d = -7``: ``<x, conj(x)>_12`` with
    ``x = (1 + sqrt(-7))/2``; both map to ``de(d + e - 3)``. ``d = -11``: the
    relation ``(E(x)E(conj x))^3 = -I`` gives ``h(-1)(eps(x)eps(conj x))^3`` with
    image ``-3(-1 - 1) + 3((x - 3) + (conj x - 3))``.
    """
    O = QuadraticOrder(d)
    if d == -2:
        r = O.sqrt_d()
        p, q = -r, r
    elif d in (-7, -11):
        p = O.theta
        q = p.conjugate()
    else:
        raise ValueError(f"d = {d} is not one of {EXCEPTIONAL_D}")
    if d == -11:
        value = -3 * (O(-1) - 1) + 3 * ((p - 3) + (q - 3))
        return "h(-1)(eps(x)eps(conj x))^3", value
    if not (1 - p * q).is_unit():
        raise AssertionError("1 - de is not a unit")  # pragma: no cover
    return f"<{p}, {q}>_12", p * q * (p + q - 3)


def od_refined_ab(d: int) -> AbelianGroup:
    """``O_d/M`` further divided by the symbol image, for ``d`` in ``{-2, -7, -11}``."""
    _, image = exceptional_symbol(d)
    return od_m_lattice(d).extended(image).quotient()


def minus_eleven_witness() -> Mat2:
    """``(E(x)E(conj x))^3`` over ``O_-11`` with ``x = (1 + sqrt(-11))/2``."""
    O = QuadraticOrder(-11)
    x = O.theta
    return (E(x) * E(x.conjugate())) ** 3


def is_minus_identity(m: Mat2) -> bool:
    return m == -identity(m.parent)
