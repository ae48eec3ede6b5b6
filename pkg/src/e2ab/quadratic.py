"""Rings of integers ``O_d`` of quadratic fields and their elements.

``O_d = Z[sqrt d]`` for ``d = 2, 3 (mod 4)`` and ``Z[w]``, ``w = (1 + sqrt d)/2``,
for ``d = 1 (mod 4)``. An element ``s + t*theta`` is stored as the integer
pair ``(s, t)`` over the basis ``(1, theta)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from sympy import factorint

__all__ = ["QuadraticOrder", "QuadInt", "is_squarefree"]


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for e in factorint(abs(n)).values())


@dataclass(frozen=True)
class QuadraticOrder:
    d: int

    def __post_init__(self):
        if self.d in (0, 1):
            raise ValueError("d must differ from 0 and 1")
        if not is_squarefree(self.d):
            raise ValueError(f"d = {self.d} is not square-free")

    @property
    def omega_basis(self) -> bool:
        """True when ``theta = (1 + sqrt d)/2``."""
        return self.d % 4 == 1

    @property
    def theta(self) -> QuadInt:
        return QuadInt(self, 0, 1)

    @property
    def zero(self) -> QuadInt:
        return QuadInt(self, 0, 0)

    @property
    def one(self) -> QuadInt:
        return QuadInt(self, 1, 0)

    def __call__(self, s: int, t: int = 0) -> QuadInt:
        return QuadInt(self, s, t)

    def sqrt_d(self) -> QuadInt:
        # sqrt d = 2w - 1 in the omega basis
        return QuadInt(self, -1, 2) if self.omega_basis else QuadInt(self, 0, 1)

    def from_sqrt_coords(self, x: int, y: int, denom: int = 1) -> QuadInt:
        """The element ``(x + y sqrt d)/denom``; it must lie in ``O_d``."""
        if self.omega_basis:
            # (x + y sqrt d)/denom = (x + y(2w - 1))/denom
            s, t = x - y, 2 * y
        else:
            s, t = x, y
        if s % denom or t % denom:
            raise ValueError(f"({x} + {y}*sqrt({self.d}))/{denom} is not in O_{self.d}")
        return QuadInt(self, s // denom, t // denom)

    def units(self) -> list[QuadInt]:
        """The finite unit group for ``d < 0``."""
        if self.d > 0:
            raise ValueError("O_d has infinitely many units for d > 0")
        # the norm is positive definite, units have |s|, |t| <= 2
        return [QuadInt(self, s, t) for s, t in product(range(-2, 3), repeat=2)
                if QuadInt(self, s, t).norm() == 1]

    def __str__(self) -> str:
        return f"O_{self.d}"


class QuadInt:
    """Exact element ``s + t*theta`` of a quadratic order."""

    __slots__ = ("order", "s", "t")

    def __init__(self, order: QuadraticOrder, s: int, t: int = 0):
        self.order = order
        self.s = int(s)
        self.t = int(t)

    @property
    def parent(self) -> QuadraticOrder:
        return self.order

    @property
    def coords(self) -> tuple[int, int]:
        return (self.s, self.t)

    def _coerce(self, other) -> QuadInt:
        if isinstance(other, QuadInt):
            if other.order != self.order:
                raise ValueError(f"cannot mix {self.order} and {other.order}")
            return other
        if isinstance(other, int):
            return QuadInt(self.order, other, 0)
        raise TypeError(f"unsupported operand {other!r}")

    def __add__(self, other) -> QuadInt:
        o = self._coerce(other)
        return QuadInt(self.order, self.s + o.s, self.t + o.t)

    __radd__ = __add__

    def __neg__(self) -> QuadInt:
        return QuadInt(self.order, -self.s, -self.t)

    def __sub__(self, other) -> QuadInt:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> QuadInt:
        return self._coerce(other) - self

    def __mul__(self, other) -> QuadInt:
        o = self._coerce(other)
        d = self.order.d
        s1, t1, s2, t2 = self.s, self.t, o.s, o.t
        if self.order.omega_basis:
            # w^2 = w + (d - 1)/4
            k = (d - 1) // 4
            return QuadInt(self.order, s1 * s2 + k * t1 * t2, s1 * t2 + s2 * t1 + t1 * t2)
        return QuadInt(self.order, s1 * s2 + d * t1 * t2, s1 * t2 + s2 * t1)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QuadInt:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.order.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> QuadInt:
        if self.order.omega_basis:
            return QuadInt(self.order, self.s + self.t, -self.t)
        return QuadInt(self.order, self.s, -self.t)

    def norm(self) -> int:
        s, t, d = self.s, self.t, self.order.d
        if self.order.omega_basis:
            return s * s + s * t - t * t * ((d - 1) // 4)
        return s * s - d * t * t

    def trace(self) -> int:
        return 2 * self.s + self.t if self.order.omega_basis else 2 * self.s

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def inverse(self) -> QuadInt:
        n = self.norm()
        if abs(n) != 1:
            raise ZeroDivisionError(f"{self} is not a unit of {self.order}")
        c = self.conjugate()
        return QuadInt(self.order, c.s * n, c.t * n)

    def __truediv__(self, other) -> QuadInt:
        return self * self._coerce(other).inverse()

    def __float__(self) -> float:
        r = math.sqrt(abs(self.order.d))
        if self.order.d < 0:
            raise TypeError("elements of an imaginary quadratic order have no real value")
        theta = (1 + r) / 2 if self.order.omega_basis else r
        return self.s + self.t * theta

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadInt):
            return self.order == other.order and self.coords == other.coords
        if isinstance(other, int):
            return self.t == 0 and self.s == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.s, self.t))

    def __repr__(self) -> str:
        return f"QuadInt({self.order.d}, {self.s}, {self.t})"

    def __str__(self) -> str:
        name = "w" if self.order.omega_basis else f"sqrt({self.order.d})"
        if self.t == 0:
            return str(self.s)
        tpart = name if self.t == 1 else ("-" + name if self.t == -1 else f"{self.t}*{name}")
        if self.s == 0:
            return tpart
        return f"{self.s} + {tpart}" if not tpart.startswith("-") else f"{self.s} - {tpart[1:]}"
