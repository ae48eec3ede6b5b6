"""2x2 matrices over a commutative ring and the named generators of ``E_2``.

Entries may be :class:`~e2ab.rings.RingElement` or
:class:`~e2ab.quadratic.QuadInt`; both expose ``parent.zero``/``parent.one``,
``is_unit()`` and ``inverse()``.
"""

from __future__ import annotations

__all__ = [
    "Mat2",
    "identity",
    "E",
    "D",
    "E12",
    "E21",
    "Eij",
    "W12",
    "W21",
    "Wij",
    "H12",
    "H21",
    "Hij",
]


class Mat2:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        parent = a.parent
        for x in (b, c, d):
            if x.parent is not parent and x.parent != parent:
                raise ValueError("matrix entries must come from one ring")
        self.a, self.b, self.c, self.d = a, b, c, d

    @property
    def parent(self):
        return self.a.parent

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def is_invertible(self) -> bool:
        return self.det().is_unit()

    def __mul__(self, o: Mat2) -> Mat2:
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __neg__(self) -> Mat2:
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> Mat2:
        det = self.det()
        if not det.is_unit():
            raise ZeroDivisionError("matrix determinant is not a unit")
        k = det.inverse()
        return Mat2(self.d * k, -self.b * k, -self.c * k, self.a * k)

    def __pow__(self, n: int) -> Mat2:
        if n < 0:
            return self.inverse() ** (-n)
        out = identity(self.parent)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __repr__(self) -> str:
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"

    def rows(self) -> list[list[str]]:
        return [[str(self.a), str(self.b)], [str(self.c), str(self.d)]]


def identity(parent) -> Mat2:
    z, o = parent.zero, parent.one
    return Mat2(o, z, z, o)


def _require_unit(u):
    if not u.is_unit():
        raise ValueError(f"{u} is not a unit")


def E(a) -> Mat2:
    """``E(a) = (a 1; -1 0)``."""
    R = a.parent
    return Mat2(a, R.one, -R.one, R.zero)


def D(a) -> Mat2:
    """``D(a) = diag(a, a^-1)`` for a unit ``a``."""
    _require_unit(a)
    z = a.parent.zero
    return Mat2(a, z, z, a.inverse())


def E12(a) -> Mat2:
    R = a.parent
    return Mat2(R.one, a, R.zero, R.one)


def E21(a) -> Mat2:
    R = a.parent
    return Mat2(R.one, R.zero, a, R.one)


def Eij(pos: str, a) -> Mat2:
    return E12(a) if pos == "12" else E21(a)


def _other(pos: str) -> str:
    return "21" if pos == "12" else "12"


def Wij(pos: str, u) -> Mat2:
    """``W_ij(u) = E_ij(u) E_ji(-u^-1) E_ij(u)``."""
    _require_unit(u)
    return Eij(pos, u) * Eij(_other(pos), -u.inverse()) * Eij(pos, u)


def W12(u) -> Mat2:
    return Wij("12", u)


def W21(u) -> Mat2:
    return Wij("21", u)


def Hij(pos: str, u) -> Mat2:
    """``H_ij(u) = W_ij(u) W_ij(-1)``."""
    return Wij(pos, u) * Wij(pos, -u.parent.one)


def H12(u) -> Mat2:
    return Hij("12", u)


def H21(u) -> Mat2:
    return Hij("21", u)
