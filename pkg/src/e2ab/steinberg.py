"""Words in the generators ``x12(r)``, ``x21(r)`` of ``St(2, A)``.

Words are never reduced. They are checked through two evaluations: ``theta``
into ``E_2(A)`` (``x_ij(r) -> E_ij(r)``) and the additive image in ``A/M``
(``x12(r) -> -r``, ``x21(r) -> r``).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, NamedTuple

from .matrices import Eij, Mat2, identity
from .msubgroup import AdditiveSubgroup, LatticeSubgroup, m_subgroup
from .rings import FiniteRing, RingElement

__all__ = [
    "Letter",
    "StWord",
    "x12",
    "x21",
    "xij",
    "w",
    "h",
    "steinberg_symbol",
    "dennis_stein",
    "build",
    "theta_eval",
    "am_value",
    "am_image",
    "AMClass",
    "parse_word",
    "relation_residues",
    "ResidueReport",
]


class Letter(NamedTuple):
    pos: str      # "12" or "21"
    value: object
    sign: int     # +1 or -1


def _other(pos: str) -> str:
    return "21" if pos == "12" else "12"


class StWord:
    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters = tuple(letters)

    def __mul__(self, other: StWord) -> StWord:
        return StWord(self.letters + other.letters)

    def inverse(self) -> StWord:
        return StWord(Letter(l.pos, l.value, -l.sign) for l in reversed(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, StWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __str__(self) -> str:
        return " ".join(
            f"x{l.pos}({l.value})" + ("^-1" if l.sign < 0 else "") for l in self.letters
        ) or "1"

    def __repr__(self) -> str:
        return f"StWord({self})"


def _require_unit(u, what: str):
    if not u.is_unit():
        raise ValueError(f"{what}: {u} is not a unit")


def xij(pos: str, r) -> StWord:
    if pos not in ("12", "21"):
        raise ValueError(f"position must be '12' or '21', got {pos!r}")
    return StWord([Letter(pos, r, 1)])


def x12(r) -> StWord:
    return xij("12", r)


def x21(r) -> StWord:
    return xij("21", r)


def w(pos: str, u) -> StWord:
    """``w_ij(u) = x_ij(u) x_ji(-u^-1) x_ij(u)``."""
    _require_unit(u, "w_ij")
    return xij(pos, u) * xij(_other(pos), -u.inverse()) * xij(pos, u)


def h(pos: str, u) -> StWord:
    """``h_ij(u) = w_ij(u) w_ij(-1)``."""
    return w(pos, u) * w(pos, -u.parent.one)


def steinberg_symbol(u, v, pos: str = "12") -> StWord:
    """``{u, v}_ij = h_ij(uv) h_ij(u)^-1 h_ij(v)^-1``."""
    _require_unit(u, "Steinberg symbol")
    _require_unit(v, "Steinberg symbol")
    return h(pos, u * v) * h(pos, u).inverse() * h(pos, v).inverse()


def dennis_stein(a, b, pos: str = "12") -> StWord:
    """``<a, b>_ij``; requires ``1 - ab`` to be a unit."""
    t = 1 - a * b
    if not t.is_unit():
        raise ValueError(f"Dennis-Stein symbol: 1 - ab = {t} is not a unit")
    ti = t.inverse()
    j = _other(pos)
    return (
        xij(j, -b * ti) * xij(pos, -a) * xij(j, b) * xij(pos, a * ti) * h(pos, t).inverse()
    )


_BUILDERS = {
    "x12": lambda r: x12(r),
    "x21": lambda r: x21(r),
    "w12": lambda u: w("12", u),
    "w21": lambda u: w("21", u),
    "h12": lambda u: h("12", u),
    "h21": lambda u: h("21", u),
}


def build(kind: str, *args, pos: str = "12") -> StWord:
    """Dispatch by name: ``x12 x21 w12 w21 h12 h21 steinberg_symbol dennis_stein``."""
    if kind in _BUILDERS:
        (arg,) = args
        return _BUILDERS[kind](arg)
    if kind == "steinberg_symbol":
        return steinberg_symbol(*args, pos=pos)
    if kind == "dennis_stein":
        return dennis_stein(*args, pos=pos)
    raise ValueError(f"unknown word kind {kind!r}")


def theta_eval(word: StWord, parent=None) -> Mat2:
    """Product of the elementary matrices ``E_ij(+-r)`` spelled by the word."""
    if not word.letters:
        if parent is None:
            raise ValueError("the empty word needs an explicit ring")
        return identity(parent)
    out = None
    for l in word:
        m = Eij(l.pos, l.value if l.sign > 0 else -l.value)
        out = m if out is None else out * m
    return out


def am_value(word: StWord):
    """Unreduced additive image ``sum(sign * (-r for x12(r), +r for x21(r)))``."""
    total = None
    for l in word:
        v = -l.value if l.pos == "12" else l.value
        if l.sign < 0:
            v = -v
        total = v if total is None else total + v
    return total


@dataclass(frozen=True)
class AMClass:
    """The class of ``value`` in ``A/M``."""

    value: object
    subgroup: AdditiveSubgroup | LatticeSubgroup = field(repr=False)

    def is_zero(self) -> bool:
        return self.value in self.subgroup

    @property
    def representative(self):
        """The canonical representative (finite rings: least element index in the coset)."""
        if isinstance(self.subgroup, AdditiveSubgroup):
            return RingElement(self.subgroup.ring, self.subgroup.coset_key(self.value.index))
        return self.value

    def __str__(self) -> str:
        return f"{self.representative} mod M"


def am_image(word: StWord, ring=None, M: AdditiveSubgroup | LatticeSubgroup | None = None) -> AMClass:
    value = am_value(word)
    if value is None:
        if ring is None:
            raise ValueError("the empty word needs an explicit ring")
        value = ring.zero
    if M is None:
        M = m_subgroup(value.parent)
    return AMClass(value, M)


# -- word literals --------------------------------------------------------
_TOKEN = re.compile(
    r"\s*(?P<name>x12|x21|w12|w21|h12|h21|DS12|DS21|DS|SS12|SS21|SS)"
    r"\s*\((?P<args>[^)]*)\)(?:\s*\^\s*(?P<exp>[+-]?\d+))?"
)


def _parse_value(text: str, R: FiniteRing) -> RingElement:
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"bad coordinate vector {text!r}")
        coords = [int(c) for c in text[1:-1].split(",") if c.strip()]
        return R(tuple(coords))
    return R(int(text))


def _split_args(s: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [a for a in (x.strip() for x in out) if a]


def parse_word(text: str, R: FiniteRing) -> StWord:
    """Parse e.g. ``"x12(3) x21(-1) h12(5)^-1"``, ``"DS(2,2)"``, ``"SS(5,7)"``.

    Arguments are integers or coordinate vectors ``[c0,c1,...]``; ``DS``/``SS``
    take an optional position suffix (default ``12``).
    """
    from .ringspec import ParseError

    pos = 0
    word = StWord()
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty word", text, 0)
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("expected a generator such as x12(r), h21(u), DS(a,b) or SS(u,v)", text, pos)
        name, args = m.group("name"), _split_args(m.group("args"))
        try:
            vals = [_parse_value(a, R) for a in args]
        except ValueError as exc:
            raise ParseError(str(exc), text, m.start("args")) from None
        if name.startswith(("DS", "SS")):
            if len(vals) != 2:
                raise ParseError(f"{name} takes two arguments", text, m.start("args"))
            p = name[2:] or "12"
            piece = dennis_stein(*vals, pos=p) if name.startswith("DS") else steinberg_symbol(*vals, pos=p)
        else:
            if len(vals) != 1:
                raise ParseError(f"{name} takes one argument", text, m.start("args"))
            piece = _BUILDERS[name](vals[0])
        exp = int(m.group("exp") or 1)
        unit = piece if exp >= 0 else piece.inverse()
        for _ in range(abs(exp)):
            word = word * unit
        pos = m.end()
    return word


# -- relation residues ----------------------------------------------------
def _alpha(pos, r, s) -> tuple[StWord, StWord]:
    return xij(pos, r) * xij(pos, s), xij(pos, r + s)


def _beta(pos, u, r) -> tuple[StWord, StWord]:
    wu = w(pos, u)
    return wu * xij(_other(pos), r) * wu.inverse(), xij(pos, -u * r * u)


@dataclass
class ResidueReport:
    ring: FiniteRing
    alpha_checked: int = 0
    beta_checked: int = 0
    exhaustive: bool = True
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _instances(space: list, limit: int, samples: int, rng: random.Random) -> tuple[list, bool]:
    if len(space) <= limit:
        return space, True
    return [rng.choice(space) for _ in range(samples)], False


def relation_residues(
    R: FiniteRing,
    samples: int = 1000,
    seed: int = 0,
    limit: int = 10_000,
    M: AdditiveSubgroup | None = None,
) -> ResidueReport:
    """Check both Steinberg relations under ``theta`` and under the ``A/M`` image.

    Instances are enumerated when there are at most ``limit`` of them, otherwise
    ``samples`` are drawn with a seeded generator.
    """
    M = M if M is not None else m_subgroup(R)
    rng = random.Random(seed)
    elems = list(R.elements())
    units = [RingElement(R, i) for i in R.unit_indices]
    report = ResidueReport(R)

    alpha_space = list(product(("12", "21"), elems, elems))
    alpha, ex_a = _instances(alpha_space, limit, samples, rng)
    beta_space = list(product(("12", "21"), units, elems))
    beta, ex_b = _instances(beta_space, limit, samples, rng)
    report.exhaustive = ex_a and ex_b

    for kind, cases, make in (("alpha", alpha, _alpha), ("beta", beta, _beta)):
        for pos, p, q in cases:
            lhs, rhs = make(pos, p, q)
            if theta_eval(lhs) != theta_eval(rhs):
                report.failures.append(f"{kind} theta mismatch at pos={pos}, {p}, {q}")
            residue = am_image(lhs * rhs.inverse(), R, M)
            if not residue.is_zero():
                report.failures.append(f"{kind} residue {residue.value} not in M at pos={pos}, {p}, {q}")
        if kind == "alpha":
            report.alpha_checked = len(cases)
        else:
            report.beta_checked = len(cases)
    return report
