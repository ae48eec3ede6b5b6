"""Finitely generated abelian groups and exact integer linear algebra.

Every abelianization in the package is reported as an :class:`AbelianGroup`
in invariant-factor form ``Z^r x Z/d1 x ... x Z/dk`` with ``d1 | d2 | ... | dk``.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from math import gcd, prod
from typing import Callable, Hashable, Iterable, Sequence

from sympy import factorint

__all__ = [
    "AbelianGroup",
    "IntMatrix",
    "smith_normal_form",
    "lattice_quotient",
    "finite_quotient",
    "from_element_orders",
    "cyclic_decomposition",
]


class IntMatrix:
    """Row-major integer matrix with explicit dimensions.

    Rows may be empty (``rows == 0``), in which case ``cols`` still records
    the ambient rank.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[int]):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(int(e) for e in entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [tuple(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols is required for an empty row list")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError(f"row {r} does not have {cols} columns")
        return cls(len(rows), cols, [e for r in rows for e in r])

    def row_list(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}, {self.cols}, {list(self.entries)})"


def _as_rows(m: IntMatrix | Sequence[Sequence[int]]) -> list[list[int]]:
    if isinstance(m, IntMatrix):
        return m.row_list()
    return [list(map(int, r)) for r in m]


def _chain(diag: list[int]) -> list[int]:
    # pairwise (gcd, lcm) sweeps turn any diagonal into a divisibility chain;
    # zeros migrate to the end because gcd(0, x) = x and lcm(0, x) = 0
    d = [abs(x) for x in diag]
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(d[i], d[j])
            lcm = d[i] * d[j] // g if g else 0
            d[i], d[j] = g, lcm
    return d


def smith_normal_form(m: IntMatrix | Sequence[Sequence[int]]) -> list[int]:
    """Diagonal invariants ``d1 | d2 | ... | dr`` of an integer matrix.

    ``r = min(rows, cols)``; trailing zeros mark rank deficiency. The pivot at
    each step is the entry of least nonzero absolute value in the remaining
    block.

    >>> smith_normal_form([[2, 0], [0, 3]])
    [1, 6]
    """
    a = _as_rows(m)
    nrows = len(a)
    ncols = len(a[0]) if a else (m.cols if isinstance(m, IntMatrix) else 0)
    r = min(nrows, ncols)
    diag: list[int] = []
    for t in range(r):
        while True:
            pivot = None
            for i in range(t, nrows):
                row = a[i]
                for j in range(t, ncols):
                    v = row[j]
                    if v and (pivot is None or abs(v) < pivot[0]):
                        pivot = (abs(v), i, j)
            if pivot is None:
                break
            _, pi, pj = pivot
            a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
            p = a[t][t]
            clean = True
            for i in range(t + 1, nrows):
                q = a[i][t] // p
                if q:
                    ri, rt = a[i], a[t]
                    for j in range(t, ncols):
                        ri[j] -= q * rt[j]
                if a[i][t]:
                    clean = False
            rt = a[t]
            for j in range(t + 1, ncols):
                q = rt[j] // p
                if q:
                    for row in a[t:]:
                        row[j] -= q * row[t]
                if rt[j]:
                    clean = False
            if clean:
                # the pivot must also divide the rest of the block
                bad = next(
                    (i for i in range(t + 1, nrows)
                     if any(a[i][j] % p for j in range(t + 1, ncols))),
                    None,
                )
                if bad is None:
                    break
                for j in range(t, ncols):
                    a[t][j] += a[bad][j]
        if pivot is None:
            diag.extend([0] * (r - t))
            break
        diag.append(abs(a[t][t]))
    return _chain(diag)


@dataclass(frozen=True)
class AbelianGroup:
    """Canonical form ``Z^free_rank x Z/t1 x ... x Z/tk`` with ``t1 | ... | tk``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for t in self.torsion:
            if t < 2:
                raise ValueError(f"torsion invariant {t} is not >= 2")
        for s, t in zip(self.torsion, self.torsion[1:]):
            if t % s:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def from_invariants(cls, orders: Iterable[int]) -> AbelianGroup:
        """Canonicalize a direct sum of cyclic groups ``Z/n`` (``n = 0`` means ``Z``)."""
        chain = _chain(list(orders))
        return cls(
            free_rank=sum(1 for d in chain if d == 0),
            torsion=tuple(d for d in chain if d > 1),
        )

    @classmethod
    def cyclic(cls, n: int) -> AbelianGroup:
        return cls.from_invariants([n])

    @classmethod
    def trivial(cls) -> AbelianGroup:
        return cls()

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Number of elements, or ``None`` for an infinite group."""
        return prod(self.torsion) if self.free_rank == 0 else None

    @property
    def exponent(self) -> int | None:
        if self.free_rank:
            return None
        return self.torsion[-1] if self.torsion else 1

    def __add__(self, other: AbelianGroup) -> AbelianGroup:
        # direct sum
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return AbelianGroup.from_invariants(
            [0] * (self.free_rank + other.free_rank) + list(self.torsion) + list(other.torsion)
        )

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " x ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> AbelianGroup:
        return cls.from_invariants([0] * int(data["free_rank"]) + list(data["torsion"]))

    @classmethod
    def from_json(cls, text: str) -> AbelianGroup:
        return cls.from_dict(json.loads(text))

    @classmethod
    def parse(cls, text: str) -> AbelianGroup:
        """Inverse of ``str``; also accepts non-canonical cyclic factors."""
        text = text.strip()
        if text in ("0", "1", ""):
            return cls()
        orders: list[int] = []
        for part in text.split("x"):
            part = part.strip()
            m = re.fullmatch(r"Z(?:\^(\d+))?", part)
            if m:
                orders.extend([0] * int(m.group(1) or 1))
                continue
            m = re.fullmatch(r"Z/(\d+)", part)
            if not m:
                raise ValueError(f"cannot parse abelian group factor {part!r}")
            orders.append(int(m.group(1)))
        return cls.from_invariants(orders)


def lattice_quotient(ambient_rank: int, sublattice_gens: IntMatrix | Sequence[Sequence[int]]) -> AbelianGroup:
    """Structure of ``Z^ambient_rank`` modulo the row span of ``sublattice_gens``."""
    rows = _as_rows(sublattice_gens)
    for r in rows:
        if len(r) != ambient_rank:
            raise ValueError(f"generator {r} does not have {ambient_rank} coordinates")
    if not rows:
        return AbelianGroup(free_rank=ambient_rank)
    diag = smith_normal_form(rows)
    diag += [0] * (ambient_rank - len(diag))
    return AbelianGroup.from_invariants(diag)


def finite_quotient(ambient: Sequence[int], subgroup_gens: IntMatrix | Sequence[Sequence[int]]) -> AbelianGroup:
    """Structure of ``Z/n1 x ... x Z/nk`` modulo the subgroup spanned by the rows."""
    k = len(ambient)
    relations = [[n if i == j else 0 for j in range(k)] for i, n in enumerate(ambient)]
    return lattice_quotient(k, relations + _as_rows(subgroup_gens))


def from_element_orders(orders: Iterable[int]) -> AbelianGroup:
    """Recover a finite abelian group from the multiset of its element orders.

    For each prime ``p`` the counts ``#{x : p^j x = 0}`` equal
    ``p^(sum_i min(e_i, j))``, which pins down the ``p``-primary partition.
    """
    orders = list(orders)
    n = len(orders)
    if n == 0:
        raise ValueError("a group has at least one element")
    elementary: list[int] = []
    for p, e in factorint(n).items():
        exps = []
        prev = 0
        for j in range(1, e + 1):
            pj = p ** j
            # x with p^j x = 0 iff ord(x) | p^j
            count = sum(1 for o in orders if pj % o == 0)
            total = _ilog(count, p)
            exps.append(total - prev)
            prev = total
            if total == e:
                break
        # exps[j-1] = number of cyclic p-factors of exponent >= j
        widths = exps + [0]
        for j in range(len(exps)):
            elementary.extend([p ** (j + 1)] * (widths[j] - widths[j + 1]))
    group = AbelianGroup.from_invariants(elementary)
    if group.order != n:
        raise ValueError("element orders are not those of an abelian group")
    return group


def _ilog(n: int, p: int) -> int:
    k = 0
    while n % p == 0 and n > 1:
        n //= p
        k += 1
    if n != 1:
        raise ValueError("count is not a prime power; input is not an abelian group")
    return k


def cyclic_decomposition(
    elements: Sequence[Hashable],
    op: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
) -> tuple[AbelianGroup, dict]:
    """Decompose a finite abelian group given by its elements and operation.

    Returns the canonical group and a map ``element -> coordinate tuple`` that
    is an isomorphism onto ``Z/t1 x ... x Z/tk``.
    """
    def power(x, k):
        r = identity
        for _ in range(k):
            r = op(r, x)
        return r

    def order(x):
        k, y = 1, x
        while y != identity:
            y = op(y, x)
            k += 1
        return k

    orders = {x: order(x) for x in elements}
    group = from_element_orders(orders.values())
    torsion = list(group.torsion)

    def span_with(current: set, g, m: int) -> set:
        out = set()
        step = identity
        for _ in range(m):
            for s in current:
                out.add(op(s, step))
            step = op(step, g)
        return out

    # pick generators from the largest invariant down; a cyclic subgroup of
    # maximal order is always a direct summand, backtracking covers the rest
    def search(idx: int, current: set, chosen: list):
        if idx < 0:
            return chosen
        m = torsion[idx]
        for g, o in orders.items():
            if o != m:
                continue
            spanned = span_with(current, g, m)
            if len(spanned) != len(current) * m:
                continue
            found = search(idx - 1, spanned, [g] + chosen)
            if found is not None:
                return found
        return None

    gens = search(len(torsion) - 1, {identity}, [])
    if gens is None:
        raise ValueError("operation does not define an abelian group")
    coords: dict = {}
    for c in itertools.product(*(range(t) for t in torsion)):
        x = identity
        for g, k in zip(gens, c):
            x = op(x, power(g, k))
        coords[x] = c
    if len(coords) != len(elements):
        raise ValueError("generators do not span the group")
    return group, coords


def _echelon(rows: list[list[int]]) -> list[list[int]]:
    # integer row echelon form by row gcd steps; returns nonzero rows only
    rows = [r[:] for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    out: list[list[int]] = []
    col = 0
    while rows and col < ncols:
        live = [r for r in rows if r[col]]
        dead = [r for r in rows if not r[col]]
        if not live:
            col += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            rest = []
            for r in live[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                (rest if r[col] else dead).append(r)
            live = [piv] + rest
        piv = live[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        rows = [r for r in dead if any(r)]
        col += 1
    return out


def lattice_contains(gens: IntMatrix | Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Whether ``v`` lies in the row span of ``gens`` over ``Z``."""
    v = list(v)
    for row in _echelon(_as_rows(gens)):
        col = next(i for i, x in enumerate(row) if x)
        if v[col] % row[col]:
            return False
        q = v[col] // row[col]
        v = [x - q * y for x, y in zip(v, row)]
    return not any(v)
