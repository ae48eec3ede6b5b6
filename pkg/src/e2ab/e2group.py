"""Brute-force enumeration of ``E_2(A)`` over a finite commutative ring.

Matrices are packed into one integer ``a + n*(b + n*(c + n*d))`` over the
element indices of the ring. The group is enumerated by breadth-first search,
the commutator subgroup by normal closure, and the abelian quotient is read off
from its element orders.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .abelian import AbelianGroup, cyclic_decomposition, from_element_orders
from .matrices import Mat2
from .msubgroup import AdditiveSubgroup, m_subgroup
from .rings import TABLE_LIMIT, FiniteRing, RingElement

__all__ = [
    "DEFAULT_CAP",
    "EnumerationCapExceeded",
    "MatrixGroup",
    "Abelianization",
    "BetaReport",
    "count_sl2",
    "generate_e2",
    "equals_sl2",
    "abelianization",
    "beta_map",
]

DEFAULT_CAP = 200_000


class EnumerationCapExceeded(RuntimeError):
    pass


def count_sl2(R: FiniteRing) -> int:
    """``|SL_2(R)|`` as ``sum_{a,d} #{(b, c) : bc = ad - 1}``."""
    n = R.size
    if n > TABLE_LIMIT:
        raise EnumerationCapExceeded(f"{R} has {n} elements; too large to count SL_2")
    mul = R.mul_table
    products = Counter(mul[b][c] for b in range(n) for c in range(n))
    one = R.one_index
    return sum(products[R.sub(mul[a][d], one)] for a in range(n) for d in range(n))


@dataclass
class MatrixGroup:
    ring: FiniteRing
    elements: list[int]
    generators: list[int]
    index: dict[int, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, code: int) -> bool:
        return code in self.index

    # -- packed matrix arithmetic -----------------------------------------
    def pack(self, a: int, b: int, c: int, d: int) -> int:
        n = self.ring.size
        return a + n * (b + n * (c + n * d))

    def unpack(self, code: int) -> tuple[int, int, int, int]:
        n = self.ring.size
        code, a = divmod(code, n)
        code, b = divmod(code, n)
        d, c = divmod(code, n)
        return a, b, c, d

    def mul(self, x: int, y: int) -> int:
        R = self.ring
        M, add = R.mul_table, R.add_table
        a, b, c, d = self.unpack(x)
        e, f, g, h = self.unpack(y)
        return self.pack(
            add[M[a][e]][M[b][g]], add[M[a][f]][M[b][h]],
            add[M[c][e]][M[d][g]], add[M[c][f]][M[d][h]],
        )

    def inv(self, x: int) -> int:
        # determinant one
        a, b, c, d = self.unpack(x)
        R = self.ring
        return self.pack(d, R.neg(b), R.neg(c), a)

    @property
    def identity(self) -> int:
        o = self.ring.one_index
        return self.pack(o, 0, 0, o)

    def code_of(self, m: Mat2) -> int:
        return self.pack(*(e.index for e in m.entries()))

    def matrix(self, code: int) -> Mat2:
        return Mat2(*(RingElement(self.ring, i) for i in self.unpack(code)))

    def e12(self, t: int) -> int:
        o = self.ring.one_index
        return self.pack(o, t, 0, o)

    def e21(self, t: int) -> int:
        o = self.ring.one_index
        return self.pack(o, 0, t, o)

    def closure(self, gens: list[int], start: set[int] | None = None) -> set[int]:
        """Subgroup generated by ``gens`` (together with ``start``, itself a subgroup)."""
        seen = set(start) if start else {self.identity}
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen


def generate_e2(R: FiniteRing, cap: int = DEFAULT_CAP) -> MatrixGroup:
    """``E_2(R)``: closure of the elementary matrices ``E_12(e), E_21(e)``.

    ``e`` runs over the additive basis of ``R``; since ``E_ij(r)E_ij(s) = E_ij(r+s)``
    this generates the same group as all ``E_ij(a)``.
    """
    size = count_sl2(R)
    if size > cap:
        raise EnumerationCapExceeded(f"|SL_2({R})| = {size} exceeds the cap {cap}")
    probe = MatrixGroup(R, [], [], {})
    gens = []
    for e in R.basis_indices:
        for g in (probe.e12(e), probe.e21(e)):
            if g != probe.identity and g not in gens:
                gens.append(g)
    elements = [probe.identity]
    index = {probe.identity: 0}
    frontier = [probe.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = probe.mul(x, g)
                if y not in index:
                    if len(elements) >= cap:
                        raise EnumerationCapExceeded(f"E_2({R}) exceeds the cap {cap}")
                    index[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
        frontier = nxt
    G = MatrixGroup(R, elements, gens, index)
    one = R.one_index
    for x in elements:
        a, b, c, d = G.unpack(x)
        assert R.sub(R.mul(a, d), R.mul(b, c)) == one, "E_2 element with determinant != 1"
    return G


def equals_sl2(R: FiniteRing, cap: int = DEFAULT_CAP, group: MatrixGroup | None = None) -> bool:
    G = group if group is not None else generate_e2(R, cap)
    # E_2 sits inside SL_2, so equal sizes mean equal sets
    return len(G) == count_sl2(R)


@dataclass
class Abelianization:
    group: AbelianGroup
    commutator: frozenset[int] = field(repr=False)
    coset_label: dict[int, int] = field(repr=False)
    coords: dict[int, tuple[int, ...]] = field(repr=False)

    def project(self, code: int) -> tuple[int, ...]:
        """Image of a packed group element in ``Z/t1 x ... x Z/tk``."""
        return self.coords[self.coset_label[code]]


def _normal_closure(G: MatrixGroup, gens: list[int]) -> set[int]:
    H = G.closure(gens)
    hgens = [g for g in gens if g != G.identity]
    conj = [(x, G.inv(x)) for x in G.generators]
    i = 0
    while i < len(hgens):
        h = hgens[i]
        for x, xi in conj:
            c = G.mul(G.mul(xi, h), x)
            if c not in H:
                hgens.append(c)
                H = G.closure(hgens, H)
        i += 1
    return H


def abelianization(G: MatrixGroup) -> Abelianization:
    gens = G.generators
    comms = []
    for i, x in enumerate(gens):
        for y in gens[i + 1:]:
            c = G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y))
            if c != G.identity:
                comms.append(c)
    H = _normal_closure(G, comms)
    for h in H:
        for x in gens:
            assert G.mul(G.mul(G.inv(x), h), x) in H, "commutator subgroup is not normal"

    label: dict[int, int] = {}
    reps: list[int] = []
    for g in G.elements:
        if g in label:
            continue
        k = len(reps)
        reps.append(g)
        for h in H:
            label[G.mul(g, h)] = k
    assert len(label) == len(G), "cosets do not partition the group"

    def op(i: int, j: int) -> int:
        return label[G.mul(reps[i], reps[j])]

    for i in range(len(reps)):
        for x in gens:
            j = label[x]
            assert op(i, j) == op(j, i), "quotient is not abelian"

    group, coords = cyclic_decomposition(list(range(len(reps))), op, label[G.identity])
    return Abelianization(group, frozenset(H), label, coords)


@dataclass
class BetaReport:
    """The map ``A/M -> E_2(A)^ab`` induced by ``y -> E_12(y)``."""

    ring: FiniteRing
    a_mod_m: AbelianGroup
    e2_ab: AbelianGroup
    surjective: bool
    injective: bool
    kernel: AbelianGroup
    images: dict[int, tuple[int, ...]] = field(repr=False)

    @property
    def bijective(self) -> bool:
        return self.surjective and self.injective


def beta_map(
    R: FiniteRing,
    cap: int = DEFAULT_CAP,
    group: MatrixGroup | None = None,
    ab: Abelianization | None = None,
    msub: AdditiveSubgroup | None = None,
) -> BetaReport:
    G = group if group is not None else generate_e2(R, cap)
    ab = ab if ab is not None else abelianization(G)
    M = msub if msub is not None else m_subgroup(R)
    images = {y: ab.project(G.e12(y)) for y in range(R.size)}
    zero = tuple(0 for _ in ab.group.torsion)
    for m in M.elements:
        if images[m] != zero:
            raise AssertionError(f"beta is not well defined: E_12({R.element(m)}) is not in [G, G]")
    surjective = len(set(images.values())) == ab.group.order
    kernel_elems = [y for y in range(R.size) if images[y] == zero]

    # kernel of A/M -> E_2^ab is K/M; read it off from coset orders
    orders = []
    seen: set[int] = set()
    for y in kernel_elems:
        if y in seen:
            continue
        seen.update(R.add(y, m) for m in M.elements)
        k, z = 1, y
        while z not in M.elements:
            z = R.add(z, y)
            k += 1
        orders.append(k)
    kernel = from_element_orders(orders)
    return BetaReport(
        ring=R,
        a_mod_m=M.quotient(),
        e2_ab=ab.group,
        surjective=surjective,
        injective=kernel.is_trivial,
        kernel=kernel,
        images=images,
    )
