"""The additive subgroups ``M`` and ``N`` of a commutative ring.

``M`` is generated by ``x(a^2 - 1)`` and ``3(b + 1)(c + 1)`` for ``x`` in the
ring and units ``a, b, c``; it controls the surjection ``A/M -> E_2(A)^ab``.
``N`` adds the values ``de(d + e - 3)`` for pairs with ``1 - de`` a unit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .abelian import AbelianGroup, finite_quotient, lattice_contains, lattice_quotient
from .quadratic import QuadInt, QuadraticOrder
from .rings import FiniteRing, RingElement, additive_span, is_local

__all__ = [
    "AdditiveSubgroup",
    "LatticeSubgroup",
    "m_subgroup",
    "n_subgroup",
    "a_mod_m",
    "a_mod_n",
    "local_formula",
    "m_subgroup_quadratic",
    "m_generators",
    "dennis_stein_values",
]


@dataclass(frozen=True)
class AdditiveSubgroup:
    """Subgroup of a finite ring's additive group, kept as an explicit element set."""

    ring: FiniteRing
    generators: tuple[int, ...]
    elements: frozenset[int] = field(repr=False)

    @classmethod
    def generated_by(cls, ring: FiniteRing, gens: Sequence[int]) -> AdditiveSubgroup:
        gens = tuple(sorted(set(gens) - {0}))
        return cls(ring, gens, additive_span(ring, gens))

    def __contains__(self, x) -> bool:
        if isinstance(x, RingElement):
            x = x.index
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return (RingElement(self.ring, i) for i in sorted(self.elements))

    def is_everything(self) -> bool:
        return len(self.elements) == self.ring.size

    def quotient(self) -> AbelianGroup:
        """The additive group ``A / self``."""
        rows = [self.ring.decode(g) for g in self.generators]
        return finite_quotient(self.ring.moduli, rows)

    def coset_key(self, x: int) -> int:
        """Smallest element index in ``x + self``; a canonical coset label."""
        R = self.ring
        return min(R.add(x, m) for m in self.elements)

    def __add__(self, other: AdditiveSubgroup) -> AdditiveSubgroup:
        if other.ring != self.ring:
            raise ValueError("subgroups of different rings")
        return AdditiveSubgroup.generated_by(self.ring, self.generators + other.generators)


@dataclass(frozen=True)
class LatticeSubgroup:
    """Subgroup of ``O_d`` given by generator rows over the basis ``(1, theta)``."""

    order: QuadraticOrder
    rows: tuple[tuple[int, int], ...]

    def __contains__(self, x: QuadInt) -> bool:
        return lattice_contains(self.rows, x.coords) if self.rows else not any(x.coords)

    def quotient(self) -> AbelianGroup:
        return lattice_quotient(2, self.rows)

    def extended(self, *extra: QuadInt) -> LatticeSubgroup:
        return LatticeSubgroup(self.order, self.rows + tuple(e.coords for e in extra))


def m_generators(R: FiniteRing) -> list[int]:
    """Additive generators of ``M`` as element indices.

    ``x -> x(a^2 - 1)`` is additive in ``x``, so the additive basis of ``R``
    stands in for all ``x``.
    """
    one = R.one_index
    units = R.unit_indices
    gens = set()
    for a in units:
        s = R.sub(R.mul(a, a), one)
        for e in R.basis_indices:
            gens.add(R.mul(e, s))
    shifted = sorted({R.add(b, one) for b in units})
    for i, p in enumerate(shifted):
        for q in shifted[i:]:
            gens.add(R.scale(3, R.mul(p, q)))
    gens.discard(0)
    return sorted(gens)


def m_subgroup(R: FiniteRing) -> AdditiveSubgroup:
    return AdditiveSubgroup.generated_by(R, m_generators(R))


def dennis_stein_values(R: FiniteRing) -> list[int]:
    """``de(d + e - 3)`` over all pairs with ``1 - de`` a unit."""
    one, three = R.one_index, R.from_int(3)
    out = set()
    for d in range(R.size):
        for e in range(d, R.size):
            de = R.mul(d, e)
            if R.is_unit_index(R.sub(one, de)):
                out.add(R.mul(de, R.sub(R.add(d, e), three)))
    out.discard(0)
    return sorted(out)


def n_subgroup(R: FiniteRing) -> AdditiveSubgroup:
    return AdditiveSubgroup.generated_by(R, m_generators(R) + dennis_stein_values(R))


def a_mod_m(R: FiniteRing) -> AbelianGroup:
    return m_subgroup(R).quotient()


def a_mod_n(R: FiniteRing) -> AbelianGroup:
    return n_subgroup(R).quotient()


def local_formula(R: FiniteRing) -> AbelianGroup:
    """Closed form for local rings: ``A/m^2``, ``A/m`` or ``0`` by residue field size."""
    info = is_local(R)
    if not info.is_local:
        raise ValueError(f"{R} is not a local ring")
    if info.residue_size == 2:
        ideal = info.maximal_ideal_squared
    elif info.residue_size == 3:
        ideal = info.maximal_ideal
    else:
        return AbelianGroup.trivial()
    return finite_quotient(R.moduli, [R.decode(i) for i in ideal])


def _unit_shifts(units: Sequence[QuadInt]) -> list[QuadInt]:
    return [3 * (b + 1) * (c + 1) for b in units for c in units]


def m_subgroup_quadratic(
    O: QuadraticOrder,
    extra_unit: QuadInt | None = None,
    unit_power_bound: int | None = None,
) -> LatticeSubgroup:
    """Generator rows of ``M`` inside ``O_d``.

    For ``d < 0`` the unit group is finite and enumerated. For ``d > 0`` pass
    the fundamental unit ``u``: every unit is ``+-u^k``, so the ideal
    ``(u^2 - 1)`` collects all ``x(a^2 - 1)``, and modulo it every unit is one
    of ``+-1, +-u``. With ``unit_power_bound=k`` the generators are instead
    taken literally over ``{+-u^j : |j| <= k}`` (used as a stabilization check).
    """
    theta = O.theta
    if O.d < 0:
        units = O.units()
        rows = [x * (a * a - 1) for a in units for x in (O.one, theta)]
        rows += _unit_shifts(units)
    else:
        if extra_unit is None:
            raise ValueError("d > 0 needs the fundamental unit")
        u = extra_unit
        if not u.is_unit():
            raise ValueError(f"{u} is not a unit")
        if unit_power_bound is None:
            g = u * u - 1
            rows = [g, theta * g]
            rows += _unit_shifts([O.one, -O.one, u, -u])
        else:
            k = unit_power_bound
            units = [sgn * u ** j for j in range(-k, k + 1) for sgn in (1, -1)]
            rows = [x * (a * a - 1) for a in units for x in (O.one, theta)]
            rows += _unit_shifts(units)
    uniq = tuple(sorted({r.coords for r in rows if any(r.coords)}))
    return LatticeSubgroup(O, uniq)
