import pytest

from e2ab.abelian import AbelianGroup
from e2ab.msubgroup import (
    AdditiveSubgroup,
    a_mod_m,
    a_mod_n,
    dennis_stein_values,
    local_formula,
    m_subgroup,
    m_subgroup_quadratic,
    n_subgroup,
)
from e2ab.quadratic import QuadraticOrder
from e2ab.rings import additive_span


def literal_m(R):
    """M with every x in R, straight from the definition."""
    one = R.one_index
    us = R.unit_indices
    gens = [R.mul(x, R.sub(R.mul(a, a), one)) for x in range(R.size) for a in us]
    gens += [R.scale(3, R.mul(R.add(b, one), R.add(c, one))) for b in us for c in us]
    return additive_span(R, gens)


@pytest.mark.parametrize("spec", ["Z/1", "Z/4", "Z/5", "Z/12", "GF(4)", "GF(9)", "Z/2[x]/(x^2)",
                                  "Z/2[x]/(x^3)", "Z/3[x]/(x^2)", "Z/2 x Z/3 x Z/3", "Z/27"])
def test_basis_generators_match_definition(spec, ring):
    R = ring(spec)
    assert m_subgroup(R).elements == literal_m(R)


def test_m_examples(ring):
    assert m_subgroup(ring("Z/12")).elements == frozenset({0})
    assert m_subgroup(ring("Z/5")).is_everything()
    assert m_subgroup(ring("Z/1")).elements == frozenset({0})


def test_n_examples(ring):
    assert n_subgroup(ring("Z/5")).is_everything()
    R = ring("Z/4")
    assert n_subgroup(R).elements == m_subgroup(R).elements
    # mod 6, 1 - 2*2 = 3 is not a unit, so the pair (2, 2) is excluded
    R6 = ring("Z/6")
    assert not R6.is_unit_index(R6.sub(R6.one_index, R6.mul(2, 2)))
    assert 4 not in dennis_stein_values(R6)
    assert n_subgroup(R6).elements == frozenset({0})


def test_dennis_stein_values_by_hand(ring):
    R = ring("Z/7")
    expected = set()
    for d in range(7):
        for e in range(7):
            if (1 - d * e) % 7:
                expected.add(d * e * (d + e - 3) % 7)
    expected.discard(0)
    assert set(dennis_stein_values(R)) == expected


@pytest.mark.parametrize(
    "spec, group",
    [("Z/12", "Z/12"), ("Z/2[x]/(x^2)", "Z/2 x Z/2"), ("GF(4)", "0"), ("Z/4", "Z/4"),
     ("Z/9", "Z/3"), ("Z/6", "Z/6"), ("Z/8", "Z/4")],
)
def test_a_mod_m(spec, group, ring):
    assert a_mod_m(ring(spec)) == AbelianGroup.parse(group)


def test_a_mod_n_is_quotient_of_a_mod_m(ring):
    for spec in ["Z/12", "Z/8", "Z/2 x Z/3 x Z/3", "Z/3[x]/(x^2)"]:
        R = ring(spec)
        assert a_mod_m(R).order % a_mod_n(R).order == 0


@pytest.mark.parametrize("spec, group", [("Z/4", "Z/4"), ("Z/9", "Z/3"), ("GF(8)", "0"),
                                         ("Z/2[x]/(x^3)", "Z/2 x Z/2"), ("Z/25", "0")])
def test_local_formula(spec, group, ring):
    assert local_formula(ring(spec)) == AbelianGroup.parse(group)


def test_local_formula_rejects_nonlocal(ring):
    with pytest.raises(ValueError):
        local_formula(ring("Z/6"))


def test_additive_subgroup_ops(ring):
    R = ring("Z/12")
    H = AdditiveSubgroup.generated_by(R, [4])
    K = AdditiveSubgroup.generated_by(R, [6])
    assert len(H) == 3 and 8 in H and R(8) in H
    assert (H + K).elements == frozenset(range(0, 12, 2))
    assert H.quotient() == AbelianGroup.cyclic(4)
    assert H.coset_key(5) == 1
    assert [str(x) for x in H] == ["0", "4", "8"]


@pytest.mark.parametrize("d, group", [(-1, "Z/2 x Z/2"), (-3, "Z/3"), (-2, "Z x Z/12"),
                                      (-5, "Z x Z/12"), (-7, "Z x Z/12")])
def test_quadratic_m(d, group):
    assert m_subgroup_quadratic(QuadraticOrder(d)).quotient() == AbelianGroup.parse(group)


def test_quadratic_m_lattices():
    O = QuadraticOrder(-1)
    M = m_subgroup_quadratic(O)
    assert O(2) in M and O(0, 2) in M and O(1, 1) not in M
    O3 = QuadraticOrder(-3)
    gen = 2 * O3.theta - 1
    M3 = m_subgroup_quadratic(O3)
    assert gen in M3 and gen * O3.theta in M3 and O3.one not in M3
    M5 = m_subgroup_quadratic(QuadraticOrder(-5))
    assert QuadraticOrder(-5)(12) in M5 and QuadraticOrder(-5)(0, 12) not in M5


def test_quadratic_m_needs_unit():
    O = QuadraticOrder(2)
    with pytest.raises(ValueError):
        m_subgroup_quadratic(O)
    with pytest.raises(ValueError):
        m_subgroup_quadratic(O, O(2))
