from math import isqrt

import pytest

from e2ab.abelian import AbelianGroup
from e2ab.formulas import (
    exceptional_symbol,
    fundamental_unit,
    is_minus_identity,
    minus_eleven_witness,
    od_ab,
    od_ab_as_stated,
    od_m_lattice,
    od_m_oracle,
    od_refined_ab,
    pslinv_ab,
    zinv_ab,
)
from e2ab.quadratic import QuadraticOrder, is_squarefree

G = AbelianGroup.parse


@pytest.mark.parametrize("m, group", [(6, "0"), (10, "Z/3"), (1, "Z/12"), (15, "Z/4"), (7, "Z/12")])
def test_zinv(m, group):
    assert zinv_ab(m) == G(group)


@pytest.mark.parametrize("m, group", [(3, "Z/2"), (2, "Z/3"), (30, "0"), (5, "Z/6")])
def test_pslinv(m, group):
    assert pslinv_ab(m) == G(group)


@pytest.mark.parametrize("fn", [zinv_ab, pslinv_ab])
@pytest.mark.parametrize("m", [0, -3, 4, 12, 18])
def test_table_rejects(fn, m):
    with pytest.raises(ValueError):
        fn(m)


@pytest.mark.parametrize("d, a, b, norm", [(2, 1, 1, -1), (5, 0, 1, -1), (3, 2, 1, 1),
                                           (13, 1, 1, -1), (7, 8, 3, 1), (21, 2, 1, 1)])
def test_fundamental_unit_examples(d, a, b, norm):
    u = fundamental_unit(d)
    assert (u.a, u.b, u.norm) == (a, b, norm)
    assert u.as_quadint().norm() == norm


def _pell_brute(d):
    """Smallest unit > 1 by direct search over b (x^2 - d y^2 = +-1 or +-4)."""
    O = QuadraticOrder(d)
    omega = d % 4 == 1
    y = 1
    while True:
        for sign in (-1, 1):
            k = 4 if omega else 1
            t = d * y * y + sign * k
            x = isqrt(t) if t >= 0 else -1
            if x >= 0 and x * x == t and (not omega or (x - y) % 2 == 0):
                return O.from_sqrt_coords(x, y, 2 if omega else 1)
        y += 1


@pytest.mark.parametrize("d", [d for d in range(2, 51) if is_squarefree(d)])
def test_fundamental_unit_minimal(d):
    u = fundamental_unit(d).as_quadint()
    assert u == _pell_brute(d)
    assert float(u) > 1
    assert u.is_unit()


def test_fundamental_unit_large_d():
    u = fundamental_unit(199)
    assert (u.a, u.b, u.norm) == (16266196520, 1153080099, 1)
    assert u.as_quadint().norm() == 1


@pytest.mark.parametrize("d", [1, 0, -2, 4, 50])
def test_fundamental_unit_rejects(d):
    with pytest.raises(ValueError):
        fundamental_unit(d)


@pytest.mark.parametrize("d, group", [(-1, "Z/2 x Z/2"), (-11, "Z x Z/3"), (2, "Z/2 x Z/2"),
                                      (-2, "Z x Z/6"), (-3, "Z/3"), (-7, "Z x Z/4"), (-19, "Z x Z/12"),
                                      (5, "0"), (3, "Z/2 x Z/6")])
def test_od_ab(d, group):
    assert od_ab(d) == G(group)


@pytest.mark.parametrize("d, group", [(-2, "Z x Z/12"), (-3, "Z/3"), (3, "Z/2 x Z/6"), (-1, "Z/2 x Z/2")])
def test_od_m_oracle(d, group):
    assert od_m_oracle(d) == G(group)


@pytest.mark.parametrize("d", [0, 1, 8, -4])
def test_od_rejects(d):
    with pytest.raises(ValueError):
        od_ab(d)


@pytest.mark.parametrize("d", [d for d in range(2, 400) if is_squarefree(d)])
def test_formula_matches_oracle(d):
    assert od_ab(d) == od_m_oracle(d)


@pytest.mark.parametrize("d", [2, 3, 5, 6, 7, 10, 13, 14, 15, 17, 21, 57])
def test_oracle_stable_under_more_unit_powers(d):
    base = od_m_oracle(d)
    for k in (1, 2, 3):
        assert od_m_lattice(d, unit_power_bound=k).quotient() == base


def test_as_stated_discrepancies():
    bad = [d for d in range(2, 201) if is_squarefree(d) and od_ab_as_stated(d) != od_m_oracle(d)]
    assert bad == [57, 129, 133, 141, 161, 177]
    assert all(d % 4 == 1 and fundamental_unit(d).norm == 1 for d in bad)


def test_as_stated_example_57():
    # u = 131 + 40 w; the presentation Z/b x Z/bd modulo the extra relations has order 480
    assert fundamental_unit(57).norm == 1
    assert od_m_oracle(57) == G("Z/4 x Z/120")
    assert od_ab_as_stated(57) == G("Z/4 x Z/24")


@pytest.mark.parametrize("d, group", [(-2, "Z x Z/6"), (-7, "Z x Z/4"), (-11, "Z x Z/3")])
def test_refined(d, group):
    assert od_refined_ab(d) == G(group)


def test_refined_rejects():
    with pytest.raises(ValueError):
        od_refined_ab(-5)


def test_exceptional_images():
    for d, value in ((-2, -6), (-7, -4), (-11, -9)):
        _, image = exceptional_symbol(d)
        assert image == QuadraticOrder(d)(value)
    # -4 and 4 generate the same subgroup, -9 = 3 modulo 12
    M7 = od_m_lattice(-7)
    assert M7.extended(QuadraticOrder(-7)(4)).quotient() == od_refined_ab(-7)
    M11 = od_m_lattice(-11)
    assert QuadraticOrder(-11)(-9 - 3) in M11


def test_minus_eleven_witness():
    assert is_minus_identity(minus_eleven_witness())
