from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from e2ab.quadratic import QuadInt, QuadraticOrder, is_squarefree

DS = [-11, -7, -3, -2, -1, 2, 3, 5, 6, 13, 21]


def test_is_squarefree():
    assert [n for n in range(1, 20) if is_squarefree(n)] == [1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19]
    assert is_squarefree(-7) and not is_squarefree(-12)


@pytest.mark.parametrize("d", [0, 1, 4, -4, 12, 18])
def test_order_rejects(d):
    with pytest.raises(ValueError):
        QuadraticOrder(d)


def test_basis_choice():
    assert QuadraticOrder(-3).omega_basis and QuadraticOrder(5).omega_basis
    assert not QuadraticOrder(-1).omega_basis and not QuadraticOrder(2).omega_basis


def test_minus_eleven_norm():
    x = QuadraticOrder(-11).theta
    assert x.norm() == 3
    assert x * x.conjugate() == QuadraticOrder(-11)(3)


@pytest.mark.parametrize("d", DS)
def test_sqrt_d_squares_to_d(d):
    O = QuadraticOrder(d)
    r = O.sqrt_d()
    assert r * r == O(d)
    assert r.norm() == -d and r.trace() == 0


def _as_pair(x: QuadInt):
    """Exact coordinates (p, q) with x = p + q sqrt d."""
    s, t = x.coords
    if x.order.omega_basis:
        return Fraction(2 * s + t, 2), Fraction(t, 2)
    return Fraction(s), Fraction(t)


elements = st.tuples(st.sampled_from(DS), st.integers(-50, 50), st.integers(-50, 50),
                     st.integers(-50, 50), st.integers(-50, 50))


@settings(max_examples=300, deadline=None)
@given(elements)
def test_arithmetic_matches_sqrt_model(data):
    d, a, b, c, e = data
    O = QuadraticOrder(d)
    x, y = O(a, b), O(c, e)
    (p1, q1), (p2, q2) = _as_pair(x), _as_pair(y)
    assert _as_pair(x * y) == (p1 * p2 + d * q1 * q2, p1 * q2 + p2 * q1)
    assert _as_pair(x + y) == (p1 + p2, q1 + q2)
    assert _as_pair(x.conjugate()) == (p1, -q1)
    assert x.norm() == p1 * p1 - d * q1 * q1


@settings(max_examples=300, deadline=None)
@given(elements)
def test_norm_multiplicative(data):
    d, a, b, c, e = data
    O = QuadraticOrder(d)
    x, y = O(a, b), O(c, e)
    assert (x * y).norm() == x.norm() * y.norm()
    assert x.conjugate().conjugate() == x


@pytest.mark.parametrize("d, count", [(-1, 4), (-3, 6), (-2, 2), (-7, 2), (-11, 2)])
def test_finite_units(d, count):
    O = QuadraticOrder(d)
    us = O.units()
    assert len(us) == count
    assert all(u.is_unit() and u * u.inverse() == O.one for u in us)


def test_units_positive_d_rejected():
    with pytest.raises(ValueError):
        QuadraticOrder(2).units()


def test_powers_and_inverse():
    O = QuadraticOrder(2)
    u = O(1, 1)
    assert u ** 2 == O(3, 2)
    assert u ** -1 == O(-1, 1)
    assert u ** 5 * u ** -5 == O.one
    with pytest.raises(ZeroDivisionError):
        O(2, 0).inverse()


def test_mixing_orders_rejected():
    with pytest.raises(ValueError):
        QuadraticOrder(2).one + QuadraticOrder(3).one


def test_from_sqrt_coords():
    O = QuadraticOrder(5)
    assert O.from_sqrt_coords(1, 1, 2) == O.theta
    with pytest.raises(ValueError):
        O.from_sqrt_coords(1, 0, 2)


def test_float():
    assert abs(float(QuadraticOrder(5).theta) - (1 + 5 ** 0.5) / 2) < 1e-12
