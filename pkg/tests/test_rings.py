import itertools
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from e2ab.rings import (
    ModularRing,
    PolynomialQuotient,
    ProductRing,
    RingElement,
    additive_span,
    galois_field,
    is_local,
    units,
)
from e2ab.ringspec import ParseError, parse_ring_spec

CORPUS = ["Z/1", "Z/12", "GF(4)", "GF(8)", "GF(9)", "Z/2[x]/(x^2)", "Z/3[x]/(x^2)",
          "Z/2 x Z/3 x Z/3", "Z/4[x]/(x^2+2x+3)", "(Z/2 x Z/2)[t]/(t^2+1)"]


@pytest.mark.parametrize("spec", CORPUS)
def test_ring_axioms(spec, ring):
    R = ring(spec)
    E = list(R.elements())
    zero, one = R.zero, R.one
    for a, b in itertools.product(E, repeat=2):
        assert a + b == b + a and a * b == b * a
        assert a + zero == a and a * one == a
        assert a - b + b == a
    for a, b, c in itertools.islice(itertools.product(E, repeat=3), 4000):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)


@pytest.mark.parametrize("spec", CORPUS)
def test_units_are_exactly_invertibles(spec, ring):
    R = ring(spec)
    E = list(R.elements())
    brute = {a for a in E if any(a * b == R.one for b in E)}
    assert set(units(R)) == brute
    for u in units(R):
        assert u * u.inverse() == R.one


def test_units_examples(ring):
    assert sorted(u.index for u in units(ring("Z/12"))) == [1, 5, 7, 11]
    assert len(units(ring("GF(4)"))) == 3 and ring("GF(4)").zero not in units(ring("GF(4)"))
    assert [u.index for u in units(ring("Z/1"))] == [0]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_galois_field_is_a_field(q):
    F = galois_field(q)
    assert F.size == q
    assert len(units(F)) == q - 1


def test_galois_field_rejects():
    for q in (1, 6, 12):
        with pytest.raises(ValueError):
            galois_field(q)


def test_gf4_is_f2_adjoin_root():
    F = galois_field(4)
    assert F == PolynomialQuotient(ModularRing(2), (1, 1, 1))


@pytest.mark.parametrize(
    "spec, local, residue",
    [("Z/9", True, 3), ("Z/6", False, None), ("GF(8)", True, 8), ("Z/4", True, 2),
     ("Z/2[x]/(x^2)", True, 2), ("Z/1", False, None), ("Z/2 x Z/2", False, None)],
)
def test_is_local(spec, local, residue, ring):
    info = is_local(ring(spec))
    assert info.is_local is local
    assert info.residue_size == residue


def test_local_maximal_ideals(ring):
    R = ring("Z/2[x]/(x^2)")
    info = is_local(R)
    assert info.maximal_ideal == frozenset({R((0, 0)).index, R((0, 1)).index})
    assert info.maximal_ideal_squared == frozenset({0})
    assert is_local(ring("GF(8)")).maximal_ideal == frozenset({0})


def test_local_agrees_with_nonunit_closure(ring):
    for spec in CORPUS:
        R = ring(spec)
        nonunits = [i for i in range(R.size) if not R.is_unit_index(i)]
        closed = bool(nonunits) and all(R.add(i, j) in nonunits for i in nonunits for j in nonunits)
        assert is_local(R).is_local == (closed and R.size > 1)


def test_additive_span(ring):
    R = ring("Z/12")
    assert additive_span(R, [R.from_int(4), R.from_int(6)]) == frozenset(range(0, 12, 2))
    assert additive_span(R, []) == frozenset({0})


def test_mixed_radix_encoding(ring):
    R = ring("Z/2 x Z/3 x Z/3")
    for i in range(R.size):
        assert R.encode(R.decode(i)) == i
    assert R((1, 2, 0)).coords == (1, 2, 0)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 60), st.integers(-500, 500), st.integers(-500, 500))
def test_modular_arithmetic_matches_integers(n, a, b):
    R = ModularRing(n)
    x, y = R(a), R(b)
    assert (x + y).index == (a + b) % n
    assert (x * y).index == (a * b) % n
    assert (x - y).index == (a - b) % n
    assert x.is_unit() == (gcd(a, n) == 1)


def test_element_operations(ring):
    R = ring("Z/12")
    a = R(5)
    assert a ** 2 == R(1) and a ** -1 == R(5)
    assert R(7) / R(5) == R(11)
    assert 3 * a == R(3) and 1 - a == R(8)
    assert a == 5 and a != R(4)
    with pytest.raises(ZeroDivisionError):
        R(2).inverse()
    with pytest.raises(ValueError):
        R(1) + ring("Z/5").one


def test_product_ring_units(ring):
    R = ring("Z/2 x Z/3")
    assert len(units(R)) == 2
    assert ProductRing((ModularRing(2), ModularRing(3))) == R


class TestRingSpec:
    @pytest.mark.parametrize(
        "text, size",
        [("Z/12", 12), ("GF(4)", 4), ("Z/2[x]/(x^2)", 4), ("  Z/2 x Z/3 x Z/3 ", 18),
         ("Z/3[y]/(y^2 - 1)", 9), ("Z/2[x]/(x^3+x+1)", 8), ("GF(2)[x]/(x^2)", 4),
         ("Z/2[x]/(x^2)[y]/(y^2+1)", 16), ("(Z/2 x Z/2)[t]/(t^2+1)", 16), ("Z/5[x]/(x^2 + 2*x + 3)", 25)],
    )
    def test_sizes(self, text, size):
        assert parse_ring_spec(text).size == size

    def test_gf4_matches_quotient(self):
        assert parse_ring_spec("GF(4)") == parse_ring_spec("Z/2[x]/(x^2+x+1)")

    def test_nilpotent(self):
        R = parse_ring_spec("Z/2[x]/(x^2)")
        x = R((0, 1))
        assert x * x == R.zero

    @pytest.mark.parametrize("spec", CORPUS + ["Z/2[x]/(x^2)[y]/(y^2+1)", "Z/2 x (Z/3 x Z/5)"])
    def test_str_reparses(self, spec):
        R = parse_ring_spec(spec)
        assert parse_ring_spec(str(R)) == R

    @pytest.mark.parametrize(
        "text, fragment, position",
        [
            ("Z/0", "modulus", 0),
            ("Z/4[x]/(2x^2+1)", "monic", None),
            ("Z/2[x]/(x^2", "expected ')'", 11),
            ("GF(6)", "prime power", None),
            ("Z/2[x]/(y)", "unknown variable", None),
            ("Z/5 Q", "trailing", 4),
            ("Z/2[x]/(3)", "degree", None),
            ("", None, 0),
            ("Q/5", None, 0),
            ("Z/2[x]/(x^2)[y]/(y^2+x)", "unknown variable", 21),
        ],
    )
    def test_errors(self, text, fragment, position):
        with pytest.raises(ParseError) as exc:
            parse_ring_spec(text)
        if fragment:
            assert fragment in str(exc.value)
        if position is not None:
            assert exc.value.position == position

    def test_reduced_leading_coefficient_is_accepted(self):
        assert parse_ring_spec("Z/4[x]/(5x^2)").size == 16
