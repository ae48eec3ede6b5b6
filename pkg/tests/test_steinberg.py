import pytest

from e2ab.matrices import Mat2, identity
from e2ab.msubgroup import m_subgroup
from e2ab.ringspec import ParseError
from e2ab.steinberg import (
    Letter,
    StWord,
    am_image,
    am_value,
    build,
    dennis_stein,
    h,
    parse_word,
    relation_residues,
    steinberg_symbol,
    theta_eval,
    w,
    x12,
    x21,
)


def test_word_basics(ring):
    R = ring("Z/5")
    a = x12(R(2)) * x21(R(3))
    assert len(a) == 2
    assert a.inverse() == StWord([Letter("21", R(3), -1), Letter("12", R(2), -1)])
    assert str(a) == "x12(2) x21(3)"
    assert theta_eval(a * a.inverse()) == identity(R)


def test_x12_and_w12_images(ring):
    R = ring("Z/5")
    assert theta_eval(x12(R(1))) == Mat2(R(1), R(1), R(0), R(1))
    u = R(2)
    assert theta_eval(w("12", u)) == Mat2(R(0), u, -u.inverse(), R(0))


def test_h_of_one_is_trivial(ring):
    R = ring("Z/7")
    assert theta_eval(h("12", R.one)) == identity(R)


@pytest.mark.parametrize("spec", ["Z/5", "Z/12", "GF(4)", "Z/9"])
def test_symbols_in_kernel(spec, ring):
    R = ring(spec)
    us = [R.element(i) for i in R.unit_indices]
    for u in us:
        assert theta_eval(steinberg_symbol(R.one, u)) == identity(R)
        for v in us:
            assert theta_eval(steinberg_symbol(u, v)) == identity(R)


def test_dennis_stein_letters(ring):
    R = ring("Z/5")
    word = dennis_stein(R(2), R(2))
    # four x-letters plus h^-1, which is six more
    assert len(word) == 10
    assert theta_eval(word) == identity(R)


def test_dennis_stein_requires_unit(ring):
    R = ring("Z/6")
    with pytest.raises(ValueError):
        dennis_stein(R(2), R(2))
    with pytest.raises(ValueError):
        w("12", R(2))


def test_build_dispatch(ring):
    R = ring("Z/7")
    assert build("x21", R(3)) == x21(R(3))
    assert build("steinberg_symbol", R(2), R(3)) == steinberg_symbol(R(2), R(3))
    assert build("dennis_stein", R(2), R(3), pos="21") == dennis_stein(R(2), R(3), "21")
    with pytest.raises(ValueError):
        build("y12", R(1))


def test_h12_image_z12(ring):
    R = ring("Z/12")
    img = am_image(h("12", R(5)), R)
    assert img.is_zero()
    # -3(5 - 1) = -12
    assert R(-12) == R.zero


def test_h12_image_formula(ring):
    for spec in ["Z/8", "Z/9", "Z/2[x]/(x^3)", "Z/25"]:
        R = ring(spec)
        M = m_subgroup(R)
        for i in R.unit_indices:
            a = R.element(i)
            assert am_value(h("12", a)) - (-3 * (a - 1)) in M


def test_am_examples(ring):
    R = ring("Z/7")
    img = am_image(parse_word("h12(3)", R), R)
    assert img.is_zero()
    R5 = ring("Z/5")
    ss = parse_word("SS(2,3)", R5)
    assert theta_eval(ss) == identity(R5)
    assert am_value(ss) == R5(-6)


def test_empty_word(ring):
    R = ring("Z/5")
    assert theta_eval(StWord(), R) == identity(R)
    assert am_image(StWord(), R).is_zero()
    with pytest.raises(ValueError):
        theta_eval(StWord())


class TestParseWord:
    def test_examples(self, ring):
        R = ring("Z/12")
        word = parse_word("x12(3) x21(-1) h12(5)^-1", R)
        assert word == x12(R(3)) * x21(R(-1)) * h("12", R(5)).inverse()
        assert parse_word("DS(2,3)", R) == dennis_stein(R(2), R(3))
        assert parse_word("SS21(5,7)", R) == steinberg_symbol(R(5), R(7), "21")
        assert parse_word("x12(1)^3", R) == x12(R(1)) * x12(R(1)) * x12(R(1))
        assert parse_word("x12(1)^0 x21(2)", R) == x21(R(2))

    def test_vector_arguments(self, ring):
        R = ring("Z/2[x]/(x^2)")
        word = parse_word("x12([0,1]) DS([0,1],[1,1])", R)
        assert word.letters[0].value == R((0, 1))

    @pytest.mark.parametrize("text", ["", "x13(1)", "x12(1", "DS(1)", "x12(1,2)", "x12([1,)", "foo"])
    def test_errors(self, ring, text):
        with pytest.raises(ParseError):
            parse_word(text, ring("Z/5"))

    def test_unit_errors(self, ring):
        with pytest.raises(ValueError):
            parse_word("h12(2)", ring("Z/4"))


@pytest.mark.parametrize("spec", ["Z/12", "GF(4)", "Z/27", "Z/2 x Z/3"])
def test_relation_residues(spec, ring):
    rep = relation_residues(ring(spec))
    assert rep.ok, rep.failures[:3]
    assert rep.alpha_checked > 0 and rep.beta_checked > 0


def test_relation_residues_sampling(ring):
    rep = relation_residues(ring("Z/27"), samples=50, seed=1, limit=10)
    assert not rep.exhaustive and rep.alpha_checked == 50 and rep.ok


def test_beta_residue_z12(ring):
    R = ring("Z/12")
    u, r = R(5), R(1)
    wu = w("12", u)
    lhs, rhs = wu * x21(r) * wu.inverse(), x12(-u * r * u)
    assert theta_eval(lhs) == theta_eval(rhs)
    assert am_image(lhs * rhs.inverse(), R).is_zero()
