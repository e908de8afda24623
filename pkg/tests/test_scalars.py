import random
from fractions import Fraction

import pytest
from hypothesis import given

from staralg.scalars import GaussianRational, I, conj_scalar, format_scalar, parse_scalar

from conftest import gaussians, rand_gaussian


def test_conj_examples():
    assert conj_scalar(GaussianRational(3, 4)) == GaussianRational(3, -4)
    assert conj_scalar(Fraction(5)) == 5
    assert conj_scalar(GaussianRational(5)) == 5
    a, b = 1 + I, 1 - I
    assert a * b == 2
    assert conj_scalar(a) * conj_scalar(b) == 2


def test_canonical_form():
    g = GaussianRational(Fraction(2, 4), Fraction(-6, 8))
    assert g.re == Fraction(1, 2) and g.re.denominator == 2
    assert g.im == Fraction(-3, 4)
    assert GaussianRational(3, 0) == Fraction(3)
    assert hash(GaussianRational(3, 0)) == hash(Fraction(3))


def test_rejects_floats():
    with pytest.raises(TypeError):
        GaussianRational(0.5, 0)


def test_immutable():
    g = GaussianRational(1, 2)
    with pytest.raises(AttributeError):
        g._re = Fraction(5)


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * (1 / a) == 1
        assert (b / a) * a == b


def test_conj_is_involutive_ring_homomorphism():
    rng = random.Random(7)
    for _ in range(1000):
        a, b = rand_gaussian(rng), rand_gaussian(rng)
        assert conj_scalar(a * b) == conj_scalar(a) * conj_scalar(b)
        assert conj_scalar(a + b) == conj_scalar(a) + conj_scalar(b)
        assert conj_scalar(conj_scalar(a)) == a


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3", Fraction(3)),
        ("-1/2", Fraction(-1, 2)),
        ("i", GaussianRational(0, 1)),
        ("-i", GaussianRational(0, -1)),
        ("2i", GaussianRational(0, 2)),
        ("1/2i", GaussianRational(0, Fraction(1, 2))),
        ("3+4i", GaussianRational(3, 4)),
        ("1/2-3/4i", GaussianRational(Fraction(1, 2), Fraction(-3, 4))),
        (" 2 - i ", GaussianRational(2, -1)),
    ],
)
def test_parse(text, expected):
    value = parse_scalar(text)
    assert value == expected
    assert type(value) is type(expected)


@pytest.mark.parametrize("text", ["", "abc", "1/0x", "3+", "i4", "1.5"])
def test_parse_malformed(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_parse_real_only():
    with pytest.raises(ValueError):
        parse_scalar("1+i", complex_allowed=False)


@given(gaussians)
def test_format_round_trip(g):
    assert parse_scalar(format_scalar(g)) == g
