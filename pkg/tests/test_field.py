from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from refltk.errors import SpecParseError
from refltk.field import QQ, Field, Scalar, is_squarefree

F5 = Field(5)
F2 = Field(2)

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)


@st.composite
def q5(draw):
    return Scalar(draw(fractions), draw(fractions), 5)


def test_basic_arithmetic():
    assert Scalar("1/2") + Scalar("1/3") == Scalar("5/6")
    assert Scalar(3) / 4 == Fraction(3, 4)
    r = F5.sqrt
    assert r * r == 5
    phi = (1 + r) / 2
    assert phi * phi == phi + 1


def test_inverse_in_quadratic_field():
    x = F5("2+3r")
    assert x * x.inverse() == 1
    with pytest.raises(ZeroDivisionError):
        F5.zero().inverse()


def test_parse_and_print():
    assert F5.parse("-1/2-1/2r") == F5("-1/2") - F5.sqrt / 2
    assert str(F5.parse("1/2+1/2r")) == "1/2+1/2r"
    assert QQ.parse("-3/2") == Fraction(-3, 2)
    with pytest.raises(SpecParseError):
        QQ.parse("r")
    with pytest.raises(SpecParseError):
        QQ.parse("1/x")


def test_field_names():
    assert Field.from_name("Q(sqrt 5)") == F5
    assert Field.from_name("Q").d == 1
    assert Field(5).name == "Q(sqrt 5)"
    with pytest.raises(SpecParseError):
        Field.from_name("Q(sqrt 8)")
    assert is_squarefree(30) and not is_squarefree(12)


def test_exact_sign_and_order():
    # 1 - sqrt 2 < 0 although both parts are small
    assert F2("1-r").sign() < 0
    assert F2("-3+2r").sign() < 0   # 2 sqrt 2 < 3
    assert F2("-3+3r").sign() > 0


@given(q5(), q5(), q5())
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    if x:
        assert x * x.inverse() == 1


@given(q5())
def test_sign_matches_float(x):
    f = float(x)
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)


@given(q5())
def test_text_round_trip(x):
    assert F5.parse(str(x)) == x


@given(fractions)
def test_rational_scalars_hash_like_fractions(f):
    s = Scalar(f)
    assert s == f and hash(s) == hash(f)
