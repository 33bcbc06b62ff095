import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trickle.dyadic import Dyadic, power_of_two_ratio

D = Dyadic

dyadics = st.builds(D, st.integers(-10 ** 6, 10 ** 6), st.integers(0, 20))


def test_canonical_form():
    assert D(4, 2) == D(1)
    assert D(6, 1) == D(3)
    assert D(0, 7) == D(0)
    assert D(2, -1) == D(4)
    assert str(D(3, 2)) == "3/4"
    assert str(D(-8, 2)) == "-2"


def test_parse():
    assert D.parse("-1/2") == D(-1, 1)
    assert D.parse("3/4") == D(3, 2)
    assert D.parse("5") == D(5)
    assert D.parse("6/4") == D(3, 1)
    with pytest.raises(ValueError):
        D.parse("1/3")
    with pytest.raises(ValueError):
        D.parse("1/0")


@settings(max_examples=200, deadline=None)
@given(dyadics)
def test_parse_round_trip(x):
    assert D.parse(str(x)) == x


@settings(max_examples=200, deadline=None)
@given(dyadics, dyadics)
def test_field_ops(a, b):
    assert a + b - b == a
    assert (a + b) - a == b
    assert -(-a) == a
    assert Dyadic.mid(a, b).double() == a + b


@settings(max_examples=200, deadline=None)
@given(dyadics, dyadics)
def test_order(a, b):
    # floats are exact at these sizes
    assert (a < b) == (float(a) < float(b))
    if a < b:
        assert a < Dyadic.mid(a, b) < b


def test_floor():
    assert D(3, 1).floor() == 1
    assert D(-3, 1).floor() == -2
    assert D(4).floor() == 4
    assert D(-1, 3).floor() == -1


def test_integer_interop():
    assert D(1, 1) + 1 == D(3, 1)
    assert 1 - D(1, 1) == D(1, 1)
    assert D(1, 1) <= 1
    assert D(5) == 5


def test_power_of_two_ratio():
    assert power_of_two_ratio(D(1), D(1, 2)) == 2
    assert power_of_two_ratio(D(1, 2), D(1)) == -2
    assert power_of_two_ratio(D(3, 1), D(3, 3)) == 2
    assert power_of_two_ratio(D(3), D(1)) is None
    with pytest.raises(ValueError):
        power_of_two_ratio(D(-1), D(1))


def test_immutability():
    x = D(1, 1)
    with pytest.raises(AttributeError):
        x.num = 3
