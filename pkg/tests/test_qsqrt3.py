import pickle
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given

from napoleonkit.qsqrt3 import F3, field_div, field_mul, field_sign, normalize, rat_from_str, rat_to_str

from conftest import f3s, nonzero_f3s


def R(n, d=1):
    return Fraction(n, d)


@pytest.mark.parametrize(
    "num, den, want",
    [(2, 4, (1, 2)), (3, -6, (-1, 2)), (0, 7, (0, 1))],
)
def test_normalize(num, den, want):
    r = normalize(num, den)
    assert (r.numerator, r.denominator) == want


def test_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        normalize(1, 0)


def test_field_mul_examples():
    assert field_mul(F3(1, 1), F3(2, -1)) == F3(-1, 1)
    assert field_mul(F3(2, 1), F3(2, -1)) == F3(1, 0)
    x = F3(R(3, 7), R(-5, 2))
    assert field_mul(x, F3(1)) == x


def test_field_div_examples():
    assert field_div(F3(1), F3(2, 1)) == F3(2, -1)
    v = field_div(F3(-1, 1), F3(1, 1))
    assert v * F3(1, 1) == F3(-1, 1)
    x = F3(R(3, 7), R(-5, 2))
    assert field_div(x, x) == F3(1, 0)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        field_div(F3(1, 1), F3(0))
    with pytest.raises(ZeroDivisionError):
        F3(1) / 0


def test_field_sign_examples():
    assert field_sign(F3(0)) == 0
    # integer oracle: 49 > 48 and 9409 > 9408
    assert 7**2 > 3 * 4**2 and 97**2 > 3 * 56**2
    assert field_sign(F3(7, -4)) == 1
    assert field_sign(F3(97, -56)) == 1
    assert field_sign(F3(-97, 56)) == -1


def test_operators_mix_with_ints_and_fractions():
    x = F3(1, 2)
    assert x + 1 == F3(2, 2)
    assert 1 - x == F3(0, -2)
    assert x * R(1, 2) == F3(R(1, 2), 1)
    assert 2 / F3(0, 1) == F3(0, R(2, 3))
    assert F3(3) == 3
    assert hash(F3(3)) == hash(3)


def test_ordering():
    assert F3(7, -4) > 0
    assert F3(0, 1) < 2
    assert sorted([F3(2), F3(0, 1), F3(1)]) == [F3(1), F3(0, 1), F3(2)]
    assert abs(F3(1, -1)) == F3(-1, 1)


def test_json_and_str():
    x = F3(R(25, 12), R(-3))
    assert x.to_json() == {"a": "25/12", "b": "-3"}
    assert F3.from_json(x.to_json()) == x
    assert str(F3(3, R(25, 12))) == "3 + 25/12 r3"
    assert str(F3(0, -1)) == "-r3"
    assert rat_to_str(R(4, 2)) == "2"
    assert rat_from_str(" -6/4 ") == R(-3, 2)


def test_immutable():
    x = F3(1)
    with pytest.raises(AttributeError):
        x.a = 2


@given(f3s, f3s, f3s)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z


@given(f3s, f3s)
def test_sign_properties(x, y):
    assert field_sign(x) == -field_sign(-x)
    assert field_sign(x * y) == field_sign(x) * field_sign(y)


@given(f3s, nonzero_f3s)
def test_div_round_trip(x, y):
    assert field_div(field_mul(x, y), y) == x


@given(nonzero_f3s)
def test_nonzero_has_nonzero_norm(x):
    assert x.norm() != 0


def test_sign_agrees_with_high_precision():
    rng = random.Random(20261017)
    big = 2**64
    checked = 0
    with mpmath.workprec(256):
        sqrt3 = mpmath.sqrt(3)
        for _ in range(10_000):
            a = Fraction(rng.randint(-big, big), rng.randint(1, big))
            b = Fraction(rng.randint(-big, big), rng.randint(1, big))
            if rng.random() < 0.3:
                # push toward cancellation: a close to -b*sqrt(3)
                a = -b * Fraction(mpmath.nstr(sqrt3, 25)) + Fraction(rng.randint(-5, 5), big)
            ma = mpmath.mpf(a.numerator) / a.denominator
            mb = mpmath.mpf(b.numerator) / b.denominator
            val = ma + mb * sqrt3
            bound = mpmath.mpf(2) ** -200 * (abs(ma) + 2 * abs(mb) + 1)
            if abs(val) <= bound:
                continue
            assert field_sign(F3(a, b)) == (1 if val > 0 else -1)
            checked += 1
    assert checked > 9000


def test_pickle_round_trip():
    x = F3(R(3, 7), R(-5, 2))
    assert pickle.loads(pickle.dumps(x)) == x
