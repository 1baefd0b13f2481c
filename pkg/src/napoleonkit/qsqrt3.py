"""Exact arithmetic in the quadratic field Q(sqrt 3).

Rationals are ``gmpy2.mpq`` values, which are always kept in lowest terms
with a positive denominator; ``fractions.Fraction`` and ``int`` inputs are
accepted everywhere and converted. An :class:`F3` is the pair
``(a, b)`` standing for ``a + b*sqrt(3)``; since sqrt(3) is irrational the
representation is unique, so equality and hashing are component-wise.
"""

from fractions import Fraction
from math import sqrt

from gmpy2 import mpq

Rat = mpq
_ZERO_Q = mpq(0)

_SQRT3 = sqrt(3.0)


def normalize(num, den):
    """Return the canonical rational ``num/den``."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return mpq(num, den)


def rat_to_str(r):
    r = mpq(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def rat_from_str(text):
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return normalize(int(num), int(den))
    return mpq(int(text))


class F3:
    """An element ``a + b*sqrt(3)`` of Q(sqrt 3).

    Instances are immutable. Ints and Fractions mix freely with F3 in the
    arithmetic operators.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", a if type(a) is mpq else mpq(a))
        object.__setattr__(self, "b", b if type(b) is mpq else mpq(b))

    def __setattr__(self, name, value):
        raise AttributeError("F3 is immutable")

    def __reduce__(self):
        return (F3, (self.a, self.b))

    @classmethod
    def _raw(cls, a, b):
        # both components already mpq
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        return obj

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return F3._raw(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return F3._raw(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return F3._raw(-self.a, -self.b)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return field_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return field_div(self, other)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return field_div(other, self)

    def conjugate(self):
        return F3._raw(self.a, -self.b)

    def norm(self):
        """The field norm ``a**2 - 3*b**2`` (a rational)."""
        return self.a * self.a - 3 * self.b * self.b

    def sign(self):
        return field_sign(self)

    def __abs__(self):
        return -self if field_sign(self) < 0 else self

    # comparison

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other):
        return field_sign(self - other) < 0

    def __le__(self, other):
        return field_sign(self - other) <= 0

    def __gt__(self, other):
        return field_sign(self - other) > 0

    def __ge__(self, other):
        return field_sign(self - other) >= 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    # conversion

    def is_rational(self):
        return not self.b

    def __float__(self):
        return float(self.a) + float(self.b) * _SQRT3

    def to_json(self):
        return {"a": rat_to_str(self.a), "b": rat_to_str(self.b)}

    @classmethod
    def from_json(cls, obj):
        return cls(rat_from_str(obj["a"]), rat_from_str(obj["b"]))

    def __repr__(self):
        return f"F3({rat_to_str(self.a)!r}, {rat_to_str(self.b)!r})"

    def __str__(self):
        if not self.b:
            return rat_to_str(self.a)
        rad = "r3" if abs(self.b) == 1 else f"{rat_to_str(abs(self.b))} r3"
        if not self.a:
            return rad if self.b > 0 else f"-{rad}"
        op = "+" if self.b > 0 else "-"
        return f"{rat_to_str(self.a)} {op} {rad}"


def _coerce(x):
    if type(x) is F3:
        return x
    if isinstance(x, (int, Fraction)) or type(x) is mpq:
        return F3._raw(mpq(x), _ZERO_Q)
    return NotImplemented


def field_mul(x, y):
    xa, xb, ya, yb = x.a, x.b, y.a, y.b
    if not xb and not yb:
        return F3._raw(xa * ya, xb)
    return F3._raw(xa * ya + 3 * xb * yb, xa * yb + xb * ya)


def field_div(x, y):
    """Return ``x / y``, multiplying through by the conjugate of ``y``."""
    ya, yb = y.a, y.b
    if not yb:
        if not ya:
            raise ZeroDivisionError("division by zero")
        return F3._raw(x.a / ya, x.b / ya)
    n = ya * ya - 3 * yb * yb
    # n == 0 forces ya == yb == 0 because sqrt(3) is irrational
    if not n:
        raise ZeroDivisionError("division by zero")
    return F3._raw((x.a * ya - 3 * x.b * yb) / n, (x.b * ya - x.a * yb) / n)


def field_sign(x):
    """Exact sign of ``a + b*sqrt(3)`` as -1, 0 or +1."""
    sa = (x.a > 0) - (x.a < 0)
    sb = (x.b > 0) - (x.b < 0)
    if sa == sb:
        return sa
    if sa == 0:
        return sb
    if sb == 0:
        return sa
    # mixed signs: the component with the larger square wins
    lhs = x.a * x.a
    rhs = 3 * x.b * x.b
    if lhs > rhs:
        return sa
    if lhs < rhs:
        return sb
    return 0


def f3(value):
    """Coerce an int, rational, F3 or ``"p/q"`` string into an F3."""
    if isinstance(value, F3):
        return value
    if isinstance(value, str):
        return F3(rat_from_str(value))
    return F3(value)


ZERO = F3(0)
ONE = F3(1)
HALF = F3(Fraction(1, 2))
SQRT3 = F3(0, 1)
