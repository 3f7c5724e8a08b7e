"""Exact scalars in Q or a real quadratic field Q(sqrt d).

A :class:`Scalar` is ``a + b*sqrt(d)`` with rational ``a`` and ``b``.  Rational
parts are ``gmpy2.mpq`` values, which compare and hash like ``Fraction``.
The text syntax is ``"-3/2"``, ``"r"``, ``"1/2+1/2r"`` where ``r`` stands for
``sqrt(d)``.
"""

import math
import re
from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

from .errors import FieldMismatch, SpecParseError

__all__ = ["Scalar", "Field", "QQ", "as_scalar", "is_squarefree"]

_mpq_type = type(mpq(0))
_ZERO = mpq(0)


def is_squarefree(d):
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def _rat(x):
    if isinstance(x, _mpq_type):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
        return mpq(x.numerator, x.denominator) if not isinstance(x, int) else mpq(x)
    if isinstance(x, str):
        return _parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_rational(text):
    t = text.strip()
    if not _RATIONAL_RE.match(t):
        raise SpecParseError(f"not an exact rational: {text!r}")
    if t.endswith("/0"):
        raise SpecParseError(f"zero denominator: {text!r}")
    return mpq(t[1:] if t[0] == "+" else t)  # mpq rejects a leading '+'



def _new(a, b, d):
    s = object.__new__(Scalar)
    s.a = a
    s.b = b
    s.d = d
    return s


def _join(d1, d2, b1, b2):
    if d1 == d2:
        return d1
    if b1 and b2:
        raise FieldMismatch(f"cannot combine elements of Q(sqrt {d1}) and Q(sqrt {d2})")
    if b1:
        return d1
    if b2:
        return d2
    return d1 if d1 != 1 else d2


class Scalar:
    """Immutable element ``a + b*sqrt(d)``; ``d == 1`` means plain Q (then ``b == 0``)."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=1):
        a = _rat(a)
        b = _rat(b)
        d = int(d)
        if d != 1 and not is_squarefree(d):
            raise ValueError(f"d={d} must be a square-free integer > 1")
        if d == 1 and b:
            a, b = a + b, _ZERO
        self.a = a
        self.b = b
        self.d = d

    # -- coercion -------------------------------------------------------
    @staticmethod
    def coerce(x, d=1):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, str):
            return Field(d).parse(x)
        return _new(_rat(x), _ZERO, d)

    @property
    def is_rational(self):
        return not self.b

    def to_fraction(self):
        if self.b:
            raise ValueError(f"{self} is irrational")
        return Fraction(int(self.a.numerator), int(self.a.denominator))

    def conjugate(self):
        return _new(self.a, -self.b, self.d)

    def norm(self):
        return self.a * self.a - self.d * self.b * self.b

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            try:
                return _new(self.a + _rat(other), self.b, self.d)
            except TypeError:
                return NotImplemented
        d = self.d if self.d == other.d else _join(self.d, other.d, self.b, other.b)
        return _new(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return _new(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            try:
                return _new(self.a - _rat(other), self.b, self.d)
            except TypeError:
                return NotImplemented
        d = self.d if self.d == other.d else _join(self.d, other.d, self.b, other.b)
        return _new(self.a - other.a, self.b - other.b, d)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            try:
                r = _rat(other)
            except TypeError:
                return NotImplemented
            return _new(self.a * r, self.b * r, self.d)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        if not b1 and not b2:
            return _new(a1 * a2, _ZERO, self.d if self.d != 1 else other.d)
        d = self.d if self.d == other.d else _join(self.d, other.d, b1, b2)
        return _new(a1 * a2 + d * b1 * b2, a1 * b2 + b1 * a2, d)

    __rmul__ = __mul__

    def inverse(self):
        if not self.b:
            if not self.a:
                raise ZeroDivisionError("division by zero scalar")
            return _new(1 / self.a, _ZERO, self.d)
        n = self.norm()
        return _new(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            try:
                r = _rat(other)
            except TypeError:
                return NotImplemented
            if not r:
                raise ZeroDivisionError("division by zero")
            return _new(self.a / r, self.b / r, self.d)
        if not other.b:
            if not other.a:
                raise ZeroDivisionError("division by zero scalar")
            return _new(self.a / other.a, self.b / other.a, self.d if self.d != 1 else other.d)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = _new(mpq(1), _ZERO, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -----------------------------------------------------
    def sign(self):
        a, b = self.a, self.b
        if not b:
            return (a > 0) - (a < 0)
        if not a:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        big_a = a * a > self.d * b * b
        if a > 0:
            return 1 if big_a else -1
        return -1 if big_a else 1

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if self.a != other.a or self.b != other.b:
                return False
            return not self.b or self.d == other.d
        try:
            r = _rat(other)
        except (TypeError, SpecParseError):
            return NotImplemented
        return not self.b and self.a == r

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    # -- text -----------------------------------------------------------
    def __str__(self):
        a, b = self.a, self.b
        if not b:
            return str(a)
        if b == 1:
            rpart = "r"
        elif b == -1:
            rpart = "-r"
        else:
            rpart = f"{b}r"
        if not a:
            return rpart
        if rpart.startswith("-"):
            return f"{a}{rpart}"
        return f"{a}+{rpart}"

    def __repr__(self):
        if self.d == 1:
            return f"Scalar({self})"
        return f"Scalar({self}, d={self.d})"


class Field:
    """Q (``d == 1``) or the real quadratic field Q(sqrt d)."""

    __slots__ = ("d",)

    _NAME_RE = re.compile(r"^Q\s*(?:\(\s*sqrt\s*\(?\s*(\d+)\s*\)?\s*\))?$")

    def __init__(self, d=1):
        d = int(d)
        if d != 1 and not is_squarefree(d):
            raise ValueError(f"d={d} must be 1 or a square-free integer > 1")
        self.d = d

    @classmethod
    def from_name(cls, name):
        m = cls._NAME_RE.match(name.strip())
        if not m:
            raise SpecParseError(f"unknown field {name!r}; expected 'Q' or 'Q(sqrt d)'", field="field")
        d = int(m.group(1)) if m.group(1) else 1
        if d != 1 and not is_squarefree(d):
            raise SpecParseError(f"d={d} is not square-free", field="field")
        return cls(d)

    @property
    def name(self):
        return "Q" if self.d == 1 else f"Q(sqrt {self.d})"

    @property
    def sqrt(self):
        if self.d == 1:
            raise ValueError("Q has no adjoined square root")
        return _new(_ZERO, mpq(1), self.d)

    def zero(self):
        return _new(_ZERO, _ZERO, self.d)

    def one(self):
        return _new(mpq(1), _ZERO, self.d)

    def __call__(self, x, b=0):
        if isinstance(x, Scalar):
            if x.b and x.d != self.d:
                raise FieldMismatch(f"{x!r} is not in {self.name}")
            return _new(x.a, x.b, self.d)
        if isinstance(x, str):
            return self.parse(x)
        return Scalar(x, b, self.d)

    def parse(self, text):
        t = text.replace(" ", "")
        if not t:
            raise SpecParseError("empty scalar")
        terms = re.findall(r"[+-]?[^+-]+", t)
        if "".join(terms) != t or len(terms) > 2:
            raise SpecParseError(f"malformed scalar {text!r}")
        a = _ZERO
        b = _ZERO
        for term in terms:
            if "r" in term:
                if self.d == 1:
                    raise SpecParseError(f"{text!r} uses r but the field is Q")
                left, _, right = term.partition("r")
                left = left.rstrip("*")
                if left in ("", "+", "-"):
                    coef = mpq(-1) if left == "-" else mpq(1)
                else:
                    coef = _parse_rational(left)
                if right:
                    if not right.startswith("/"):
                        raise SpecParseError(f"malformed scalar {text!r}")
                    coef = coef / _parse_rational(right[1:])
                b += coef
            else:
                a += _parse_rational(term)
        return _new(a, b, self.d)

    def __eq__(self, other):
        return isinstance(other, Field) and other.d == self.d

    def __hash__(self):
        return hash(("Field", self.d))

    def __repr__(self):
        return f"Field({self.name})"


QQ = Field(1)


def as_scalar(x, d=1):
    return Scalar.coerce(x, d)
