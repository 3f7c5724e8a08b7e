"""Dense polynomials in one variable ``t`` over exact scalars, and power series."""

from .field import Scalar, as_scalar

__all__ = ["UPoly", "series_divide"]


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class UPoly:
    """``c[0] + c[1] t + ... + c[n] t^n`` with :class:`Scalar` coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        self.c = _trim(as_scalar(x) for x in coeffs)

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def one_minus_t_power(cls, k):
        return cls([1] + [0] * (k - 1) + [-1])

    @property
    def degree(self):
        return len(self.c) - 1

    def __bool__(self):
        return bool(self.c)

    def lead(self):
        return self.c[-1]

    def __add__(self, other):
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        return UPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __neg__(self):
        return UPoly([-x for x in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            other = as_scalar(other)
            return UPoly([x * other for x in self.c])
        if not self.c or not other.c:
            return UPoly()
        out = [Scalar(0)] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    out[i + j] = out[i + j] + x * y
        return UPoly(out)

    __rmul__ = __mul__

    def divmod(self, other):
        if not other.c:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.c)
        inv = other.lead().inverse()
        dq = len(rem) - len(other.c)
        if dq < 0:
            return UPoly(), self
        quot = [Scalar(0)] * (dq + 1)
        for k in range(dq, -1, -1):
            f = rem[k + len(other.c) - 1] * inv
            quot[k] = f
            if f:
                for j, y in enumerate(other.c):
                    rem[k + j] = rem[k + j] - f * y
        return UPoly(quot), UPoly(rem[: len(other.c) - 1])

    def monic(self):
        return self * self.lead().inverse()

    def gcd(self, other):
        a, b = self, other
        while b:
            r = a.divmod(b)[1]
            a, b = b, (r.monic() if r else r)
        return a.monic() if a else a

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __call__(self, t):
        acc = Scalar(0)
        for x in reversed(self.c):
            acc = acc * t + x
        return acc

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for k, x in enumerate(self.c):
            if not x:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            coef = f"({x})" if x.b else str(x)
            if not mono:
                parts.append(coef)
            elif x == 1:
                parts.append(mono)
            elif x == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{coef}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"UPoly({self})"


def series_divide(num, den, order):
    """Coefficients ``0..order`` of the power series ``num / den`` (needs ``den(0) != 0``)."""
    d = den.c
    if not d or not d[0]:
        raise ZeroDivisionError("denominator vanishes at t = 0")
    inv0 = d[0].inverse()
    n = num.c
    out = []
    for k in range(order + 1):
        acc = n[k] if k < len(n) else Scalar(0)
        for j in range(1, min(k, len(d) - 1) + 1):
            if d[j]:
                acc = acc - d[j] * out[k - j]
        out.append(acc * inv0)
    return out
