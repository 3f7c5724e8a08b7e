"""Batched exact arithmetic: arrays over Q(sqrt d) as integer numerators.

A :class:`QArray` holds ``(A + B*sqrt(d)) / den`` where ``A`` and ``B`` are
integer numpy arrays of equal shape and ``den`` is one positive Python int
shared by the whole batch.  With a fixed ``den`` the numerators are unique, so
their bytes serve as exact hash keys for group elements.

Numerators stay ``int64`` while a bound check guarantees no overflow and
silently switch to Python-int ``object`` arrays otherwise.
"""

import math
from functools import reduce

import numpy as np
from gmpy2 import mpq

from .field import Scalar

_LIMIT = 1 << 62


class NotExact(ArithmeticError):
    pass


def _maxabs(X):
    if X.size == 0:
        return 0
    return int(max(abs(int(X.max())), abs(int(X.min()))))


def _as_obj(X):
    return X if X.dtype == object else X.astype(object)


class QArray:
    __slots__ = ("A", "B", "den", "d")

    def __init__(self, A, B, den, d):
        self.A = A
        self.B = B
        self.den = int(den)
        self.d = int(d)

    # -- conversion -------------------------------------------------------
    @classmethod
    def from_scalars(cls, nested, d):
        arr = np.array(nested, dtype=object)
        flat = arr.ravel()
        den = 1
        for x in flat:
            den = math.lcm(den, int(x.a.denominator), int(x.b.denominator))
        A = np.array([int(x.a * den) for x in flat], dtype=object).reshape(arr.shape)
        B = np.array([int(x.b * den) for x in flat], dtype=object).reshape(arr.shape)
        return cls(A, B, den, d)._compact()

    def _compact(self):
        if max(_maxabs(self.A), _maxabs(self.B)) < (1 << 31):
            return QArray(self.A.astype(np.int64), self.B.astype(np.int64), self.den, self.d)
        return QArray(_as_obj(self.A), _as_obj(self.B), self.den, self.d)

    def to_scalars(self):
        den = self.den
        d = self.d

        def conv(a, b):
            return Scalar(mpq(int(a), den), mpq(int(b), den) if d != 1 else 0, d)

        def rec(A, B):
            if A.ndim == 0:
                return conv(A, B)
            if A.ndim == 1:
                return tuple(conv(a, b) for a, b in zip(A.tolist(), B.tolist()))
            return tuple(rec(a, b) for a, b in zip(A, B))

        return rec(self.A, self.B)

    # -- shape ------------------------------------------------------------
    @property
    def shape(self):
        return self.A.shape

    def __len__(self):
        return len(self.A)

    def __getitem__(self, idx):
        return QArray(self.A[idx], self.B[idx], self.den, self.d)

    @staticmethod
    def concat(parts, den=None):
        den = den or reduce(math.lcm, (p.den for p in parts), 1)
        parts = [p.with_den(den) for p in parts]
        obj = any(p.A.dtype == object for p in parts)
        A = np.concatenate([_as_obj(p.A) if obj else p.A for p in parts])
        B = np.concatenate([_as_obj(p.B) if obj else p.B for p in parts])
        return QArray(A, B, den, parts[0].d)

    # -- arithmetic -------------------------------------------------------
    def matmul(self, other):
        d = max(self.d, other.d)
        inner = self.A.shape[-1]
        bound = max(_maxabs(self.A), _maxabs(self.B)) * max(_maxabs(other.A), _maxabs(other.B))
        XA, XB, YA, YB = self.A, self.B, other.A, other.B
        if bound * inner * (d + 1) * 2 >= _LIMIT:
            XA, XB, YA, YB = map(_as_obj, (XA, XB, YA, YB))
        if d == 1:
            A = XA @ YA
            B = np.zeros_like(A)
        else:
            A = XA @ YA + d * (XB @ YB)
            B = XA @ YB + XB @ YA
        return QArray(A, B, self.den * other.den, d)

    def __matmul__(self, other):
        return self.matmul(other)

    def __add__(self, other):
        den = math.lcm(self.den, other.den)
        x, y = self.with_den(den), other.with_den(den)
        return QArray(x.A + y.A, x.B + y.B, den, max(self.d, other.d))

    def __neg__(self):
        return QArray(-self.A, -self.B, self.den, self.d)

    def __sub__(self, other):
        return self + (-other)

    def scale_int(self, k):
        return QArray(self.A * k, self.B * k, self.den, self.d)

    def times(self, other):
        """Elementwise product with broadcasting (used for per-item scalars)."""
        d = max(self.d, other.d)
        XA, XB, YA, YB = self.A, self.B, other.A, other.B
        bound = max(_maxabs(XA), _maxabs(XB)) * max(_maxabs(YA), _maxabs(YB))
        if bound * (d + 1) * 2 >= _LIMIT:
            XA, XB, YA, YB = map(_as_obj, (XA, XB, YA, YB))
        A = XA * YA + d * XB * YB
        B = XA * YB + XB * YA
        return QArray(A, B, self.den * other.den, d)

    def sum(self, axis):
        return QArray(self.A.sum(axis=axis), self.B.sum(axis=axis), self.den, self.d)

    def try_with_den(self, den):
        """Like :meth:`with_den` but per item: returns ``(array, representable_mask)``."""
        L = math.lcm(int(den), self.den)
        x = self.with_den(L)
        k = L // int(den)
        n = len(x.A)
        if k == 1:
            return x, np.ones(n, dtype=bool)
        A = x.A.reshape(n, -1)
        B = x.B.reshape(n, -1)
        ok = np.all((A % k == 0) & (B % k == 0), axis=1)
        return QArray(x.A // k, x.B // k, int(den), self.d), ok

    def with_den(self, den):
        """Same values over the denominator ``den``; raises :class:`NotExact` if impossible."""
        den = int(den)
        if den == self.den:
            return self
        if den % self.den == 0:
            k = den // self.den
            if max(_maxabs(self.A), _maxabs(self.B)) * k >= _LIMIT:
                return QArray(_as_obj(self.A) * k, _as_obj(self.B) * k, den, self.d)
            return QArray(self.A * k, self.B * k, den, self.d)
        A = self.A * den
        B = self.B * den
        if self.A.dtype != object and max(_maxabs(self.A), _maxabs(self.B)) * den >= _LIMIT:
            A = _as_obj(self.A) * den
            B = _as_obj(self.B) * den
        if np.any(A % self.den) or np.any(B % self.den):
            raise NotExact(f"denominator {den} is too small")
        return QArray(A // self.den, B // self.den, den, self.d)

    def reduced(self):
        """Divide numerators and denominator by their common gcd."""
        g = self.den
        for X in (self.A, self.B):
            if X.size:
                g = math.gcd(g, int(np.gcd.reduce(np.abs(_as_obj(X).ravel()).astype(object))))
            if g == 1:
                break
        if g == 1:
            return self
        return QArray(self.A // g, self.B // g, self.den // g, self.d)

    # -- comparison -------------------------------------------------------
    def equal_items(self, other):
        """Per-item exact equality over all axes but the first."""
        den = math.lcm(self.den, other.den)
        x, y = self.with_den(den), other.with_den(den)
        eq = (x.A == y.A) & (x.B == y.B)
        axes = tuple(range(1, eq.ndim))
        return np.all(eq, axis=axes) if axes else eq

    def is_zero_items(self):
        axes = tuple(range(1, self.A.ndim))
        z = (self.A == 0) & (self.B == 0)
        return np.all(z, axis=axes) if axes else z

    def keys(self):
        """Bytes key per item of the leading axis (valid only for a fixed ``den``).

        The key depends on the values alone, never on the batch dtype.
        """
        n = len(self.A)
        K = np.concatenate([self.A.reshape(n, -1), self.B.reshape(n, -1)], axis=1)
        if K.dtype != object:
            return [row.tobytes() for row in np.ascontiguousarray(K)]
        keys = []
        for row in K:
            if _maxabs(row) < _LIMIT:
                keys.append(row.astype(np.int64).tobytes())
            else:
                keys.append(repr(tuple(int(x) for x in row)).encode())
        return keys

    def trace_items(self):
        A = np.trace(self.A, axis1=-2, axis2=-1)
        B = np.trace(self.B, axis1=-2, axis2=-1)
        return QArray(A, B, self.den, self.d)
