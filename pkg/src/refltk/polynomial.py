"""Sparse multivariate polynomials over exact scalars.

A :class:`Polynomial` maps exponent tuples to nonzero :class:`Scalar`
coefficients.  Terms are listed in graded-lex order (highest total degree
first, then lexicographically larger exponent tuples first).

Group elements act on polynomials through the dual action
``(w.f)(x) = f(w^-1 x)``.
"""

import math
from collections import defaultdict

from gmpy2 import mpq

from .field import Scalar, as_scalar
from .linalg import dot, field_degree, inverse, mat_vec, transpose

__all__ = ["Polynomial", "LinearForm", "LinearProduct", "expand_linear_product"]


def _grlex_key(exps):
    return (sum(exps), exps)


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError(f"exponent {exps} has the wrong number of variables")
                c = as_scalar(c)
                if c:
                    clean[exps] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c, nvars):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i, nvars):
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def linear(cls, coefficients):
        n = len(coefficients)
        terms = {}
        for i, c in enumerate(coefficients):
            exps = [0] * n
            exps[i] = 1
            terms[tuple(exps)] = c
        return cls(n, terms)

    @classmethod
    def monomial(cls, exps, c=1):
        return cls(len(exps), {tuple(exps): c})

    # -- inspection -------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Scalar(0))

    def homogeneous_part(self, k):
        return Polynomial._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == k})

    def __len__(self):
        return len(self.terms)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if other.nvars != self.nvars:
            raise ValueError("polynomials in different numbers of variables")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.nvars)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            s = c if s is None else s + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = as_scalar(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {e: c * x for e, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        return Polynomial._raw(self.nvars, {e: c for e, c in terms.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.sorted_terms()))

    # -- evaluation and substitution ----------------------------------------
    def __call__(self, point):
        point = tuple(point)
        acc = Scalar(0)
        for exps, c in self.terms.items():
            t = c
            for x, k in zip(point, exps):
                if k:
                    t = t * x ** k
            acc = acc + t
        return acc

    def substitute_linear(self, M):
        """``p(M x)``: variable ``x_i`` becomes the linear form given by row ``i`` of ``M``."""
        n = self.nvars
        rows = [Polynomial.linear(tuple(M[i])) for i in range(n)]
        powers = [[Polynomial.constant(1, n)] for _ in range(n)]
        out = Polynomial.zero(n)
        for exps, c in self.sorted_terms():
            term = Polynomial.constant(c, n)
            for i, k in enumerate(exps):
                while len(powers[i]) <= k:
                    powers[i].append(powers[i][-1] * rows[i])
                if k:
                    term = term * powers[i][k]
            out = out + term
        return out

    def act(self, g, g_inverse=None):
        """Dual action ``(g.p)(x) = p(g^-1 x)``."""
        M = g.matrix if hasattr(g, "matrix") else g
        Minv = g_inverse.matrix if hasattr(g_inverse, "matrix") else g_inverse
        if Minv is None:
            Minv = inverse(M)
        return self.substitute_linear(Minv)

    # -- text ---------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(exps) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            elif c.b:
                parts.append(f"({c})*{mono}")
            else:
                parts.append(f"{c}*{mono}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"Polynomial({self})"


class LinearForm:
    """A linear form ``x -> sum_i c_i x_i`` given by its coefficient vector."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        self.coefficients = tuple(as_scalar(c) for c in coefficients)

    @classmethod
    def dual_of(cls, space, v):
        """The form ``v^vee = b(-, v)``."""
        return cls(mat_vec(space.gram, space.coerce(v)))

    def __call__(self, x):
        return dot(self.coefficients, tuple(x))

    def act(self, g, g_inverse=None):
        """Dual action: ``(g.f)(x) = f(g^-1 x)``; coefficients ``(g^-1)^T c``."""
        M = g.matrix if hasattr(g, "matrix") else g
        Minv = g_inverse.matrix if hasattr(g_inverse, "matrix") else g_inverse
        if Minv is None:
            Minv = inverse(M)
        return LinearForm(mat_vec(transpose(Minv), self.coefficients))

    def as_polynomial(self):
        return Polynomial.linear(self.coefficients)

    def is_zero(self):
        return not any(self.coefficients)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"LinearForm({', '.join(map(str, self.coefficients))})"


def _coefficients(f):
    return f.coefficients if isinstance(f, LinearForm) else tuple(as_scalar(c) for c in f)


def _lead_normalize(coeffs):
    """Split a nonzero coefficient vector as ``lead * monic``."""
    lead = next(c for c in coeffs if c)
    inv = lead.inverse()
    return lead, tuple(c * inv for c in coeffs)


def _vec_key(coeffs):
    return tuple((c.a, c.b) for c in coeffs)


class LinearProduct:
    """A product ``constant * f_1 * ... * f_k`` of linear forms in canonical form.

    Each factor is scaled so its first nonzero coefficient is 1 and the
    factors are sorted; by unique factorisation two products are equal as
    polynomials exactly when their canonical forms agree.
    """

    __slots__ = ("nvars", "constant", "factors")

    def __init__(self, forms, constant=1):
        forms = [_coefficients(f) for f in forms]
        c = as_scalar(constant)
        monic = []
        for f in forms:
            if not any(f):
                c = c * 0
                monic = []
                break
            lead, m = _lead_normalize(f)
            c = c * lead
            monic.append(m)
        if not c:
            monic = []
        self.nvars = len(forms[0]) if forms else 0
        self.constant = c
        self.factors = tuple(sorted(monic, key=_vec_key))

    @property
    def degree(self):
        return len(self.factors) if self.constant else -1

    def act(self, g, g_inverse=None):
        M = g.matrix if hasattr(g, "matrix") else g
        Minv = g_inverse.matrix if hasattr(g_inverse, "matrix") else g_inverse
        if Minv is None:
            Minv = inverse(M)
        MinvT = transpose(Minv)
        moved = [mat_vec(MinvT, f) for f in self.factors]
        return LinearProduct(moved, self.constant)

    def expand(self):
        return expand_linear_product(self.factors, self.constant, self.nvars)

    def __eq__(self, other):
        return (
            isinstance(other, LinearProduct)
            and self.constant == other.constant
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash((self.constant, self.factors))


def expand_linear_product(forms, constant=1, nvars=None):
    """Expand ``constant * prod(forms)`` into a :class:`Polynomial`.

    Coefficients are carried as integer pairs ``(p, q)`` meaning
    ``(p + q sqrt d) / den`` and monomials as packed integers, which keeps
    products of a few dozen forms fast.
    """
    forms = [_coefficients(f) for f in forms]
    n = nvars if nvars is not None else len(forms[0])
    c0 = as_scalar(constant)
    if not forms:
        return Polynomial.constant(c0, n)
    d = field_degree([c0] + [x for f in forms for x in f])
    base = len(forms) + 1
    shifts = [base ** i for i in range(n)]
    total_den = 1
    int_forms = []
    for f in forms:
        den = 1
        for x in f:
            den = math.lcm(den, int(x.a.denominator), int(x.b.denominator))
        total_den *= den
        int_forms.append([(shifts[i], int(x.a * den), int(x.b * den)) for i, x in enumerate(f) if x])
    poly = {0: (1, 0)}
    for f in int_forms:
        new = defaultdict(lambda: [0, 0])
        for key, (p, q) in poly.items():
            for shift, a, b in f:
                slot = new[key + shift]
                slot[0] += p * a + d * q * b
                slot[1] += p * b + q * a
        poly = {k: (v[0], v[1]) for k, v in new.items() if v[0] or v[1]}
    terms = {}
    for key, (p, q) in poly.items():
        exps = []
        for _ in range(n):
            key, r = divmod(key, base)
            exps.append(r)
        coeff = Scalar(mpq(p, total_den), mpq(q, total_den) if d != 1 else 0, d) * c0
        if coeff:
            terms[tuple(exps)] = coeff
    return Polynomial._raw(n, terms)
