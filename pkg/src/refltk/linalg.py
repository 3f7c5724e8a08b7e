"""Exact dense linear algebra over :class:`~refltk.field.Scalar`.

Vectors are tuples of scalars and matrices are tuples of row tuples.  Nothing
here is clever; the matrices involved are at most a handful of rows, and the
heavy group-wide loops go through :mod:`refltk._qarray` instead.
"""

from dataclasses import dataclass

from .errors import DimensionError, InvalidForm
from .field import Scalar, as_scalar

__all__ = [
    "vector", "matrix", "identity", "zero_matrix", "transpose", "mat_mul", "mat_vec",
    "mat_add", "mat_sub", "mat_scale", "dot", "det", "rref", "rank", "inverse",
    "field_degree", "BilinearSpace", "Subspace", "is_regular", "evaluate_form",
    "kernel", "subspace_leq", "dual_vector", "dual_gram", "evaluate_dual_form",
]


def field_degree(entries):
    """The ``d`` of the quadratic field the given scalars live in (1 for Q)."""
    d = 1
    for x in entries:
        if x.b and x.d != 1:
            d = x.d
            break
        if x.d != 1:
            d = x.d
    return d


def vector(entries, d=1):
    return tuple(as_scalar(x, d) for x in entries)


def matrix(rows, d=1):
    rows = tuple(vector(r, d) for r in rows)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise DimensionError("ragged matrix")
    return rows


def identity(n, d=1):
    one = Scalar(1, 0, d)
    zero = Scalar(0, 0, d)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zero_matrix(rows, cols, d=1):
    zero = Scalar(0, 0, d)
    return tuple(tuple(zero for _ in range(cols)) for _ in range(rows))


def transpose(M):
    return tuple(zip(*M))


def dot(u, v):
    acc = u[0] * v[0]
    for x, y in zip(u[1:], v[1:]):
        acc = acc + x * y
    return acc


def mat_mul(A, B):
    if len(A[0]) != len(B):
        raise DimensionError(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x{len(B[0])}")
    cols = transpose(B)
    return tuple(tuple(dot(row, col) for col in cols) for row in A)


def mat_vec(A, v):
    if len(A[0]) != len(v):
        raise DimensionError(f"matrix has {len(A[0])} columns, vector has length {len(v)}")
    return tuple(dot(row, v) for row in A)


def mat_add(A, B):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A, B):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(c, A):
    return tuple(tuple(c * x for x in row) for row in A)


def rref(M):
    """Reduced row-echelon form; returns ``(rows, pivot_columns)`` with zero rows dropped."""
    rows = [list(r) for r in M]
    if not rows:
        return (), ()
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows[:r]), tuple(pivots)


def rank(M):
    return len(rref(M)[1])


def det(M):
    n = len(M)
    if any(len(r) != n for r in M):
        raise DimensionError("determinant of a non-square matrix")
    rows = [list(r) for r in M]
    result = Scalar(1, 0, field_degree(x for r in M for x in r))
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return result * 0
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            result = -result
        piv = rows[c][c]
        result = result * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def inverse(M):
    n = len(M)
    d = field_degree(x for r in M for x in r)
    one, zero = Scalar(1, 0, d), Scalar(0, 0, d)
    aug = [list(M[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
    red, piv = rref(aug)
    if piv[:n] != tuple(range(n)) or len(piv) < n:
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``F^n`` stored by its canonical reduced row-echelon basis."""

    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, vectors, ambient_dim):
        vectors = [tuple(as_scalar(x) for x in v) for v in vectors]
        if any(len(v) != ambient_dim for v in vectors):
            raise DimensionError("vector length differs from ambient dimension")
        if not vectors:
            return cls(ambient_dim, ())
        return cls(ambient_dim, rref(vectors)[0])

    @property
    def dim(self):
        return len(self.basis)

    def canonical(self):
        return Subspace.span(self.basis, self.ambient_dim)

    def contains(self, v):
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length differs from ambient dimension")
        v = tuple(as_scalar(x) for x in v)
        if not any(v):
            return True
        return rank(self.basis + (v,)) == self.dim

    def __str__(self):
        vecs = ", ".join("(" + ", ".join(map(str, b)) + ")" for b in self.basis)
        return f"span{{{vecs}}}"


def kernel(M):
    """Canonical basis of ``{x : M x = 0}``."""
    ncols = len(M[0])
    red, pivots = rref(M)
    d = field_degree(x for r in M for x in r)
    one, zero = Scalar(1, 0, d), Scalar(0, 0, d)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [zero] * ncols
        x[f] = one
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return Subspace.span(basis, ncols)


def subspace_leq(U, H):
    """True iff ``U`` is contained in ``H``."""
    if U.ambient_dim != H.ambient_dim:
        raise DimensionError(f"ambient dimensions {U.ambient_dim} and {H.ambient_dim} differ")
    if U.dim > H.dim:
        return False
    if not U.basis:
        return True
    return rank(H.basis + U.basis) == H.dim


def _check_symmetric(gram):
    n = len(gram)
    if n == 0 or any(len(r) != n for r in gram):
        raise InvalidForm("Gram matrix must be square and non-empty")
    for i in range(n):
        for j in range(i + 1, n):
            if gram[i][j] != gram[j][i]:
                raise InvalidForm(f"Gram matrix is not symmetric at ({i}, {j})")


def is_regular(gram):
    gram = tuple(tuple(as_scalar(x) for x in r) for r in gram)
    _check_symmetric(gram)
    return bool(det(gram))


@dataclass(frozen=True)
class BilinearSpace:
    """``F^n`` with a regular symmetric bilinear form given by its Gram matrix."""

    gram: tuple

    def __post_init__(self):
        gram = tuple(tuple(as_scalar(x) for x in r) for r in self.gram)
        d = field_degree(x for r in gram for x in r)
        gram = tuple(tuple(Scalar(x.a, x.b, d) for x in r) for r in gram)
        object.__setattr__(self, "gram", gram)
        _check_symmetric(gram)
        if not det(gram):
            raise InvalidForm("Gram matrix is singular")

    @classmethod
    def euclidean(cls, n, d=1):
        return cls(identity(n, d))

    @property
    def dim(self):
        return len(self.gram)

    @property
    def d(self):
        return self.gram[0][0].d

    def coerce(self, v):
        v = tuple(as_scalar(x, self.d) for x in v)
        if len(v) != self.dim:
            raise DimensionError(f"vector of length {len(v)} in a {self.dim}-dimensional space")
        return v

    def form(self, v, w):
        return evaluate_form(self, v, w)


def evaluate_form(space, v, w):
    """``b(v, w) = v^T G w``."""
    v = space.coerce(v)
    w = space.coerce(w)
    return dot(v, mat_vec(space.gram, w))


def dual_vector(space, v):
    """Coefficients of the linear form ``v^vee = b(-, v)``, i.e. ``G v``."""
    return mat_vec(space.gram, space.coerce(v))


def dual_gram(space):
    """Gram matrix of the induced form on linear forms (the inverse of ``G``)."""
    return inverse(space.gram)


def evaluate_dual_form(space, f, g):
    return dot(tuple(f), mat_vec(dual_gram(space), tuple(g)))
