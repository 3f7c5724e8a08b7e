"""Reflections, closure of generator sets to finite groups, conjugacy data.

Group elements are exact matrices acting on column vectors.  A closed
:class:`ReflectionGroup` keeps all elements in one batched integer encoding
(:class:`~refltk._qarray.QArray`) so that products, conjugations and orbit
computations over the whole group are numpy matmuls; the public objects
(:class:`GroupElement`, :class:`Reflection`) carry plain scalar matrices.
"""

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from gmpy2 import mpq

from ._qarray import NotExact, QArray
from .errors import DimensionError, InvalidForm, IsotropicVector, NotASubset, OrderCapExceeded
from .field import Scalar
from .linalg import (
    BilinearSpace, det, evaluate_form, identity, inverse, kernel, mat_add, mat_mul,
    mat_vec, transpose,
)

__all__ = [
    "DEFAULT_CAP", "GroupElement", "Reflection", "ReflectionGroup", "Subgroup",
    "reflection", "reflection_matrix", "close_group", "conjugacy_classes", "is_orthogonal",
    "normalize_root", "line_key",
]

DEFAULT_CAP = 1_000_000


class GroupElement:
    """An exact invertible matrix; equality is entrywise."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        self.matrix = tuple(tuple(row) for row in matrix)

    @property
    def dim(self):
        return len(self.matrix)

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return GroupElement(mat_mul(self.matrix, other.matrix))

    def __call__(self, v):
        return mat_vec(self.matrix, tuple(v))

    def det(self):
        return det(self.matrix)

    def trace(self):
        acc = self.matrix[0][0]
        for i in range(1, self.dim):
            acc = acc + self.matrix[i][i]
        return acc

    def is_identity(self):
        n = self.dim
        return all(self.matrix[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        rows = "; ".join(" ".join(str(x) for x in r) for r in self.matrix)
        return f"GroupElement([{rows}])"


@dataclass(frozen=True, eq=False)
class Reflection:
    """A reflection together with a root (a vector it negates)."""

    root: tuple
    element: GroupElement

    @property
    def matrix(self):
        return self.element.matrix

    def __eq__(self, other):
        return isinstance(other, Reflection) and self.element == other.element

    def __hash__(self):
        return hash(self.element)


def normalize_root(v):
    """Canonical representative of the line through ``v``.

    Rational vectors become primitive integer vectors whose first nonzero
    coordinate is positive.  In general the vector is divided by its first
    nonzero coordinate and then scaled by the positive integer that makes all
    rational parts coprime integers.
    """
    v = tuple(v)
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("the zero vector spans no line")
    if not lead.b:
        if lead.a < 0:
            v = tuple(-x for x in v)
    else:
        inv = lead.inverse()
        v = tuple(x * inv for x in v)
    den = 1
    for x in v:
        den = math.lcm(den, int(x.a.denominator), int(x.b.denominator))
    nums = [int(x.a * den) for x in v] + [int(x.b * den) for x in v]
    g = 0
    for k in nums:
        g = math.gcd(g, k)
    factor = mpq(den, g)
    return tuple(x * factor for x in v)


def line_key(v):
    return normalize_root(v)


def reflection_matrix(space, v):
    v = space.coerce(v)
    q = evaluate_form(space, v, v)
    if not q:
        raise IsotropicVector(f"b(v, v) = 0 for v = ({', '.join(map(str, v))})")
    gv = mat_vec(space.gram, v)
    c = Scalar(2, 0, space.d) / q
    n = space.dim
    one = Scalar(1, 0, space.d)
    zero = Scalar(0, 0, space.d)
    return tuple(
        tuple((one if i == j else zero) - c * v[i] * gv[j] for j in range(n)) for i in range(n)
    )


def reflection(space, v):
    """The reflection ``w -> w - 2 b(v, w) / b(v, v) * v`` for an anisotropic ``v``."""
    v = space.coerce(v)
    return Reflection(root=v, element=GroupElement(reflection_matrix(space, v)))


def is_orthogonal(space, g):
    M = g.matrix if isinstance(g, (GroupElement, Reflection)) else tuple(tuple(r) for r in g)
    if len(M) != space.dim or any(len(r) != space.dim for r in M):
        raise DimensionError(f"matrix is not {space.dim}x{space.dim}")
    return mat_mul(mat_mul(transpose(M), space.gram), M) == space.gram


class ReflectionGroup:
    """A finite group of orthogonal transformations, fully enumerated.

    Build one with :func:`close_group` or :func:`refltk.named_weyl`.  Element
    ``0`` is the identity; the order of the rest is the breadth-first order
    of the closure and is deterministic for a given generator list.
    """

    def __init__(self, space, generators, enc, index, cap):
        self.space = space
        self.generators = tuple(generators)
        self.cap = cap
        self._enc = enc
        self._index = index
        self._inv = self._compute_inverses()
        self.reflection_indices = self._find_reflections()

    # -- basic data ------------------------------------------------------
    @property
    def order(self):
        return len(self._enc)

    def __len__(self):
        return self.order

    @property
    def dim(self):
        return self.space.dim

    @property
    def d(self):
        return self.space.d

    @cached_property
    def elements(self):
        return tuple(GroupElement(m) for m in self._enc.to_scalars())

    def element(self, i):
        return self.elements[i]

    @cached_property
    def reflections(self):
        out = []
        for i in self.reflection_indices:
            g = self.elements[i]
            minus = mat_add(g.matrix, identity(self.dim, self.d))
            line = kernel(minus)
            out.append(Reflection(root=normalize_root(line.basis[0]), element=g))
        return tuple(out)

    @cached_property
    def reflection_of_index(self):
        return dict(zip(self.reflection_indices, self.reflections))

    @cached_property
    def keys(self):
        return self._enc.keys()

    # -- index arithmetic --------------------------------------------------
    def encode(self, matrices):
        """Encode scalar matrices with this group's denominator (may raise NotExact)."""
        return QArray.from_scalars(matrices, self.d).with_den(self._enc.den)

    def index_of(self, g):
        M = g.matrix if isinstance(g, (GroupElement, Reflection)) else g
        if len(M) != self.dim:
            raise DimensionError("element dimension differs from the group's")
        try:
            key = self.encode([M]).keys()[0]
        except NotExact:
            raise KeyError("not an element of the group") from None
        return self._index[key]

    def __contains__(self, g):
        try:
            self.index_of(g)
        except KeyError:
            return False
        return True

    def lookup(self, q):
        """Indices of the batch ``q`` (which must have this group's denominator)."""
        idx = self._index
        return np.array([idx[k] for k in q.with_den(self._enc.den).keys()], dtype=np.int64)

    def lookup_or_none(self, q):
        try:
            q = q.with_den(self._enc.den)
        except NotExact:
            return [None] * len(q)
        return [self._index.get(k) for k in q.keys()]

    def mul(self, left, right):
        """Indices of ``left[k] @ right[k]`` (index arrays broadcast)."""
        left = np.atleast_1d(np.asarray(left, dtype=np.int64))
        right = np.atleast_1d(np.asarray(right, dtype=np.int64))
        left, right = np.broadcast_arrays(left, right)
        prod = self._enc[left].matmul(self._enc[right])
        return self.lookup(prod)

    def inverse_index(self, i):
        return int(self._inv[i])

    @property
    def inverse_indices(self):
        return self._inv

    def conjugate(self, w, x):
        """Indices of ``w x w^-1`` for index arrays ``w`` and ``x`` (broadcast)."""
        w = np.atleast_1d(np.asarray(w, dtype=np.int64))
        x = np.atleast_1d(np.asarray(x, dtype=np.int64))
        w, x = np.broadcast_arrays(w, x)
        E = self._enc
        prod = E[w].matmul(E[x]).matmul(E[self._inv[w]])
        return self.lookup(prod)

    def act(self, vectors, which=None):
        """Exact images ``w v``: a QArray of shape ``(len(which), len(vectors), dim)``."""
        V = QArray.from_scalars([list(v) for v in vectors], self.d)
        E = self._enc if which is None else self._enc[np.asarray(which, dtype=np.int64)]
        # (N, n, n) @ (n, m) -> (N, n, m) -> swap to (N, m, n)
        VT = QArray(V.A.T.copy(), V.B.T.copy(), V.den, V.d)
        P = E.matmul(VT)
        return QArray(np.swapaxes(P.A, 1, 2), np.swapaxes(P.B, 1, 2), P.den, P.d)

    # -- construction helpers ---------------------------------------------
    def _compute_inverses(self):
        gram = self.space.gram
        G = QArray.from_scalars([gram], self.d)
        Ginv = QArray.from_scalars([inverse(gram)], self.d)
        E = self._enc
        ET = QArray(np.swapaxes(E.A, 1, 2), np.swapaxes(E.B, 1, 2), E.den, E.d)
        inv = Ginv.matmul(ET).matmul(G)
        return self.lookup(inv)

    def _find_reflections(self):
        n = self.dim
        tr = self._enc.trace_items()
        D = self._enc.den
        involution = self._inv == np.arange(self.order)
        trace_ok = (tr.B == 0) & (tr.A == (n - 2) * D)
        idx = np.nonzero(involution & trace_ok)[0]
        return tuple(int(i) for i in idx)

    def __repr__(self):
        return f"<ReflectionGroup order={self.order} dim={self.dim} reflections={len(self.reflection_indices)}>"


def _bfs_closure(gens, den, cap):
    n = gens.shape[-1]
    ident = QArray(np.eye(n, dtype=np.int64)[None] * den, np.zeros((1, n, n), dtype=np.int64), den, gens.d)
    index = {ident.keys()[0]: 0}
    batches = [ident]
    frontier = ident
    while len(frontier):
        prod = gens[:, None].matmul(frontier[None])
        prod = QArray(
            prod.A.reshape(-1, n, n), prod.B.reshape(-1, n, n), prod.den, prod.d
        ).with_den(den)
        keys = prod.keys()
        fresh = []
        for pos, key in enumerate(keys):
            if key not in index:
                index[key] = len(index)
                fresh.append(pos)
                if len(index) > cap:
                    raise OrderCapExceeded(f"closure exceeds the order cap of {cap} elements")
        frontier = prod[np.array(fresh, dtype=np.int64)]
        if len(frontier):
            batches.append(frontier)
    return QArray.concat(batches, den), index


def close_group(space, gens, cap=DEFAULT_CAP):
    """Enumerate the group generated by ``gens`` (reflections or orthogonal matrices).

    Raises :class:`OrderCapExceeded` once more than ``cap`` elements appear.
    """
    if not gens:
        raise ValueError("at least one generator is required")
    if not isinstance(space, BilinearSpace):
        raise TypeError("space must be a BilinearSpace")
    gens = tuple(gens)
    mats = []
    for g in gens:
        M = g.matrix if isinstance(g, (GroupElement, Reflection)) else tuple(tuple(r) for r in g)
        if not is_orthogonal(space, M):
            raise InvalidForm("generator does not preserve the bilinear form")
        mats.append(M)
    G = QArray.from_scalars(mats, space.d)
    den = G.den
    while True:
        try:
            enc, index = _bfs_closure(G, den, cap)
            break
        except NotExact:
            den *= G.den if G.den > 1 else 2
    return ReflectionGroup(space, gens, enc, index, cap)


def _as_indices(W, S):
    out = []
    for s in S:
        if isinstance(s, (int, np.integer)):
            if not 0 <= s < W.order:
                raise NotASubset(f"index {s} outside the group")
            out.append(int(s))
            continue
        try:
            out.append(W.index_of(s))
        except (KeyError, DimensionError):
            raise NotASubset(f"{s!r} is not an element of the group") from None
    return out


def conjugacy_classes(W, S):
    """Partition ``S`` (elements or indices of ``W``) into W-conjugacy blocks.

    Blocks keep the order of first appearance in ``S``; the return value uses
    the same kind of items as the input.
    """
    S = list(S)
    idx = _as_indices(W, S)
    pos = {}
    for p, i in enumerate(idx):
        pos.setdefault(i, p)
    all_w = np.arange(W.order)
    block_of = {}
    blocks = []
    for i in idx:
        if i in block_of:
            continue
        orbit = set(W.conjugate(all_w, np.full(W.order, i)).tolist())
        members = sorted((j for j in pos if j in orbit), key=pos.get)
        for j in members:
            block_of[j] = len(blocks)
        blocks.append(members)
    return [[S[pos[j]] for j in block] for block in blocks]


class Subgroup:
    """A subgroup of a :class:`ReflectionGroup`, stored as a set of element indices."""

    def __init__(self, parent, indices):
        self.parent = parent
        self.indices = frozenset(int(i) for i in indices)

    @classmethod
    def generated_by(cls, parent, gens):
        """Closure of the given element indices inside ``parent`` (identity always included)."""
        members = {0}
        frontier = [0]
        gens = sorted(set(int(g) for g in gens))
        if not gens:
            return cls(parent, members)
        while frontier:
            left = np.repeat(np.array(gens), len(frontier))
            right = np.tile(np.array(frontier), len(gens))
            prods = parent.mul(left, right).tolist()
            frontier = []
            for p in prods:
                if p not in members:
                    members.add(p)
                    frontier.append(p)
        return cls(parent, members)

    @property
    def order(self):
        return len(self.indices)

    def __len__(self):
        return len(self.indices)

    @property
    def sorted_indices(self):
        return tuple(sorted(self.indices))

    @property
    def elements(self):
        return tuple(self.parent.elements[i] for i in self.sorted_indices)

    def __contains__(self, g):
        if isinstance(g, (int, np.integer)):
            return int(g) in self.indices
        try:
            return self.parent.index_of(g) in self.indices
        except KeyError:
            return False

    @property
    def reflection_indices(self):
        return tuple(i for i in self.parent.reflection_indices if i in self.indices)

    @cached_property
    def fingerprint(self):
        keys = self.parent.keys
        return tuple(sorted(keys[i] for i in self.indices))

    def is_closed(self):
        if 0 not in self.indices:
            return False
        idx = np.array(self.sorted_indices)
        inv_ok = all(int(self.parent.inverse_indices[i]) in self.indices for i in idx)
        left = np.repeat(idx, len(idx))
        right = np.tile(idx, len(idx))
        return inv_ok and set(self.parent.mul(left, right).tolist()) <= self.indices

    def conjugate_by(self, w):
        idx = np.array(self.sorted_indices)
        return Subgroup(self.parent, self.parent.conjugate(np.full(len(idx), int(w)), idx).tolist())

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent is self.parent and other.indices == self.indices

    def __hash__(self):
        return hash(self.indices)

    def __repr__(self):
        return f"<Subgroup order={self.order} of {self.parent!r}>"
