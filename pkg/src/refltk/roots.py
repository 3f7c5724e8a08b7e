"""Root systems of finite orthogonal reflection groups and the product of roots.

For every conjugacy class of reflections the class representative is the
least normalized root of the class (lexicographic, exact real order), and
the class part of the root system is its full W-orbit.  Roots are therefore
genuine orbit vectors: the set is W-stable and contains exactly ``+-alpha``
on each root line.
"""

import numpy as np

from ._qarray import QArray
from .checks import VerificationReport, fmt_vector, make_check
from .groups import conjugacy_classes, normalize_root, reflection_matrix
from .linalg import identity
from .polynomial import LinearForm, LinearProduct, expand_linear_product

__all__ = [
    "RootSystem", "VectorSet", "build_root_system", "verify_axioms", "g_delta",
    "g_delta_factored", "vanishing_locus_equals_moved_locus", "is_positive",
]

LOC_R1 = "root axiom R1: a multiple lambda*alpha is a root iff lambda = +-1"
LOC_R2 = "root axiom R2: s_alpha(beta) is a root for all roots alpha, beta"
LOC_CONJ = "conjugation identity w s_alpha w^-1 = s_(w alpha)"
LOC_REFL = "the reflections of the roots are exactly the reflections of W"
LOC_STABLE = "each class of roots is a W-orbit, hence W-stable"


def is_positive(v):
    lead = next((x for x in v if x), None)
    return lead is not None and lead.sign() > 0


def _vec_key(v):
    return tuple(v)


class VectorSet:
    """Exact membership tests for a fixed finite set of vectors, batched."""

    def __init__(self, vectors, d):
        self.vectors = tuple(tuple(v) for v in vectors)
        if self.vectors:
            self.enc = QArray.from_scalars([list(v) for v in self.vectors], d)
            self.index = {k: i for i, k in enumerate(self.enc.keys())}
        else:
            self.enc = None
            self.index = {}

    def __len__(self):
        return len(self.vectors)

    def positions(self, q):
        """Position of every item of the ``(m, n)`` batch ``q`` in the set, or -1."""
        if self.enc is None:
            return np.full(len(q), -1)
        x, ok = q.try_with_den(self.enc.den)
        keys = x.keys()
        return np.array([self.index.get(k, -1) if good else -1 for k, good in zip(keys, ok)])

    def __contains__(self, v):
        if self.enc is None:
            return False
        q = QArray.from_scalars([list(v)], self.enc.d)
        return self.positions(q)[0] >= 0


class RootSystem:
    """Roots of a reflection group, grouped by conjugacy class of reflections."""

    def __init__(self, space, classes, representatives=None):
        self.space = space
        self.classes = tuple(tuple(sorted(set(map(tuple, c)), key=_vec_key)) for c in classes)
        if representatives is None:
            representatives = [min((v for v in c if is_positive(v)), key=_vec_key, default=c[0])
                               for c in self.classes]
        self.representatives = tuple(tuple(r) for r in representatives)

    @property
    def roots(self):
        out = []
        for c in self.classes:
            out.extend(c)
        return tuple(out)

    def __len__(self):
        return sum(len(c) for c in self.classes)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, v):
        v = tuple(v)
        return any(v in c for c in self.classes)

    @property
    def pairs(self):
        """Per class, the ``(alpha, -alpha)`` pairs with ``alpha`` positive."""
        return tuple(tuple((v, tuple(-x for x in v)) for v in c if is_positive(v)) for c in self.classes)

    @property
    def positive_roots(self):
        return tuple(v for v in self.roots if is_positive(v))

    def class_of(self, v):
        v = tuple(v)
        for i, c in enumerate(self.classes):
            if v in c:
                return i
        raise KeyError(v)

    def dual_forms(self):
        return tuple(LinearForm.dual_of(self.space, v) for v in self.roots)

    def with_root(self, v, class_index=0):
        """A copy with ``v`` added to one class (used for negative controls)."""
        classes = [list(c) for c in self.classes]
        classes[class_index].append(self.space.coerce(v))
        return RootSystem(self.space, classes, self.representatives)

    def __repr__(self):
        return f"<RootSystem roots={len(self)} classes={[len(c) for c in self.classes]}>"


def build_root_system(W):
    """Root system of ``W``: one W-orbit of roots per conjugacy class of reflections."""
    blocks = conjugacy_classes(W, list(W.reflection_indices))
    classes = []
    reps = []
    for block in blocks:
        normed = [W.reflection_of_index[i].root for i in block]
        beta = min(normed, key=_vec_key)
        orbit = W.act([beta])
        orbit = orbit[:, 0]
        seen = {}
        for pos, key in enumerate(orbit.keys()):
            seen.setdefault(key, pos)
        vectors = orbit[np.array(sorted(seen.values()))].to_scalars()
        classes.append(vectors)
        reps.append(beta)
    return RootSystem(W.space, classes, reps)


def _reflection_batch(space, roots):
    return QArray.from_scalars([reflection_matrix(space, v) for v in roots], space.d)


def verify_axioms(delta, W):
    """Check R1, R2, the conjugation identity, the reflection set and W-stability."""
    space = W.space
    roots = delta.roots
    m = len(roots)
    n = space.dim
    report = VerificationReport("root-system axioms")

    # R1: each root line carries exactly +-alpha
    failures = []
    lines = {}
    for v in roots:
        lines.setdefault(normalize_root(v), []).append(v)
    for members in lines.values():
        alpha = next((v for v in members if is_positive(v)), members[0])
        j = next(i for i, x in enumerate(alpha) if x)
        lams = sorted({members[k][j] / alpha[j] for k in range(len(members))})
        for lam in lams:
            if lam not in (1, -1):
                failures.append({"alpha": fmt_vector(alpha), "lambda": str(lam)})
        if -1 not in lams:
            failures.append({"alpha": fmt_vector(alpha), "missing": "-alpha"})
    report.checks.append(make_check("R1", LOC_R1, failures, lines=len(lines)))

    D = QArray.from_scalars([list(v) for v in roots], space.d)
    dset = VectorSet(roots, space.d)
    S = _reflection_batch(space, roots)

    # R2: s_alpha(beta) in Delta for all pairs
    DT = QArray(D.A.T.copy(), D.B.T.copy(), D.den, D.d)
    images = S.matmul(DT)  # (m, n, m): [a, :, b] = s_a(beta_b)
    images = QArray(np.swapaxes(images.A, 1, 2).reshape(m * m, n),
                    np.swapaxes(images.B, 1, 2).reshape(m * m, n), images.den, images.d)
    bad = np.nonzero(dset.positions(images) < 0)[0]
    failures = [{"alpha": fmt_vector(roots[k // m]), "beta": fmt_vector(roots[k % m])} for k in bad[:5]]
    report.checks.append(make_check("R2", LOC_R2, failures, count=len(bad), pairs=m * m))

    # reflections of the roots == reflections of W
    found = W.lookup_or_none(S)
    failures = [{"alpha": fmt_vector(roots[k]), "reason": "s_alpha not in W"}
                for k, i in enumerate(found) if i is None]
    hit = {i for i in found if i is not None}
    missing = [i for i in W.reflection_indices if i not in hit]
    failures += [{"reflection_index": i, "reason": "no root for this reflection"} for i in missing]
    extra = sorted(hit - set(W.reflection_indices))
    failures += [{"element_index": i, "reason": "s_alpha is not a reflection of W"} for i in extra]
    report.checks.append(make_check("reflection-set", LOC_REFL, failures,
                                    roots=m, reflections=len(W.reflection_indices)))

    # W-stability of each class
    failures = []
    nbad = 0
    for ci, cls in enumerate(delta.classes):
        cset = VectorSet(cls, space.d)
        moved = W.act(cls)
        flat = QArray(moved.A.reshape(-1, n), moved.B.reshape(-1, n), moved.den, moved.d)
        bad = np.nonzero(cset.positions(flat) < 0)[0]
        nbad += len(bad)
        for k in bad[:5]:
            failures.append({"class": ci, "w_index": int(k // len(cls)),
                             "root": fmt_vector(cls[k % len(cls)])})
    report.checks.append(make_check("class-stability", LOC_STABLE, failures, count=nbad))

    # w s_alpha w^-1 == s_(w alpha), as q * (I - L) == 2 v (G v)^T with q = b(v, v)
    E = W._enc
    Einv = E[W.inverse_indices]
    G = QArray.from_scalars([list(r) for r in space.gram], space.d)
    ident = QArray.from_scalars([list(r) for r in identity(n, space.d)], space.d)
    failures = []
    nbad = 0
    for a in range(m):
        L = E.matmul(S[a]).matmul(Einv)
        v = W.act([roots[a]])[:, 0]  # (N, n)
        Gv = v.matmul(G)
        q = v.times(Gv).sum(axis=1)
        lhs = QArray(q.A[:, None, None], q.B[:, None, None], q.den, q.d).times(ident - L)
        vcol = QArray(v.A[:, :, None], v.B[:, :, None], v.den, v.d)
        grow = QArray(Gv.A[:, None, :], Gv.B[:, None, :], Gv.den, Gv.d)
        rhs = vcol.times(grow).scale_int(2)
        bad = np.nonzero(~lhs.equal_items(rhs))[0]
        nbad += len(bad)
        for w in bad[:2]:
            failures.append({"w_index": int(w), "alpha": fmt_vector(roots[a])})
    report.checks.append(make_check("conjugation-identity", LOC_CONJ, failures, count=nbad,
                                    roots=m, elements=W.order, examined=m * W.order))
    return report


def g_delta_factored(delta):
    """The product of the forms ``alpha^vee`` over all roots, kept factored."""
    return LinearProduct(delta.dual_forms())


def g_delta(delta):
    """The product of the forms ``alpha^vee`` over all roots (both signs), expanded."""
    forms = delta.dual_forms()
    return expand_linear_product(forms, 1, delta.space.dim)


def vanishing_locus_equals_moved_locus(W, delta):
    """True iff the zero set of the root product is the union of fixed spaces of ``w != 1``."""
    from .stabilizers import verify_fixed_locus_equality

    return verify_fixed_locus_equality(W, delta).passed
