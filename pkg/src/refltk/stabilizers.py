"""Isotropy and inertia subgroups, and the checks built on them.

``isotropy(W, v)`` is the stabilizer of a vector; over a field of
characteristic zero it is again generated by reflections, which
:func:`is_generated_by_contained_reflections` tests directly.

:func:`verify_fixed_locus_equality` compares two subspace arrangements: the
root hyperplanes ``Ker(alpha^vee)`` and the fixed spaces ``Ker(w - 1)`` of
the non-identity elements.  It relies on scalars being in characteristic 0:
a subspace lying in a finite union of hyperplanes over an infinite field
lies in one of them, so containment is tested hyperplane by hyperplane.
"""

import numpy as np

from ._qarray import QArray
from .checks import VerificationReport, fmt_vector, make_check
from .errors import IsotropicVector, NotARoot
from .groups import Subgroup, reflection_matrix
from .linalg import identity, kernel, mat_sub, mat_vec
from .polynomial import LinearForm

__all__ = [
    "Subgroup", "isotropy", "is_generated_by_contained_reflections", "inertia",
    "line_stabilizer", "verify_inertia_decomposition", "verify_fixed_locus_equality",
    "fixed_space", "hyperplane",
]

LOC_INERTIA_SET = "inertia group W_(+-alpha) = <s_alpha>.W_alpha"
LOC_INERTIA_COMM = "s_alpha commutes with W_alpha"
LOC_INERTIA_DIRECT = "s_alpha not in W_alpha, so W_(+-alpha) = Z/2 x W_alpha"
LOC_INERTIA_ORDER = "|W_(+-alpha)| = 2 |W_alpha|"
LOC_LOCUS_SUP = "every fixed space Ker(w - 1), w != 1, lies in some root hyperplane"
LOC_LOCUS_SUB = "every root hyperplane Ker(alpha^vee) equals Fix(s_alpha) for a reflection in W"


def _vector_images(W, v):
    v = W.space.coerce(v)
    return v, W.act([v])[:, 0]


def _tile(target, shape):
    return QArray(np.broadcast_to(target.A, shape), np.broadcast_to(target.B, shape), target.den, target.d)


def isotropy(W, v):
    """The subgroup ``{w : w v = v}``; raises DimensionError for a vector of the wrong length."""
    v, images = _vector_images(W, v)
    same = images.equal_items(_tile(QArray.from_scalars([list(v)], W.d), images.A.shape))
    return Subgroup(W, np.nonzero(same)[0].tolist())


def is_generated_by_contained_reflections(H):
    """True iff the reflections of the parent group lying in ``H`` generate ``H``."""
    return Subgroup.generated_by(H.parent, H.reflection_indices).indices == H.indices


def _reflection_index(W, alpha):
    """Index of ``s_alpha`` in ``W``, or None (also for isotropic ``alpha``)."""
    try:
        S = QArray.from_scalars([reflection_matrix(W.space, alpha)], W.d)
    except IsotropicVector:
        return None
    return W.lookup_or_none(S)[0]


def _require_root(W, alpha):
    alpha = W.space.coerce(alpha)
    if not any(alpha):
        raise NotARoot("the zero vector is not a root")
    idx = _reflection_index(W, alpha)
    if idx is None or idx == 0:
        raise NotARoot(f"s_alpha is not a reflection of the group for alpha = {fmt_vector(alpha)}")
    return alpha, idx


def line_stabilizer(W, alpha):
    """Elements sending ``alpha`` to ``+alpha`` and to ``-alpha``, as index arrays."""
    alpha, images = _vector_images(W, alpha)
    plus = QArray.from_scalars([list(alpha)], W.d)
    shape = images.A.shape
    fix = images.equal_items(_tile(plus, shape))
    flip = images.equal_items(_tile(-plus, shape))
    return np.nonzero(fix)[0], np.nonzero(flip)[0]


def inertia(W, alpha):
    """The inertia group ``W_(+-alpha) = {w : w alpha = +-alpha}`` of a root."""
    alpha, _ = _require_root(W, alpha)
    fix, flip = line_stabilizer(W, alpha)
    return Subgroup(W, np.concatenate([fix, flip]).tolist())


def verify_inertia_decomposition(W, alpha):
    """Check ``W_(+-alpha) = <s_alpha> x W_alpha`` elementwise."""
    alpha, s = _require_root(W, alpha)
    fix, flip = line_stabilizer(W, alpha)
    W_pm = set(fix.tolist()) | set(flip.tolist())
    W_a = set(fix.tolist())
    report = VerificationReport(f"inertia decomposition at alpha = {fmt_vector(alpha)}")

    # <s_alpha> . W_alpha as a set of products
    prods = set(W_a) | set(W.mul(np.full(len(fix), s), fix).tolist())
    failures = [{"w_index": i, "side": "only in W_(+-alpha)"} for i in sorted(W_pm - prods)]
    failures += [{"w_index": i, "side": "only in <s_alpha>.W_alpha"} for i in sorted(prods - W_pm)]
    report.checks.append(make_check("inertia-product-set", LOC_INERTIA_SET, failures,
                                    order_pm=len(W_pm), order_fix=len(W_a)))

    left = W.mul(np.full(len(fix), s), fix)
    right = W.mul(fix, np.full(len(fix), s))
    failures = [{"w_index": int(fix[k])} for k in np.nonzero(left != right)[0]]
    report.checks.append(make_check("inertia-commutation", LOC_INERTIA_COMM, failures,
                                    examined=len(fix)))

    failures = [{"s_alpha_index": s}] if s in W_a else []
    report.checks.append(make_check("inertia-direct-product", LOC_INERTIA_DIRECT, failures))

    failures = [] if len(W_pm) == 2 * len(W_a) else [{"order_pm": len(W_pm), "order_fix": len(W_a)}]
    report.checks.append(make_check("inertia-order", LOC_INERTIA_ORDER, failures))
    return report


def fixed_space(g):
    """``Ker(g - 1)`` for a group element or matrix."""
    M = g.matrix if hasattr(g, "matrix") else g
    n = len(M)
    return kernel(mat_sub(M, identity(n, M[0][0].d)))


def hyperplane(space, alpha):
    """``Ker(alpha^vee)``: the vectors ``b``-orthogonal to ``alpha``."""
    form = LinearForm.dual_of(space, alpha)
    return kernel((form.coefficients,))


def verify_fixed_locus_equality(W, delta):
    """Check that root hyperplanes and fixed spaces of ``w != 1`` have the same union."""
    space = W.space
    n = space.dim
    roots = delta.roots
    report = VerificationReport("fixed-locus equality")

    # forms alpha^vee as columns: F[:, a] = G alpha
    forms = QArray.from_scalars([[x for x in mat_vec(space.gram, a)] for a in roots], space.d)
    formsT = QArray(forms.A.T.copy(), forms.B.T.copy(), forms.den, forms.d)

    # Fix(w) for every w != 1 must be inside some Ker(alpha^vee)
    failures = []
    nbad = 0
    ident = identity(n, space.d)
    for i, g in enumerate(W.elements):
        if i == 0:
            continue
        fix = kernel(mat_sub(g.matrix, ident))
        if not fix.basis:
            continue
        B = QArray.from_scalars([list(b) for b in fix.basis], space.d)
        vals = B.matmul(formsT)  # (dim Fix, |Delta|)
        zero_cols = np.all((vals.A == 0) & (vals.B == 0), axis=0)
        if not zero_cols.any():
            nbad += 1
            if len(failures) < 5:
                failures.append({"w_index": i, "fixed_space": str(fix)})
    report.checks.append(make_check("moved-in-roots", LOC_LOCUS_SUP, failures, count=nbad,
                                    examined=W.order - 1))

    # Ker(alpha^vee) must be the fixed space of a non-identity element (the reflection s_alpha)
    failures = []
    for a in roots:
        H = hyperplane(space, a)
        idx = _reflection_index(W, a)
        if idx is None or idx == 0:
            failures.append({"alpha": fmt_vector(a), "reason": "s_alpha is not an element of W",
                             "fixing_element": _find_fixing_element(W, H)})
            continue
        if fixed_space(W.elements[idx]) != H:
            failures.append({"alpha": fmt_vector(a), "w_index": idx,
                             "reason": "Ker(alpha^vee) differs from Fix(s_alpha)"})
    report.checks.append(make_check("roots-in-moved", LOC_LOCUS_SUB, failures, roots=len(roots)))
    return report


def _find_fixing_element(W, H):
    """Some ``w != 1`` fixing the subspace ``H`` pointwise, or None."""
    if not H.basis:
        return 1 if W.order > 1 else None
    images = W.act(H.basis)
    target = QArray.from_scalars([list(b) for b in H.basis], W.d)
    fixed = images.equal_items(_tile(target, images.A.shape))
    fixed[0] = False
    hits = np.nonzero(fixed)[0]
    return int(hits[0]) if len(hits) else None

