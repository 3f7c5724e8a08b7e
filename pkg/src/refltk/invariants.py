"""Molien series, fundamental degrees and invariance of the root product.

The Molien series ``(1/|W|) sum_w 1/det(1 - t w)`` is assembled exactly.
Each ``det(1 - t w)`` comes from the traces of ``w, w^2, ..., w^n`` through
Newton's identities.  Elements with the same power traces share a term, so
only a handful of fractions are added.  Degrees are peeled greedily from
the expansion and then certified by the exact identity
``prod(1 - t^d_i) * series = 1``.
"""

from dataclasses import dataclass, field

import numpy as np

from .checks import VerificationReport, make_check
from .errors import InsufficientExpansion
from .field import Scalar
from .polynomial import Polynomial
from .roots import VectorSet, build_root_system, g_delta, g_delta_factored
from .univariate import UPoly, series_divide

__all__ = [
    "MolienData", "molien_series", "default_expansion_degree", "extract_degrees",
    "verify_degree_identities", "reynolds_project", "verify_g_delta_in_invariant_ring",
    "g_delta_invariance_report", "characteristic_data",
]

LOC_DEGREES = "the invariant ring is a polynomial algebra: prod(1 - t^d_i) * Molien series = 1"
LOC_PROD = "product of the degrees equals |W|"
LOC_SUM = "sum of (d_i - 1) equals the number of reflections"
LOC_GINV = "the root product g_Delta is W-invariant"
LOC_GDEG = "deg g_Delta = |Delta| = 2 * number of reflections"

EXPANSION_CAP = 240


@dataclass
class MolienData:
    numerator: UPoly
    denominator: UPoly
    coefficients: list          # series coefficients 0..expansion_degree
    order: int
    dim: int
    classes: list = field(default_factory=list)   # (det(1 - t w) as UPoly, count)

    @property
    def expansion_degree(self):
        return len(self.coefficients) - 1

    def coefficient(self, k):
        return self.coefficients[k]

    def integer_coefficients(self):
        """The coefficients as ints; raises ValueError if one is not a non-negative integer."""
        out = []
        for c in self.coefficients:
            if not c.is_rational or c.a.denominator != 1 or c.a < 0:
                raise ValueError(f"Molien coefficient {c} is not a non-negative integer")
            out.append(int(c.a))
        return out

    def rational_function(self):
        return f"({self.numerator}) / ({self.denominator})"


def default_expansion_degree(W):
    """Enough terms to see every degree (each is at most #reflections + 1)."""
    need = 2 * (len(W.reflection_indices) + 1)
    return max(need, min(W.order, EXPANSION_CAP))


def characteristic_data(W):
    """``[(det(1 - t w) as a UPoly, number of elements), ...]``, grouped by power traces."""
    n = W.dim
    idx = np.arange(W.order)
    powers = [idx]
    for _ in range(n - 1):
        powers.append(W.mul(powers[-1], idx))
    E = W._enc
    traces = [E[p].trace_items() for p in powers]   # each: (N,) QArray over E.den
    groups = {}
    for pos in range(W.order):
        key = tuple((int(t.A[pos]), int(t.B[pos])) for t in traces)
        if key in groups:
            groups[key][1] += 1
        else:
            groups[key] = [pos, 1]
    out = []
    for key, (pos, count) in groups.items():
        p = [Scalar(a, b, W.d) / E.den for a, b in key]
        # Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i
        e = [Scalar(1)]
        for k in range(1, n + 1):
            acc = Scalar(0)
            for i in range(1, k + 1):
                term = e[k - i] * p[i - 1]
                acc = acc + term if i % 2 else acc - term
            e.append(acc / k)
        out.append((UPoly([x if k % 2 == 0 else -x for k, x in enumerate(e)]), count))
    return out


def molien_series(W, expansion_degree=None):
    """Exact Molien series of ``W`` and its expansion up to ``expansion_degree``."""
    if expansion_degree is None:
        expansion_degree = default_expansion_degree(W)
    if expansion_degree < 1:
        raise ValueError("expansion degree must be at least 1")
    classes = characteristic_data(W)
    num, den = UPoly(), UPoly.one()
    for P, count in classes:
        # num/den + count/P
        g = den.gcd(P)
        den_part = den.divmod(g)[0]
        P_part = P.divmod(g)[0]
        num = num * P_part + den_part * count
        den = den * P_part
        r = num.gcd(den)
        if r.degree > 0:
            num, den = num.divmod(r)[0], den.divmod(r)[0]
    num = num * Scalar(W.order).inverse()
    # normalise so den(0) = 1
    c0 = den.c[0].inverse()
    num, den = num * c0, den * c0
    coeffs = series_divide(num, den, expansion_degree)
    return MolienData(num, den, coeffs, W.order, W.dim, classes)


def _certify(data, degrees):
    prod = UPoly.one()
    for d in degrees:
        prod = prod * UPoly.one_minus_t_power(d)
    return data.numerator * prod == data.denominator


def extract_degrees(data, dim):
    """Fundamental degrees from Molien data, or None if the series is not of the form
    ``prod 1/(1 - t^d_i)`` with ``dim`` factors.

    Raises InsufficientExpansion when the expansion is too short to finish the peel.
    """
    series = list(data.coefficients)
    top = len(series) - 1
    degrees = []
    for _ in range(dim):
        k = next((i for i in range(1, top + 1) if series[i]), None)
        if k is None:
            raise InsufficientExpansion(
                f"found degrees {degrees} but the series is 1 up to t^{top}; "
                f"{dim - len(degrees)} degree(s) lie beyond the expansion")
        c = series[k]
        if not c.is_rational or c.a.denominator != 1 or c.a < 0:
            return None
        degrees.append(k)
        # multiply by (1 - t^k)
        for i in range(top, k - 1, -1):
            series[i] = series[i] - series[i - k]
    if any(series[1:]):
        return None
    if not _certify(data, degrees):
        return None
    return degrees


def verify_degree_identities(W, degrees):
    report = VerificationReport("degree identities")
    prod = 1
    for d in degrees:
        prod *= d
    nrefl = len(W.reflection_indices)
    s = sum(d - 1 for d in degrees)
    report.checks.append(make_check("degree-product", LOC_PROD,
                                    [] if prod == W.order else [{"product": prod, "order": W.order}],
                                    degrees=list(degrees), product=prod, order=W.order))
    report.checks.append(make_check("degree-sum", LOC_SUM,
                                    [] if s == nrefl else [{"sum": s, "reflections": nrefl}],
                                    sum=s, reflections=nrefl))
    return report


def reynolds_project(W, p):
    """``(1/|W|) sum_w w.p`` for the dual action ``(w.p)(x) = p(w^-1 x)``."""
    total = Polynomial.zero(p.nvars)
    elements = W.elements
    inv = W.inverse_indices
    for i, g in enumerate(elements):
        total = total + p.substitute_linear(elements[int(inv[i])].matrix)
    return total.scale(Scalar(W.order).inverse())


def g_delta_invariance_report(W, delta=None, method="factored"):
    """Check ``w.g_Delta = g_Delta`` for every ``w`` in W.

    ``method="factored"`` compares canonical factorisations.  Whenever ``w``
    permutes the roots the two products have the same factors and agree
    outright; the remaining elements (if any) are compared through the
    dual action on each factor.  ``method="expanded"`` substitutes into
    the expanded polynomial, which is only practical for small groups.
    """
    delta = build_root_system(W) if delta is None else delta
    report = VerificationReport("root product invariance")
    roots = delta.roots
    bad = []
    nbad = 0
    if method == "factored":
        g = g_delta_factored(delta)
        vs = VectorSet(roots, W.d)
        images = W.act(roots)  # (N, m, n)
        N, m, n = images.shape
        flat = images.__class__(images.A.reshape(N * m, n), images.B.reshape(N * m, n), images.den, images.d)
        pos = vs.positions(flat).reshape(N, m)
        permutes = np.array([np.all(row >= 0) and len(set(row.tolist())) == m for row in pos])
        inv = W.inverse_indices
        for i in np.nonzero(~permutes)[0]:
            w = W.elements[int(i)]
            if g.act(w, W.elements[int(inv[i])]) != g:
                nbad += 1
                if len(bad) < 5:
                    bad.append({"w_index": int(i)})
        degree = g.degree
        details = {"permuting_elements": int(permutes.sum()), "factor_checks": int((~permutes).sum())}
    elif method == "expanded":
        p = g_delta(delta)
        inv = W.inverse_indices
        for i, w in enumerate(W.elements):
            if p.act(w, W.elements[int(inv[i])]) != p:
                nbad += 1
                if len(bad) < 5:
                    bad.append({"w_index": i})
        degree = p.degree
        details = {}
    else:
        raise ValueError(f"unknown method {method!r}")
    report.checks.append(make_check("g-delta-invariant", LOC_GINV, bad, count=nbad,
                                    method=method, elements=W.order, **details))
    expected = 2 * len(W.reflection_indices)
    report.checks.append(make_check("g-delta-degree", LOC_GDEG,
                                    [] if degree == expected == len(roots) else
                                    [{"degree": degree, "roots": len(roots), "expected": expected}],
                                    degree=degree))
    return report


def verify_g_delta_in_invariant_ring(W, delta=None, method="factored"):
    """True iff ``w.g_Delta = g_Delta`` for all ``w`` in W."""
    return g_delta_invariance_report(W, delta, method)["g-delta-invariant"].passed
