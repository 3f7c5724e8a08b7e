import itertools

import pytest

from conftest import group, roots_of
from refltk.errors import InsufficientExpansion
from refltk.groups import close_group
from refltk.invariants import (extract_degrees, g_delta_invariance_report, molien_series,
                               reynolds_project, verify_degree_identities,
                               verify_g_delta_in_invariant_ring)
from refltk.linalg import BilinearSpace, identity, matrix, rank
from refltk.polynomial import Polynomial
from refltk.roots import g_delta
from refltk.stabilizers import fixed_space
from refltk.univariate import UPoly


def test_trivial_group():
    W = close_group(BilinearSpace.euclidean(1), [identity(1)])
    data = molien_series(W, 6)
    assert data.numerator == UPoly.one() and data.denominator == UPoly([1, -1])
    assert extract_degrees(data, 1) == [1]


def test_a1_and_a2_series():
    data = molien_series(group("A", 1), 10)
    assert data.denominator == UPoly.one_minus_t_power(2)
    assert data.integer_coefficients() == [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]
    data = molien_series(group("A", 2), 12)
    assert data.numerator * UPoly.one_minus_t_power(2) * UPoly.one_minus_t_power(3) == data.denominator


@pytest.mark.parametrize("t,rank,m,degrees", [
    ("A", 2, None, [2, 3]), ("B", 2, None, [2, 4]), ("G", 2, None, [2, 6]), ("A", 3, None, [2, 3, 4]),
    ("B", 3, None, [2, 4, 6]), ("H", 3, None, [2, 6, 10]), ("I", 2, 5, [2, 5]), ("D", 4, None, [2, 4, 4, 6]),
])
def test_degrees(t, rank, m, degrees):
    W = group(t, rank, m)
    data = molien_series(W)
    assert extract_degrees(data, W.dim) == degrees
    assert verify_degree_identities(W, degrees).passed


def test_degree_identity_failure_is_reported():
    rep = verify_degree_identities(group("B", 2), [2, 3])
    assert not rep.passed


def test_molien_basic_invariants(small):
    W, _ = small
    data = molien_series(W, 12)
    coeffs = data.integer_coefficients()
    assert coeffs[0] == 1
    whole_fixed = None
    for g in W.elements:
        F = fixed_space(g)
        whole_fixed = F if whole_fixed is None else _intersect(whole_fixed, F)
    assert coeffs[1] == whole_fixed.dim


def _intersect(U, V):
    from refltk.linalg import Subspace, kernel

    # U ∩ V as the kernel of the stacked orthogonal complements
    n = U.ambient_dim
    perp = list(kernel(U.basis).basis) if U.basis else [tuple(row) for row in identity(n)]
    perp += list(kernel(V.basis).basis) if V.basis else [tuple(row) for row in identity(n)]
    return kernel(tuple(perp)) if perp else Subspace.span(identity(n), n)


def test_not_a_reflection_group():
    rot = matrix([[0, -1], [1, 0]])
    W = close_group(BilinearSpace.euclidean(2), [rot])
    assert W.order == 4 and not W.reflection_indices
    assert extract_degrees(molien_series(W, 20), 2) is None


def test_insufficient_expansion():
    with pytest.raises(InsufficientExpansion):
        extract_degrees(molien_series(group("B", 3), 4), 3)


def _monomials(n, k):
    for combo in itertools.combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


@pytest.mark.parametrize("t,n", [("A", 1), ("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3)])
def test_molien_matches_reynolds_rank(t, n):
    W = group(t, n)
    coeffs = molien_series(W, 4).integer_coefficients()
    for k in range(5):
        monos = list(_monomials(W.dim, k))
        images = [reynolds_project(W, Polynomial.monomial(e)) for e in monos]
        rows = [tuple(p.coefficient(e) for e in monos) for p in images]
        assert rank(rows) == coeffs[k]


def test_reynolds_examples():
    W = group("A", 1)
    assert reynolds_project(W, Polynomial.variable(0, 1)).is_zero()
    W = group("A", 2)
    x1 = Polynomial.variable(0, 2)
    p = reynolds_project(W, x1 * x1)
    assert not p.is_zero() and p.degree == 2
    # proportional to the invariant quadratic form x^T G x
    q = Polynomial(2, {(2, 0): 2, (1, 1): -2, (0, 2): 2})
    ratio = p.coefficient((2, 0)) / q.coefficient((2, 0))
    assert p == q.scale(ratio)


def test_reynolds_is_projection():
    W = group("B", 2)
    x, y = Polynomial.variable(0, 2), Polynomial.variable(1, 2)
    p = x ** 3 * y + 2 * x * x + y
    P = reynolds_project(W, p)
    assert reynolds_project(W, P) == P
    for g in W.elements:
        assert reynolds_project(W, p.act(g)) == P
        assert P.act(g) == P
    inv = g_delta(roots_of("B", 2))
    assert reynolds_project(W, inv) == inv


def test_g_delta_invariance(small):
    W, delta = small
    assert verify_g_delta_in_invariant_ring(W, delta)
    rep = g_delta_invariance_report(W, delta)
    assert rep["g-delta-degree"].details["degree"] == 2 * len(W.reflection_indices)


@pytest.mark.parametrize("t,rank", [("A", 1), ("A", 2), ("B", 2), ("B", 3)])
def test_g_delta_expanded_substitution(t, rank):
    assert verify_g_delta_in_invariant_ring(group(t, rank), roots_of(t, rank), method="expanded")


def test_g_delta_not_invariant_with_fake_root():
    W, delta = group("B", 2), roots_of("B", 2)
    bad = delta.with_root((1, 2))
    assert not verify_g_delta_in_invariant_ring(W, bad)
    assert not verify_g_delta_in_invariant_ring(W, bad, method="expanded")
