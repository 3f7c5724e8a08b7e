import pytest
from hypothesis import given, settings, strategies as st

from refltk.errors import DimensionError, InvalidForm
from refltk.field import Scalar
from refltk.groups import reflection_matrix
from refltk.linalg import (BilinearSpace, Subspace, det, dual_vector, evaluate_dual_form,
                           evaluate_form, identity, inverse, is_regular, kernel, mat_mul, mat_sub,
                           matrix, rank, subspace_leq, zero_matrix)

A2 = BilinearSpace(matrix([[2, -1], [-1, 2]]))
E3 = BilinearSpace.euclidean(3)

small_ints = st.integers(-4, 4)


def mats(rows, cols):
    return st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_is_regular():
    assert is_regular(identity(2))
    assert not is_regular(zero_matrix(2, 2))
    assert is_regular([[2, -1], [-1, 2]])
    assert det(matrix([[2, -1], [-1, 2]])) == 3
    with pytest.raises(InvalidForm):
        is_regular([[1, 2], [0, 1]])


def test_evaluate_form():
    E2 = BilinearSpace.euclidean(2)
    assert evaluate_form(E2, (1, 0), (1, 0)) == 1
    assert evaluate_form(E2, (1, 0), (0, 1)) == 0
    assert evaluate_form(A2, (1, 0), (1, 0)) == 2
    with pytest.raises(DimensionError):
        evaluate_form(E2, (1, 0, 0), (1, 0))


def test_bilinear_space_validation():
    with pytest.raises(InvalidForm):
        BilinearSpace(matrix([[1, 0], [0, 0]]))
    with pytest.raises(InvalidForm):
        BilinearSpace(matrix([[1, 1], [0, 1]]))


def test_kernel_examples():
    assert kernel(identity(3)).dim == 0
    assert kernel(zero_matrix(2, 2)).dim == 2
    s = reflection_matrix(E3, (1, 0, 0))
    K = kernel(mat_sub(s, identity(3)))
    assert K == Subspace.span([(0, 1, 0), (0, 0, 1)], 3)


def test_subspace_leq():
    zero = Subspace(2, ())
    full = Subspace.span([(1, 0), (0, 1)], 2)
    hyper = kernel(matrix([[1, 0]]))          # Ker(e1^vee) for the identity form
    assert subspace_leq(zero, hyper)
    assert not subspace_leq(full, hyper)
    assert subspace_leq(Subspace.span([(0, 1)], 2), hyper)
    with pytest.raises(DimensionError):
        subspace_leq(Subspace(3, ()), hyper)


def test_subspace_canonical_form():
    U = Subspace.span([(2, 4), (1, 2)], 2)
    assert U.basis == ((1, 2),)
    assert U.canonical() == U
    assert U.contains((3, 6)) and not U.contains((1, 0))


def test_inverse():
    M = matrix([[2, 1], [7, 4]])
    assert mat_mul(M, inverse(M)) == identity(2)
    with pytest.raises(ZeroDivisionError):
        inverse(matrix([[1, 2], [2, 4]]))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_rank_nullity(rows, cols, data):
    M = matrix(data.draw(mats(rows, cols)))
    K = kernel(M)
    assert K.dim + rank(M) == cols
    for v in K.basis:
        assert all(sum((a * b for a, b in zip(row, v)), Scalar(0)) == 0 for row in M)


@settings(max_examples=60, deadline=None)
@given(st.lists(small_ints, min_size=2, max_size=2), st.lists(small_ints, min_size=2, max_size=2))
def test_form_symmetry_and_dual_isometry(v, w):
    assert evaluate_form(A2, v, w) == evaluate_form(A2, w, v)
    assert evaluate_dual_form(A2, dual_vector(A2, v), dual_vector(A2, w)) == evaluate_form(A2, v, w)


@settings(max_examples=40, deadline=None)
@given(mats(3, 3))
def test_canonicalisation_idempotent(rows):
    U = Subspace.span(matrix(rows), 3)
    assert U.canonical() == U
    assert U.canonical().canonical() == U.canonical()
