import itertools

import numpy as np
import pytest

from conftest import group
from oracles import naive_closure, naive_reflection_count
from refltk.coxeter import named_weyl, weyl_group
from refltk.errors import (DimensionError, InvalidForm, IsotropicVector, NotASubset,
                           OrderCapExceeded, UnknownType)
from refltk.groups import (GroupElement, Subgroup, close_group, conjugacy_classes, is_orthogonal,
                           reflection, reflection_matrix)
from refltk.linalg import BilinearSpace, det, identity, mat_mul, mat_scale, matrix

E2 = BilinearSpace.euclidean(2)
A2 = BilinearSpace(matrix([[2, -1], [-1, 2]]))


def test_reflection_examples():
    assert reflection_matrix(E2, (1, 0)) == matrix([[-1, 0], [0, 1]])
    assert reflection_matrix(A2, (1, 0)) == matrix([[-1, 1], [0, 1]])
    s = reflection(A2, (1, 0))
    assert s.element((1, 0)) == (-1, 0)


def test_reflection_properties():
    space = BilinearSpace(matrix([[1, 0, 0], [0, 2, 1], [0, 1, 3]]))
    for v in [(1, 1, 0), (0, 1, -1), (2, 0, 1)]:
        M = reflection_matrix(space, v)
        assert mat_mul(M, M) == identity(3)
        assert det(M) == -1
        assert is_orthogonal(space, M)


def test_isotropic_vector_rejected():
    hyperbolic = BilinearSpace(matrix([[0, 1], [1, 0]]))
    with pytest.raises(IsotropicVector):
        reflection(hyperbolic, (1, 0))


def test_is_orthogonal():
    assert is_orthogonal(E2, identity(2))
    assert not is_orthogonal(E2, mat_scale(2, identity(2)))
    with pytest.raises(DimensionError):
        is_orthogonal(E2, identity(3))


@pytest.mark.parametrize("t,rank,m,order,nrefl", [
    ("A", 1, None, 2, 1), ("A", 2, None, 6, 3), ("B", 2, None, 8, 4), ("G", 2, None, 12, 6),
    ("A", 3, None, 24, 6), ("B", 3, None, 48, 9), ("C", 3, None, 48, 9), ("A", 4, None, 120, 10),
    ("D", 4, None, 192, 12), ("B", 4, None, 384, 16), ("F", 4, None, 1152, 24),
    ("H", 3, None, 120, 15), ("I", 2, 5, 10, 5), ("I", 2, 8, 16, 8), ("I", 2, 12, 24, 12),
])
def test_named_orders(t, rank, m, order, nrefl):
    W = group(t, rank, m)
    assert W.order == order
    assert len(W.reflection_indices) == nrefl
    assert len(W.reflections) == nrefl


@pytest.mark.parametrize("t,rank", [("A", 2), ("B", 2), ("G", 2), ("A", 3)])
def test_closure_matches_naive_oracle(t, rank):
    space, gens = named_weyl(t, rank)
    W = group(t, rank)
    oracle = naive_closure([g.matrix for g in gens], space.dim, space.d)
    assert len(oracle) == W.order
    assert all(M in W for M in oracle)
    assert naive_reflection_count(oracle) == len(W.reflection_indices)


def test_single_reflection():
    W = close_group(E2, [reflection(E2, (1, 1))])
    assert W.order == 2 and len(W.reflection_indices) == 1


def test_generator_order_independence():
    space, gens = named_weyl("B", 3)
    base = set(weyl_group("B", 3).keys)
    for perm in itertools.permutations(gens):
        assert set(close_group(space, list(perm)).keys) == base


def test_cap_and_invalid_generators():
    space, gens = named_weyl("A", 2)
    with pytest.raises(OrderCapExceeded):
        close_group(space, gens, cap=4)
    with pytest.raises(InvalidForm):
        close_group(E2, [mat_scale(2, identity(2))])
    with pytest.raises(UnknownType):
        named_weyl("E", 6)
    with pytest.raises(UnknownType):
        named_weyl("I2(7)")


def test_group_structure(small):
    W, _ = small
    idx = np.arange(W.order)
    # inverses
    assert np.all(W.mul(idx, W.inverse_indices) == 0)
    # Lagrange: element orders divide |W|
    for i in range(W.order):
        k, x = 1, i
        while x != 0:
            x = int(W.mul(x, i)[0])
            k += 1
        assert W.order % k == 0
    # reflections are permuted by conjugation
    R = np.array(W.reflection_indices)
    for w in range(W.order):
        assert set(W.conjugate(np.full(len(R), w), R).tolist()) == set(R.tolist())


def test_reflection_roots(small):
    W, _ = small
    for r in W.reflections:
        assert r.element(r.root) == tuple(-x for x in r.root)


def test_conjugacy_classes():
    W = group("A", 2)
    assert conjugacy_classes(W, [0]) == [[0]]
    assert [len(b) for b in conjugacy_classes(W, W.reflection_indices)] == [3]
    W = group("B", 2)
    assert sorted(len(b) for b in conjugacy_classes(W, W.reflection_indices)) == [2, 2]
    elems = W.elements[:3]
    assert sum(len(b) for b in conjugacy_classes(W, elems)) == 3
    with pytest.raises(NotASubset):
        conjugacy_classes(W, [GroupElement(mat_scale(2, identity(2)))])
    with pytest.raises(NotASubset):
        conjugacy_classes(W, [W.order])


def test_subgroup_operations():
    W = group("B", 3)
    H = Subgroup.generated_by(W, W.reflection_indices[:2])
    assert H.is_closed() and W.order % H.order == 0
    assert Subgroup.generated_by(W, []).order == 1
    conj = H.conjugate_by(5)
    assert conj.order == H.order and conj.is_closed()
    r1, r2 = next((a, b) for a, b in itertools.combinations(W.reflection_indices, 2)
                  if W.mul(a, b)[0] != W.mul(b, a)[0])
    assert not Subgroup(W, [0, r1, r2]).is_closed()
