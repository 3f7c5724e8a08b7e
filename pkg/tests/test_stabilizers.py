import numpy as np
import pytest

from conftest import group, roots_of
from refltk.errors import DimensionError, NotARoot
from refltk.groups import Subgroup
from refltk.stabilizers import (inertia, is_generated_by_contained_reflections, isotropy,
                                verify_fixed_locus_equality, verify_inertia_decomposition)


def brute_fixers(W, v):
    return {i for i, g in enumerate(W.elements) if g(v) == tuple(v)}


def test_isotropy_examples():
    W = group("B", 2)
    assert isotropy(W, (0, 0)).order == W.order
    assert isotropy(W, (3, 1)).order == 1
    H = isotropy(W, (1, 0))
    assert H.indices == brute_fixers(W, (1, 0))
    assert H.order == 2
    s_e2 = next(i for i in W.reflection_indices if W.reflection_of_index[i].root == (0, 1))
    assert H.indices == {0, s_e2}
    with pytest.raises(DimensionError):
        isotropy(W, (1, 0, 0))


def test_isotropy_matches_brute_force(small):
    W, delta = small
    for v in list(delta.roots)[:6]:
        assert isotropy(W, v).indices == brute_fixers(W, v)


def test_reflection_generation_examples():
    W = group("B", 2)
    assert is_generated_by_contained_reflections(Subgroup(W, [0]))
    minus_id = next(i for i, g in enumerate(W.elements) if g.trace() == -2)
    assert not is_generated_by_contained_reflections(Subgroup(W, [0, minus_id]))


def test_isotropy_groups_are_reflection_groups(small):
    W, delta = small
    rng = np.random.default_rng(1)
    vectors = list(delta.roots) + [tuple(int(x) for x in rng.integers(-3, 4, W.dim)) for _ in range(10)]
    for v in vectors:
        H = isotropy(W, v)
        assert H.is_closed()
        assert is_generated_by_contained_reflections(H)


def test_inertia_examples():
    assert inertia(group("A", 1), (1,)).order == 2
    W = group("B", 2)
    I = inertia(W, (1, 0))
    assert I.order == 4
    assert set(W.reflection_of_index[i].root for i in I.reflection_indices) == {(1, 0), (0, 1)}
    for alpha in roots_of("A", 2).roots:
        assert inertia(group("A", 2), alpha).order == 2
    with pytest.raises(NotARoot):
        inertia(W, (1, 2))
    with pytest.raises(NotARoot):
        inertia(W, (0, 0))


def test_inertia_decomposition_examples():
    rep = verify_inertia_decomposition(group("A", 1), (1,))
    assert rep.passed and rep["inertia-product-set"].details["order_fix"] == 1
    rep = verify_inertia_decomposition(group("B", 2), (1, 0))
    assert rep.passed and rep["inertia-product-set"].details["order_fix"] == 2
    rep = verify_inertia_decomposition(group("B", 3), (1, 0, 0))
    assert rep.passed and rep["inertia-product-set"].details["order_fix"] == 8


def test_inertia_properties(small):
    W, delta = small
    for alpha in delta.roots:
        I, S = inertia(W, alpha), isotropy(W, alpha)
        assert S.indices <= I.indices and I.order == 2 * S.order
        assert verify_inertia_decomposition(W, alpha).passed


def test_fixed_locus(small):
    W, delta = small
    rep = verify_fixed_locus_equality(W, delta)
    assert rep.passed
    assert rep["moved-in-roots"].details["examined"] == W.order - 1


def test_fixed_locus_negative_control():
    W, delta = group("B", 3), roots_of("B", 3)
    rep = verify_fixed_locus_equality(W, delta.with_root((1, 2, 3)))
    assert not rep["roots-in-moved"].passed
    assert rep["roots-in-moved"].witnesses[0]["alpha"] == "(1, 2, 3)"
    assert rep["moved-in-roots"].passed
