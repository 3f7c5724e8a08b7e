import itertools

import numpy as np
import pytest

from conftest import group, roots_of
from refltk.classify import (brute_force_maximal_2subgroups, classify_up_to_conjugacy,
                             commutation_graph, is_elementary_abelian, maximal_cliques,
                             maximal_elementary_2subgroups, normalizer_action, splitting_report)
from refltk.groups import Subgroup


def test_commutation_graph_examples():
    g = commutation_graph(group("A", 1), roots_of("A", 1))
    assert (g.order, len(g.edges)) == (1, 0)
    g = commutation_graph(group("A", 2), roots_of("A", 2))
    assert (g.order, len(g.edges)) == (3, 0)
    g = commutation_graph(group("B", 2), roots_of("B", 2))
    assert (g.order, len(g.edges)) == (4, 2)
    pairs = {frozenset((g.roots[i], g.roots[j])) for i, j in g.edges}
    assert pairs == {frozenset({(1, 0), (0, 1)}), frozenset({(1, 1), (1, -1)})}


def test_edges_are_orthogonal_roots(small):
    W, delta = small
    g = commutation_graph(W, delta)
    for i in range(g.order):
        for j in range(i + 1, g.order):
            orth = W.space.form(g.roots[i], g.roots[j]) == 0
            assert (j in g.adjacency[i]) == orth


def test_bron_kerbosch_against_brute_force():
    rng = np.random.default_rng(3)
    for _ in range(30):
        n = int(rng.integers(1, 9))
        adj = [set() for _ in range(n)]
        for i, j in itertools.combinations(range(n), 2):
            if rng.random() < 0.5:
                adj[i].add(j)
                adj[j].add(i)
        adjacency = tuple(frozenset(a) for a in adj)
        cliques = []
        for size in range(1, n + 1):
            for c in itertools.combinations(range(n), size):
                if all(b in adj[a] for a, b in itertools.combinations(c, 2)):
                    cliques.append(set(c))
        maximal = sorted(tuple(sorted(c)) for c in cliques if not any(c < d for d in cliques))
        assert maximal_cliques(adjacency) == maximal


@pytest.mark.parametrize("t,rank,m,orders", [
    ("A", 2, None, [2, 2, 2]), ("B", 2, None, [4, 4]), ("A", 3, None, [4, 4, 4]),
])
def test_maximal_subgroup_examples(t, rank, m, orders):
    subs = maximal_elementary_2subgroups(group(t, rank, m), roots_of(t, rank, m))
    assert sorted(H.order for H in subs) == orders


def test_clique_pipeline_matches_oracle(small):
    W, delta = small
    mine = sorted(H.sorted_indices for H in maximal_elementary_2subgroups(W, delta))
    assert mine == brute_force_maximal_2subgroups(W)


def test_group_invariants(small):
    W, delta = small
    subs = maximal_elementary_2subgroups(W, delta)
    covered = set()
    for H in subs:
        assert H.is_closed() and is_elementary_abelian(H)
        assert Subgroup.generated_by(W, H.reflection_indices) == H
        assert H.order == 2 ** len(H.reflection_indices)
        covered |= set(H.reflection_indices)
    assert covered == set(W.reflection_indices)


@pytest.mark.parametrize("t,rank,r", [("A", 2, 1), ("B", 2, 2), ("A", 3, 1), ("B", 3, 2)])
def test_classification_counts(t, rank, r):
    W, delta = group(t, rank), roots_of(t, rank)
    subs = maximal_elementary_2subgroups(W, delta)
    classes = classify_up_to_conjugacy(W, subs)
    assert len(classes) == r
    assert sum(c.class_size for c in classes) == len(subs)
    for c in classes:
        assert c.class_size * c.normalizer.order == W.order
        assert c.representative.fingerprint == min(
            Subgroup.generated_by(W, g).fingerprint for g in c.members)


def test_conjugate_normalizers_have_equal_order():
    W, delta = group("B", 3), roots_of("B", 3)
    for H in maximal_elementary_2subgroups(W, delta):
        N = normalizer_action(W, H)[0]
        for w in (3, 11, 29):
            assert normalizer_action(W, H.conjugate_by(w))[0].order == N.order


def test_normalizer_examples():
    W = group("A", 1)
    N, kind, action = normalizer_action(W, Subgroup(W, range(W.order)))
    assert N.order == 2 and set(action.values()) == {((1,),)}
    W = group("A", 2)
    H = Subgroup.generated_by(W, [W.reflection_indices[0]])
    N, kind, action = normalizer_action(W, H)
    assert N.order == 2 and set(action.values()) == {((1,),)}
    # S4: <(12), (34)> has a dihedral normalizer swapping the two generators
    W, delta = group("A", 3), roots_of("A", 3)
    H = maximal_elementary_2subgroups(W, delta)[0]
    N, kind, action = normalizer_action(W, H)
    assert kind == "matrix" and N.order == 8
    assert set(action.values()) == {((1, 0), (0, 1)), ((0, 1), (1, 0))}


def test_action_contains_centralizer_in_kernel():
    W, delta = group("B", 3), roots_of("B", 3)
    for H in maximal_elementary_2subgroups(W, delta):
        N, kind, action = normalizer_action(W, H)
        idx = np.array(H.sorted_indices)
        k = len(H.reflection_indices)
        ident = tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
        for w in N.sorted_indices:
            centralizes = np.all(W.mul(np.full(len(idx), w), idx) == W.mul(idx, np.full(len(idx), w)))
            if centralizes:
                assert action[w] == ident


@pytest.mark.parametrize("t,rank,m,table", [
    ("A", 1, None, [(1, 2, 1)]),
    ("B", 2, None, [(2, 8, 1), (2, 8, 1)]),
    ("A", 3, None, [(2, 8, 3)]),
])
def test_splitting_report_examples(t, rank, m, table):
    rep = splitting_report(group(t, rank, m), roots_of(t, rank, m))
    assert rep.passed, rep.summary_lines()
    rows = rep["classification"].details["classes"]
    assert [(c["rank"], c["normalizer_order"], c["class_size"]) for c in rows] == table


def test_splitting_report_all_small(small):
    W, delta = small
    assert splitting_report(W, delta).passed
