"""Maximal elementary abelian 2-subgroups generated by reflections.

Two distinct reflections commute iff their roots are orthogonal, so a set of
pairwise commuting reflections is a clique of the commutation graph and
generates an elementary abelian 2-group of order ``2^k``.  A maximal clique
gives a subgroup that is maximal among such groups: any reflection lying in
it commutes with the whole clique and so already belongs to it.

Only the elementary abelian case is handled.  Non-abelian 2-subgroups
generated by reflections (for example a dihedral group of order 8 inside
B2) are out of scope.
"""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from ._qarray import QArray
from .checks import VerificationReport, fmt_vector, make_check
from .groups import Subgroup, reflection_matrix
from .linalg import rank
from .roots import build_root_system

__all__ = [
    "CommutationGraph", "TwoSubgroupClass", "commutation_graph", "maximal_cliques",
    "maximal_elementary_2subgroups", "classify_up_to_conjugacy", "normalizer_action",
    "splitting_report", "brute_force_maximal_2subgroups", "is_elementary_abelian",
]

LOC_SPLIT = "splitting data: maximal elementary abelian 2-subgroups generated by reflections, up to conjugacy"
LOC_CLASS_SUM = "class sizes add up to the number of maximal subgroups"
LOC_GROUP = "each representative is elementary abelian, generated by reflections and maximal"
LOC_HOM = "the normalizer acts on G by automorphisms: action(w1 w2) = action(w1) action(w2)"
LOC_COVER = "every reflection lies in some maximal subgroup"


@dataclass
class CommutationGraph:
    """Vertices are reflections of W (one per root pair); edges join commuting pairs."""

    roots: tuple          # positive root of each vertex
    reflections: tuple    # element index of each vertex
    adjacency: tuple      # frozenset of neighbour vertices per vertex

    @property
    def order(self):
        return len(self.reflections)

    @property
    def edges(self):
        return tuple((i, j) for i, nb in enumerate(self.adjacency) for j in sorted(nb) if i < j)


@dataclass
class TwoSubgroupClass:
    representative: Subgroup
    rank: int
    generators: tuple       # element indices of the generating reflections
    roots: tuple            # their positive roots
    normalizer: Subgroup
    action_kind: str        # "matrix" or "permutation"
    action: dict = field(repr=False)   # normalizer element index -> action data
    class_size: int = 0
    members: tuple = field(default=(), repr=False)  # the conjugate subgroups, as generator sets

    @property
    def order(self):
        return 2 ** self.rank

    def action_image(self):
        """The distinct automorphisms induced by the normalizer, sorted."""
        return sorted(set(self.action.values()))

    def action_generators(self):
        """A small generating set of the action image (greedy, deterministic)."""
        image = self.action_image()
        gens = []
        span = {_identity_action(self)}
        for a in image:
            if a in span:
                continue
            gens.append(a)
            span = _close_actions(span | {a}, self.action_kind)
        return gens


def _identity_action(cls):
    if cls.action_kind == "matrix":
        k = cls.rank
        return tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
    return tuple(range(2 ** cls.rank - 1))


def _compose(a, b, kind):
    """``a o b`` for two actions of the same kind."""
    if kind == "matrix":
        k = len(a)
        return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k)) % 2 for j in range(k)) for i in range(k))
    return tuple(a[b[i]] for i in range(len(b)))


def _close_actions(items, kind):
    items = set(items)
    frontier = list(items)
    while frontier:
        new = []
        for x in frontier:
            for y in list(items):
                for z in (_compose(x, y, kind), _compose(y, x, kind)):
                    if z not in items:
                        items.add(z)
                        new.append(z)
        frontier = new
    return items


def _reflection_indices_of_roots(W, roots):
    S = QArray.from_scalars([reflection_matrix(W.space, v) for v in roots], W.d)
    return [int(i) for i in W.lookup(S)]


def commutation_graph(W, delta=None):
    """Commutation graph on the reflections of ``W``."""
    delta = build_root_system(W) if delta is None else delta
    roots = tuple(sorted(delta.positive_roots, key=tuple))
    refl = _reflection_indices_of_roots(W, roots) if roots else []
    m = len(refl)
    if m:
        idx = np.array(refl)
        a = np.repeat(idx, m)
        b = np.tile(idx, m)
        comm = (W.mul(a, b) == W.mul(b, a)).reshape(m, m)
    else:
        comm = np.zeros((0, 0), dtype=bool)
    adjacency = tuple(frozenset(j for j in range(m) if j != i and comm[i, j]) for i in range(m))
    return CommutationGraph(roots, tuple(refl), adjacency)


def maximal_cliques(adjacency):
    """All maximal cliques (Bron-Kerbosch with pivoting), each a sorted tuple, sorted."""
    out = []

    def expand(R, P, X):
        if not P and not X:
            out.append(tuple(sorted(R)))
            return
        pivot = max(P | X, key=lambda u: (len(P & adjacency[u]), -u))
        for v in sorted(P - adjacency[pivot]):
            expand(R | {v}, P & adjacency[v], X & adjacency[v])
            P = P - {v}
            X = X | {v}

    expand(frozenset(), frozenset(range(len(adjacency))), frozenset())
    return sorted(out)


def _clique_subgroups(W, graph):
    cliques = maximal_cliques(graph.adjacency) if graph.order else []
    return [tuple(graph.reflections[v] for v in c) for c in cliques]


def maximal_elementary_2subgroups(W, delta=None):
    """Subgroups generated by the maximal sets of pairwise commuting reflections."""
    graph = commutation_graph(W, delta)
    return [Subgroup.generated_by(W, gens) for gens in _clique_subgroups(W, graph)]


def is_elementary_abelian(H):
    """True iff every element of ``H`` squares to the identity (hence ``H`` is abelian)."""
    idx = np.array(H.sorted_indices)
    return bool(np.all(H.parent.mul(idx, idx) == 0))


def _generators_of(H):
    """The reflections of ``H`` (a reflection-generated elementary abelian group)."""
    return tuple(sorted(H.reflection_indices))


def _element_coordinates(W, gens):
    """Map each element of ``<gens>`` to its F2 coordinate tuple, or None if not independent."""
    k = len(gens)
    coords = {}
    for mask in range(2 ** k):
        g = 0
        for i in range(k):
            if mask >> i & 1:
                g = int(W.mul(g, gens[i])[0])
        bits = tuple((mask >> i) & 1 for i in range(k))
        if g in coords:
            return None
        coords[g] = bits
    return coords


def normalizer_action(W, G, generators=None):
    """``N_W(G)`` and the automorphism ``g -> w g w^-1`` of ``G`` for each ``w`` in it.

    Returns ``(N, kind, action)``.  With ``kind == "matrix"`` the action of
    ``w`` is a k x k matrix over F2 whose column ``j`` holds the coordinates
    of ``w s_j w^-1`` in the generating reflections ``s_1..s_k``; otherwise
    it is a permutation of the nontrivial elements of G in index order.
    """
    gens = tuple(generators) if generators is not None else _generators_of(G)
    members = G.indices
    N = W.order
    if gens:
        conj = W.conjugate(np.repeat(np.arange(N), len(gens)), np.tile(np.array(gens), N))
        conj = conj.reshape(N, len(gens))
        inside = np.array([all(int(x) in members for x in row) for row in conj], dtype=bool)
    else:
        inside = np.ones(N, dtype=bool)  # G is trivial
    norm_idx = np.nonzero(inside)[0]
    normalizer = Subgroup(W, norm_idx.tolist())

    coords = None
    if gens and Subgroup.generated_by(W, gens).indices == members:
        coords = _element_coordinates(W, gens)
    action = {}
    if coords is not None:
        k = len(gens)
        for w in norm_idx:
            cols = [coords[int(conj[w, j])] for j in range(k)]
            action[int(w)] = tuple(tuple(cols[j][i] for j in range(k)) for i in range(k))
        return normalizer, "matrix", action
    nontrivial = [i for i in G.sorted_indices if i != 0]
    pos = {g: p for p, g in enumerate(nontrivial)}
    if nontrivial:
        arr = np.array(nontrivial)
        for w in norm_idx:
            images = W.conjugate(np.full(len(arr), int(w)), arr)
            action[int(w)] = tuple(pos[int(x)] for x in images)
    else:
        action = {int(w): () for w in norm_idx}
    return normalizer, "permutation", action


def classify_up_to_conjugacy(W, subgroups, delta=None):
    """Group maximal subgroups into W-conjugacy classes; one representative per class.

    The representative of a class is its member with the least fingerprint,
    and classes are listed in order of their representatives' fingerprints.
    """
    by_gens = {}
    for H in subgroups:
        by_gens[_generators_of(H)] = H
    remaining = set(by_gens)
    N = W.order
    classes = []
    while remaining:
        start = min(remaining)
        gens = np.array(start, dtype=np.int64)
        conj = W.conjugate(np.repeat(np.arange(N), len(gens)), np.tile(gens, N)).reshape(N, len(gens))
        orbit = {tuple(sorted(int(x) for x in row)) for row in conj}
        members = {g: by_gens.get(g) or Subgroup.generated_by(W, g) for g in orbit}
        remaining -= orbit
        rep_gens = min(members, key=lambda g: members[g].fingerprint)
        rep = members[rep_gens]
        normalizer, kind, action = normalizer_action(W, rep, rep_gens)
        roots = tuple(tuple(W.reflection_of_index[i].root) for i in rep_gens)
        classes.append(TwoSubgroupClass(
            representative=rep, rank=len(rep_gens), generators=rep_gens, roots=roots,
            normalizer=normalizer, action_kind=kind, action=action,
            class_size=len(orbit), members=tuple(sorted(orbit)),
        ))
    classes.sort(key=lambda c: c.representative.fingerprint)
    return classes


def brute_force_maximal_2subgroups(W):
    """Oracle: close every set of at most ``dim V`` reflections and keep the maximal
    elementary abelian ones generated by reflections, as sorted element-index tuples."""
    refl = list(W.reflection_indices)
    found = set()
    for size in range(1, W.dim + 1):
        for subset in combinations(refl, size):
            H = Subgroup.generated_by(W, subset)
            if is_elementary_abelian(H):
                found.add(H.sorted_indices)
    sets = [frozenset(s) for s in found]
    maximal = [s for s in sets if not any(s < t for t in sets)]
    return sorted(tuple(sorted(s)) for s in maximal)


def _check_homomorphism(W, cls):
    """``action(w1 w2) == action(w1) o action(w2)`` on all pairs of the normalizer."""
    idx = np.array(cls.normalizer.sorted_indices)
    if cls.action_kind == "matrix":
        acts = np.array([cls.action[int(w)] for w in idx], dtype=np.int64)
        k = cls.rank
        acts = acts.reshape(len(idx), k, k)
        lookup = {int(w): p for p, w in enumerate(idx)}
        bad = 0
        for p, w1 in enumerate(idx):
            prods = W.mul(np.full(len(idx), w1), idx)
            lhs = acts[[lookup[int(x)] for x in prods]]
            rhs = np.einsum("ij,njk->nik", acts[p], acts) % 2
            bad += int(np.count_nonzero(np.any(lhs != rhs, axis=(1, 2))))
        return bad
    bad = 0
    for w1 in idx:
        prods = W.mul(np.full(len(idx), w1), idx)
        for w2, w12 in zip(idx, prods):
            if cls.action[int(w12)] != _compose(cls.action[int(w1)], cls.action[int(w2)], "permutation"):
                bad += 1
    return bad


def _matrix_text(M):
    return [" ".join(map(str, row)) for row in M]


def splitting_report(W, delta=None):
    """Classes of maximal elementary abelian 2-subgroups, with normalizers and actions."""
    delta = build_root_system(W) if delta is None else delta
    graph = commutation_graph(W, delta)
    subgroups = maximal_elementary_2subgroups(W, delta)
    classes = classify_up_to_conjugacy(W, subgroups, delta)
    report = VerificationReport("splitting data")

    table = []
    for c in classes:
        table.append({
            "rank": c.rank,
            "order": c.order,
            "normalizer_order": c.normalizer.order,
            "class_size": c.class_size,
            "generating_roots": [fmt_vector(v) for v in c.roots],
            "action_kind": c.action_kind,
            "action_image_order": len(c.action_image()),
            "action_generators": [_matrix_text(a) if c.action_kind == "matrix" else list(a)
                                  for a in c.action_generators()],
        })
    report.checks.append(make_check("classification", LOC_SPLIT, [], r=len(classes),
                                    reflections=graph.order, edges=len(graph.edges), classes=table))

    total = sum(c.class_size for c in classes)
    failures = [] if total == len(subgroups) else [{"sum_class_sizes": total, "maximal_subgroups": len(subgroups)}]
    failures += [{"rank": c.rank, "class_size": c.class_size, "normalizer_order": c.normalizer.order}
                 for c in classes if c.class_size * c.normalizer.order != W.order]
    report.checks.append(make_check("class-sizes", LOC_CLASS_SUM, failures,
                                    maximal_subgroups=len(subgroups), total=total))

    failures = []
    for c in classes:
        G = c.representative
        gens = set(c.generators)
        problems = []
        if not is_elementary_abelian(G):
            problems.append("not elementary abelian")
        if Subgroup.generated_by(W, c.generators).indices != G.indices:
            problems.append("not generated by its reflections")
        if G.order != 2 ** c.rank:
            problems.append("order differs from 2^k")
        if rank(c.roots) != c.rank:
            problems.append("generating roots are dependent")
        v_of = {r: v for v, r in enumerate(graph.reflections)}
        clique = {v_of[g] for g in gens}
        extendable = [graph.roots[v] for v in range(graph.order)
                      if v not in clique and clique <= graph.adjacency[v]]
        if extendable:
            problems.append(f"not maximal: {fmt_vector(extendable[0])} commutes with all generators")
        if not G.indices <= c.normalizer.indices:
            problems.append("G is not inside its normalizer")
        if problems:
            failures.append({"rank": c.rank, "roots": [fmt_vector(v) for v in c.roots], "problems": problems})
    report.checks.append(make_check("subgroup-invariants", LOC_GROUP, failures, classes=len(classes)))

    bad = sum(_check_homomorphism(W, c) for c in classes)
    report.checks.append(make_check("action-homomorphism", LOC_HOM, [{"bad_pairs": bad}] if bad else [],
                                    count=bad, pairs=sum(c.normalizer.order ** 2 for c in classes)))

    covered = set()
    for H in subgroups:
        covered |= set(H.reflection_indices)
    missing = [i for i in W.reflection_indices if i not in covered]
    report.checks.append(make_check("reflection-cover", LOC_COVER,
                                    [{"reflection_index": i} for i in missing]))
    report.classes = classes
    return report
