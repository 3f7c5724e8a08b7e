"""Independent brute-force oracles.  Deliberately naive: plain lists, no hashing."""

from refltk.linalg import det, identity, kernel, mat_mul, mat_sub


def naive_closure(generators, n, d=1, limit=2000):
    """All products of the generator matrices, found by linear scans of a list."""
    elements = [identity(n, d)]
    frontier = [identity(n, d)]
    while frontier:
        new = []
        for g in generators:
            for x in frontier:
                y = mat_mul(g, x)
                if not any(y == e for e in elements):
                    elements.append(y)
                    new.append(y)
        frontier = new
        if len(elements) > limit:
            raise RuntimeError("oracle closure too large")
    return elements


def naive_is_reflection(M):
    n = len(M)
    d = M[0][0].d
    I = identity(n, d)
    return mat_mul(M, M) == I and kernel(mat_sub(M, I)).dim == n - 1 and det(M) == -1


def naive_reflection_count(elements):
    return sum(1 for M in elements if naive_is_reflection(M))

