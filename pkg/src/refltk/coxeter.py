"""Standard presentations of the finite Coxeter types.

Types B, C, D and F live in Euclidean coordinates (identity Gram matrix) with
their usual simple roots.  Types A, G, H and I2(m) are given in the basis of
simple roots, with the Gram matrix of the simple roots.  H3, H4 and I2(m) for
m in {5, 10} need Q(sqrt 5); I2(8) needs Q(sqrt 2) and I2(12) Q(sqrt 3).
"""

import re

from .errors import UnknownType
from .field import Field, Scalar
from .groups import DEFAULT_CAP, close_group, reflection
from .linalg import BilinearSpace

__all__ = ["named_weyl", "weyl_group", "parse_type", "type_label", "I2_ORDERS"]

# 1 / cos(pi/m)^2 as (rational part, sqrt part, d)
_I2_SECANT_SQ = {
    3: (4, 0, 1),
    4: (2, 0, 1),
    5: (6, -2, 5),
    6: ("4/3", 0, 1),
    8: (4, -2, 2),
    10: (2, "-2/5", 5),
    12: (8, -4, 3),
}
I2_ORDERS = (2,) + tuple(sorted(_I2_SECANT_SQ))


def parse_type(type_, rank=None, m=None):
    """Normalise a type designation to ``(letter, rank, m)``."""
    t = str(type_).strip().replace("₂", "2")
    match = re.match(r"^([A-Ha-h])$", t)
    if match:
        return match.group(1).upper(), rank, None
    match = re.match(r"^[Ii]\s*2?\s*(?:\(\s*(\d+)\s*\))?$", t)
    if match:
        mm = int(match.group(1)) if match.group(1) else m
        if mm is None:
            raise UnknownType("I2 needs the parameter m, e.g. 'I2(5)'")
        return "I", 2 if rank is None else rank, int(mm)
    raise UnknownType(f"unknown Coxeter type {type_!r}")


def type_label(letter, rank, m=None):
    if letter == "I":
        return f"I2({m})"
    return f"{letter}{rank}"


def _unit(n, i, d=1):
    return [Scalar(1 if j == i else 0, 0, d) for j in range(n)]


def _simple_basis_gram(n, off, d=1):
    """Gram matrix ``2`` on the diagonal and ``off[(i, j)]`` on listed off-diagonal pairs."""
    zero = Scalar(0, 0, d)
    gram = [[Scalar(2, 0, d) if i == j else zero for j in range(n)] for i in range(n)]
    for (i, j), v in off.items():
        gram[i][j] = gram[j][i] = v
    return gram


def named_weyl(type_, rank=None, m=None):
    """Gram space and simple reflections of a finite Coxeter type.

    ``type_`` is one of ``A B C D F G H`` or ``"I2(m)"``.  Returns
    ``(BilinearSpace, [Reflection, ...])``.
    """
    letter, rank, m = parse_type(type_, rank, m)
    if not isinstance(rank, int) or rank < 1:
        raise UnknownType(f"rank must be a positive integer, got {rank!r}")
    n = rank

    if letter == "A":
        minus1 = Scalar(-1)
        gram = _simple_basis_gram(n, {(i, i + 1): minus1 for i in range(n - 1)})
        roots = [_unit(n, i) for i in range(n)]
    elif letter in "BCD":
        low = {"B": 2, "C": 2, "D": 4}[letter]
        if n < low:
            raise UnknownType(f"{letter}{n} is not a valid type (rank must be >= {low})")
        gram = [_unit(n, i) for i in range(n)]
        roots = [[Scalar(1 if j == i else -1 if j == i + 1 else 0) for j in range(n)] for i in range(n - 1)]
        if letter == "B":
            roots.append(_unit(n, n - 1))
        elif letter == "C":
            roots.append([Scalar(2 if j == n - 1 else 0) for j in range(n)])
        else:
            roots.append([Scalar(1 if j >= n - 2 else 0) for j in range(n)])
    elif letter == "F":
        if n != 4:
            raise UnknownType("type F exists only in rank 4")
        gram = [_unit(4, i) for i in range(4)]
        h = Scalar("1/2")
        roots = [
            [Scalar(0), Scalar(1), Scalar(-1), Scalar(0)],
            [Scalar(0), Scalar(0), Scalar(1), Scalar(-1)],
            _unit(4, 3),
            [h, -h, -h, -h],
        ]
    elif letter == "G":
        if n != 2:
            raise UnknownType("type G exists only in rank 2")
        gram = [[Scalar(2), Scalar(-3)], [Scalar(-3), Scalar(6)]]
        roots = [_unit(2, 0), _unit(2, 1)]
    elif letter == "H":
        if n not in (3, 4):
            raise UnknownType("type H exists only in ranks 3 and 4")
        F5 = Field(5)
        minus_phi = F5("-1/2-1/2r")
        off = {(0, 1): minus_phi}
        off.update({(i, i + 1): F5(-1) for i in range(1, n - 1)})
        gram = _simple_basis_gram(n, off, d=5)
        roots = [_unit(n, i, 5) for i in range(n)]
    elif letter == "I":
        if n != 2:
            raise UnknownType("type I2(m) has rank 2")
        if m == 2:
            gram = [_unit(2, 0), _unit(2, 1)]
        elif m in _I2_SECANT_SQ:
            a, b, d = _I2_SECANT_SQ[m]
            gram = [[Scalar(1, 0, d), Scalar(-1, 0, d)], [Scalar(-1, 0, d), Scalar(a, b, d)]]
        else:
            raise UnknownType(
                f"I2({m}) needs cos(pi/{m}) outside a quadratic field; supported m: {I2_ORDERS}"
            )
        roots = [_unit(2, 0), _unit(2, 1)]
    else:
        raise UnknownType(f"unknown Coxeter type {type_!r}")

    space = BilinearSpace(gram)
    return space, [reflection(space, r) for r in roots]


def weyl_group(type_, rank=None, m=None, cap=DEFAULT_CAP):
    space, gens = named_weyl(type_, rank, m)
    return close_group(space, gens, cap)
