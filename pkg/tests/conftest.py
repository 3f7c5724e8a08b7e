import functools

import pytest

from refltk.coxeter import weyl_group
from refltk.roots import build_root_system


@functools.lru_cache(maxsize=None)
def group(type_, rank=None, m=None):
    return weyl_group(type_, rank, m)


@functools.lru_cache(maxsize=None)
def roots_of(type_, rank=None, m=None):
    return build_root_system(group(type_, rank, m))


# (type, rank, m) for every group small enough to brute-force in unit tests
SMALL = [("A", 1, None), ("A", 2, None), ("B", 2, None), ("G", 2, None), ("A", 3, None),
         ("B", 3, None), ("C", 3, None), ("I", 2, 5)]


@pytest.fixture(params=SMALL, ids=lambda t: f"{t[0]}{t[1]}" if t[2] is None else f"I2({t[2]})")
def small(request):
    t = request.param
    return group(*t), roots_of(*t)
