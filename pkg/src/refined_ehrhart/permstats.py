"""Descents, major index and (refined) Eulerian polynomials.

Permutations are sequences of images ``(s(1), ..., s(d))`` and positions
are 1-indexed.  The polynomials are built by running over all of ``S_d``.
"""

import itertools
from functools import lru_cache

from .qpoly import QLaurent, QTPoly

MAX_DIM = 9


def _check_perm(sigma):
    s = tuple(sigma)
    if sorted(s) != list(range(1, len(s) + 1)):
        raise ValueError(f"{sigma!r} is not a permutation of 1..{len(s)}")
    return s


def descent_positions(sigma):
    s = _check_perm(sigma)
    return [i for i in range(1, len(s)) if s[i - 1] > s[i]]


def descent_count(sigma):
    return len(descent_positions(sigma))


def major_index(sigma):
    return sum(descent_positions(sigma))


def _check_range(d):
    if not isinstance(d, int) or not 1 <= d <= MAX_DIM:
        raise ValueError(f"d must be an integer in 1..{MAX_DIM}, got {d!r}")


@lru_cache(maxsize=None)
def _stat_counts(d):
    counts = {}
    for s in itertools.permutations(range(1, d + 1)):
        des = maj = 0
        for i in range(1, d):
            if s[i - 1] > s[i]:
                des += 1
                maj += i
        counts[(des, maj)] = counts.get((des, maj), 0) + 1
    return counts


def eulerian_polynomial(d):
    """``A_d(t)``, returned as a ``QLaurent`` in the variable ``t``."""
    _check_range(d)
    out = {}
    for (des, _), c in _stat_counts(d).items():
        out[des] = out.get(des, 0) + c
    return QLaurent(out)


def refined_eulerian(d):
    """Joint distribution of (descents, major index) on ``S_d`` as a ``QTPoly``."""
    _check_range(d)
    return QTPoly(_stat_counts(d))
