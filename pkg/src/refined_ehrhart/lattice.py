"""Lattice polytopes, their dilations, and slice-refined lattice point counts.

A polytope is either one of three built-in families (``simplex``,
``cross``, ``cube``) or an integer half-space system ``A v <= b``.  The
``r``-fold dilation of a half-space polytope is ``A v <= r b``.

Enumeration is exact.  Points come back as tuples in lexicographic order.
"""

import itertools
import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import linprog

from .qpoly import QLaurent, QTSeries

FAMILIES = ("simplex", "cross", "cube")

# box padding absorbing LP round-off; membership is always rechecked exactly
_BOX_EPS = 1e-7


class PolytopeError(ValueError):
    """Invalid polytope description."""


@dataclass(frozen=True)
class LatticePolytope:
    dim: int
    shape: str
    inequalities: tuple = ()
    # per-coordinate bounds of the undilated polytope, as (lo, hi) floats
    bounds: tuple = ()

    def __repr__(self):
        if self.shape == "halfspaces":
            return f"LatticePolytope(dim={self.dim}, rows={len(self.inequalities)})"
        return f"LatticePolytope({self.shape}, dim={self.dim})"

    @property
    def is_family(self):
        return self.shape in FAMILIES

    def contains(self, r, v):
        return dilation_contains(self, r, v)

    def points(self, r):
        return enumerate_points(self, r)


def make_family(family, d):
    if family not in FAMILIES:
        raise PolytopeError(f"unknown polytope family {family!r}; expected one of {', '.join(FAMILIES)}")
    if not isinstance(d, int) or d < 1:
        raise PolytopeError(f"dimension must be a positive integer, got {d!r}")
    return LatticePolytope(d, family)


def _coordinate_bounds(A, b):
    d = A.shape[1]
    bounds = []
    for i in range(d):
        pair = []
        for sign in (1.0, -1.0):
            c = np.zeros(d)
            c[i] = sign
            res = linprog(c, A_ub=A, b_ub=b, bounds=[(None, None)] * d, method="highs")
            if res.status == 3:
                raise PolytopeError(f"half-space system is unbounded in coordinate {i}")
            if res.status == 2:
                raise PolytopeError("half-space system is infeasible")
            if res.status != 0:
                raise PolytopeError(f"could not bound coordinate {i}: {res.message}")
            pair.append(sign * res.fun)
        bounds.append((pair[0], pair[1]))
    return tuple(bounds)


def from_halfspaces(rows):
    """Polytope ``{v : coeffs . v <= rhs}`` from ``[(coeffs, rhs), ...]``.

    Boundedness is established by bounding every coordinate with a linear
    program; the system must contain a lattice point.
    """
    rows = [(tuple(int(x) for x in coeffs), int(rhs)) for coeffs, rhs in rows]
    if not rows:
        raise PolytopeError("at least one inequality is required")
    d = len(rows[0][0])
    if d < 1:
        raise PolytopeError("dimension must be at least 1")
    if any(len(coeffs) != d for coeffs, _ in rows):
        raise PolytopeError("all inequality rows must have the same length")
    A = np.array([coeffs for coeffs, _ in rows], dtype=float)
    b = np.array([rhs for _, rhs in rows], dtype=float)
    bounds = _coordinate_bounds(A, b)
    P = LatticePolytope(d, "halfspaces", tuple(rows), bounds)
    if not enumerate_points(P, 1):
        raise PolytopeError("half-space system has no lattice point")
    return P


def standard_halfspaces(family, d):
    """Textbook inequality description of a family polytope."""
    rows = []
    if family == "simplex":
        for i in range(d):
            rows.append((tuple(-int(j == i) for j in range(d)), 0))
        rows.append(((1,) * d, 1))
    elif family == "cube":
        for i in range(d):
            rows.append((tuple(-int(j == i) for j in range(d)), 0))
            rows.append((tuple(int(j == i) for j in range(d)), 1))
    elif family == "cross":
        for signs in itertools.product((1, -1), repeat=d):
            rows.append((signs, 1))
    else:
        raise PolytopeError(f"unknown polytope family {family!r}")
    return rows


def from_json(obj):
    """Parse the polytope JSON format (a dict or JSON text)."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if "family" in obj:
        return make_family(obj["family"], obj["dim"])
    if "inequalities" not in obj:
        raise PolytopeError("polytope JSON needs either 'family' or 'inequalities'")
    rows = [(row["coeffs"], row["rhs"]) for row in obj["inequalities"]]
    P = from_halfspaces(rows)
    if "dim" in obj and obj["dim"] != P.dim:
        raise PolytopeError(f"'dim' is {obj['dim']} but inequalities have length {P.dim}")
    return P


def to_json(P):
    if P.is_family:
        return {"family": P.shape, "dim": P.dim}
    return {
        "dim": P.dim,
        "inequalities": [{"coeffs": list(c), "rhs": b} for c, b in P.inequalities],
    }


def _check_dim(P, v, what="point"):
    if len(v) != P.dim:
        raise ValueError(f"{what} has length {len(v)}, polytope has dimension {P.dim}")


def dilation_contains(P, r, v):
    """Whether ``v`` lies in the dilation ``r P``."""
    _check_dim(P, v)
    if P.shape == "simplex":
        return all(x >= 0 for x in v) and sum(v) <= r
    if P.shape == "cross":
        return sum(abs(x) for x in v) <= r
    if P.shape == "cube":
        return all(0 <= x <= r for x in v)
    return all(sum(c * x for c, x in zip(coeffs, v)) <= r * rhs for coeffs, rhs in P.inequalities)


def _simplex_points(d, budget):
    if d == 0:
        yield ()
        return
    for x in range(budget + 1):
        for rest in _simplex_points(d - 1, budget - x):
            yield (x,) + rest


def _cross_points(d, budget):
    if d == 0:
        yield ()
        return
    for x in range(-budget, budget + 1):
        for rest in _cross_points(d - 1, budget - abs(x)):
            yield (x,) + rest


def _halfspace_array(P, r):
    lo = [math.floor(r * a - _BOX_EPS * max(1, r)) for a, _ in P.bounds]
    hi = [math.ceil(r * b + _BOX_EPS * max(1, r)) for _, b in P.bounds]
    A = np.array([c for c, _ in P.inequalities], dtype=np.int64)
    rhs = r * np.array([b for _, b in P.inequalities], dtype=np.int64)
    d = P.dim
    if d == 1:
        grid = np.arange(lo[0], hi[0] + 1, dtype=np.int64).reshape(-1, 1)
        return grid[np.all(grid @ A.T <= rhs, axis=1)]
    rest = np.indices([h - l + 1 for l, h in zip(lo[1:], hi[1:])], dtype=np.int64)
    rest = rest.reshape(d - 1, -1).T + np.array(lo[1:], dtype=np.int64)
    chunks = []
    # slab by slab in the first coordinate keeps memory bounded and order lexicographic
    for x0 in range(lo[0], hi[0] + 1):
        slab = np.hstack([np.full((len(rest), 1), x0, dtype=np.int64), rest])
        chunks.append(slab[np.all(slab @ A.T <= rhs, axis=1)])
    return np.vstack(chunks) if chunks else np.zeros((0, d), dtype=np.int64)


@lru_cache(maxsize=256)
def _points_array(P, r):
    d = P.dim
    if P.shape == "cube":
        arr = np.array(list(itertools.product(range(r + 1), repeat=d)), dtype=np.int64)
    elif P.shape == "simplex":
        arr = np.array(list(_simplex_points(d, r)), dtype=np.int64)
    elif P.shape == "cross":
        arr = np.array(list(_cross_points(d, r)), dtype=np.int64)
    else:
        arr = _halfspace_array(P, r)
    arr = arr.reshape(-1, d)
    arr.setflags(write=False)
    return arr


def enumerate_points(P, r):
    """All lattice points of ``r P``, lexicographically ordered."""
    if r < 0:
        raise ValueError("dilation factor must be nonnegative")
    return [tuple(int(x) for x in row) for row in _points_array(P, r)]


def count_points(P, r):
    if r < 0:
        raise ValueError("dilation factor must be nonnegative")
    return len(_points_array(P, r))


def _dots(P, r, a):
    _check_dim(P, a, "weight vector")
    return _points_array(P, r) @ np.asarray(a, dtype=np.int64)


def sliced_count(P, r, a, k):
    """Number of lattice points ``v`` of ``r P`` with ``v . a == k``."""
    return int(np.count_nonzero(_dots(P, r, a) == k))


def slice_polynomial(P, r, a):
    """``sum_k sliced_count(P, r, a, k) q**k``."""
    dots = _dots(P, r, a)
    if len(dots) == 0:
        return QLaurent()
    lo = int(dots.min())
    counts = np.bincount(dots - lo)
    return QLaurent({lo + i: int(c) for i, c in enumerate(counts) if c})


def refined_series_bruteforce(P, a, N):
    """Refined Ehrhart series through ``t**N`` by enumerating each dilation."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    _check_dim(P, a, "weight vector")
    return QTSeries([slice_polynomial(P, r, a) for r in range(N + 1)], N)


def ehrhart_count_simplex(d, r):
    return math.comb(r + d, d)


def ehrhart_count_cube(d, r):
    return (1 + r) ** d
