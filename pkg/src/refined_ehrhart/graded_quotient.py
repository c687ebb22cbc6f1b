"""Bigraded Hilbert function of the unit cube's semigroup algebra modulo
``y_0, ..., y_d``.

The degree ``(r, k)`` piece of the cube algebra has a basis made of the
lattice points of ``r C_d`` with coordinate sum ``k``.  Since the cube is
normal, multiplication is addition of points, so the ideal generated by

    y_j = sum of x_{v,1} over 0/1 vectors v with j ones

has degree ``(r, k)`` piece spanned by the vectors ``y_j * x_{u, r-1}``
with ``u`` ranging over points of ``(r-1) C_d`` of coordinate sum ``k - j``.
The quotient dimension is the number of basis points minus the rank of
the matrix of these vectors.
"""

import itertools
import math
import random
from dataclasses import dataclass, field

import numpy as np

from .lattice import enumerate_points, make_family
from .permstats import refined_eulerian
from .qpoly import QTPoly

MAX_DIM = 4


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples
    row_labels: tuple = ()
    col_labels: tuple = ()

    @classmethod
    def from_rows(cls, rows, ncols=None, row_labels=(), col_labels=()):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(row) != ncols for row in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), ncols, rows, tuple(row_labels), tuple(col_labels))

    def transpose(self):
        cols = tuple(zip(*self.entries)) if self.rows else ((),) * 0
        return IntegerMatrix(self.cols, self.rows, cols, self.col_labels, self.row_labels)

    def to_numpy(self):
        return np.array(self.entries, dtype=object).reshape(self.rows, self.cols)


@dataclass
class BigradedTable:
    """Finitely supported ``(r, k) -> dimension``; zero entries are not stored."""

    entries: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def nonzero(self):
        return {key: v for key, v in sorted(self.entries.items()) if v}

    def total(self):
        return sum(self.entries.values())

    def to_qtpoly(self):
        return QTPoly(self.nonzero())

    @classmethod
    def from_qtpoly(cls, p):
        return cls(dict(p.terms))

    def __eq__(self, other):
        if not isinstance(other, BigradedTable):
            return NotImplemented
        return self.nonzero() == other.nonzero()


def y_element_support(d, j):
    """0/1 vectors of length ``d`` with ``j`` ones, lexicographically."""
    if not 0 <= j <= d:
        raise ValueError(f"j must be in 0..{d}, got {j}")
    return [v for v in itertools.product((0, 1), repeat=d) if sum(v) == j]


def _weight_pieces(d, r):
    pieces = {}
    for v in enumerate_points(make_family("cube", d), r):
        pieces.setdefault(sum(v), []).append(v)
    return pieces


def ideal_piece_matrix(d, r, k):
    """Matrix of the spanning vectors of the ideal's degree ``(r, k)`` piece.

    Rows are indexed by points ``w`` of ``r C_d`` with sum ``k``; columns by
    pairs ``(j, u)`` with ``u`` a point of ``(r-1) C_d`` of sum ``k - j``.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    rows = _weight_pieces(d, r).get(k, [])
    lower = _weight_pieces(d, r - 1)
    index = {w: i for i, w in enumerate(rows)}
    col_labels = []
    columns = []
    for j in range(d + 1):
        support = y_element_support(d, j)
        for u in lower.get(k - j, []):
            col = [0] * len(rows)
            for v in support:
                w = tuple(x + y for x, y in zip(u, v))
                col[index[w]] += 1
            col_labels.append((j, u))
            columns.append(col)
    entries = tuple(tuple(col[i] for col in columns) for i in range(len(rows)))
    return IntegerMatrix(len(rows), len(columns), entries, tuple(rows), tuple(col_labels))


def _as_rows(M):
    if isinstance(M, IntegerMatrix):
        return M.entries, M.cols
    rows = [list(r) for r in M]
    return rows, (len(rows[0]) if rows else 0)


def exact_rank(M):
    """Rank over the rationals by fraction-free integer elimination.

    Each elimination step replaces ``row`` by ``p * row - a * pivot_row``
    and divides out the gcd of the result, so entries stay integral and
    small.  Pivot choice is deterministic: the sparsest candidate row, ties
    broken by smallest absolute pivot, then by position.
    """
    rows, ncols = _as_rows(M)
    work = []
    for row in rows:
        sparse = {j: int(x) for j, x in enumerate(row) if x}
        if sparse:
            work.append(sparse)
    rank = 0
    for col in range(ncols):
        cands = [i for i, row in enumerate(work) if col in row]
        if not cands:
            continue
        piv_i = min(cands, key=lambda i: (len(work[i]), abs(work[i][col]), i))
        pivot = work[piv_i]
        p = pivot[col]
        for i in cands:
            if i == piv_i:
                continue
            row = work[i]
            a = row[col]
            new = {j: p * x for j, x in row.items()}
            for j, x in pivot.items():
                v = new.get(j, 0) - a * x
                if v:
                    new[j] = v
                else:
                    new.pop(j, None)
            g = 0
            for x in new.values():
                g = math.gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                new = {j: x // g for j, x in new.items()}
            work[i] = new
        del work[piv_i]
        work = [row for row in work if row]
        rank += 1
    return rank


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def random_prime(rng=None, lo=2**30, hi=2**31):
    """A random prime in ``[lo, hi)``; results fit int64 products."""
    rng = rng or random.Random()
    while True:
        n = rng.randrange(lo, hi) | 1
        if n < hi and _is_prime(n):
            return n


def rank_mod_p(M, p):
    """Rank over ``GF(p)`` for ``p < 2**31``."""
    rows, ncols = _as_rows(M)
    A = np.array(rows, dtype=np.int64).reshape(len(rows), ncols) % p
    rank = 0
    nrows = A.shape[0]
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(A[rank:, col])[0]
        if len(nz) == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, col]), -1, p)
        A[rank] = (A[rank] * inv) % p
        idx = np.nonzero(A[rank + 1 :, col])[0] + rank + 1
        if len(idx):
            A[idx] = (A[idx] - (A[idx, col][:, None] * A[rank]) % p) % p
        rank += 1
    return rank


def _check_dim(d):
    if not isinstance(d, int) or not 1 <= d <= MAX_DIM:
        raise ValueError(f"quotient computations support 1 <= d <= {MAX_DIM}, got {d!r}")


def quotient_hilbert(d, r_max):
    """Bigraded Hilbert function of the quotient through t-degree ``r_max``."""
    _check_dim(d)
    if r_max < 0:
        raise ValueError("r_max must be nonnegative")
    entries = {(0, 0): 1}
    for r in range(1, r_max + 1):
        pieces = _weight_pieces(d, r)
        for k in range(r * d + 1):
            n = len(pieces.get(k, []))
            if n == 0:
                continue
            dim = n - exact_rank(ideal_piece_matrix(d, r, k))
            if dim:
                entries[(r, k)] = dim
    return BigradedTable(entries)


def verify_regular_sequence(d):
    """Finite certificate against the refined Eulerian polynomial.

    Returns ``(ok, table)``: ``ok`` holds when the quotient table through
    ``r = d + 2`` equals the (descent, major index) table of ``S_d`` and
    vanishes for ``r >= d``.  This checks finitely many degrees only.
    """
    table = quotient_hilbert(d, d + 2)
    expected = BigradedTable.from_qtpoly(refined_eulerian(d))
    vanishes = all(r < d for (r, _) in table.nonzero())
    ok = table == expected and vanishes and table.total() == math.factorial(d)
    return ok, table
