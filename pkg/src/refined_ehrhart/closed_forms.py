"""Closed-form refined Ehrhart series and counting formulas.

Every function returns an unsimplified ``QTRational`` (or a ``QLaurent``
/ integer for counts).  None of these are trusted on their own; the test
suite checks each one against lattice point enumeration.
"""

import math

from .permstats import eulerian_polynomial, refined_eulerian
from .qpoly import QLaurent, QTPoly, QTRational, QTSeries, q_integer


def _check_weights(d, a):
    if len(a) != d:
        raise ValueError(f"expected {d} weights, got {len(a)}")


def _terms(*pairs):
    """QTPoly from ``(coeff, t_exp, q_exp)`` triples, summing repeats."""
    out = {}
    for c, r, k in pairs:
        out[(r, k)] = out.get((r, k), 0) + c
    return QTPoly(out)


def simplex_series(d, a):
    _check_weights(d, a)
    return QTRational(QTPoly(1), [0, *a])


def cross_series(d, a):
    _check_weights(d, a)
    num = QTPoly({(0, 0): 1, (1, 0): 1}) ** d * QTPoly({(0, 0): 1, (1, 0): -1}) ** (d - 1)
    return QTRational(num, [*a, *(-x for x in a)])


def cross_series_axis(d):
    """Displayed form for weights ``(0, ..., 0, 1)``, one ``(1 - t)`` cancelled."""
    num = QTPoly({(0, 0): 1, (1, 0): 1}) ** d
    return QTRational(num, [1, -1] + [0] * (d - 1))


def cross_ehrhart_count(d, r):
    total = 0
    for k in range(d + 1):
        n = r - k + d
        total += math.comb(d, k) * (math.comb(n, d) if n >= d else 0)
    return total


def square_series(a, b):
    num = _terms((1, 0, 0), (-1, 2, a + b))
    return QTRational(num, [0, a, b, a + b])


def square_series_symmetric():
    """The cancelled form for weights ``(1, 1)``."""
    return QTRational(_terms((1, 0, 0), (1, 1, 1)), [0, 1, 2])


def cube_numerator(a, b, c):
    s = a + b + c
    return _terms(
        (1, 0, 0),
        # t^2
        (-3, 2, s),
        (-1, 2, s + a),
        (-1, 2, s + b),
        (-1, 2, s + c),
        (-1, 2, a + b),
        (-1, 2, a + c),
        (-1, 2, b + c),
        # t^3
        (2, 3, s),
        (2, 3, s + a),
        (2, 3, s + b),
        (2, 3, s + c),
        (2, 3, s + a + b),
        (2, 3, s + a + c),
        (2, 3, s + b + c),
        (2, 3, 2 * s),
        # t^4
        (-1, 4, s + a + b),
        (-1, 4, s + a + c),
        (-1, 4, s + b + c),
        (-3, 4, 2 * s),
        (-1, 4, 2 * s + a),
        (-1, 4, 2 * s + b),
        (-1, 4, 2 * s + c),
        # t^6
        (1, 6, 3 * s),
    )


def cube_series(a, b, c):
    den = [0, a, b, c, a + b, a + c, b + c, a + b + c]
    return QTRational(cube_numerator(a, b, c), den)


def cube_series_symmetric():
    """Displayed simplified form for weights ``(1, 1, 1)``."""
    return QTRational(_terms((1, 0, 0), (2, 1, 1), (2, 1, 2), (1, 2, 3)), [0, 1, 2, 3])


def cube_series_a11(a):
    """Closed form of ``sum_r [r+1]_{q^a} [r+1]_q^2 t^r``."""
    num = _terms(
        (1, 0, 0),
        (1, 1, a + 1),
        (1, 1, 1),
        (-2, 2, a + 3),
        (-2, 2, a + 2),
        (-2, 2, a + 1),
        (1, 3, 2 * a + 3),
        (1, 3, a + 3),
        (1, 4, 2 * a + 4),
    )
    return QTRational(num, [0, 1, 2, a, a + 1, a + 2])


def cube_slice_product(d, r, a):
    """``prod_j [r+1]_{q^{a_j}}``."""
    _check_weights(d, a)
    out = QLaurent(1)
    for x in a:
        out = out * q_integer(r + 1, x)
    return out


def cube_series_from_products(a, N):
    """``sum_{r <= N} prod_j [r+1]_{q^{a_j}} t^r`` as a truncated series."""
    return QTSeries([cube_slice_product(len(a), r, a) for r in range(N + 1)], N)


def macmahon_carlitz(d):
    if not 1 <= d <= 8:
        raise ValueError(f"d must be in 1..8, got {d}")
    return QTRational(refined_eulerian(d), range(d + 1))


# classical (q = 1) Ehrhart series


def simplex_classical(d):
    return QTRational(QTPoly(1), [0] * (d + 1))


def cross_classical(d):
    return QTRational(QTPoly({(0, 0): 1, (1, 0): 1}) ** d, [0] * (d + 1))


def cube_classical(d):
    num = QTPoly({(r, 0): c for r, c in eulerian_polynomial(d).terms.items()})
    return QTRational(num, [0] * (d + 1))


def ringC3_pair():
    """The two presentations of the unit cube's Ehrhart series."""
    short = QTRational(_terms((1, 0, 0), (4, 1, 0), (1, 2, 0)), [0] * 4)
    long = QTRational(
        _terms((1, 0, 0), (-9, 2, 0), (16, 3, 0), (-9, 4, 0), (1, 6, 0)), [0] * 8
    )
    return short, long


class NoClosedForm(ValueError):
    """No closed form is implemented for the requested polytope and weights."""


def closed_series_for(P, a):
    """Closed form matching a family polytope and weight vector."""
    d = P.dim
    _check_weights(d, a)
    if P.shape == "simplex":
        return simplex_series(d, a)
    if P.shape == "cross":
        return cross_series(d, a)
    if P.shape == "cube":
        if d == 1:
            return simplex_series(1, a)
        if d == 2:
            return square_series(*a)
        if d == 3:
            return cube_series(*a)
        if all(x == 1 for x in a) and d <= 8:
            return macmahon_carlitz(d)
        raise NoClosedForm(
            "no closed form for cubes of dimension >= 4 with non-symmetric weights "
            "(the numerator would have thousands of terms); use --brute"
        )
    raise NoClosedForm("closed forms exist only for the simplex, cross-polytope and cube families")
