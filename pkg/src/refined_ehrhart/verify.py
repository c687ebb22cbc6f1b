"""Identity checks comparing closed forms with lattice point enumeration.

Each check returns a ``CheckResult``; ``run_suite`` groups them by name.
"""

import itertools
from dataclasses import dataclass, field

from . import closed_forms as cf
from .lattice import make_family, refined_series_bruteforce
from .permstats import refined_eulerian
from .qpoly import DEFAULT_ORDER, QTPoly, QTSeries, q_binomial, q_integer, rational_equal, series_equal, series_expand

SUITES = ("simplex", "cross", "square", "cube", "macmahon", "ringC3")


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def record(self, ok, case):
        self.cases += 1
        if not ok:
            self.failures.append(case)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} ({self.cases} cases)"
        if self.failures:
            text += f"; first failure: {self.failures[0]}"
        return text


def weight_grid(d, lo, hi):
    return list(itertools.product(range(lo, hi + 1), repeat=d))


def oracle_check(name, family, d, weights, closed_form, N):
    """Closed-form expansion against enumeration for each weight tuple."""
    P = make_family(family, d)
    res = CheckResult(name)
    for a in weights:
        got = series_expand(closed_form(a), N)
        want = refined_series_bruteforce(P, a, N)
        res.record(series_equal(got, want, N), a)
    return res


def check_simplex(d_max=3, lo=-2, hi=2, N=DEFAULT_ORDER):
    res = CheckResult(f"simplex series, d<={d_max}, weights in [{lo},{hi}]")
    for d in range(1, d_max + 1):
        sub = oracle_check("", "simplex", d, weight_grid(d, lo, hi), lambda a, d=d: cf.simplex_series(d, a), N)
        res.cases += sub.cases
        res.failures += [(d, a) for a in sub.failures]
    return res


def check_gauss(d_max=4, r_max=8):
    """t^r coefficient of the simplex series at weights (1..d) is [r+d choose d]_q."""
    res = CheckResult(f"q-binomial slices of the simplex, d<={d_max}, r<={r_max}")
    for d in range(1, d_max + 1):
        s = series_expand(cf.simplex_series(d, tuple(range(1, d + 1))), r_max)
        for r in range(r_max + 1):
            res.record(s[r] == q_binomial(r + d, d), (d, r))
    return res


def check_cross(d_max=3, lo=-2, hi=2, N=DEFAULT_ORDER):
    res = CheckResult(f"cross-polytope series, d<={d_max}, weights in [{lo},{hi}]")
    for d in range(1, d_max + 1):
        sub = oracle_check("", "cross", d, weight_grid(d, lo, hi), lambda a, d=d: cf.cross_series(d, a), N)
        res.cases += sub.cases
        res.failures += [(d, a) for a in sub.failures]
    return res


def check_cross_axis(d_max=4):
    res = CheckResult(f"cross-polytope axis weights (0,...,0,1), d<={d_max}")
    for d in range(1, d_max + 1):
        a = (0,) * (d - 1) + (1,)
        res.record(rational_equal(cf.cross_series(d, a), cf.cross_series_axis(d)), d)
    return res


def check_square(lo=-3, hi=3, N=15):
    return oracle_check(
        f"square series, weights in [{lo},{hi}]^2", "cube", 2, weight_grid(2, lo, hi),
        lambda a: cf.square_series(*a), N,
    )


def check_square_corollary(lo=-3, hi=3, N=DEFAULT_ORDER):
    res = CheckResult(f"sum [r+1]_(q^a)[r+1]_(q^b) t^r, (a,b) in [{lo},{hi}]^2")
    for a in weight_grid(2, lo, hi):
        res.record(series_equal(cf.cube_series_from_products(a, N), series_expand(cf.square_series(*a), N), N), a)
    return res


def check_cube(lo=-2, hi=2, N=DEFAULT_ORDER):
    return oracle_check(
        f"cube series, weights in [{lo},{hi}]^3", "cube", 3, weight_grid(3, lo, hi),
        lambda a: cf.cube_series(*a), N,
    )


def check_cube_corollary(lo=-3, hi=3, N=DEFAULT_ORDER):
    res = CheckResult(f"sum [r+1]_(q^a)[r+1]_q^2 t^r, a in [{lo},{hi}]")
    for a in range(lo, hi + 1):
        lhs = cf.cube_series_from_products((a, 1, 1), N)
        rhs = cf.cube_series_a11(a)
        ok = series_equal(lhs, series_expand(rhs, N), N) and rational_equal(rhs, cf.cube_series(a, 1, 1))
        res.record(ok, a)
    return res


def check_specialisations():
    res = CheckResult("simplified displays at (1,1), (0,0), (1,1,1), (0,0,0)")
    res.record(rational_equal(cf.square_series(1, 1), cf.square_series_symmetric()), "square (1,1)")
    res.record(rational_equal(cf.square_series(0, 0), cf.cube_classical(2)), "square (0,0)")
    res.record(rational_equal(cf.cube_series(1, 1, 1), cf.cube_series_symmetric()), "cube (1,1,1)")
    res.record(rational_equal(cf.cube_series(0, 0, 0), cf.ringC3_pair()[0]), "cube (0,0,0)")
    return res


def symmetric_cube_series(d, N):
    """``sum_{r <= N} [r+1]_q^d t^r`` computed directly."""
    return QTSeries([q_integer(r + 1) ** d for r in range(N + 1)], N)


def check_macmahon(d_max=6, N=DEFAULT_ORDER):
    res = CheckResult(f"MacMahon-Carlitz, d<={d_max}")
    for d in range(1, d_max + 1):
        res.record(series_equal(symmetric_cube_series(d, N), series_expand(cf.macmahon_carlitz(d), N), N), d)
    return res


def check_ringC3():
    res = CheckResult("two presentations of the unit cube's Ehrhart series")
    res.record(rational_equal(*cf.ringC3_pair()), "ringC3")
    return res


def check_q_collapse(d_max=3):
    """At q = 1 the refined forms reduce to the classical Ehrhart series."""
    res = CheckResult(f"q=1 collapse to classical series, d<={d_max}")
    for d in range(1, d_max + 1):
        a = tuple(range(1, d + 1))
        res.record(rational_equal(cf.simplex_series(d, a).collapse_q(), cf.simplex_classical(d)), ("simplex", d))
        res.record(rational_equal(cf.cross_series(d, a).collapse_q(), cf.cross_classical(d)), ("cross", d))
        res.record(rational_equal(cf.macmahon_carlitz(d).collapse_q(), cf.cube_classical(d)), ("cube", d))
    res.record(rational_equal(cf.square_series(1, 2).collapse_q(), cf.cube_classical(2)), ("square", (1, 2)))
    res.record(rational_equal(cf.cube_series(1, 2, 3).collapse_q(), cf.cube_classical(3)), ("cube", (1, 2, 3)))
    return res


def run_suite(suite="all", order=DEFAULT_ORDER):
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    plan = {
        "simplex": lambda: [check_simplex(N=order), check_gauss(), check_q_collapse()],
        "cross": lambda: [check_cross(N=order), check_cross_axis()],
        "square": lambda: [check_square(N=order), check_square_corollary(N=order)],
        "cube": lambda: [check_cube(N=order), check_cube_corollary(N=order), check_specialisations()],
        "macmahon": lambda: [check_macmahon(N=order)],
        "ringC3": lambda: [check_ringC3()],
    }
    names = SUITES if suite == "all" else (suite,)
    results = []
    for name in names:
        results.extend(plan[name]())
    return results


def refined_eulerian_hilbert_link(d, N):
    """Truncated ``E^{(1,...,1)}_{C_d} * prod_j (1 - q^j t)`` through ``t**N``."""
    s = refined_series_bruteforce(make_family("cube", d), (1,) * d, N)
    for j in range(d + 1):
        s = s * QTPoly.linear_factor(j)
    return s, QTSeries.from_poly(refined_eulerian(d), N)
