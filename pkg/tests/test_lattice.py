import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import family_points, slice_dict
from refined_ehrhart.closed_forms import cross_ehrhart_count
from refined_ehrhart.lattice import (
    PolytopeError,
    dilation_contains,
    enumerate_points,
    from_halfspaces,
    from_json,
    make_family,
    refined_series_bruteforce,
    slice_polynomial,
    sliced_count,
    standard_halfspaces,
    to_json,
)
from refined_ehrhart.qpoly import QLaurent

FAMILIES = ["simplex", "cross", "cube"]


def L(*pairs):
    return QLaurent(dict(pairs))


def test_make_family_small_cases():
    assert enumerate_points(make_family("cube", 1), 1) == [(0,), (1,)]
    assert enumerate_points(make_family("simplex", 2), 1) == [(0, 0), (0, 1), (1, 0)]
    assert enumerate_points(make_family("cross", 2), 1) == [(-1, 0), (0, -1), (0, 0), (0, 1), (1, 0)]


@pytest.mark.parametrize("bad", [0, -1])
def test_make_family_rejects_nonpositive_dim(bad):
    with pytest.raises(PolytopeError):
        make_family("cube", bad)


def test_make_family_rejects_unknown():
    with pytest.raises(PolytopeError, match="unknown polytope family"):
        make_family("dodecahedron", 3)


def test_dilation_contains_examples():
    cube, simplex, cross = (make_family(f, 2) for f in ("cube", "simplex", "cross"))
    assert dilation_contains(cube, 0, (0, 0))
    assert dilation_contains(simplex, 2, (1, 1))
    assert not dilation_contains(simplex, 2, (2, 1))
    assert not dilation_contains(cross, 1, (1, 1))
    with pytest.raises(ValueError):
        dilation_contains(cube, 1, (0, 0, 0))


def test_enumerate_examples():
    assert len(enumerate_points(make_family("simplex", 2), 2)) == 6
    assert len(enumerate_points(make_family("cube", 3), 2)) == 27
    assert set(enumerate_points(make_family("cross", 2), 1)) == {(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)}


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("d", [1, 2, 3])
def test_enumeration_matches_box_oracle(family, d):
    P = make_family(family, d)
    for r in range(5):
        pts = enumerate_points(P, r)
        assert pts == sorted(pts)
        assert pts == family_points(family, d, r)


def test_sliced_count_examples():
    assert sliced_count(make_family("simplex", 2), 2, (1, 1), 1) == math.comb(2, 1)
    for family in FAMILIES:
        assert sliced_count(make_family(family, 3), 0, (2, -1, 5), 0) == 1
    assert sliced_count(make_family("cross", 2), 1, (1, 2), -2) == 1


def test_sliced_count_simplex_layers():
    for d in range(1, 5):
        P = make_family("simplex", d)
        for r in range(6):
            for k in range(r + 1):
                assert sliced_count(P, r, (1,) * d, k) == math.comb(k + d - 1, d - 1)


def test_slice_polynomial_examples():
    assert slice_polynomial(make_family("cube", 2), 1, (1, 2)) == L((0, 1), (1, 1), (2, 1), (3, 1))
    assert slice_polynomial(make_family("cross", 2), 1, (1, 2)) == L((-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1))
    assert slice_polynomial(make_family("simplex", 2), 1, (0, 0)) == QLaurent(3)


def test_slice_polynomial_dim_mismatch():
    with pytest.raises(ValueError):
        slice_polynomial(make_family("cube", 2), 1, (1, 2, 3))


def test_bruteforce_series_examples():
    one, q = QLaurent(1), QLaurent.monomial(1)
    s = refined_series_bruteforce(make_family("simplex", 1), (1,), 2)
    assert s.coeffs == [one, one + q, one + q + q * q]
    s = refined_series_bruteforce(make_family("cube", 2), (1, 1), 1)
    assert s.coeffs == [one, L((0, 1), (1, 2), (2, 1))]
    assert refined_series_bruteforce(make_family("cross", 4), (1, -1, 2, 0), 0).coeffs == [one]


@pytest.mark.parametrize("d", range(1, 6))
def test_known_counts(d):
    simplex, cube, cross = (make_family(f, d) for f in ("simplex", "cube", "cross"))
    for r in range(11):
        assert len(enumerate_points(simplex, r)) == math.comb(r + d, d)
        assert len(enumerate_points(cube, r)) == (1 + r) ** d
        assert len(enumerate_points(cross, r)) == cross_ehrhart_count(d, r)


def test_cross_count_formula_examples():
    assert cross_ehrhart_count(2, 1) == 5
    assert cross_ehrhart_count(3, 2) == 25 == len(family_points("cross", 3, 2))
    assert all(cross_ehrhart_count(d, 0) == 1 for d in range(1, 7))


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_halfspace_family_agreement(family, d):
    P = make_family(family, d)
    H = from_halfspaces(standard_halfspaces(family, d))
    for r in range(9):
        assert enumerate_points(H, r) == enumerate_points(P, r)


def test_halfspace_json_round_trip():
    obj = {"dim": 2, "inequalities": [{"coeffs": [-1, 0], "rhs": 0}, {"coeffs": [0, -1], "rhs": 0},
                                      {"coeffs": [1, 2], "rhs": 2}]}
    P = from_json(obj)
    assert to_json(P) == obj
    assert enumerate_points(P, 1) == [(0, 0), (0, 1), (1, 0), (2, 0)]
    assert from_json({"family": "cross", "dim": 3}) == make_family("cross", 3)


def test_non_unimodular_halfspaces():
    # triangle with vertices (0,0), (3,0), (0,2): 2x + 3y <= 6
    P = from_halfspaces([((-1, 0), 0), ((0, -1), 0), ((2, 3), 6)])
    for r in range(6):
        want = [(x, y) for x in range(3 * r + 1) for y in range(2 * r + 1) if 2 * x + 3 * y <= 6 * r]
        assert enumerate_points(P, r) == want


def test_halfspace_validation():
    with pytest.raises(PolytopeError, match="unbounded"):
        from_halfspaces([((-1, 0), 0), ((0, -1), 0)])
    with pytest.raises(PolytopeError):
        from_halfspaces([((1,), -1), ((-1,), -1)])
    # feasible but no lattice point at r = 1: 1/3 <= x <= 2/3
    with pytest.raises(PolytopeError, match="no lattice point"):
        from_halfspaces([((3,), 2), ((-3,), -1)])
    with pytest.raises(PolytopeError):
        from_halfspaces([((1, 0), 1), ((1,), 1)])


# --- invariants on randomised cases

def _random_case(rng):
    family = rng.choice(FAMILIES)
    d = rng.randint(1, 4)
    r = rng.randint(0, 6)
    a = tuple(rng.randint(-3, 3) for _ in range(d))
    return make_family(family, d), r, a


def test_invariants_randomised():
    rng = random.Random(20261014)
    for _ in range(200):
        P, r, a = _random_case(rng)
        p = slice_polynomial(P, r, a)
        assert p.eval_q1() == len(enumerate_points(P, r))
        assert slice_polynomial(P, r, tuple(-x for x in a)) == p.negate_exponents()
        b = list(a)
        rng.shuffle(b)
        assert slice_polynomial(P, r, tuple(b)) == p
        assert all(c > 0 for c in p.terms.values())


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(FAMILIES),
    st.integers(1, 3).flatmap(lambda d: st.tuples(st.just(d), st.lists(st.integers(-4, 4), min_size=d, max_size=d))),
    st.integers(0, 4),
)
def test_slice_polynomial_matches_oracle(family, da, r):
    d, a = da
    P = make_family(family, d)
    assert slice_polynomial(P, r, a).terms == slice_dict(family_points(family, d, r), a)
