"""
Closed forms versus enumeration
===============================

Each family has a rational generating function for the refined series.
Expanding it and comparing against brute-force enumeration is the whole
verification strategy.
"""

from refined_ehrhart import closed_forms as cf
from refined_ehrhart import make_family, rational_equal, refined_series_bruteforce, series_equal, series_expand

N = 10

for family, closed, a in [
    ("simplex", cf.simplex_series(3, (2, -1, 0)), (2, -1, 0)),
    ("cross", cf.cross_series(2, (1, 3)), (1, 3)),
    ("cube", cf.square_series(2, -1), (2, -1)),
    ("cube", cf.cube_series(1, -2, 3), (1, -2, 3)),
]:
    brute = refined_series_bruteforce(make_family(family, len(a)), a, N)
    print(family, a, series_equal(series_expand(closed, N), brute, N))

# With weights (1, 1) the square's formula loses a factor; in general it does not.
print(cf.square_series(1, 1).cancellable_factors())
print(cf.square_series(1, 2).cancellable_factors())
print(cf.square_series(1, 1).cancel(1))

# Two presentations of the unit cube's Ehrhart series agree as rational functions.
print(rational_equal(*cf.ringC3_pair()))
