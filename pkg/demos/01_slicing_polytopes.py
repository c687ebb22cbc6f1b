"""
Slicing lattice polytopes
=========================

Count lattice points of dilations, then split the count by the level of a
linear functional v -> v . a.
"""

from refined_ehrhart import enumerate_points, make_family, refined_series_bruteforce, slice_polynomial
from refined_ehrhart.lattice import from_json

# The square [0, 1]^2 dilated by 2 has 9 lattice points.
square = make_family("cube", 2)
print(len(enumerate_points(square, 2)))

# Weight the two directions by 1 and 2: the slices are q^(x + 2y).
print(slice_polynomial(square, 1, (1, 2)))

# The cross-polytope with weights (1, 2) has slices on both sides of 0.
print(slice_polynomial(make_family("cross", 2), 1, (1, 2)))

# Any bounded integer inequality system works too.  2x + 3y <= 6 with x, y >= 0:
triangle = from_json({"dim": 2, "inequalities": [
    {"coeffs": [-1, 0], "rhs": 0},
    {"coeffs": [0, -1], "rhs": 0},
    {"coeffs": [2, 3], "rhs": 6},
]})
print(refined_series_bruteforce(triangle, (1, 1), 3))
