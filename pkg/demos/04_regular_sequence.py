"""
The cube algebra modulo y_0, ..., y_d
=====================================

Compute the bigraded Hilbert function of the quotient by exact linear
algebra and compare it with the (descent, major index) distribution.
"""

import time

from refined_ehrhart import verify_regular_sequence
from refined_ehrhart.graded_quotient import ideal_piece_matrix, exact_rank

M = ideal_piece_matrix(3, 2, 3)
print(M.rows, M.cols, exact_rank(M))

for d in range(1, 5):
    start = time.perf_counter()
    ok, table = verify_regular_sequence(d)
    print(d, ok, table.nonzero(), f"{time.perf_counter() - start:.2f}s")
