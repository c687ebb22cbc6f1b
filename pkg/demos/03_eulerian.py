"""
Eulerian polynomials and the MacMahon-Carlitz identity
======================================================
"""

from refined_ehrhart import eulerian_polynomial, macmahon_carlitz, q_integer, refined_eulerian, series_expand
from refined_ehrhart.qpoly import QTSeries, series_equal

for d in range(1, 6):
    print(d, eulerian_polynomial(d).to_str("t"))

print(refined_eulerian(4))

# sum_r [r+1]_q^d t^r equals refined A_d over prod_j (1 - q^j t)
N = 8
for d in range(1, 6):
    lhs = QTSeries([q_integer(r + 1) ** d for r in range(N + 1)], N)
    print(d, series_equal(lhs, series_expand(macmahon_carlitz(d), N), N))
