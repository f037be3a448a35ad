"""
Graded quotients J^k / J^(k+1)
==============================

Basic monomials of degree k span the k-th graded piece, and power series
expansion around the trivial representation shows they are independent.
"""

from fricke import basis, dim_gr
from fricke.graded import exact_rank, independence_matrix

for n in range(1, 5):
    print(n, [dim_gr(n, k) for k in range(1, 7)])

print([str(b) for b in basis(3, 2)])

# Degree-2k series coefficients of the basis, one row per basic monomial.
rows, cols = independence_matrix(3, 3)
print(len(rows), "rows,", len(cols), "columns, rank", exact_rank(rows))
