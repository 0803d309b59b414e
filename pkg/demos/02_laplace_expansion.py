"""Laplace expansion of an immanant along a set of rows.

For rows alpha, every beta in Q_{k,n} contributes the immanant of the
"braced" matrix X{alpha|beta}: the block X[alpha|beta] and its complement
X(alpha|beta) are kept and the two mixed blocks are cleared.
"""

import numpy as np
import sympy

from symtensor import brace, enumerate_index_maps, exact_matrix, immanant, laplace_expansion, partitions

# symbolic 4x4 matrix, expansion along the first two rows
a = np.array(sympy.Matrix(4, 4, lambda i, j: sympy.Symbol(f"a{i + 1}{j + 1}")).tolist(), dtype=object)
print("Summand matrices X{(1,2)|beta}:")
for beta in enumerate_index_maps(2, 4, "Q"):
    print(f"\nbeta = {beta}")
    print(sympy.Matrix(brace(a, (1, 2), beta)))

# numerical check over every row set
X = exact_matrix(np.arange(1, 17).reshape(4, 4) % 5 - 2)
print("\nNumerical check on an integer matrix:")
for lam in partitions(4):
    value = immanant(X, lam)
    alphas = [alpha for k in range(1, 5) for alpha in enumerate_index_maps(k, 4, "Q")]
    assert all(laplace_expansion(X, lam, alpha).total == value for alpha in alphas)
    print(f"  chi = {str(lam):<8} all {len(alphas)} row sets reproduce d_chi(X) = {value}")
