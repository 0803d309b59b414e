"""The chi-symmetric tensor power K_chi(A) and its derivatives.

K_chi(A) is the restriction of A (x) ... (x) A to the symmetry class V_chi,
written in the orthonormal basis obtained from the decomposable symmetrised
tensors e*_alpha, alpha in Delta-hat. Here it is compared with an explicit
model that builds the Kronecker power and the symmetriser as dense matrices.
"""

import numpy as np

from symtensor import build_basis_index_set, exact_matrix, k_chi, k_chi_derivative, partitions
from symtensor.oracle import finite_difference_derivative, projector_oracle_k_chi
from symtensor.tensorpower import compound_derivative, symmetric_power_basis

rng = np.random.default_rng(11)
n, m = 3, 3
A = (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))) / np.sqrt(n)

for lam in partitions(m):
    index_set = build_basis_index_set(lam, m, n)
    if not index_set.t:
        print(f"chi = {lam}: V_chi is zero for n = {n}")
        continue
    err = np.max(np.abs(k_chi(A, lam, m) - projector_oracle_k_chi(A, lam, m)))
    print(f"chi = {str(lam):<6} dim V_chi = {index_set.t:>2}  Delta-hat starts {index_set.delta_hat[:3]}"
          f"  |K_chi(A) - model| = {err:.1e}")

# alternating character: everything stays exact, and K is the compound matrix
B = exact_matrix(rng.integers(-2, 3, (4, 4)))
X, Y = exact_matrix(rng.integers(-2, 3, (4, 4))), exact_matrix(rng.integers(-2, 3, (4, 4)))
_, basis = symmetric_power_basis((1, 1), 2, 4)
print("\nAlternating character, m = 2: B = sqrt(2) I:", np.allclose(basis.matrix, np.sqrt(2) * np.eye(6)))
D = k_chi_derivative(B, [X, Y], (1, 1), 2)
print("Second derivative of the compound, exact, matches the minor formula:",
      np.array_equal(D, compound_derivative(B, [X, Y], 2)))
print(np.vectorize(str)(D))

# principal character: compare with finite differences
dirs = [rng.normal(size=(n, n)) for _ in range(2)]
D = k_chi_derivative(A, dirs, (2,), 2)
F = finite_difference_derivative(lambda M: k_chi(M, (2,), 2), A, dirs)
print(f"\nInduced power, second derivative vs finite differences: relative error "
      f"{np.max(np.abs(D - F)) / np.max(np.abs(D)):.1e}")
