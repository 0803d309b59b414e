"""Character tables of S_m and the immanants they define.

The determinant and the permanent are the two ends of a family: each
irreducible character of S_n gives one immanant.
"""

import numpy as np

from symtensor import character_table, exact_matrix, immanant, partitions
from symtensor.oracle import determinant, permanent


table = character_table(4)
print("Character table of S_4 (rows: characters, columns: cycle types)")
print("        " + "".join(f"{str(mu):>10}" for mu in table.cycle_types))
for lam, row in zip(table.partitions, table.values):
    print(f"{str(lam):>8}" + "".join(f"{int(v):>10}" for v in row))

rng = np.random.default_rng(7)
A = exact_matrix(rng.integers(-3, 4, (4, 4)) + 1j * rng.integers(-3, 4, (4, 4)))

print("\nImmanants of a random Gaussian-integer 4x4 matrix")
for lam in partitions(4):
    print(f"  chi = {str(lam):<8} d_chi(A) = {immanant(A, lam)}")

# the two ends of the family
print("\n  determinant by elimination:", determinant(A))
print("  permanent by Ryser's formula:", permanent(A))

# transposing swaps nothing here: every character of S_n is real
for lam in partitions(4):
    assert immanant(A.T, lam) == immanant(A, lam)
print("\nd_chi(A^T) = d_chi(A) for every chi, as expected for real characters.")
