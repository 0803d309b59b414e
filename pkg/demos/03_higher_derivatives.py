"""Directional derivatives of immanants of every order.

Three independent formulas are evaluated: a sum of column-spliced
immanants, a multiple of a mixed immanant, and a sum of braced matrices
built from the directions. They agree in exact arithmetic, and agree with
the coefficient read off by polynomial interpolation.
"""

import warnings

import numpy as np

from symtensor import derivative_first, exact_matrix, immanant, partitions
from symtensor.derivatives import derivative_values
from symtensor.errors import DegenerateOrderWarning
from symtensor.oracle import poly_coefficient_derivative

rng = np.random.default_rng(3)


def gaussian(n):
    return exact_matrix(rng.integers(-2, 3, (n, n)) + 1j * rng.integers(-2, 3, (n, n)))


n = 4
A = gaussian(n)
dirs = [gaussian(n) for _ in range(n)]

print("First derivative, chi = (2,1,1):", derivative_first(A, dirs[0], (2, 1, 1)))

print("\nOrder k, every chi of S_4:")
for lam in partitions(n):
    for k in range(1, n + 1):
        values = derivative_values(A, dirs[:k], lam)
        oracle = poly_coefficient_derivative(lambda M: immanant(M, lam), A, dirs[:k], n)
        same = len(set(map(str, values.values()))) == 1 and values["first"] == oracle
        print(f"  chi = {str(lam):<8} k = {k}   {values['first']!s:<24} routes and oracle agree: {same}")

# beyond the degree of the polynomial the derivative vanishes
with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    values = derivative_values(A, dirs + [dirs[0]], (4,))
print("\nk = 5 > n:", {k: str(v) for k, v in values.items()},
      "flagged:", any(issubclass(w.category, DegenerateOrderWarning) for w in caught))
