"""Immanants and the matrix surgery around the Laplace expansion.

Row and column positions follow the index-map convention of
:mod:`symtensor.indexcomb`: they are 1-based, so ``single_entry_matrix(A, 1, 1)``
pins the top-left entry and ``submatrix(X, (1, 3), (2, 3))`` picks rows 1, 3
and columns 2, 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._scalars import ONE, ZERO, as_matrix, zero_of, zeros_like
from .errors import ShapeError, SizeLimitError
from .indexcomb import Family, IndexMap, check_family, complement, enumerate_index_maps
from .symgroup import as_partition, character_vector, permutation_table

MAX_ORDER = 10
_FLOAT_BLOCK = 40320


def _nonzero(x) -> bool:
    try:
        return bool(x)
    except TypeError:
        # symbolic entries without a truth value
        return True


def immanant(A, chi):
    """d_chi(A) = sum over sigma in S_n of chi(sigma) * prod_i a[i, sigma(i)].

    Object arrays are summed exactly, skipping permutations that hit a zero
    entry; complex arrays are summed blockwise over the lexicographic
    enumeration of ``S_n``. The immanant of the empty matrix is 1.
    """
    A = as_matrix(A)
    lam = as_partition(chi)
    n = A.shape[0]
    if lam.weight != n:
        raise ShapeError(f"partition {lam} has weight {lam.weight}, matrix has order {n}")
    if n > MAX_ORDER:
        raise SizeLimitError(f"immanants are limited to order {MAX_ORDER}, got {n}")
    exact = A.dtype == object
    if n == 0:
        return ONE if exact else 1 + 0j
    perms = permutation_table(n)
    chi_vec = character_vector(lam)
    if not exact:
        rows = np.arange(n)
        total = 0j
        for start in range(0, perms.shape[0], _FLOAT_BLOCK):
            block = perms[start:start + _FLOAT_BLOCK]
            prods = A[rows, block].prod(axis=1)
            total += prods @ chi_vec[start:start + _FLOAT_BLOCK]
        return complex(total)

    mask = np.array([[_nonzero(x) for x in row] for row in A], dtype=bool)
    keep = chi_vec != 0
    for i in range(n):
        keep &= mask[i, perms[:, i]]
    entries = A.tolist()
    by_value: dict[int, object] = {}
    for p, c in zip(perms[keep].tolist(), chi_vec[keep].tolist()):
        prod = entries[0][p[0]]
        for i in range(1, n):
            prod = prod * entries[i][p[i]]
        by_value[c] = by_value[c] + prod if c in by_value else prod
    total = zero_of(A)
    for c, s in by_value.items():
        total = total + c * s
    return total


def single_entry_matrix(A, i: int, j: int) -> np.ndarray:
    """A(i|j): row i and column j cleared, entry (i, j) set to 1."""
    A = as_matrix(A)
    n = A.shape[0]
    if not (1 <= i <= n and 1 <= j <= n):
        raise ShapeError(f"entry ({i}, {j}) outside a matrix of order {n}")
    out = A.copy()
    zero = zero_of(A)
    out[i - 1, :] = zero
    out[:, j - 1] = zero
    out[i - 1, j - 1] = zero + 1
    return out


def immanantal_adjoint(A, chi) -> np.ndarray:
    """adj_chi(A), whose (i, j) entry is d_chi(A(i|j))."""
    A = as_matrix(A)
    n = A.shape[0]
    out = zeros_like(A)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out[i - 1, j - 1] = immanant(single_entry_matrix(A, i, j), chi)
    return out


def submatrix(X, alpha: Sequence[int], beta: Sequence[int], family=Family.Q) -> np.ndarray:
    """X[alpha|beta], entry (i, j) = x[alpha(i), beta(j)].

    ``family=Family.GAMMA`` admits repeated indices, as needed by the
    immanantal minors of a symmetric tensor power.
    """
    X = as_matrix(X)
    n = X.shape[0]
    alpha = check_family(alpha, n, family)
    beta = check_family(beta, n, family)
    if len(alpha) != len(beta):
        raise ShapeError(f"row map {alpha} and column map {beta} differ in length")
    return X[np.ix_([a - 1 for a in alpha], [b - 1 for b in beta])]


def deleted_submatrix(X, alpha: Sequence[int], beta: Sequence[int]) -> np.ndarray:
    """X(alpha|beta): rows alpha and columns beta deleted."""
    X = as_matrix(X)
    n = X.shape[0]
    alpha = check_family(alpha, n, Family.Q)
    beta = check_family(beta, n, Family.Q)
    return submatrix(X, complement(alpha, n), complement(beta, n))


def embedded_direct_sum(Akk, B, alpha: Sequence[int], beta: Sequence[int]) -> np.ndarray:
    """A (+)_{alpha|beta} B.

    ``Akk`` (order k) fills rows alpha and columns beta, ``B`` (order n - k)
    fills the complementary rows and columns; the two mixed blocks are zero.
    """
    Akk = np.asarray(Akk)
    B = np.asarray(B)
    k = len(alpha)
    if len(beta) != k:
        raise ShapeError("alpha and beta must have the same length")
    if Akk.shape != (k, k):
        raise ShapeError(f"first block must have order {k}, got shape {Akk.shape}")
    if B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise ShapeError(f"second block must be square, got shape {B.shape}")
    n = k + B.shape[0]
    alpha = check_family(alpha, n, Family.Q)
    beta = check_family(beta, n, Family.Q)
    exact = Akk.dtype == object or B.dtype == object
    if exact:
        proto = Akk if Akk.size else B
        out = np.full((n, n), zero_of(proto) if proto.size else ZERO, dtype=object)
    else:
        out = np.zeros((n, n), dtype=np.result_type(Akk.dtype, B.dtype, complex))
    a0 = [a - 1 for a in alpha]
    b0 = [b - 1 for b in beta]
    out[np.ix_(a0, b0)] = Akk
    out[np.ix_([a - 1 for a in complement(alpha, n)], [b - 1 for b in complement(beta, n)])] = B
    return out


def brace(X, alpha: Sequence[int], beta: Sequence[int]) -> np.ndarray:
    """X{alpha|beta} = X[alpha|beta] (+)_{alpha|beta} X(alpha|beta)."""
    return embedded_direct_sum(submatrix(X, alpha, beta), deleted_submatrix(X, alpha, beta), alpha, beta)


@dataclass
class LaplaceTerm:
    beta: IndexMap
    matrix: np.ndarray
    value: object


@dataclass
class LaplaceExpansion:
    alpha: IndexMap
    total: object
    terms: list[LaplaceTerm] = field(default_factory=list)


def laplace_expansion(X, chi, alpha: Sequence[int]) -> LaplaceExpansion:
    """Expand d_chi(X) along the rows alpha: sum over beta in Q_{k,n} of d_chi(X{alpha|beta})."""
    X = as_matrix(X)
    n = X.shape[0]
    alpha = check_family(alpha, n, Family.Q)
    if not 1 <= len(alpha) <= n:
        raise ShapeError(f"need 1 <= k <= {n}, got alpha={alpha}")
    lam = as_partition(chi)
    if lam.weight != n:
        raise ShapeError(f"partition {lam} has weight {lam.weight}, matrix has order {n}")
    terms = []
    total = None
    for beta in enumerate_index_maps(len(alpha), n, Family.Q):
        M = brace(X, alpha, beta)
        value = immanant(M, lam)
        terms.append(LaplaceTerm(beta, M, value))
        total = value if total is None else total + value
    return LaplaceExpansion(alpha, total, terms)


def column_splice(A, alpha: Sequence[int], sources: Sequence) -> np.ndarray:
    """A(alpha; X^1, ..., X^k): column alpha(j) of A replaced by column alpha(j) of X^j."""
    A = as_matrix(A)
    n = A.shape[0]
    alpha = check_family(alpha, n, Family.Q)
    if len(sources) != len(alpha):
        raise ShapeError(f"{len(alpha)} positions but {len(sources)} source matrices")
    out = A.copy()
    for a, X in zip(alpha, sources):
        X = np.asarray(X)
        if X.shape != A.shape:
            raise ShapeError(f"source of shape {X.shape} spliced into a matrix of shape {A.shape}")
        if out.dtype != object and X.dtype == object:
            out = out.astype(object)
        out[:, a - 1] = X[:, a - 1]
    return out
