"""Directional derivatives of immanants of every order.

Three independent routes to ``D^k d_chi(A)(X^1, ..., X^k)`` are provided:

``first``
    sum over sigma in S_k and alpha in Q_{k,n} of d_chi(A(alpha; X^sigma(1), ..., X^sigma(k)))
``mixed``
    n!/(n-k)! times the mixed immanant Delta_chi(A; X^1, ..., X^k)
``second``
    sum over sigma, alpha, beta of d_chi(X^sigma_beta[alpha|beta] (+)_{alpha|beta} A(alpha|beta))

All three are exact on object arrays. For ``k > n`` the derivative of the
degree-n polynomial vanishes; the routines then return zero and emit a
:class:`~symtensor.errors.DegenerateOrderWarning`.
"""

from __future__ import annotations

import math
import warnings
from itertools import permutations
from typing import Sequence

import numpy as np
from sympy.utilities.iterables import multiset_permutations

from ._scalars import as_matrix, divide, zero_of
from .errors import DegenerateOrderWarning, MethodDisagreementError, ShapeError
from .immanant import (
    column_splice,
    deleted_submatrix,
    embedded_direct_sum,
    immanant,
    single_entry_matrix,
    submatrix,
)
from .indexcomb import Family, enumerate_index_maps
from .symgroup import as_partition

METHODS = ("first", "mixed", "second")
FLOAT_RTOL = 1e-9


def _prepare(A, directions, chi):
    A = as_matrix(A)
    n = A.shape[0]
    if not len(directions):
        raise ShapeError("at least one direction is required")
    dirs = []
    for X in directions:
        X = as_matrix(X, A.dtype == object)
        if X.shape != A.shape:
            raise ShapeError(f"direction of shape {X.shape} for a base point of shape {A.shape}")
        dirs.append(X)
    lam = as_partition(chi)
    if lam.weight != n:
        raise ShapeError(f"partition {lam} has weight {lam.weight}, matrix has order {n}")
    return A, dirs, lam


def _degenerate(A, k, n):
    warnings.warn(f"derivative of order {k} of a degree-{n} polynomial is identically zero",
                  DegenerateOrderWarning, stacklevel=3)
    return zero_of(A)


def agree(a, b, exact: bool) -> bool:
    if exact:
        return a == b
    scale = max(abs(complex(a)), abs(complex(b)), 1.0)
    return abs(complex(a) - complex(b)) <= FLOAT_RTOL * scale


def derivative_first(A, X, chi):
    """D d_chi(A)(X) by the Jacobi-type formula, checked against its two restatements.

    Computes tr(adj_chi(A)^T X), sum_j d_chi(A(j;X)) and
    sum_{i,j} x_ij d_chi(A(i|j)); raises MethodDisagreementError unless the
    three coincide.
    """
    A, (X,), lam = _prepare(A, [X], chi)
    n = A.shape[0]
    exact = A.dtype == object
    adj = np.empty_like(A)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            adj[i - 1, j - 1] = immanant(single_entry_matrix(A, i, j), lam)
    product = adj.T @ X
    trace_form = zero_of(A)
    for i in range(n):
        trace_form = trace_form + product[i, i]
    entry_form = zero_of(A)
    for i in range(n):
        for j in range(n):
            entry_form = entry_form + X[i, j] * adj[i, j]
    column_form = zero_of(A)
    for j in range(1, n + 1):
        column_form = column_form + immanant(column_splice(A, (j,), [X]), lam)
    if not (agree(trace_form, column_form, exact) and agree(entry_form, column_form, exact)):
        raise MethodDisagreementError(
            f"Jacobi forms disagree: trace={trace_form}, columns={column_form}, entries={entry_form}")
    return column_form


def derivative_k_first_expression(A, directions: Sequence, chi):
    A, dirs, lam = _prepare(A, directions, chi)
    n, k = A.shape[0], len(dirs)
    if k > n:
        return _degenerate(A, k, n)
    total = zero_of(A)
    for sigma in permutations(range(k)):
        ordered = [dirs[s] for s in sigma]
        for alpha in enumerate_index_maps(k, n, Family.Q):
            total = total + immanant(column_splice(A, alpha, ordered), lam)
    return total


def _labels(matrices: Sequence[np.ndarray]) -> list[int]:
    """Label equal matrices alike, so repeated arguments are summed once with a weight."""
    reps: list[np.ndarray] = []
    labels = []
    for M in matrices:
        for idx, R in enumerate(reps):
            if R.shape == M.shape and bool(np.all(R == M)):
                labels.append(idx)
                break
        else:
            reps.append(M)
            labels.append(len(reps) - 1)
    return labels


def mixed_immanant(matrices: Sequence, chi):
    """Delta_chi(M^1, ..., M^n) = (1/n!) sum_sigma d_chi(column j taken from M^sigma(j)).

    Repeated arguments are grouped: each distinct column assignment is
    evaluated once and weighted by the number of permutations producing it.
    """
    mats = [as_matrix(M) for M in matrices]
    if not mats:
        raise ShapeError("the mixed immanant needs at least one matrix")
    n = mats[0].shape[0]
    if len(mats) != n:
        raise ShapeError(f"the mixed immanant of order-{n} matrices takes {n} arguments, got {len(mats)}")
    if any(M.shape != mats[0].shape for M in mats):
        raise ShapeError("all arguments of the mixed immanant must have the same order")
    lam = as_partition(chi)
    if lam.weight != n:
        raise ShapeError(f"partition {lam} has weight {lam.weight}, matrices have order {n}")
    exact = any(M.dtype == object for M in mats)
    if exact:
        mats = [M if M.dtype == object else as_matrix(M, True) for M in mats]
    labels = _labels(mats)
    weight = math.prod(math.factorial(labels.count(v)) for v in set(labels))
    reps = {lab: mats[i] for i, lab in enumerate(labels)}
    total = zero_of(mats[0])
    for arrangement in multiset_permutations(labels):
        M = mats[0].copy()
        for j, lab in enumerate(arrangement):
            M[:, j] = reps[lab][:, j]
        total = total + immanant(M, lam)
    total = total * weight
    return divide(total, math.factorial(n))


def mixed_immanant_at(A, directions: Sequence, chi):
    """Delta_chi(A; X^1, ..., X^k): the remaining n - k slots filled with A."""
    A = as_matrix(A)
    n = A.shape[0]
    return mixed_immanant([A] * (n - len(directions)) + list(directions), chi)


def derivative_k_via_mixed(A, directions: Sequence, chi):
    A, dirs, lam = _prepare(A, directions, chi)
    n, k = A.shape[0], len(dirs)
    if k > n:
        return _degenerate(A, k, n)
    factor = math.factorial(n) // math.factorial(n - k)
    return factor * mixed_immanant_at(A, dirs, lam)


def spliced_zero_matrix(beta: Sequence[int], directions: Sequence, sigma: Sequence[int]) -> np.ndarray:
    """X^sigma_beta: column beta(p) taken from X^sigma(p), every other column zero."""
    first = as_matrix(directions[0])
    zero = np.zeros_like(first) if first.dtype != object else np.full(first.shape, zero_of(first), dtype=object)
    return column_splice(zero, beta, [directions[s] for s in sigma])


def derivative_k_second_expression(A, directions: Sequence, chi):
    A, dirs, lam = _prepare(A, directions, chi)
    n, k = A.shape[0], len(dirs)
    if k > n:
        return _degenerate(A, k, n)
    q = enumerate_index_maps(k, n, Family.Q)
    deleted = {(a, b): deleted_submatrix(A, a, b) for a in q for b in q}
    total = zero_of(A)
    for sigma in permutations(range(k)):
        for beta in q:
            spliced = spliced_zero_matrix(beta, dirs, sigma)
            for alpha in q:
                M = embedded_direct_sum(submatrix(spliced, alpha, beta), deleted[alpha, beta], alpha, beta)
                total = total + immanant(M, lam)
    return total


_ROUTES = {
    "first": derivative_k_first_expression,
    "mixed": derivative_k_via_mixed,
    "second": derivative_k_second_expression,
}


def derivative_values(A, directions: Sequence, chi, methods: Sequence[str] = METHODS) -> dict:
    """Evaluate the requested routes; returns ``{method: value}``."""
    out = {}
    for name in methods:
        if name not in _ROUTES:
            raise ValueError(f"unknown method {name!r}; choose from {', '.join(METHODS)}")
        out[name] = _ROUTES[name](A, directions, chi)
    return out


def methods_agree(values: dict, exact: bool) -> bool:
    vals = list(values.values())
    return all(agree(vals[0], v, exact) for v in vals[1:])


def derivative(A, directions: Sequence, chi, method: str = "first"):
    """k-th directional derivative of d_chi at A, k = len(directions).

    ``method="all"`` evaluates every route and raises
    MethodDisagreementError if any pair differs.
    """
    if method != "all":
        return derivative_values(A, directions, chi, [method])[method]
    values = derivative_values(A, directions, chi)
    exact = as_matrix(A).dtype == object
    if not methods_agree(values, exact):
        raise MethodDisagreementError(f"derivative routes disagree: {values}")
    return values["first"]
