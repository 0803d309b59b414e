"""Index maps and the basis index sets of a symmetry class of tensors.

Index maps are tuples of 1-based images, ``alpha[t - 1] == alpha(t)``.
Three families are used:

* ``Q``: strictly increasing maps ``{1..k} -> {1..n}``,
* ``G``: weakly increasing maps,
* ``Gamma``: all maps.

Every enumeration is lexicographic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import ShapeError, SizeLimitError
from .symgroup import (
    Partition,
    as_partition,
    character,
    class_size,
    cycle_type,
    degree,
    partitions,
    symmetric_group,
)

IndexMap = tuple[int, ...]

MAX_M = 6
MAX_N = 6


class Family(str, Enum):
    Q = "Q"
    G = "G"
    GAMMA = "Gamma"


def enumerate_index_maps(k: int, n: int, family) -> list[IndexMap]:
    family = Family(family)
    if k < 0 or n < 1:
        raise ShapeError(f"need k >= 0 and n >= 1, got k={k}, n={n}")
    values = range(1, n + 1)
    if family is Family.Q:
        if k > n:
            raise ShapeError(f"Q_{{{k},{n}}} is empty: k > n")
        return list(combinations(values, k))
    if family is Family.G:
        return list(combinations_with_replacement(values, k))
    return list(product(values, repeat=k))


def check_family(alpha: Sequence[int], n: int, family) -> IndexMap:
    family = Family(family)
    alpha = tuple(int(a) for a in alpha)
    if any(not 1 <= a <= n for a in alpha):
        raise ShapeError(f"index map {alpha} leaves 1..{n}")
    if family is Family.Q and any(a >= b for a, b in zip(alpha, alpha[1:])):
        raise ShapeError(f"index map {alpha} is not strictly increasing")
    if family is Family.G and any(a > b for a, b in zip(alpha, alpha[1:])):
        raise ShapeError(f"index map {alpha} is not increasing")
    return alpha


def index_sum(alpha: Sequence[int]) -> int:
    """|alpha| = alpha(1) + ... + alpha(k)."""
    return sum(alpha)


def complement(alpha: Sequence[int], n: int) -> IndexMap:
    """The strictly increasing enumeration of ``{1..n}`` minus the image of ``alpha``."""
    image = set(alpha)
    return tuple(i for i in range(1, n + 1) if i not in image)


def act(alpha: Sequence[int], sigma: Sequence[int]) -> IndexMap:
    """``alpha o sigma`` for a 0-based permutation ``sigma``."""
    return tuple(alpha[s] for s in sigma)


def stabilizer(alpha: Sequence[int]) -> list[tuple[int, ...]]:
    """All permutations ``sigma`` of ``S_m`` with ``alpha o sigma == alpha``."""
    alpha = tuple(alpha)
    return [s for s in symmetric_group(len(alpha)) if act(alpha, s) == alpha]


def orbit(alpha: Sequence[int]) -> list[IndexMap]:
    """The orbit ``{alpha o sigma}`` in lexicographic order."""
    return sorted({act(alpha, s) for s in symmetric_group(len(alpha))})


def orbit_representative(alpha: Sequence[int]) -> IndexMap:
    """First element of the orbit in lexicographic order, i.e. the sorted tuple."""
    return tuple(sorted(alpha))


@lru_cache(maxsize=None)
def _stabilizer_class_counts(multiplicities: tuple[int, ...]) -> dict[Partition, int]:
    # the stabiliser is a Young subgroup; its cycle-type census only depends on the block sizes
    alpha = tuple(i for i, c in enumerate(multiplicities) for _ in range(c))
    counts: dict[Partition, int] = {}
    for s in stabilizer(alpha):
        mu = cycle_type(s)
        counts[mu] = counts.get(mu, 0) + 1
    return counts


def stabilizer_character_sum(alpha: Sequence[int], chi) -> int:
    """Sum of chi over the stabiliser of ``alpha``."""
    lam = as_partition(chi)
    if lam.weight != len(alpha):
        raise ShapeError(f"character of S_{lam.weight} used with an index map of length {len(alpha)}")
    mult = tuple(sorted((list(alpha).count(v) for v in set(alpha)), reverse=True))
    return sum(c * character(lam, mu) for mu, c in _stabilizer_class_counts(mult).items())


def symmetry_class_dimension(chi, n: int) -> int:
    """dim V_chi = (chi(id)/m!) * sum_sigma chi(sigma) n^(number of cycles of sigma)."""
    lam = as_partition(chi)
    m = lam.weight
    total = sum(class_size(mu) * character(lam, mu) * n ** len(mu) for mu in partitions(m))
    dim = Fraction(degree(lam) * total, math.factorial(m))
    assert dim.denominator == 1
    return int(dim)


@dataclass(frozen=True)
class BasisIndexSet:
    """The ordered index sets Omega, Delta, Delta-bar and Delta-hat of a symmetry class."""

    m: int
    n: int
    partition: Partition
    omega: tuple[IndexMap, ...]
    delta: tuple[IndexMap, ...]
    delta_bar: tuple[IndexMap, ...]
    delta_hat: tuple[IndexMap, ...]

    @property
    def t(self) -> int:
        return len(self.delta_hat)


def _independent_subset(orbit_members: list[IndexMap], lam: Partition) -> list[IndexMap]:
    """Lexicographically greedy maximal independent subset of ``{e*_a}`` within one orbit.

    The pivot columns of the reduced row echelon form of the exact Gram block
    are exactly the columns a left-to-right greedy rank extension keeps.
    """
    from .tensorpower import gram_matrix

    gram = gram_matrix(orbit_members, lam)
    size = len(orbit_members)
    rows = [[QQ(int(g.numerator), int(g.denominator)) for g in row] for row in gram]
    _, pivots = DomainMatrix(rows, (size, size), QQ).rref()
    return [orbit_members[p] for p in pivots]


@lru_cache(maxsize=None)
def _build(lam: Partition, m: int, n: int) -> BasisIndexSet:
    gamma = enumerate_index_maps(m, n, Family.GAMMA)
    delta = enumerate_index_maps(m, n, Family.G)
    nonzero_rep = {rep for rep in delta if stabilizer_character_sum(rep, lam) != 0}
    omega = tuple(a for a in gamma if orbit_representative(a) in nonzero_rep)
    delta_bar = tuple(rep for rep in delta if rep in nonzero_rep)
    chosen: list[IndexMap] = []
    for rep in delta_bar:
        members = orbit(rep)
        picked = _independent_subset(members, lam)
        assert picked[0] == rep
        chosen.extend(picked)
    delta_hat = tuple(sorted(chosen))
    return BasisIndexSet(m, n, lam, omega, tuple(delta), delta_bar, delta_hat)


def build_basis_index_set(chi, m: int, n: int) -> BasisIndexSet:
    """Omega, Delta, Delta-bar and a basis index set Delta-hat for V_chi.

    Delta-hat extends Delta-bar greedily over Omega in lexicographic order,
    keeping an index exactly when it raises the rank of the Gram matrix;
    rank decisions are made in exact rational arithmetic.
    """
    lam = as_partition(chi)
    if lam.weight != m:
        raise ShapeError(f"partition {lam} does not have weight m={m}")
    if not (1 <= m <= MAX_M and 1 <= n <= MAX_N):
        raise SizeLimitError(f"basis index sets are limited to m, n <= {MAX_M}")
    return _build(lam, m, n)
