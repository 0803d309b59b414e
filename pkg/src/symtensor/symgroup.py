"""Partitions, permutations and irreducible characters of the symmetric group.

Permutations are tuples of 0-based images, ``sigma[i]`` being the image of
``i``; this is the order produced by :func:`itertools.permutations`, which
also fixes the lexicographic enumeration of ``S_n`` used by the immanant
sums. Character values come from the Murnaghan-Nakayama rule evaluated on
beta-sets (bead positions on an abacus), so they are exact integers.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import chain, permutations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ShapeError, SizeLimitError

MAX_DEGREE = 10

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be nonincreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read a comma list such as ``"2,1,1"``."""
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        return cls(tuple(int(p) for p in text.split(",")))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))


def as_partition(chi) -> Partition:
    """Accept a Partition, an IrreducibleCharacter, a tuple of parts or a comma string."""
    if isinstance(chi, Partition):
        return chi
    if isinstance(chi, IrreducibleCharacter):
        return chi.partition
    if isinstance(chi, str):
        return Partition.parse(chi)
    if isinstance(chi, int):
        return Partition((chi,))
    return Partition(tuple(chi))


def partitions(m: int) -> list[Partition]:
    """All partitions of ``m`` in reverse-lexicographic order: (m), (m-1,1), ..., (1^m)."""

    def gen(rest: int, largest: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in gen(m, m)]


def cycle_type(sigma: Sequence[int]) -> Partition:
    seen = [False] * len(sigma)
    lengths = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = sigma[i]
            length += 1
        lengths.append(length)
    return Partition(tuple(sorted(lengths, reverse=True)))


def sign(sigma: Sequence[int]) -> int:
    mu = cycle_type(sigma)
    return -1 if (len(sigma) - len(mu)) % 2 else 1


def compose(sigma: Sequence[int], tau: Sequence[int]) -> Permutation:
    """``sigma o tau``: apply ``tau`` first."""
    return tuple(sigma[t] for t in tau)


def inverse(sigma: Sequence[int]) -> Permutation:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(inv)


def class_size(mu: Partition) -> int:
    """Number of permutations of cycle type ``mu``."""
    z = 1
    for length, mult in Counter(mu.parts).items():
        z *= length**mult * math.factorial(mult)
    return math.factorial(mu.weight) // z


def _check_degree(m: int):
    if not 0 <= m <= MAX_DEGREE:
        raise SizeLimitError(f"symmetric group degree {m} outside 0..{MAX_DEGREE}")


@lru_cache(maxsize=None)
def _murnaghan_nakayama(parts: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not parts else 0
    r, rest = mu[0], mu[1:]
    length = len(parts)
    beads = [p + length - 1 - i for i, p in enumerate(parts)]
    occupied = set(beads)
    total = 0
    for b in beads:
        c = b - r
        if c < 0 or c in occupied:
            continue
        # leg length of the removed rim hook = beads jumped over
        height = sum(1 for x in beads if c < x < b)
        moved = sorted((occupied - {b}) | {c}, reverse=True)
        smaller = tuple(x - (length - 1 - i) for i, x in enumerate(moved))
        smaller = tuple(p for p in smaller if p > 0)
        total += (-1) ** height * _murnaghan_nakayama(smaller, rest)
    return total


def character(lam, mu) -> int:
    """chi_lambda evaluated on the class of cycle type ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.weight != mu.weight:
        raise ShapeError(f"partition {lam} and cycle type {mu} have different weights")
    _check_degree(lam.weight)
    return _murnaghan_nakayama(lam.parts, mu.parts)


def degree(lam) -> int:
    """chi(id), the dimension of the irreducible representation."""
    lam = as_partition(lam)
    return character(lam, Partition((1,) * lam.weight))


@dataclass(frozen=True)
class IrreducibleCharacter:
    """An irreducible character of ``S_m`` labelled by a partition of ``m``."""

    partition: Partition

    @property
    def m(self) -> int:
        return self.partition.weight

    @property
    def degree(self) -> int:
        return degree(self.partition)

    def on_class(self, mu) -> int:
        return character(self.partition, mu)

    def __call__(self, sigma: Sequence[int]) -> int:
        return character_value(self, sigma)

    @property
    def values(self) -> dict[Partition, int]:
        return {mu: character(self.partition, mu) for mu in partitions(self.m)}

    def conjugate(self) -> "IrreducibleCharacter":
        return conjugate_character(self)


def as_character(chi) -> IrreducibleCharacter:
    if isinstance(chi, IrreducibleCharacter):
        return chi
    return IrreducibleCharacter(as_partition(chi))


def character_value(chi, sigma: Sequence[int]) -> int:
    chi = as_character(chi)
    if len(sigma) != chi.m:
        raise ShapeError(f"permutation of degree {len(sigma)} given to a character of S_{chi.m}")
    return character(chi.partition, cycle_type(sigma))


def conjugate_character(chi) -> IrreducibleCharacter:
    """The complex-conjugate character. Characters of S_m are integer valued,
    so this is the same character."""
    return as_character(chi)


@dataclass(frozen=True)
class CharacterTable:
    m: int
    partitions: tuple[Partition, ...]
    cycle_types: tuple[Partition, ...]
    values: np.ndarray  # rows: partitions, columns: cycle types

    def value(self, lam, mu) -> int:
        i = self.partitions.index(as_partition(lam))
        j = self.cycle_types.index(as_partition(mu))
        return int(self.values[i, j])

    def row(self, lam) -> dict[Partition, int]:
        i = self.partitions.index(as_partition(lam))
        return dict(zip(self.cycle_types, (int(v) for v in self.values[i])))

    @property
    def class_sizes(self) -> np.ndarray:
        return np.array([class_size(mu) for mu in self.cycle_types], dtype=object)


def character_table(m: int) -> CharacterTable:
    if not 1 <= m <= MAX_DEGREE:
        raise SizeLimitError(f"character tables are available for 1 <= m <= {MAX_DEGREE}, got {m}")
    parts = tuple(partitions(m))
    values = np.array([[character(lam, mu) for mu in parts] for lam in parts], dtype=np.int64)
    values.setflags(write=False)
    return CharacterTable(m, parts, parts, values)


@lru_cache(maxsize=None)
def permutation_table(n: int) -> np.ndarray:
    """All of ``S_n`` as an ``(n!, n)`` array, rows in lexicographic order."""
    _check_degree(n)
    count = math.factorial(n)
    flat = np.fromiter(chain.from_iterable(permutations(range(n))), dtype=np.int8, count=count * n)
    table = flat.reshape(count, n)
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def _class_indices(n: int) -> np.ndarray:
    """Index into ``partitions(n)`` of the cycle type of each row of the permutation table."""
    perms = permutation_table(n).astype(np.intp)
    rows = np.arange(perms.shape[0])[:, None]
    ident = np.arange(n)
    cur = np.broadcast_to(ident, perms.shape).copy()
    cycle_len = np.zeros(perms.shape, dtype=np.intp)
    for r in range(1, n + 1):
        cur = perms[rows, cur]
        hit = (cur == ident) & (cycle_len == 0)
        cycle_len[hit] = r
    # counts[:, L-1] = number of cycles of length L
    counts = np.stack([(cycle_len == L).sum(axis=1) // L for L in range(1, n + 1)], axis=1)
    lookup = {}
    for idx, mu in enumerate(partitions(n)):
        key = tuple(mu.parts.count(L) for L in range(1, n + 1))
        lookup[key] = idx
    uniq, inv = np.unique(counts, axis=0, return_inverse=True)
    mapped = np.array([lookup[tuple(int(c) for c in row)] for row in uniq], dtype=np.intp)
    out = mapped[inv.reshape(-1)]
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def character_vector(lam) -> np.ndarray:
    """chi_lambda on every permutation of :func:`permutation_table`, in the same order."""
    lam = as_partition(lam)
    n = lam.weight
    row = np.array([character(lam, mu) for mu in partitions(n)], dtype=np.int64)
    vec = row[_class_indices(n)]
    vec.setflags(write=False)
    return vec


def symmetric_group(m: int) -> Iterable[Permutation]:
    return permutations(range(m))
