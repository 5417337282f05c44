"""Integer partitions and the Young-diagram combinatorics built on them.

Partitions are stored canonically (weakly decreasing, no trailing zeros) so that
they can serve directly as memoization keys.  Cells of a diagram are ``(row, col)``
pairs, zero-indexed, in English notation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest
from math import factorial, prod
from typing import Iterable, Iterator, Optional

from .linalg import det


class Partition(tuple):
    """An immutable, canonical integer partition.

    Accepts any iterable of nonnegative integers in weakly decreasing order;
    trailing zeros are dropped.

    >>> Partition([3, 2, 1, 0])
    Partition(3, 2, 1)
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts are not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def padded(self, n: int) -> tuple[int, ...]:
        """Parts padded with zeros to length ``n``."""
        if n < len(self):
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset((i, j) for i, row in enumerate(self) for j in range(row))

    def contains(self, other: Iterable[int]) -> bool:
        """True if the diagram of ``other`` sits inside this one."""
        other = tuple(other)
        return all(a >= b for a, b in zip_longest(self, other, fillvalue=0))

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"


def as_partition(parts: Iterable[int]) -> Partition:
    return parts if isinstance(parts, Partition) else Partition(parts)


@dataclass(frozen=True)
class BorderStrip:
    cells: frozenset
    height: int
    remainder: Partition

    @property
    def size(self) -> int:
        return len(self.cells)


def add_padded(a: Iterable[int], b: Iterable[int]) -> Partition:
    """Entrywise sum, the shorter partition padded with zeros."""
    return Partition(x + y for x, y in zip_longest(a, b, fillvalue=0))


def hook_partition(k: int, j: int) -> Partition:
    """The hook ``(k - j, 1^j)``."""
    if k < 1 or not 0 <= j <= k - 1:
        raise ValueError(f"hook_partition needs k >= 1 and 0 <= j < k, got k={k}, j={j}")
    return Partition((k - j,) + (1,) * j)


def staircases(n: int) -> tuple[Partition, Partition]:
    """Return ``(delta_n, rho_n) = ((n-1, ..., 1, 0), (n, ..., 1))``."""
    if n < 1:
        raise ValueError("staircases needs n >= 1")
    return Partition(range(n - 1, -1, -1)), Partition(range(n, 0, -1))


def border_strips(lam: Iterable[int], strip_size: int) -> list[BorderStrip]:
    """All border strips (rim hooks) of ``strip_size`` cells in ``lam``.

    Works on the beta-set ``{lam_i + (l - 1 - i)}``: removing a strip of size r
    moves one bead from b to an empty slot b - r, and the strip height is the
    number of beads jumped over.  Strips are returned top rows first.
    """
    lam = as_partition(lam)
    if strip_size < 1:
        raise ValueError("strip_size must be positive")
    length = len(lam)
    beads = [part + length - 1 - i for i, part in enumerate(lam)]
    occupied = set(beads)
    cells = lam.cells()
    strips = []
    for bead in beads:
        target = bead - strip_size
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beads if target < c < bead)
        new_beads = sorted((occupied - {bead}) | {target}, reverse=True)
        remainder = Partition(b - (length - 1 - i) for i, b in enumerate(new_beads))
        strips.append(BorderStrip(cells - remainder.cells(), height, remainder))
    return strips


def hook_lengths(lam: Iterable[int]) -> list[list[int]]:
    lam = as_partition(lam)
    conj = lam.conjugate()
    return [[row - j + conj[j] - i - 1 for j in range(row)] for i, row in enumerate(lam)]


@lru_cache(maxsize=None)
def _syt_count(lam: Partition) -> int:
    hooks = prod(h for row in hook_lengths(lam) for h in row)
    return factorial(lam.size) // hooks


def syt_count(lam: Iterable[int]) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length formula)."""
    return _syt_count(as_partition(lam))


def _inv_factorial(t: int) -> Fraction:
    return Fraction(0) if t < 0 else Fraction(1, factorial(t))


def skew_syt_count(lam: Iterable[int], nu: Iterable[int]) -> int:
    """Number of standard fillings of the skew shape ``lam / nu``.

    Uses Aitken's determinant ``d! * det[1 / (lam_i - nu_j - i + j)!]``.
    """
    lam, nu = as_partition(lam), as_partition(nu)
    if not lam.contains(nu):
        raise ValueError(f"{nu} is not contained in {lam}")
    length = len(lam)
    if length == 0:
        return 1
    mu = nu.padded(length)
    matrix = [[_inv_factorial(lam[i] - mu[j] - i + j) for j in range(length)] for i in range(length)]
    value = factorial(lam.size - nu.size) * det(matrix)
    assert value.denominator == 1
    return int(value)


def centralizer_size(nu: Iterable[int]) -> int:
    """``z_nu = prod_i i^{m_i} m_i!`` for the multiplicities ``m_i`` of ``nu``."""
    return prod(i**m * factorial(m) for i, m in Counter(as_partition(nu)).items())


def partitions_of(k: int, max_length: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``k`` with at most ``max_length`` parts, reverse-lexicographic."""
    if k < 0:
        raise ValueError("k must be nonnegative")

    def rec(remaining: int, cap: int, slots: Optional[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first, None if slots is None else slots - 1):
                yield (first,) + rest

    for parts in rec(k, k, max_length):
        yield Partition(parts)
