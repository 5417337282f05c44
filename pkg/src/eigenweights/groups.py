"""Group data shared by the closed formulas and the localization oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt
from typing import Optional

FAMILIES = ("A", "B", "C", "D")
COWEIGHTS = ("spin", "standard")


@dataclass(frozen=True)
class GroupSpec:
    """A classical root datum together with its minuscule coweight.

    ``m`` selects the coweight ``(1^m, 0^{n-m})`` in type A; ``coweight`` picks
    between the spin and standard coweights in type D.  Types B and C have a
    single minuscule coweight.
    """

    family: str
    n: int
    m: Optional[int] = None
    coweight: Optional[str] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        n = self.n
        if self.family == "A":
            if n < 2 or self.m is None or not 1 <= self.m < n:
                raise ValueError(f"type A needs n >= 2 and 1 <= m < n (got n={n}, m={self.m})")
        elif self.m is not None:
            raise ValueError("m only applies to type A")
        if self.family == "B" and n < 1:
            raise ValueError("type B needs n >= 1")
        if self.family in "CD" and n < 2:
            raise ValueError(f"type {self.family} needs n >= 2")
        if self.family == "D":
            if self.coweight is None:
                object.__setattr__(self, "coweight", "spin")
            if self.coweight not in COWEIGHTS:
                raise ValueError(f"unknown coweight {self.coweight!r}")
        elif self.coweight is not None:
            raise ValueError("coweight only applies to type D")

    @property
    def dim(self) -> int:
        """Dimension of the flag variety ``G/P_mu``."""
        n = self.n
        if self.family == "A":
            return self.m * (n - self.m)
        if self.family == "B":
            return 2 * n - 1
        if self.family == "C":
            return comb(n + 1, 2)
        return comb(n, 2) if self.coweight == "spin" else 2 * n - 2

    @property
    def N(self) -> int:
        return self.dim + 1

    @property
    def labels(self) -> tuple[str, ...]:
        """Generator labels of ``I / I^2`` in degree order of the index."""
        if self.family == "D":
            return tuple(f"p{k}" for k in range(1, self.n)) + ("Pf",)
        return tuple(f"p{k}" for k in range(1, self.n + 1))

    @property
    def block_labels(self) -> Optional[tuple[str, str]]:
        """The pair of generators sharing a degree (type D spin, even rank)."""
        if self.family == "D" and self.coweight == "spin" and self.n % 2 == 0:
            return (f"p{self.n // 2}", "Pf")
        return None

    @property
    def key(self) -> str:
        if self.family == "A":
            return f"A{self.n}(m={self.m})"
        if self.family == "D":
            return f"D{self.n}({self.coweight})"
        return f"{self.family}{self.n}"

    def to_dict(self) -> dict:
        out = {"family": self.family, "n": self.n}
        if self.m is not None:
            out["m"] = self.m
        if self.coweight is not None:
            out["coweight"] = self.coweight
        out["N"] = self.N
        return out


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def block_spectrum(matrix) -> tuple[Optional[tuple[Fraction, Fraction]], tuple[Fraction, Fraction, Fraction]]:
    """Eigenvalues of a 2x2 rational matrix when they are rational.

    Returns ``(eigenvalues or None, (1, -trace, det))``; eigenvalues are sorted
    in decreasing order.
    """
    (a, b), (c, d) = matrix
    tr, dt = Fraction(a + d), Fraction(a * d - b * c)
    root = _rational_sqrt(tr * tr - 4 * dt)
    poly = (Fraction(1), -tr, dt)
    if root is None:
        return None, poly
    return ((tr + root) / 2, (tr - root) / 2), poly


@dataclass
class EigenResult:
    """Eigenweights of the reduced operator on ``I / I^2``.

    ``eigenweights`` maps each generator label to its eigenvalue.  For type D
    spin in even rank the two generators of the shared degree are not
    eigenvectors; their 2x2 action (columns are images, basis ``block_basis``)
    is kept in ``block`` instead and those labels are absent from
    ``eigenweights``.
    """

    spec: GroupSpec
    eigenweights: dict = field(default_factory=dict)
    block: Optional[list] = None
    block_basis: Optional[tuple[str, str]] = None
    block_eigenvalues: Optional[tuple[Fraction, Fraction]] = None
    char_poly: Optional[tuple[Fraction, Fraction, Fraction]] = None

    def __post_init__(self):
        if self.block is not None:
            self.block = [[Fraction(x) for x in row] for row in self.block]
            self.block_eigenvalues, self.char_poly = block_spectrum(self.block)
        self.eigenweights = {k: Fraction(v) for k, v in self.eigenweights.items()}

    def spectrum(self) -> Optional[list[Fraction]]:
        """All eigenvalues on ``I / I^2`` (None if the block is not split over Q)."""
        values = list(self.eigenweights.values())
        if self.block is not None:
            if self.block_eigenvalues is None:
                return None
            values += list(self.block_eigenvalues)
        return sorted(values)
