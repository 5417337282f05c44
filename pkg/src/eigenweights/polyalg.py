"""Exact sparse polynomials in ``Q[x_1, ..., x_n]``.

Coefficients are Python rationals: plain ``int`` where integral, ``Fraction``
otherwise.  Exponent vectors are dense tuples of length ``nvars``.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from numbers import Rational
from operator import add, sub
from typing import Iterable, Mapping, Optional, Sequence

from .linalg import solve
from .partitions import Partition, as_partition, partitions_of


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return _normalize(Fraction(a) / b)


def _grlex(e: tuple) -> tuple:
    return (sum(e), e)


class MultiPoly:
    """Immutable sparse polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[tuple, Rational]] = None):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have length {nvars}")
            if c:
                clean[tuple(exp)] = _normalize(c)
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> MultiPoly:
        # trusted constructor: terms already clean
        poly = object.__new__(cls)
        poly.nvars = nvars
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls, nvars: int) -> MultiPoly:
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> MultiPoly:
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> MultiPoly:
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def var(cls, nvars: int, i: int) -> MultiPoly:
        """The variable ``x_{i+1}`` (zero-indexed ``i``)."""
        exp = [0] * nvars
        exp[i] = 1
        return cls.monomial(exp)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exp: Sequence[int]):
        return self.terms.get(tuple(exp), 0)

    def leading_term(self) -> tuple[tuple, Rational]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        exp = max(self.terms, key=_grlex)
        return exp, self.terms[exp]

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: MultiPoly) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, Rational):
            return MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = _normalize(s)
            else:
                terms.pop(e, None)
        return MultiPoly._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> MultiPoly:
        if not c:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(self.nvars, {e: _normalize(v * c) for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        terms: dict = {}
        get = terms.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(add, e1, e2))
                terms[e] = get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Rational):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, key=_grlex, reverse=True):
            mono = " ".join(f"x{i + 1}^{a}" if a > 1 else f"x{i + 1}" for i, a in enumerate(e) if a)
            pieces.append(f"{self.terms[e]} * {mono}" if mono else f"{self.terms[e]}")
        return " + ".join(pieces)


# -- structural operations ---------------------------------------------------


def partial_derivative(f: MultiPoly, direction: Sequence) -> MultiPoly:
    """Directional derivative ``sum_i direction[i] * df/dx_i``."""
    if len(direction) != f.nvars:
        raise ValueError("direction length must equal the number of variables")
    terms: dict = {}
    for e, c in f.terms.items():
        for i, d in enumerate(direction):
            if d and e[i]:
                new = e[:i] + (e[i] - 1,) + e[i + 1 :]
                terms[new] = terms.get(new, 0) + c * e[i] * d
    return MultiPoly(f.nvars, terms)


def apply_signed_permutation(f: MultiPoly, perm: Sequence[int], signs: Optional[Sequence[int]] = None) -> MultiPoly:
    """Substitute ``x_i -> signs[i] * x_{perm[i]}`` (zero-indexed)."""
    n = f.nvars
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of {n} letters")
    terms = {}
    for e, c in f.terms.items():
        new = [0] * n
        sign = 1
        for i, a in enumerate(e):
            new[perm[i]] = a
            if signs is not None and signs[i] < 0 and a & 1:
                sign = -sign
        terms[tuple(new)] = c if sign > 0 else -c
    return MultiPoly._raw(n, terms)


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions & 1 else 1


@lru_cache(maxsize=None)
def signed_permutations(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All permutations of ``range(n)`` paired with their signs."""
    return tuple((p, permutation_sign(p)) for p in permutations(range(n)))


def antisymmetrize(f: MultiPoly) -> MultiPoly:
    """``sum_{w in S_n} sgn(w) w(f)``."""
    n = f.nvars
    terms: dict = {}
    get = terms.get
    for perm, sgn in signed_permutations(n):
        for e, c in f.terms.items():
            new = [0] * n
            for i, a in enumerate(e):
                new[perm[i]] = a
            key = tuple(new)
            terms[key] = get(key, 0) + (c if sgn > 0 else -c)
    return MultiPoly(n, terms)


def vandermonde(n: int) -> MultiPoly:
    """``prod_{i<j} (x_i - x_j)``."""
    result = MultiPoly.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            result = result * (MultiPoly.var(n, i) - MultiPoly.var(n, j))
    return result


def alternant(gamma: Sequence[int], n: int) -> MultiPoly:
    """``a_gamma = sum_w sgn(w) w(x^gamma)``; zero when ``gamma`` repeats an entry."""
    if len(gamma) != n:
        raise ValueError("alternant needs len(gamma) == n")
    if len(set(gamma)) < n:
        return MultiPoly.zero(n)
    return antisymmetrize(MultiPoly.monomial(gamma))


def exact_divide(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    """Quotient ``q`` with ``q * den == num``; raises NotDivisibleError otherwise.

    Division by repeated cancellation of graded-lex leading terms.
    """
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    n = num.nvars
    lead, lead_c = den.leading_term()
    rest = [(e, c) for e, c in den.terms.items() if e != lead]
    rem = dict(num.terms)
    heap = [(-sum(e), tuple(-a for a in e)) for e in rem]
    heapq.heapify(heap)
    quotient = {}
    while heap:
        _, neg = heapq.heappop(heap)
        e = tuple(-a for a in neg)
        c = rem.pop(e, 0)
        if not c:
            continue
        q_exp = tuple(map(sub, e, lead))
        if min(q_exp) < 0:
            raise NotDivisibleError(f"leading term x^{e} is not divisible by x^{lead}")
        q_c = _div(c, lead_c)
        quotient[q_exp] = q_c
        for de, dc in rest:
            t = tuple(map(add, q_exp, de))
            old = rem.get(t)
            new = (old or 0) - q_c * dc
            if new:
                rem[t] = new
                if old is None:
                    heapq.heappush(heap, (-sum(t), tuple(-a for a in t)))
            elif old is not None:
                del rem[t]
    return MultiPoly(n, quotient)


# -- symmetric polynomials ---------------------------------------------------


def power_sum(k: int, n: int) -> MultiPoly:
    """``p_k = x_1^k + ... + x_n^k`` (``p_0 = n``)."""
    if k == 0:
        return MultiPoly.constant(n, n)
    return MultiPoly(n, {tuple(k if i == j else 0 for j in range(n)): 1 for i in range(n)})


def power_sum_product(nu: Iterable[int], n: int) -> MultiPoly:
    result = MultiPoly.one(n)
    for part in nu:
        result = result * power_sum(part, n)
    return result


def elementary(k: int, n: int) -> MultiPoly:
    from itertools import combinations

    return MultiPoly(n, {tuple(1 if j in s else 0 for j in range(n)): 1 for s in combinations(range(n), k)})


def pfaffian(n: int) -> MultiPoly:
    """``x_1 x_2 ... x_n``."""
    return MultiPoly.monomial((1,) * n)


@lru_cache(maxsize=None)
def _schur(lam: Partition, n: int) -> MultiPoly:
    if len(lam) > n:
        return MultiPoly.zero(n)
    gamma = tuple(p + n - 1 - i for i, p in enumerate(lam.padded(n)))
    return exact_divide(alternant(gamma, n), _vandermonde(n))


@lru_cache(maxsize=None)
def _vandermonde(n: int) -> MultiPoly:
    return vandermonde(n)


def schur(lam: Iterable[int], n: int) -> MultiPoly:
    """Schur polynomial ``s_lam(x_1..x_n)`` by the bialternant ``a_{lam+delta}/Delta``.

    Zero when ``lam`` has more than ``n`` parts.
    """
    return _schur(as_partition(lam), n)


def double_exponents(f: MultiPoly) -> MultiPoly:
    """Substitute ``x_i -> x_i^2``."""
    return MultiPoly._raw(f.nvars, {tuple(2 * a for a in e): c for e, c in f.terms.items()})


def halve_exponents(f: MultiPoly) -> MultiPoly:
    """Rewrite a polynomial in ``x_i^2`` as one in ``y_i = x_i^2``."""
    terms = {}
    for e, c in f.terms.items():
        if any(a & 1 for a in e):
            raise ValueError(f"monomial x^{e} has an odd exponent")
        terms[tuple(a // 2 for a in e)] = c
    return MultiPoly._raw(f.nvars, terms)


def is_symmetric(f: MultiPoly) -> bool:
    n = f.nvars
    for i in range(n - 1):
        swap = list(range(n))
        swap[i], swap[i + 1] = i + 1, i
        if apply_signed_permutation(f, swap) != f:
            return False
    return True


@lru_cache(maxsize=None)
def _power_to_monomial(k: int) -> tuple[tuple[Partition, ...], tuple[tuple, ...]]:
    # matrix[lam][nu] = coefficient of x^lam in p_nu, in k variables
    parts = tuple(partitions_of(k))
    products = [power_sum_product(nu, k) for nu in parts]
    matrix = tuple(tuple(p.coefficient(lam.padded(k)) for p in products) for lam in parts)
    return parts, matrix


def power_sum_linear_part(g: MultiPoly, k: int):
    """Coefficient of ``p_k`` when ``g`` is written in the power-sum basis.

    ``g`` must be symmetric and homogeneous of degree ``k <= nvars``; this is
    the image of ``g`` in ``I / I^2`` relative to the basis vector ``p_k``.
    """
    n = g.nvars
    if k > n:
        raise ValueError(f"degree {k} exceeds the stable range for {n} variables")
    if k < 1:
        raise ValueError("degree must be positive")
    if g.is_zero():
        return 0
    if any(sum(e) != k for e in g.terms):
        raise ValueError(f"polynomial is not homogeneous of degree {k}")
    if not is_symmetric(g):
        raise ValueError("polynomial is not symmetric")
    parts, matrix = _power_to_monomial(k)
    rhs = [g.coefficient(lam.padded(n)) for lam in parts]
    coeffs = solve(matrix, rhs)
    return _normalize(coeffs[parts.index(Partition((k,)))])
