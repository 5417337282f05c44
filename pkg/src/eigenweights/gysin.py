"""Brute-force eigenweights from the definition, via equivariant localization.

The pushforward along ``G/P_mu`` is the localization sum
``sum_{w in W/W_mu} w(f / r_mu)``, where ``r_mu`` is the product of the roots
pairing negatively with ``mu``.  Each family assembles that sum over a common
polynomial denominator so that every step is an exact polynomial division.
Nothing here touches the character machinery: the reduction modulo ``I^2``
goes through ``power_sum_linear_part``.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import product
from math import factorial, gcd
from typing import Sequence

from .groups import EigenResult, GroupSpec
from .polyalg import (
    MultiPoly,
    apply_signed_permutation,
    antisymmetrize,
    double_exponents,
    exact_divide,
    halve_exponents,
    partial_derivative,
    pfaffian,
    power_sum,
    power_sum_linear_part,
)

log = logging.getLogger(__name__)


class OracleError(RuntimeError):
    """A theoretical expectation failed inside the oracle."""


# -- root data ---------------------------------------------------------------


def coweight(spec: GroupSpec) -> tuple[Fraction, ...]:
    n = spec.n
    if spec.family == "A":
        return tuple(Fraction(int(i < spec.m)) for i in range(n))
    if spec.family == "B" or (spec.family == "D" and spec.coweight == "standard"):
        return tuple(Fraction(int(i == 0)) for i in range(n))
    return (Fraction(1, 2),) * n


def roots(spec: GroupSpec) -> list[tuple[int, ...]]:
    n = spec.n

    def unit(i, s=1):
        return tuple(s if j == i else 0 for j in range(n))

    def combo(i, si, j, sj):
        return tuple(si if k == i else sj if k == j else 0 for k in range(n))

    if spec.family == "A":
        return [combo(i, 1, j, -1) for i in range(n) for j in range(n) if i != j]
    out = [combo(i, si, j, sj) for i in range(n) for j in range(i + 1, n) for si in (1, -1) for sj in (1, -1)]
    if spec.family == "B":
        out += [unit(i, s) for i in range(n) for s in (1, -1)]
    elif spec.family == "C":
        out += [unit(i, 2 * s) for i in range(n) for s in (1, -1)]
    return out


def _linear(coeffs: Sequence[int]) -> MultiPoly:
    n = len(coeffs)
    return MultiPoly(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})


def equivariant_euler(spec: GroupSpec) -> MultiPoly:
    """Product of the roots ``alpha`` with ``<alpha, mu> < 0``."""
    mu = coweight(spec)
    result = MultiPoly.one(spec.n)
    for alpha in roots(spec):
        if sum(a * b for a, b in zip(alpha, mu)) < 0:
            result = result * _linear(alpha)
    return result


# -- Weyl group helpers ------------------------------------------------------


def _swap(n: int, i: int, j: int) -> list[int]:
    perm = list(range(n))
    perm[i], perm[j] = j, i
    return perm


def _levi_generators(spec: GroupSpec) -> list[tuple[list[int], list[int]]]:
    """Coxeter generators of ``W_mu`` as (permutation, signs) pairs."""
    n = spec.n
    plus = [1] * n
    if spec.family == "A":
        m = spec.m
        return [(_swap(n, i, i + 1), plus) for i in range(n - 1) if i != m - 1]
    if spec.family == "B":
        gens = [(_swap(n, i, i + 1), plus) for i in range(1, n - 1)]
        if n >= 2:
            gens.append((list(range(n)), plus[:-1] + [-1]))
        return gens
    return [(_swap(n, i, i + 1), plus) for i in range(n - 1)]


def _weyl_generators(spec: GroupSpec) -> list[tuple[list[int], list[int]]]:
    """Coxeter generators of the full Weyl group."""
    n = spec.n
    plus = [1] * n
    gens = [(_swap(n, i, i + 1), plus) for i in range(n - 1)]
    if spec.family in "BC":
        gens.append((list(range(n)), plus[:-1] + [-1]))
    elif spec.family == "D" and n >= 2:
        # s_{e_{n-1} + e_n}: x_{n-1} -> -x_n, x_n -> -x_{n-1}
        gens.append((_swap(n, n - 2, n - 1), plus[:-2] + [-1, -1]))
    return gens


def is_invariant(f: MultiPoly, generators) -> bool:
    return all(apply_signed_permutation(f, perm, signs) == f for perm, signs in generators)


def is_weyl_invariant(spec: GroupSpec, f: MultiPoly) -> bool:
    return is_invariant(f, _weyl_generators(spec))


def _sign_sum(f: MultiPoly, even_only: bool, twisted: bool) -> MultiPoly:
    """``sum_sigma [prod sigma_i if twisted] * sigma(f)`` over sign changes."""
    n = f.nvars
    total = MultiPoly.zero(n)
    identity = list(range(n))
    for signs in product((1, -1), repeat=n):
        parity = signs.count(-1) & 1
        if even_only and parity:
            continue
        term = apply_signed_permutation(f, identity, signs)
        total = total + (-term if twisted and parity else term)
    return total


def _vandermonde_on(n: int, indices: Sequence[int], square: bool = False) -> MultiPoly:
    result = MultiPoly.one(n)
    power = 2 if square else 1
    for a, i in enumerate(indices):
        for j in indices[a + 1 :]:
            xi = MultiPoly.monomial(tuple(power if k == i else 0 for k in range(n)))
            xj = MultiPoly.monomial(tuple(power if k == j else 0 for k in range(n)))
            result = result * (xi - xj)
    return result


# -- integration -------------------------------------------------------------


def gysin_integrate(spec: GroupSpec, f: MultiPoly) -> MultiPoly:
    """Pushforward ``R^{W_mu} -> R^W`` along ``G/P_mu`` by localization."""
    n = spec.n
    if f.nvars != n:
        raise ValueError(f"expected a polynomial in {n} variables")
    if spec.family == "D" and spec.coweight == "standard":
        raise NotImplementedError("no localization scheme for the standard coweight of type D")
    if not f.is_homogeneous():
        raise ValueError("integrand must be homogeneous")
    if not is_invariant(f, _levi_generators(spec)):
        raise ValueError(f"integrand is not invariant under the Levi Weyl group of {spec.key}")
    if f.is_zero():
        return f
    sign = -1 if spec.dim & 1 else 1
    delta = _vandermonde_on(n, range(n))
    if spec.family == "A":
        m = spec.m
        numerator = antisymmetrize(f * _vandermonde_on(n, range(m)) * _vandermonde_on(n, range(m, n)))
        result = exact_divide(numerator, delta).scale(Fraction(sign, factorial(m) * factorial(n - m)))
    elif spec.family == "C":
        numerator = _sign_sum(f * delta, even_only=False, twisted=True)
        numerator = exact_divide(numerator, pfaffian(n))
        result = exact_divide(numerator, double_exponents(delta)).scale(Fraction(sign, 2**n))
    elif spec.family == "D":
        numerator = _sign_sum(f * delta, even_only=True, twisted=False)
        result = exact_divide(numerator, double_exponents(delta)).scale(sign)
    else:
        result = _integrate_b(spec, f)
    if not result.is_zero() and result.degree() != f.degree() - spec.dim:
        raise OracleError("degree bookkeeping violated by the pushforward")
    return result


def _integrate_b(spec: GroupSpec, f: MultiPoly) -> MultiPoly:
    # Cosets of W/W_mu are labelled by x_1 -> s*x_i.  With
    # r_mu(y, rest) = -y * prod_{j != i}(y^2 - x_j^2), pairing s = +-1 gives
    # -(f(x_i) - f(-x_i)) / (x_i * P_i), P_i = prod_{j != i}(x_i^2 - x_j^2),
    # and Delta(X^2) / P_i = (-1)^i Delta(X^2 without x_i).
    n = spec.n
    numerator = MultiPoly.zero(n)
    plus = [1] * n
    minus = [-1] + [1] * (n - 1)
    for i in range(n):
        perm = _swap(n, 0, i)
        odd = apply_signed_permutation(f, perm, plus) - apply_signed_permutation(f, perm, minus)
        g = exact_divide(odd, MultiPoly.var(n, i))
        cofactor = _vandermonde_on(n, [j for j in range(n) if j != i], square=True)
        term = g * cofactor
        numerator = numerator + (term if i & 1 else -term)
    return exact_divide(numerator, double_exponents(_vandermonde_on(n, range(n))))


# -- the reduced operator ----------------------------------------------------


def generator(spec: GroupSpec, label: str) -> MultiPoly:
    """The basis polynomial of ``I / I^2`` named by ``label``."""
    if label not in spec.labels:
        raise ValueError(f"{label!r} is not a generator for {spec.key}")
    n = spec.n
    if label == "Pf":
        return pfaffian(n)
    k = int(label[1:])
    p = power_sum(k, n)
    return p if spec.family == "A" else double_exponents(p)


def _content(f: MultiPoly) -> tuple[Fraction, MultiPoly]:
    """Split ``f = c * g`` with ``g`` integral and primitive."""
    if f.is_zero():
        return Fraction(1), f
    coeffs = [Fraction(c) for c in f.terms.values()]
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for c in coeffs:
        num = gcd(num, int(c * den))
    c = Fraction(num, den)
    return c, f.scale(1 / c)


def _reduce(spec: GroupSpec, g: MultiPoly, degree: int) -> dict[str, Fraction]:
    """Image of an invariant ``g`` of x-degree ``degree`` in ``I / I^2``."""
    n = spec.n
    out: dict[str, Fraction] = {}
    if spec.family == "A":
        out[f"p{degree}"] = Fraction(power_sum_linear_part(g, degree))
        return out
    if spec.family in "BC":
        if degree % 2:
            raise OracleError("odd-degree invariant in type B/C")
        out[f"p{degree // 2}"] = Fraction(power_sum_linear_part(halve_exponents(g), degree // 2))
        return out
    even, odd = {}, {}
    for e, c in g.terms.items():
        parities = {a & 1 for a in e}
        if len(parities) > 1:
            raise OracleError(f"monomial x^{e} of mixed parity in a type D invariant")
        (odd if 1 in parities else even)[e] = c
    if degree % 2 == 0 and degree // 2 <= n - 1:
        out[f"p{degree // 2}"] = Fraction(power_sum_linear_part(halve_exponents(MultiPoly(n, even)), degree // 2))
    elif even:
        raise OracleError("even part outside the generator degrees")
    if degree == n:
        quotient = exact_divide(MultiPoly(n, odd), pfaffian(n))
        out["Pf"] = Fraction(quotient.coefficient((0,) * n))
    return out


def reduced_image(spec: GroupSpec, f: MultiPoly) -> dict[str, Fraction]:
    """Image in ``I / I^2`` of ``int eta * d_mu f`` for a homogeneous invariant ``f``.

    ``eta = (d_mu Omega)^N`` with ``Omega = sum x_i^2 / 2``.
    """
    n = spec.n
    if not f.is_homogeneous() or f.is_zero():
        raise ValueError("expected a nonzero homogeneous invariant")
    direction = coweight(spec)
    omega = MultiPoly(n, {tuple(2 * int(i == j) for j in range(n)): Fraction(1, 2) for i in range(n)})
    t_scale, t = _content(partial_derivative(omega, direction))
    d_scale, df = _content(partial_derivative(f, direction))
    integral = gysin_integrate(spec, t**spec.N * df).scale(t_scale**spec.N * d_scale)
    degree = f.degree()
    if not integral.is_zero() and integral.degree() != degree:
        raise OracleError("the reduced operator does not preserve degree")
    return _reduce(spec, integral, degree)


def nabla_bar(spec: GroupSpec, label: str) -> dict[str, Fraction]:
    """Reduced image of the generator named ``label``."""
    return reduced_image(spec, generator(spec, label))


def oracle_eigen(spec: GroupSpec) -> EigenResult:
    """Eigenweights computed from the definition, generator by generator."""
    if spec.family == "D" and spec.coweight == "standard":
        raise NotImplementedError("the oracle covers the spin coweight of type D only")
    block_labels = spec.block_labels
    weights: dict[str, Fraction] = {}
    columns: dict[str, dict[str, Fraction]] = {}
    for label in spec.labels:
        log.debug("oracle %s %s", spec.key, label)
        image = nabla_bar(spec, label)
        if block_labels and label in block_labels:
            columns[label] = image
            continue
        stray = {k: v for k, v in image.items() if k != label and v}
        if stray:
            raise OracleError(f"unexpected non-eigenvector {label} for {spec.key}: {stray}")
        weights[label] = image.get(label, Fraction(0))
    block = None
    if block_labels:
        extra = {k for col in columns.values() for k, v in col.items() if v and k not in block_labels}
        if extra:
            raise OracleError(f"unexpected non-eigenvector in the block for {spec.key}: {extra}")
        block = [[columns[c].get(r, Fraction(0)) for c in block_labels] for r in block_labels]
    return EigenResult(spec, weights, block=block, block_basis=block_labels)
