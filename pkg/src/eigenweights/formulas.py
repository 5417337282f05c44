"""Closed-form eigenweights in terms of symmetric-group characters."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, prod

from .characters import character
from .groups import EigenResult, GroupSpec
from .partitions import Partition, add_padded, hook_partition, skew_syt_count, staircases


def _sign(exponent: int) -> int:
    return -1 if exponent & 1 else 1


def _hook_sum(k: int, j_max: int, base: Partition, nu: Partition, doubled: bool) -> int:
    """``sum_{j=0}^{j_max} (-1)^j chi^{c * pi_j(k) + base}(nu)`` with c = 2 if doubled."""
    total = 0
    for j in range(j_max + 1):
        hook = hook_partition(k, j)
        if doubled:
            hook = Partition(2 * p for p in hook)
        total += _sign(j) * character(add_padded(hook, base), nu)
    return total


def typeA(n: int, m: int) -> EigenResult:
    """Eigenweights for ``GL_n`` and the coweight ``(1^m, 0^{n-m})``."""
    spec = GroupSpec("A", n, m=m)
    N = spec.N
    rectangle = Partition((n - m,) * m)
    weights = {}
    for k in range(1, n + 1):
        # nu_1 is read as (1^N)
        nu = Partition((k - 1,) * (k > 1) + (1,) * N)
        scale = m if k == 1 else 1
        weights[f"p{k}"] = _sign(N - 1) * scale * _hook_sum(k, min(k - 1, m - 1), rectangle, nu, False)
    return EigenResult(spec, weights)


def typeB(n: int) -> EigenResult:
    """Type B: every eigenweight is -4."""
    spec = GroupSpec("B", n)
    return EigenResult(spec, {label: -4 for label in spec.labels})


def typeC(n: int) -> EigenResult:
    """Eigenweights for ``PSp_{2n}`` and its spin coweight."""
    spec = GroupSpec("C", n)
    N = spec.N
    _, rho = staircases(n)
    weights = {}
    for k in range(1, n + 1):
        nu = Partition((2 * k - 1,) + (1,) * N)
        weights[f"p{k}"] = _sign(N - 1) * Fraction(1, 2**N) * _hook_sum(k, k - 1, rho, nu, True)
    return EigenResult(spec, weights)


def staircase_dimension(n: int) -> int:
    """``binom(n,2)! / prod_{i<n} (2i-1)^{n-i}``, the number of SYT of ``delta_n``."""
    num = factorial(comb(n, 2))
    den = prod((2 * i - 1) ** (n - i) for i in range(1, n))
    if num % den:
        raise ArithmeticError("staircase dimension is not an integer")
    return num // den


def typeD_spin(n: int) -> EigenResult:
    """Eigenweights for ``PSO_{2n}`` and a spin coweight.

    In even rank ``n = 2m`` the generators ``p_m`` and ``Pf`` share a degree and
    are mixed; their 2x2 action is returned as the block.
    """
    spec = GroupSpec("D", n, coweight="spin")
    N = spec.N
    sign = _sign(N - 1)
    scale = Fraction(2) ** (n - 1 - N)
    delta, _ = staircases(n)
    weights = {}
    for k in range(1, n):
        nu = Partition((2 * k - 1,) + (1,) * N)
        weights[f"p{k}"] = sign * scale * _hook_sum(k, k - 1, delta, nu, True)
    pf = sign * scale / 2 * (comb(n, 2) + 1) * staircase_dimension(n)
    if n % 2:
        weights["Pf"] = pf
        return EigenResult(spec, weights)
    m = n // 2
    a = weights.pop(f"p{m}")
    column = Partition((1,) * (n - 1))
    skew = 0
    for j in range(m):
        shape = add_padded(Partition(2 * p for p in hook_partition(m, j)), delta)
        skew += _sign(j) * skew_syt_count(shape, column)
    b = sign * scale * Fraction(skew, n)
    nu_m = Partition((2 * m - 1,) + (1,) * N)
    c = sign * scale * m * character(add_padded(delta, (1,) * n), nu_m)
    return EigenResult(spec, weights, block=[[a, b], [c, pf]], block_basis=spec.block_labels)


def typeD_standard(n: int) -> EigenResult:
    """Standard coweight of type D: 4 on each ``p_k`` and 2 on ``Pf``."""
    spec = GroupSpec("D", n, coweight="standard")
    weights = {label: 4 for label in spec.labels}
    weights["Pf"] = 2
    return EigenResult(spec, weights)


def formula_eigen(spec: GroupSpec) -> EigenResult:
    if spec.family == "A":
        return typeA(spec.n, spec.m)
    if spec.family == "B":
        return typeB(spec.n)
    if spec.family == "C":
        return typeC(spec.n)
    if spec.coweight == "standard":
        return typeD_standard(spec.n)
    return typeD_spin(spec.n)
