from fractions import Fraction
from math import comb, factorial

import pytest

from eigenweights.formulas import (
    formula_eigen,
    staircase_dimension,
    typeA,
    typeB,
    typeC,
    typeD_spin,
    typeD_standard,
)
from eigenweights.groups import GroupSpec, block_spectrum
from eigenweights.gysin import oracle_eigen
from eigenweights.partitions import staircases, syt_count


def binomial_m2(n, k):
    c = lambda a, b: comb(a, b) if 0 <= b <= a else 0  # noqa: E731
    return Fraction(c(2 * n - 2, n - 1), n) - c(2 * n - 3, n - k) + 2 * c(2 * n - 3, n - k - 1) - c(2 * n - 3, n - k - 2)


@pytest.mark.parametrize("n", range(2, 13))
def test_type_a_m1_closed_form(n):
    assert list(typeA(n, 1).eigenweights.values()) == [(-1) ** (n - 1)] * n


@pytest.mark.parametrize("n", range(3, 13))
def test_type_a_m2_closed_form(n):
    got = typeA(n, 2).eigenweights
    assert got == {f"p{k}": binomial_m2(n, k) for k in range(1, n + 1)}


def test_small_examples():
    assert list(typeA(3, 2).eigenweights.values()) == [4, 1, 1]
    assert list(typeC(3).eigenweights.values()) == [Fraction(v, 16) for v in (8, 5, 8)]
    assert list(typeC(4).eigenweights.values()) == [Fraction(v, 16) for v in (44, 19, 28, 41)]
    assert typeB(4).eigenweights == {f"p{k}": -4 for k in range(1, 5)}
    std = typeD_standard(5).eigenweights
    assert std == {"p1": 4, "p2": 4, "p3": 4, "p4": 4, "Pf": 2}


def test_d4_block_and_triality():
    d4 = typeD_spin(4)
    assert d4.block == [[Fraction(5, 2), Fraction(-1, 8)], [-6, Fraction(7, 2)]]
    assert d4.block_eigenvalues == (4, 2)
    assert d4.char_poly == (1, -6, 8)
    assert sorted(d4.spectrum()) == sorted(typeD_standard(4).spectrum()) == [2, 4, 4, 4]


def test_d2_block():
    d2 = typeD_spin(2)
    assert d2.eigenweights == {}
    assert d2.block_eigenvalues == (0, -1)


def test_irrational_block_reports_char_poly():
    values, poly = block_spectrum([[0, 1], [1, 1]])
    assert values is None and poly == (1, -1, -1)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_pfaffian_weight_matches_hook_length(n):
    N = comb(n, 2) + 1
    delta, _ = staircases(n)
    assert staircase_dimension(n) == syt_count(delta)
    expected = (-1) ** (N - 1) * Fraction(2) ** (n - 2 - N) * (comb(n, 2) + 1) * syt_count(delta)
    assert typeD_spin(n).eigenweights["Pf"] == expected


@pytest.mark.parametrize("spec", [GroupSpec("C", n) for n in range(2, 7)]
                         + [GroupSpec("D", n) for n in range(2, 8)]
                         + [GroupSpec("A", n, m=m) for n in range(2, 8) for m in range(1, n)])
def test_denominators_divide_power_of_two_times_factorial(spec):
    bound = 2 ** spec.N * factorial(spec.N)
    result = formula_eigen(spec)
    values = list(result.eigenweights.values()) + [x for row in result.block or [] for x in row]
    assert all(bound % Fraction(v).denominator == 0 for v in values)


def _matrix():
    specs = [GroupSpec("A", n, m=m) for n in range(2, 6) for m in range(1, n)]
    specs += [GroupSpec("B", n) for n in range(1, 6)]
    specs += [GroupSpec("C", n) for n in range(2, 5)]
    specs += [GroupSpec("D", n) for n in range(2, 6)]
    return specs


@pytest.mark.parametrize("spec", _matrix(), ids=lambda s: s.key)
def test_formula_matches_oracle(spec):
    formula, oracle = formula_eigen(spec), oracle_eigen(spec)
    assert formula.eigenweights == oracle.eigenweights
    assert formula.block == oracle.block


def test_invalid_specs():
    with pytest.raises(ValueError):
        typeA(3, 3)
    with pytest.raises(ValueError):
        typeC(1)
    with pytest.raises(ValueError):
        GroupSpec("D", 4, coweight="half")
    with pytest.raises(ValueError):
        GroupSpec("B", 3, m=1)
