from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from eigenweights.characters import character
from eigenweights.partitions import Partition, centralizer_size, partitions_of, skew_syt_count
from eigenweights.polyalg import (
    MultiPoly,
    NotDivisibleError,
    alternant,
    antisymmetrize,
    apply_signed_permutation,
    double_exponents,
    elementary,
    exact_divide,
    partial_derivative,
    pfaffian,
    power_sum,
    power_sum_linear_part,
    power_sum_product,
    schur,
    vandermonde,
)
from oracles import embed, ssyt_sum


def x(n, i):
    return MultiPoly.var(n, i)


coeffs = st.integers(-3, 3) | st.fractions(min_value=-2, max_value=2, max_denominator=4)


@st.composite
def polys(draw, n=3, max_terms=4, max_exp=2):
    terms = draw(st.dictionaries(st.tuples(*[st.integers(0, max_exp)] * n), coeffs, max_size=max_terms))
    return MultiPoly(n, terms)


def test_basic_arithmetic():
    n = 2
    assert (x(n, 0) + x(n, 1)) ** 2 == MultiPoly(n, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    f = x(n, 0) * 3 - 1
    assert (f * 0).is_zero()
    assert power_sum(1, n) ** 2 == power_sum(2, n) + 2 * elementary(2, n)
    with pytest.raises(ValueError):
        x(2, 0) + x(3, 0)
    with pytest.raises(ValueError):
        MultiPoly.zero(2).degree()


def test_zero_coefficients_are_dropped():
    f = MultiPoly(2, {(1, 0): 1, (0, 1): 0})
    assert f.terms == {(1, 0): 1}
    assert (f - f).terms == {}


@settings(max_examples=40, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f + g == g + f
    assert f ** 3 == f * f * f


def test_partial_derivative_examples():
    n, m = 4, 2
    direction = [1] * m + [0] * (n - m)
    for k in range(1, 5):
        expected = power_sum(k - 1, n).scale(k) if k > 1 else MultiPoly.constant(n, m)
        if k > 1:
            expected = MultiPoly(n, {e: c for e, c in expected.terms.items() if not any(e[m:])})
        assert partial_derivative(power_sum(k, n), direction) == expected
    half = [Fraction(1, 2)] * n
    for k in range(1, 4):
        assert partial_derivative(double_exponents(power_sum(k, n)), half) == power_sum(2 * k - 1, n).scale(k)
    assert partial_derivative(pfaffian(2), [Fraction(1, 2)] * 2) == (x(2, 0) + x(2, 1)).scale(Fraction(1, 2))


def test_signed_permutations():
    f = x(2, 0) - x(2, 1)
    assert apply_signed_permutation(f, [0, 1], [1, 1]) == f
    assert apply_signed_permutation(f, [1, 0], [1, 1]) == x(2, 1) - x(2, 0)
    e3 = elementary(3, 3)
    for perm in permutations(range(3)):
        for signs in [(1, 1, 1), (-1, 1, 1), (-1, -1, 1), (-1, -1, -1)]:
            sign = signs[0] * signs[1] * signs[2]
            assert apply_signed_permutation(e3, perm, signs) == e3.scale(sign)


@settings(max_examples=30, deadline=None)
@given(polys(), polys(), st.permutations(range(3)), st.tuples(*[st.sampled_from([1, -1])] * 3))
def test_signed_permutation_is_ring_homomorphism(f, g, perm, signs):
    def act(p):
        return apply_signed_permutation(p, perm, signs)

    assert act(f * g) == act(f) * act(g)
    assert act(f + g) == act(f) + act(g)


def test_vandermonde_and_alternants():
    assert vandermonde(2) == x(2, 0) - x(2, 1)
    assert alternant((1, 0), 2) == vandermonde(2)
    assert alternant((2, 2), 2).is_zero()
    for n in range(1, 5):
        assert alternant(tuple(range(n - 1, -1, -1)), n) == vandermonde(n)


def test_schur_small():
    assert schur((1,), 2) == x(2, 0) + x(2, 1)
    assert schur((1, 1), 2) == x(2, 0) * x(2, 1)
    assert schur((2, 1), 3) == ssyt_sum((2, 1), 3)
    assert schur((1, 1, 1), 2).is_zero()


def test_schur_matches_tableau_sum():
    for n in range(1, 4):
        for k in range(6):
            for lam in partitions_of(k, n):
                assert schur(lam, n) == ssyt_sum(lam, n)


def test_bialternant_identity():
    for n in range(1, 5):
        delta = vandermonde(n)
        for k in range(7):
            for lam in partitions_of(k, n):
                gamma = tuple(p + n - 1 - i for i, p in enumerate(lam.padded(n)))
                assert schur(lam, n) * delta == alternant(gamma, n)


def test_exact_divide():
    n = 2
    assert exact_divide(x(n, 0) ** 2 - x(n, 1) ** 2, x(n, 0) - x(n, 1)) == x(n, 0) + x(n, 1)
    assert exact_divide(alternant((4, 1), 2), vandermonde(2)) == schur((3, 1), 2)
    with pytest.raises(NotDivisibleError):
        exact_divide(x(n, 0) ** 2 + x(n, 1), x(n, 0) - x(n, 1))
    with pytest.raises(ZeroDivisionError):
        exact_divide(x(n, 0), MultiPoly.zero(n))


@settings(max_examples=30, deadline=None)
@given(polys(max_terms=3), polys(max_terms=3))
def test_exact_divide_recovers_factor(f, g):
    if g.is_zero():
        return
    assert exact_divide(f * g, g) == f


def test_antisymmetrize():
    n = 3
    assert antisymmetrize(MultiPoly.monomial((3, 1, 0))) == alternant((3, 1, 0), 3)
    assert antisymmetrize(power_sum(2, n)).is_zero()
    g = power_sum(2, n) + elementary(3, n)
    mono = MultiPoly.monomial((4, 2, 0))
    assert antisymmetrize(mono * g) == g * alternant((4, 2, 0), 3)


def test_power_sum_linear_part_examples():
    for k in range(1, 5):
        assert power_sum_linear_part(power_sum(k, 4), k) == 1
    for k in range(2, 5):
        assert power_sum_linear_part(power_sum(1, 4) * power_sum(k - 1, 4), k) == 0
    # (2,1) is the hook pi_1(3), so chi((3)) / 3 = -1/3; (2,2) is not a hook
    assert power_sum_linear_part(schur((2, 1), 3), 3) == Fraction(-1, 3)
    assert power_sum_linear_part(schur((2, 2), 4), 4) == 0
    with pytest.raises(ValueError):
        power_sum_linear_part(MultiPoly.monomial((2, 0)), 2)
    with pytest.raises(ValueError):
        power_sum_linear_part(power_sum(3, 2), 3)


def test_power_sum_linear_part_recovers_expansions():
    # random rational combinations of p_nu, checked against the chosen coefficient
    for n in range(1, 6):
        for k in range(1, n + 1):
            parts = list(partitions_of(k))
            for seed in range(3):
                weights = [Fraction((3 * i + seed) % 7 - 3, 1 + (i + seed) % 3) for i in range(len(parts))]
                g = MultiPoly.zero(n)
                for w, nu in zip(weights, parts):
                    g = g + power_sum_product(nu, n).scale(w)
                assert power_sum_linear_part(g, k) == weights[parts.index(Partition((k,)))]


def test_frobenius_identities():
    for k in range(1, 7):
        n = k
        parts = list(partitions_of(k))
        schurs = {pi: schur(pi, n) for pi in parts}
        for nu in parts:
            expansion = MultiPoly.zero(n)
            for pi in parts:
                expansion = expansion + schurs[pi].scale(character(pi, nu))
            assert power_sum_product(nu, n) == expansion
        for pi in parts:
            inverse = MultiPoly.zero(n)
            for nu in parts:
                inverse = inverse + power_sum_product(nu, n).scale(Fraction(character(pi, nu), centralizer_size(nu)))
            assert schurs[pi] == inverse
            assert power_sum_linear_part(schurs[pi], k) == Fraction(character(pi, (k,)), k)


@pytest.mark.parametrize("nu_size", range(5))
def test_iterated_pieri(nu_size):
    for nu in partitions_of(nu_size):
        for steps in range(1, 6):
            n = nu_size + steps
            if n > 6:
                continue
            lhs = power_sum(1, n) ** steps * schur(nu, n)
            rhs = MultiPoly.zero(n)
            for lam in partitions_of(nu_size + steps):
                if lam.contains(nu):
                    rhs = rhs + schur(lam, n).scale(skew_syt_count(lam, nu))
            assert lhs == rhs


def test_vandermonde_factorizations():
    for n in range(2, 6):
        delta = vandermonde(n)
        for m in range(1, n):
            cross = MultiPoly.one(n)
            for i in range(m):
                for j in range(m, n):
                    cross = cross * (x(n, i) - x(n, j))
            split = embed(vandermonde(m), n) * apply_signed_permutation(
                embed(vandermonde(n - m), n), [(i + m) % n for i in range(n)]
            )
            assert delta == split * cross
        plus = MultiPoly.one(n)
        for i in range(n):
            for j in range(i + 1, n):
                plus = plus * (x(n, i) + x(n, j))
        assert double_exponents(delta) == delta * plus


def test_debug_string():
    assert str(MultiPoly.zero(2)) == "0"
    assert str(x(2, 0) ** 2 - 3) == "1 * x1^2 + -3"
