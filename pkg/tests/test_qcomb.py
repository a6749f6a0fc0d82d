import itertools
import math

import hypothesis.strategies as st
import pytest
import sympy
from hypothesis import given, settings

from qpolya.arith import CyclotomicNumber, UniPoly
from qpolya.errors import CapExceededError, DomainError
from qpolya.qcomb import (
    path_area_distribution,
    q_binomial,
    q_binomial_eval,
    q_factorial,
    q_int,
    q_lucas_eval,
)

Q = sympy.Symbol("q")


def sympy_gaussian(n, k):
    num = sympy.prod([1 - Q ** (n - i) for i in range(k)], sympy.Integer(1))
    den = sympy.prod([1 - Q ** (i + 1) for i in range(k)], sympy.Integer(1))
    return sympy.Poly(sympy.cancel(num / den), Q)


def brute_area(x, y):
    # positions of the North steps among x + y steps; area = sum of heights at East steps
    counts = {}
    for north in itertools.combinations(range(x + y), y):
        north = set(north)
        h = area = 0
        for step in range(x + y):
            if step in north:
                h += 1
            else:
                area += h
        counts[area] = counts.get(area, 0) + 1
    return UniPoly([counts.get(i, 0) for i in range(max(counts) + 1)])


def test_small_values():
    assert q_binomial(2, 1) == UniPoly([1, 1])
    assert q_binomial(4, 2) == UniPoly([1, 1, 2, 1, 1])
    assert q_int(3) == UniPoly([1, 1, 1])
    assert q_factorial(3) == UniPoly([1, 2, 2, 1])


@pytest.mark.parametrize("n", range(0, 16))
def test_q_binomial_matches_sympy(n):
    for k in range(n + 1):
        expected = sympy_gaussian(n, k)
        assert list(reversed(expected.all_coeffs())) == list(q_binomial(n, k).coeffs)


def test_degree_symmetry_and_q1():
    for n in range(31):
        for k in range(n + 1):
            p = q_binomial(n, k)
            assert p.degree == k * (n - k)
            c = p.coeffs
            assert c == tuple(reversed(c))
            assert p(1) == math.comb(n, k)


def test_positivity():
    for n in range(21):
        for k in range(n + 1):
            assert all(c > 0 for c in q_binomial(n, k).coeffs)


def test_large_band_path():
    # beyond the cached triangle the band computation takes over
    assert q_binomial(120, 3)(1) == math.comb(120, 3)
    assert q_binomial(120, 3) == q_binomial(120, 117)


def test_out_of_range_rejected():
    with pytest.raises(DomainError):
        q_binomial(3, 4)
    with pytest.raises(DomainError):
        q_binomial(-1, 0)


@pytest.mark.parametrize("x,y,expected", [
    (0, 0, [1]),
    (1, 1, [1, 1]),
    (2, 2, [1, 1, 2, 1, 1]),
])
def test_path_examples(x, y, expected):
    assert path_area_distribution(x, y).distribution == UniPoly(expected)


def test_path_oracle_equivalence():
    for total in range(11):
        for x in range(total + 1):
            y = total - x
            dist = path_area_distribution(x, y)
            assert dist.distribution == brute_area(x, y)
            assert dist.distribution == q_binomial(x + y, x)
            assert dist.total() == math.comb(x + y, x)


def test_path_cap():
    with pytest.raises(CapExceededError):
        path_area_distribution(11, 10)


@pytest.mark.parametrize("s", [2, 3, 4, 5, 6, 8, 12])
def test_q_lucas_matches_horner(s):
    omega = CyclotomicNumber.zeta(s)
    for x in range(25):
        for y in range(x + 1):
            assert q_lucas_eval(x, y, omega) == q_binomial(x, y)(omega)


def test_q_lucas_other_primitive_root():
    # zeta_12^5 is also primitive of order 12
    omega = CyclotomicNumber.zeta(12) ** 5
    for x in range(20):
        for y in range(x + 1):
            assert q_lucas_eval(x, y, omega) == q_binomial(x, y)(omega)


def test_q_lucas_vanishing_residual():
    assert q_lucas_eval(3, 5, CyclotomicNumber.zeta(3)) == 0


@settings(max_examples=200)
@given(st.integers(0, 40), st.data(), st.sampled_from([2, 3, 5, 7, -2]), st.integers(1, 4))
def test_eval_product_formula_matches_horner(n, data, num, den):
    k = data.draw(st.integers(0, n))
    q = CyclotomicNumber.rational(sympy.Rational(num, den).p) / den
    assert q_binomial_eval(n, k, q) == q_binomial(n, k)(q)


@settings(max_examples=100)
@given(st.integers(0, 30), st.data(), st.sampled_from([3, 4, 5, 8]))
def test_eval_at_roots_of_unity(n, data, s):
    k = data.draw(st.integers(0, n))
    z = CyclotomicNumber.zeta(s)
    assert q_binomial_eval(n, k, z) == q_binomial(n, k)(z)
    q = (z + 2) / 3
    assert q_binomial_eval(n, k, q) == q_binomial(n, k)(q)
