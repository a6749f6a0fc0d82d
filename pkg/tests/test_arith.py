import math
from fractions import Fraction

import hypothesis.strategies as st
import pytest
import sympy
from hypothesis import given, settings

from qpolya.arith import (
    BiPoly,
    CyclotomicNumber,
    UniPoly,
    compare_abs_to_one,
    cyc_conj,
    cyc_inv,
    cyclotomic_poly,
    is_root_of_unity,
    nullspace,
    poly_det,
    rank,
    root_of_unity_order,
)
from qpolya.arith.linalg import mat_vec
from qpolya.errors import CyclotomicZeroDivisionError

from conftest import cyclotomics, fractions

X = sympy.Symbol("x")

unipolys = st.lists(fractions, max_size=8).map(UniPoly)
# long enough to go through the Karatsuba path
long_unipolys = st.lists(st.integers(-9, 9), min_size=30, max_size=80).map(UniPoly)
bipolys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), fractions, max_size=8
).map(BiPoly)


def to_sympy(p: UniPoly):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c
                       for c in reversed(p.coeffs)] or [0], X, domain="QQ")


# -- polynomials ----------------------------------------------------------------

@settings(max_examples=1000)
@given(unipolys, unipolys, unipolys)
def test_unipoly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=1000)
@given(bipolys, bipolys, bipolys)
def test_bipoly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=200)
@given(long_unipolys, long_unipolys)
def test_karatsuba_matches_sympy(a, b):
    assert to_sympy(a * b) == to_sympy(a) * to_sympy(b)


@settings(max_examples=200)
@given(unipolys, unipolys.filter(lambda p: not p.is_zero()))
def test_divmod_matches_sympy(a, b):
    quo, rem = a.divmod(b)
    sq, sr = sympy.div(to_sympy(a), to_sympy(b))
    assert to_sympy(quo) == sq
    assert to_sympy(rem) == sr


def test_zero_polynomial_degree():
    assert UniPoly().degree == -math.inf
    assert UniPoly([0, 0]).is_zero()
    assert UniPoly([1, 2, 1])(Fraction(1, 2)) == Fraction(9, 4)


# -- cyclotomic fields ----------------------------------------------------------

@pytest.mark.parametrize("s", range(1, 31))
def test_cyclotomic_product_identity(s):
    prod = UniPoly([1])
    for d in range(1, s + 1):
        if s % d == 0:
            prod = prod * cyclotomic_poly(d)
    assert prod == UniPoly.monomial(s) - UniPoly([1])


@pytest.mark.parametrize("s", range(1, 31))
def test_cyclotomic_poly_matches_sympy(s):
    assert to_sympy(cyclotomic_poly(s)) == sympy.Poly(sympy.cyclotomic_poly(s, X), X, domain="QQ")


@settings(max_examples=1000)
@given(st.data())
def test_cyclotomic_ring_axioms(data):
    s = data.draw(st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12]))
    a, b, c = (data.draw(cyclotomics(s)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=300)
@given(cyclotomics(), cyclotomics())
def test_cyclotomic_mul_matches_sympy_reduction(a, b):
    s = math.lcm(a.order, b.order)
    pa, pb = to_sympy(UniPoly(a.embed(s).coordinates())), to_sympy(UniPoly(b.embed(s).coordinates()))
    expected = (pa * pb).rem(sympy.Poly(sympy.cyclotomic_poly(s, X), X, domain="QQ"))
    assert to_sympy(UniPoly((a * b).embed(s).coordinates())) == expected


@settings(max_examples=500)
@given(cyclotomics().filter(lambda a: not a.is_zero()))
def test_cyc_inv(a):
    assert cyc_inv(a) * a == 1


def test_cyc_inv_zero_raises():
    with pytest.raises(CyclotomicZeroDivisionError):
        cyc_inv(CyclotomicNumber([], 5))


@settings(max_examples=300)
@given(cyclotomics())
def test_conj_matches_complex_conjugate(a):
    assert abs(cyc_conj(a).to_complex() - a.to_complex().conjugate()) < 1e-12


@settings(max_examples=300)
@given(cyclotomics().filter(lambda a: not a.is_zero()))
def test_compare_abs_to_one_never_contradicts_numerics(a):
    cls = compare_abs_to_one(a)
    exact_one = a * cyc_conj(a) == 1
    assert (cls == "equal") == exact_one
    if not exact_one:
        m = abs(a.to_complex(dps=60))
        assert cls == ("greater" if m > 1 else "less")


@pytest.mark.parametrize("s", [3, 4, 5, 8, 12])
def test_compare_abs_to_one_unit_modulus(s):
    z = CyclotomicNumber.zeta(s)
    # (z + 2) / (conj(z) + 2) has modulus exactly one
    q = (z + 2) / (cyc_conj(z) + 2)
    assert compare_abs_to_one(q) == "equal"


def test_unit_modulus_non_root():
    q = CyclotomicNumber([3, 4], 4) / 5
    assert compare_abs_to_one(q) == "equal"
    assert not is_root_of_unity(q)


def test_compare_abs_to_one_close_to_one():
    q = CyclotomicNumber.rational(Fraction(10**30 + 1, 10**30))
    assert compare_abs_to_one(q) == "greater"
    assert compare_abs_to_one(1 / q) == "less"


@pytest.mark.parametrize("s", [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 24])
def test_root_of_unity_orders(s):
    z = CyclotomicNumber.zeta(s)
    for k in range(1, 2 * s + 1):
        w = z ** k
        assert root_of_unity_order(w) == s // math.gcd(s, k)
        # -w = zeta_(2s)^(s + 2k)
        assert root_of_unity_order(-w) == (2 * s) // math.gcd(2 * s, s + 2 * k)


def test_not_roots_of_unity():
    assert not is_root_of_unity(CyclotomicNumber.rational(2))
    assert not is_root_of_unity(CyclotomicNumber([3, 4], 4) / 5)
    assert is_root_of_unity(CyclotomicNumber.rational(-1))


def test_mixed_order_equality():
    # zeta_6^2 is zeta_3; zeta_4^2 is -1
    assert CyclotomicNumber.zeta(6) ** 2 == CyclotomicNumber.zeta(3)
    assert CyclotomicNumber.zeta(4) ** 2 == -1
    assert CyclotomicNumber.zeta(3) + CyclotomicNumber.zeta(4) == \
        CyclotomicNumber.zeta(12) ** 4 + CyclotomicNumber.zeta(12) ** 3


# -- linear algebra -------------------------------------------------------------

matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3).map(Fraction), min_size=c, max_size=c), min_size=1, max_size=6)
)


@settings(max_examples=300)
@given(matrices)
def test_nullspace_rank_nullity(m):
    ncols = len(m[0])
    basis = nullspace(m, ncols)
    for v in basis:
        assert all(x == 0 for x in mat_vec(m, v))
    assert rank(m, ncols) + len(basis) == ncols
    assert rank(m, ncols) == sympy.Matrix(m).rank()


@settings(max_examples=100)
@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.lists(st.integers(-3, 3), max_size=3).map(UniPoly),
                                min_size=n, max_size=n), min_size=n, max_size=n)))
def test_poly_det_matches_sympy(m):
    sm = sympy.Matrix([[to_sympy(p).as_expr() for p in row] for row in m])
    assert to_sympy(poly_det(m)) == sympy.Poly(sympy.expand(sm.det()), X, domain="QQ")


def test_det_examples():
    x = UniPoly.monomial(1)
    assert poly_det([[x, UniPoly()], [UniPoly(), x]]) == x * x
    assert poly_det([[UniPoly([1]), UniPoly([1])], [x, x * x]]) == x * x - x
