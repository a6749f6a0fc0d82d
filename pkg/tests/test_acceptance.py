"""Acceptance criteria, one test each, with wall-clock limits."""

import io
import math
import random
import time
from contextlib import contextmanager, redirect_stdout
from fractions import Fraction

from qpolya.algdecide import (
    Algebraic,
    DegreeGrowth,
    NotRootOfUnity,
    Transcendental,
    decide,
    leading_monomial_check,
    sample_bound,
    theorem4_consistency,
    vandermonde_det,
    zero_test_via_samples,
)
from qpolya.arith import BiPoly, CyclotomicNumber, UniPoly, compare_abs_to_one, cyclotomic_poly
from qpolya.cli import main
from qpolya.guess import PRecurrence, guess_algebraic, guess_precurrence, verify_algebraic
from qpolya.lineseries import (
    dumps_prefix,
    loads_prefix,
    lucas_decomposition,
    prefix,
    ratio_identity_check,
    reassemble,
)
from qpolya.qcomb import path_area_distribution, q_binomial, q_lucas_eval

from conftest import ACCEPTANCE_RESULTS

CENTRAL = (0, 0, 2, 1)
SPECS = [(0, 0, 2, 1), (1, 0, 3, 2), (2, 1, 3, 1)]


@contextmanager
def criterion(num, title, limit):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        secs = time.perf_counter() - start
        ACCEPTANCE_RESULTS.append((num, title, ok and secs < limit, secs, limit))
    assert secs < limit, f"criterion {num} took {secs:.2f} s, limit {limit} s"


def test_ac01_paper_coefficients():
    with criterion(1, "paper coefficients at q=2", 1):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = main(["series", "0", "0", "2", "1", "--q", "2", "--terms", "5"])
        assert code == 0
        assert [int(v) for v in buf.getvalue().split(",")] == [1, 3, 35, 1395, 200787]


def test_ac02_growth_bound():
    with criterion(2, "growth bound u_j > 2^(j^2)", 5):
        u = prefix(CENTRAL, 2, 9).field_values()
        for j in range(1, 9):
            assert u[j].denominator == 1
            assert u[j].numerator > 2 ** (j * j)


def test_ac03_path_oracle():
    with criterion(3, "path area oracle x+y <= 10", 30):
        for total in range(11):
            for x in range(total + 1):
                assert path_area_distribution(x, total - x).distribution == q_binomial(total, x)


def test_ac04_q_lucas():
    with criterion(4, "q-Lucas vs direct evaluation", 60):
        for s in (2, 3, 4, 5, 6, 8, 12):
            omega = CyclotomicNumber.zeta(s)
            for x in range(25):
                for y in range(25):
                    direct = q_binomial(x, y)(omega) if y <= x else 0
                    assert q_lucas_eval(x, y, omega) == direct


def test_ac05_decide_roots_of_unity():
    with criterion(5, "decide at q = 1, -1, zeta_3", 120):
        v1 = decide(CENTRAL, 1)
        assert isinstance(v1, Algebraic)
        # (1 - 4x) z^2 - 1 scaled so its first coefficient, at (i, j) = (0, 0), is 1
        raw = BiPoly({(0, 0): -1, (0, 2): 1, (1, 2): -4})
        assert v1.equation.poly == raw * Fraction(-1)
        assert v1.equation.verified_order >= 60

        vm = decide(CENTRAL, -1)
        assert isinstance(vm, Algebraic)
        assert vm.equation.verified_order >= 60
        substituted = BiPoly({(2 * i, j): c for (i, j), c in v1.equation.poly.terms.items()})
        assert verify_algebraic(substituted, prefix(CENTRAL, -1, 60))
        assert vm.equation.poly == substituted

        z3 = CyclotomicNumber.zeta(3)
        v3 = decide(CENTRAL, z3)
        assert isinstance(v3, Algebraic)
        assert verify_algebraic(v3.equation, prefix(CENTRAL, z3, 60))
        assert v3.equation.verified_order >= 60


def test_ac06_decide_transcendental():
    with criterion(6, "transcendental verdicts and empty guesses", 120):
        v = decide(CENTRAL, 2)
        assert isinstance(v, Transcendental) and isinstance(v.certificate, DegreeGrowth)
        assert guess_algebraic(prefix(CENTRAL, 2, 80), 6, 6) is None
        assert guess_precurrence(prefix(CENTRAL, 2, 60), 4, 4) is None

        q = CyclotomicNumber([3, 4], 4) / 5
        assert q * q.conj() == 1 and q ** 4 != 1
        v = decide(CENTRAL, q)
        assert isinstance(v, Transcendental) and isinstance(v.certificate, NotRootOfUnity)
        assert v.certificate.abs_class == "equal" == compare_abs_to_one(q)
        assert v.certificate.order_check_exponent == 4


def test_ac07_ratio_identity():
    with criterion(7, "ratio identity in Z[q], j <= 10", 30):
        for spec in SPECS:
            for j in range(11):
                assert ratio_identity_check(spec, j)


def test_ac08_lucas_reassembly():
    with criterion(8, "Lucas decomposition reassembly, 40 terms", 60):
        for s in (2, 3, 4):
            omega = CyclotomicNumber.zeta(s)
            for spec in SPECS:
                assert reassemble(lucas_decomposition(spec, omega), 40) == list(prefix(spec, omega, 40).terms)


def test_ac09_vandermonde():
    with criterion(9, "Vandermonde determinant factorization, d <= 3", 60):
        assert vandermonde_det(1).determinant == UniPoly([0, 1, -2, 1])
        for d in range(4):
            r = vandermonde_det(d)
            assert r.constant != 0
            rebuilt = UniPoly.monomial(r.z_power, r.constant)
            for s, m in r.cyclotomic_multiplicities.items():
                for _ in range(m):
                    rebuilt = rebuilt * cyclotomic_poly(s)
            assert rebuilt == r.determinant


def test_ac10_zero_test():
    with criterion(10, "finite zero test, 200 random polynomials", 30):
        rng = random.Random(20241018)
        q = CyclotomicNumber.rational(2)
        D = sample_bound(4)
        assert D == 15
        done = 0
        while done < 200:
            terms = {}
            for _ in range(rng.randint(1, 8)):
                i = rng.randint(0, 4)
                terms[(i, rng.randint(0, 4 - i))] = rng.randint(-20, 20)
            p = BiPoly(terms)
            if p.is_zero():
                continue
            res = zero_test_via_samples(p, q)
            assert not res.identically_zero and 1 <= res.witness <= D
            done += 1
        res = zero_test_via_samples(BiPoly({}), q)
        assert res.identically_zero and all(v == 0 for v in res.samples)


def test_ac11_theorem4():
    with criterion(11, "Theorem-4 leading monomial and consistency", 60):
        for a in range(2, 7):
            for b in range(1, a):
                if math.gcd(a, b) != 1:
                    continue
                for r in range(1, 6):
                    rep = leading_monomial_check((0, 0, a, b), r)
                    top = max(rep.y_degrees)
                    assert rep.y_degrees.index(top) == r and rep.y_degrees.count(top) == 1
        for a, b, r in [(2, 1, 1), (3, 1, 2), (3, 2, 2)]:
            n = 2
            rep = leading_monomial_check((n, 0, a, b), r, expand=True)
            assert rep.expanded_leading == BiPoly({(a * a * r, r * a * n + r * a * (r * a + 1) // 2): 1})
        candidate = PRecurrence((UniPoly([-2, -4]), UniPoly([1, 1])))
        rows = theorem4_consistency(CENTRAL, 3, candidate, 8)
        assert len(rows) == 9 and all(row.residual_zero == row.p_zero for row in rows)


def test_ac12_persistence():
    with criterion(12, "dump round trip, 5 specs x 3 values of q", 5):
        specs = SPECS + [(0, 0, 3, 1), (3, 1, 5, 2)]
        qs = [CyclotomicNumber.rational(2), CyclotomicNumber.zeta(3), CyclotomicNumber([3, 4], 4) / 5]
        for spec in specs:
            for q in qs:
                text = dumps_prefix(prefix(spec, q, 20))
                assert dumps_prefix(loads_prefix(text)) == text
