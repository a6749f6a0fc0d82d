"""Algebraicity verdicts for h_q and the supporting exact checks.

``decide`` returns an equation when q is a root of unity and a structural
certificate otherwise. The other operations here make the individual proof
steps checkable: coefficient growth, the finite zero-test for p(j, q^j),
the generalized Vandermonde determinant behind it, and the polynomial
obtained by clearing denominators in a candidate recurrence.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .arith.cyclotomic import (
    CyclotomicNumber,
    as_cyclotomic,
    compare_abs_to_one,
    cyclotomic_poly,
    is_root_of_unity,
    root_of_unity_order,
    totient,
)
from .arith.linalg import poly_det
from .arith.poly import BiPoly, UniPoly
from .errors import (
    CapExceededError,
    DomainError,
    InconsistencyError,
    PreconditionError,
)
from .guess import AlgEquation, PRecurrence, guess_algebraic, required_terms_algebraic
from .lineseries import as_spec, prefix

log = logging.getLogger(__name__)

VANDERMONDE_MAX_DEGREE = 3


# -- verdicts -----------------------------------------------------------------

@dataclass(frozen=True)
class DegreeGrowth:
    degree_poly: UniPoly
    leading_coefficient: int
    abs_class: str = "greater"
    kind = "degree_growth"


@dataclass(frozen=True)
class SearchRecord:
    dx: int
    dz: int
    terms: int
    found: bool


@dataclass(frozen=True)
class NotRootOfUnity:
    order_check_exponent: int
    abs_class: str
    searched: tuple[SearchRecord, ...] = ()
    kind = "not_root_of_unity"


@dataclass(frozen=True)
class Verdict:
    pass


@dataclass(frozen=True)
class Algebraic(Verdict):
    equation: AlgEquation
    root_order: int
    searched: tuple[SearchRecord, ...] = ()
    kind = "algebraic"


@dataclass(frozen=True)
class Transcendental(Verdict):
    certificate: DegreeGrowth | NotRootOfUnity
    kind = "transcendental"


@dataclass(frozen=True)
class Undecided(Verdict):
    root_order: int
    searched: tuple[SearchRecord, ...]
    reason: str = "degree bounds exhausted"
    kind = "undecided"


@dataclass
class DecideConfig:
    max_degree: int = 8
    # None: max(60, 2 (t+1)^2) in round t
    verify_order: int | None = None
    # bounded guess search attached to not-root-of-unity certificates
    report_degree: int = 2
    report_terms: int = 60
    max_precision: int | None = None

    def order_for(self, t: int) -> int:
        n = self.verify_order if self.verify_order is not None else max(60, 2 * (t + 1) ** 2)
        return max(n, required_terms_algebraic(t, t))


def degree_growth(spec) -> UniPoly:
    """deg_q u_j as a polynomial in j: (k + b j)(n - k + (a - b) j)."""
    spec = as_spec(spec)
    n, k, a, b = spec.as_tuple()
    return UniPoly([k, b]) * UniPoly([n - k, a - b])


def decide(spec, q, config: DecideConfig | None = None) -> Verdict:
    spec = as_spec(spec)
    q = as_cyclotomic(q)
    if q.is_zero():
        raise DomainError("q must be nonzero")
    config = config or DecideConfig()
    s = root_of_unity_order(q)
    if s is not None:
        searched = []
        longest = None
        for t in range(1, config.max_degree + 1):
            N = config.order_for(t)
            if longest is None or len(longest) < N:
                longest = prefix(spec, q, N)
            p = longest if len(longest) == N else _head(longest, N)
            eq = guess_algebraic(p, t, t)
            ok = eq is not None and eq.verified_order >= N
            searched.append(SearchRecord(t, t, N, ok))
            log.debug("decide %s q=%s round %d: %s", spec, q, t, "hit" if ok else "none")
            if ok:
                return Algebraic(eq, s, tuple(searched))
        return Undecided(s, tuple(searched))

    abs_class = compare_abs_to_one(q, config.max_precision)
    if abs_class == "greater":
        dp = degree_growth(spec)
        return Transcendental(DegreeGrowth(dp, int(dp.lead)))
    searched = []
    if config.report_degree > 0:
        N = max(config.report_terms, required_terms_algebraic(config.report_degree, config.report_degree))
        p = prefix(spec, q, N)
        for t in range(1, config.report_degree + 1):
            eq = guess_algebraic(p, t, t)
            searched.append(SearchRecord(t, t, N, eq is not None))
    return Transcendental(NotRootOfUnity(math.lcm(2, q.order), abs_class, tuple(searched)))


def _head(p, N):
    from .lineseries import SeriesPrefix

    return SeriesPrefix(p.spec, p.order, p.terms[:N], p.q)


# -- growth diagnostics -------------------------------------------------------

@dataclass(frozen=True)
class GrowthReport:
    rows: tuple[tuple[int, float], ...]
    # u_j > 2^(j^2) for 1 <= j <= N, checked only for the central line at q = 2
    exact_bound_holds: bool | None = None
    failures: tuple[int, ...] = ()


def _log_abs(v: CyclotomicNumber) -> float:
    if v.is_rational():
        f = abs(v.to_fraction())
        return math.log(f.numerator) - math.log(f.denominator)
    with mpmath.workdps(60):
        return float(mpmath.log(abs(v.to_complex(60))))


def growth_report(spec, q, N: int, max_precision: int | None = None) -> GrowthReport:
    spec = as_spec(spec)
    q = as_cyclotomic(q)
    cls = compare_abs_to_one(q, max_precision)
    if cls != "greater":
        raise PreconditionError(f"growth_report needs |q| > 1, got |q| {cls} 1")
    terms = prefix(spec, q, N + 1).terms
    rows = tuple((j, _log_abs(terms[j]) / (j * j)) for j in range(1, N + 1))
    exact = None
    failures = ()
    if spec.as_tuple() == (0, 0, 2, 1) and q == 2:
        failures = tuple(j for j in range(1, N + 1) if not terms[j].to_fraction() > 2 ** (j * j))
        exact = not failures
    return GrowthReport(rows, exact, failures)


# -- finite zero test -----------------------------------------------------------

@dataclass(frozen=True)
class ZeroTestResult:
    identically_zero: bool
    samples_needed: int
    witness: int | None = None
    samples: tuple = field(default=(), repr=False)


def sample_bound(d: int) -> int:
    return (d + 1) * (d + 2) // 2


def zero_test_via_samples(p: BiPoly, q) -> ZeroTestResult:
    """Decide p == 0 from the values p(j, q^j), j = 1..(d+1)(d+2)/2.

    Valid whenever q is not a root of unity of order <= d = total degree.
    """
    q = as_cyclotomic(q)
    if q.is_zero():
        raise DomainError("q must be nonzero")
    d = p.total_degree if not p.is_zero() else 0
    s = root_of_unity_order(q)
    if s is not None and s <= d:
        raise PreconditionError(f"q is a root of unity of order {s} <= total degree {d}")
    D = sample_bound(d)
    qj = as_cyclotomic(1, q.order)
    values = []
    witness = None
    for j in range(1, D + 1):
        qj = qj * q
        v = p(j, qj)
        values.append(v)
        if v != 0:
            witness = j
            break
    zero = witness is None
    if zero != p.is_zero():
        raise InconsistencyError(
            f"sample test says {'zero' if zero else 'nonzero'} but p is {'zero' if p.is_zero() else 'nonzero'}"
        )
    return ZeroTestResult(zero, D, witness, tuple(values))


# -- generalized Vandermonde ------------------------------------------------------

@dataclass(frozen=True)
class VandermondeResult:
    d: int
    determinant: UniPoly
    constant: Fraction | int
    z_power: int
    cyclotomic_multiplicities: dict[int, int]

    def factored(self) -> str:
        parts = [str(self.constant)]
        if self.z_power:
            parts.append(f"z^{self.z_power}" if self.z_power > 1 else "z")
        for s, m in sorted(self.cyclotomic_multiplicities.items()):
            parts.append(f"Phi_{s}(z)" + (f"^{m}" if m > 1 else ""))
        return " * ".join(parts)


def vandermonde_rows(d: int) -> list[tuple[int, int]]:
    """Row index pairs (i, j), 0 <= i + j <= d, grouped by i + j with i descending."""
    return [(i, t - i) for t in range(d + 1) for i in range(t, -1, -1)]


def vandermonde_matrix(d: int) -> list[list[UniPoly]]:
    rows = vandermonde_rows(d)
    D = len(rows)
    return [[UniPoly.monomial(n * j, n ** i) for n in range(1, D + 1)] for (i, j) in rows]


def vandermonde_det(d: int, cap: int = VANDERMONDE_MAX_DEGREE) -> VandermondeResult:
    """det of (n^i z^(n j)) and its split into constant * z^e * prod Phi_s^m."""
    if d < 0:
        raise DomainError("d must be non-negative")
    if d > cap:
        raise CapExceededError("vandermonde degree", cap, d)
    det = poly_det(vandermonde_matrix(d))
    if det.is_zero():
        raise InconsistencyError(f"determinant vanishes identically for d={d}")
    e = det.trailing_zeros()
    rest = UniPoly(det.coeffs[e:])
    mult = {}
    s = 1
    while rest.degree > 0:
        if totient(s) > rest.degree:
            break
        phi = cyclotomic_poly(s)
        while rest.degree >= phi.degree:
            quo, rem = rest.divmod(phi)
            if not rem.is_zero():
                break
            rest = quo
            mult[s] = mult.get(s, 0) + 1
        s += 1
    if rest.degree != 0:
        raise InconsistencyError(f"non-cyclotomic residue {rest} in det for d={d}")
    c = rest.coeffs[0]
    if isinstance(c, Fraction) and c.denominator == 1:
        c = c.numerator
    return VandermondeResult(d, det, c, e, mult)


# -- denominator clearing for candidate recurrences ------------------------------

def _field_one(q: CyclotomicNumber):
    return Fraction(1) if q.is_rational() else CyclotomicNumber.rational(1, q.order)


def _field_q(q: CyclotomicNumber):
    return q.to_fraction() if q.is_rational() else q


def _y_factor(ya: int, c, one) -> UniPoly:
    """c * y^ya - 1."""
    return UniPoly([-one] + [0] * (ya - 1) + [c]) if ya else UniPoly([c - one])


def theorem4_factor_list(spec, r: int, i: int) -> list[tuple[int, int]]:
    """Factors (y-exponent, q-exponent) of y^e q^f - 1 making up P_i(y)."""
    n, k, a, b = as_spec(spec).as_tuple()
    out = [(a, n + l) for l in range(1, i * a + 1)]
    out += [(b, k + l) for l in range(i * b + 1, r * b + 1)]
    out += [(a - b, n - k + l) for l in range(i * (a - b) + 1, r * (a - b) + 1)]
    return out


def theorem4_P(spec, q, r: int, i: int) -> UniPoly:
    """P_i(y) with q specialized."""
    qf = _field_q(as_cyclotomic(q))
    one = _field_one(as_cyclotomic(q))
    out = UniPoly([one])
    for ye, qe in theorem4_factor_list(spec, r, i):
        out = out * _y_factor(ye, qf ** qe, one)
    return out


def build_theorem4_polynomial(spec, q, rec: PRecurrence) -> BiPoly:
    """p(x, y) = sum_i c_i(x) P_i(y), the recurrence with the common
    denominator of the term ratios cleared."""
    spec = as_spec(spec)
    q = as_cyclotomic(q)
    if q.is_zero():
        raise DomainError("q must be nonzero")
    r = rec.r
    total = BiPoly()
    for i, c in enumerate(rec.coeffs):
        if c.is_zero():
            continue
        P = theorem4_P(spec, q, r, i)
        total = total + BiPoly.from_x_poly(c) * BiPoly.from_y_poly(P)
    return total


def theorem4_denominator(spec, q, r: int, j: int):
    """prod (q^(k+bj+l) - 1) * prod (q^(n-k+(a-b)j+l) - 1) over the full range."""
    n, k, a, b = as_spec(spec).as_tuple()
    qf = _field_q(as_cyclotomic(q))
    one = _field_one(as_cyclotomic(q))
    out = one
    for l in range(1, r * b + 1):
        out = out * (qf ** (k + b * j + l) - one)
    for l in range(1, r * (a - b) + 1):
        out = out * (qf ** (n - k + (a - b) * j + l) - one)
    return out


@dataclass(frozen=True)
class ConsistencyRow:
    j: int
    residual_zero: bool
    p_zero: bool


def theorem4_consistency(spec, q, rec: PRecurrence, jmax: int) -> list[ConsistencyRow]:
    """Check residual(j) * den(j) == u_j * p(j, q^j) exactly for j <= jmax.

    Needs q not a root of unity, so den(j) != 0 and u_j != 0.
    """
    spec = as_spec(spec)
    q = as_cyclotomic(q)
    if is_root_of_unity(q):
        raise PreconditionError("consistency check needs q not a root of unity")
    p = build_theorem4_polynomial(spec, q, rec)
    u = prefix(spec, q, jmax + rec.r + 1).field_values()
    qf = _field_q(q)
    rows = []
    for j in range(jmax + 1):
        res = rec.residual(u, j)
        pv = p(j, qf ** j)
        lhs = res * theorem4_denominator(spec, q, rec.r, j)
        if lhs != u[j] * pv:
            raise InconsistencyError(f"cleared-denominator identity fails at j={j}")
        rows.append(ConsistencyRow(j, res == 0, pv == 0))
    return rows


@dataclass(frozen=True)
class LeadingMonomialReport:
    a: int
    b: int
    r: int
    y_degrees: tuple[int, ...]
    formula_degrees: tuple[int, ...]
    leading_q_exponent: int
    expanded_leading: BiPoly | None = None


def leading_monomial_check(spec, r: int, expand: bool = False) -> LeadingMonomialReport:
    """y-degrees of P_0..P_r, uniqueness of the maximum at i = r, and the
    leading term of P_r as a polynomial in (y, q).

    Degrees and the leading q-exponent come from the factor lists; with
    ``expand`` P_r is multiplied out over Z[y, q] and its top y-coefficient
    compared against the monomial.
    """
    spec = as_spec(spec)
    if r < 1:
        raise DomainError("need r >= 1")
    n, k, a, b = spec.as_tuple()
    degs, formula = [], []
    for i in range(r + 1):
        degs.append(sum(ye for ye, _ in theorem4_factor_list(spec, r, i)))
        formula.append(i * a * a + (r - i) * b * b + (r - i) * (a - b) ** 2)
        if degs[i] != formula[i]:
            raise InconsistencyError(f"y-degree of P_{i} is {degs[i]}, formula gives {formula[i]}")
    top = max(degs)
    if degs[r] != top or degs.count(top) != 1:
        offender = next(i for i, dgi in enumerate(degs) if dgi == top and i != r)
        raise InconsistencyError(f"maximal y-degree also attained at i={offender}")
    if degs[r] != a * a * r:
        raise InconsistencyError(f"y-degree of P_r is {degs[r]}, expected {a * a * r}")
    lead_exp = sum(qe for _, qe in theorem4_factor_list(spec, r, r))
    expected = r * a * n + r * a * (r * a + 1) // 2
    if lead_exp != expected:
        raise InconsistencyError(f"leading q-exponent {lead_exp} != {expected}")
    expanded = None
    if expand:
        # keys (y-exponent, q-exponent)
        P = BiPoly({(0, 0): 1})
        for ye, qe in theorem4_factor_list(spec, r, r):
            P = P * BiPoly({(ye, qe): 1, (0, 0): -1})
        ydeg = P.x_degree
        expanded = BiPoly({key: c for key, c in P.terms.items() if key[0] == ydeg})
        if expanded != BiPoly({(a * a * r, expected): 1}):
            raise InconsistencyError(f"expanded leading term {expanded} is not y^{a*a*r} q^{expected}")
    return LeadingMonomialReport(a, b, r, tuple(degs), tuple(formula), lead_exp, expanded)
