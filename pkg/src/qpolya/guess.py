"""Guessing algebraic equations and P-recurrences from exact series prefixes.

Both guessers set up a linear system on the unknown coefficients, solve it
exactly on a leading block of equations, and keep only solutions that also
satisfy the held-out equations. Finding nothing is evidence only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith.cyclotomic import CyclotomicNumber
from .arith.linalg import _rref, modular_rank, nullspace
from .arith.modular import ModularImage
from .arith.poly import BiPoly, UniPoly, format_bipoly, format_poly, poly_gcd
from .errors import DomainError, PrefixTooShortError
from .lineseries import SeriesPrefix


@dataclass(frozen=True)
class Verification:
    """``index`` is the verified length on success, else the first failing
    coefficient (or recurrence window) index."""

    ok: bool
    index: int

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class AlgEquation:
    """P(x, z) with P(x, h(x)) = 0 mod x^verified_order."""

    poly: BiPoly
    dx: int
    dz: int
    verified_order: int
    order: int = 1

    def __post_init__(self):
        if self.poly.is_zero():
            raise DomainError("annihilating polynomial must be nonzero")
        if self.poly.y_degree < 1:
            raise DomainError("annihilating polynomial must involve z")
        if all(j > 0 for _, j in self.poly.terms):
            raise DomainError("annihilating polynomial must not be divisible by z")

    @property
    def z_degree(self) -> int:
        return self.poly.y_degree

    @property
    def x_degree(self) -> int:
        return self.poly.x_degree

    def __str__(self):
        return format_bipoly(self.poly, "x", "z")


@dataclass(frozen=True)
class PRecurrence:
    """sum_i c_i(j) u_{j+i} = 0 for j >= 0."""

    coeffs: tuple[UniPoly, ...]
    order: int = 1

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise DomainError("recurrence needs at least one coefficient")
        if self.coeffs[0].is_zero() or self.coeffs[-1].is_zero():
            raise DomainError("recurrence needs c_0(x) c_r(x) != 0")

    @property
    def r(self) -> int:
        return len(self.coeffs) - 1

    @property
    def d(self) -> int:
        return max(c.degree for c in self.coeffs)

    def residual(self, terms, j: int):
        acc = 0
        for i, c in enumerate(self.coeffs):
            cj = c(j)
            if cj != 0:
                acc = acc + cj * terms[j + i]
        return acc

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            txt = format_poly(c.coeffs, "j")
            if not (txt.startswith("(") and txt.endswith(")")):
                txt = f"({txt})"
            parts.append(f"{txt}*u(j+{i})")
        return " + ".join(parts) + " = 0"


# -- helpers ------------------------------------------------------------------

def _values(series) -> list:
    if isinstance(series, SeriesPrefix):
        return series.field_values()
    vals = list(series)
    if vals and all(isinstance(v, CyclotomicNumber) and v.is_rational() for v in vals):
        return [v.to_fraction() for v in vals]
    return [Fraction(v) if isinstance(v, int) else v for v in vals]


def _field_order(values) -> int:
    s = 1
    for v in values:
        if isinstance(v, CyclotomicNumber):
            s = math.lcm(s, v.order)
    return s


def _one_like(values):
    s = _field_order(values)
    return Fraction(1) if s == 1 and not any(isinstance(v, CyclotomicNumber) for v in values) \
        else CyclotomicNumber.rational(1, s)


def mul_trunc(a: Sequence, b: Sequence, N: int) -> list:
    out = [0] * N
    for i, x in enumerate(a[:N]):
        if x == 0:
            continue
        for j in range(min(len(b), N - i)):
            y = b[j]
            if y != 0:
                out[i + j] = out[i + j] + x * y
    return out


def series_powers(h: Sequence, k: int, N: int) -> list[list]:
    """[h^0, ..., h^k] truncated to N terms."""
    one = _one_like(h)
    pows = [[one] + [0] * (N - 1)]
    for _ in range(k):
        pows.append(mul_trunc(pows[-1], h, N))
    return pows


def _full_rank_mod_p(rows, ncols, values) -> bool:
    """True only if the system provably has a trivial kernel."""
    image = ModularImage(_field_order(values))
    mrows = []
    for row in rows:
        mrow = []
        for v in row:
            m = image(v)
            if m is None:
                return False
            mrow.append(m)
        mrows.append(mrow)
    return modular_rank(mrows, image.p) == ncols


def _kernel(rows, heldout, ncols, values):
    """Kernel of ``rows`` stacked with ``heldout``, or [] if ``rows`` alone
    already has a trivial kernel."""
    if len(rows) >= ncols and _full_rank_mod_p(rows, ncols, values):
        return []
    reduced, _ = _rref(rows, ncols)
    if len(reduced) == ncols:
        return []
    return nullspace(reduced + [list(r) for r in heldout], ncols)


def _scale_first_to_one(coeffs: list):
    lead = next(c for c in coeffs if c != 0)
    inv = 1 / lead if not isinstance(lead, int) else Fraction(1, lead)
    return [c * inv if c != 0 else c for c in coeffs]


def _demote(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# -- algebraic equations ----------------------------------------------------

def required_terms_algebraic(dx: int, dz: int) -> int:
    return (dx + 1) * (dz + 1) + dx + dz + 5


def guess_algebraic(series, dx: int, dz: int) -> AlgEquation | None:
    """Search for P(x, z) of degrees <= (dx, dz) annihilating the prefix.

    Unknowns are ordered by (z-degree, x-degree); the returned polynomial is
    the kernel element with the smallest leading monomial in that order,
    normalized (z- and x-content stripped, first coefficient 1).
    """
    if dx < 0 or dz < 1:
        raise DomainError("need dx >= 0 and dz >= 1")
    h = _values(series)
    N = len(h)
    need = required_terms_algebraic(dx, dz)
    if N < need:
        raise PrefixTooShortError(need, N)
    guard = dx + dz + 5
    pows = series_powers(h, dz, N)
    cols = [(i, j) for j in range(dz + 1) for i in range(dx + 1)]
    rows = [
        [pows[j][m - i] if m >= i else 0 for (i, j) in cols]
        for m in range(N)
    ]
    kernel = _kernel(rows[: N - guard], rows[N - guard:], len(cols), h)
    if not kernel:
        return None
    poly = BiPoly({key: c for key, c in zip(cols, kernel[0])})
    order = _field_order(h)
    return _normalize_equation(poly, dx, dz, h, order)


def _normalize_equation(poly: BiPoly, dx, dz, h, order) -> AlgEquation | None:
    N = len(h)
    zmin = min(j for _, j in poly.terms)
    if zmin:
        stripped = BiPoly({(i, j - zmin): c for (i, j), c in poly.terms.items()})
        if _residual_index(stripped, h) == N:
            poly = stripped
    g = UniPoly()
    for j in range(poly.y_degree + 1):
        g = poly_gcd(g, poly.coeff_in_y(j)) if not g.is_zero() else poly.coeff_in_y(j).monic()
    if g.degree and g.degree > 0:
        xpow = g.trailing_zeros()
        unit_part = UniPoly(g.coeffs[xpow:])
        poly = _divide_x_content(poly, unit_part)
        if xpow:
            cand = _divide_x_content(poly, UniPoly.monomial(xpow))
            if _residual_index(cand, h) == N:
                poly = cand
    keys = [k for k, _ in poly.sorted_terms()]
    scaled = _scale_first_to_one([poly.terms[k] for k in keys])
    poly = BiPoly({k: _demote(c) for k, c in zip(keys, scaled)})
    if poly.y_degree < 1:
        return None
    return AlgEquation(poly, dx, dz, _residual_index(poly, h), order)


def _divide_x_content(poly: BiPoly, g: UniPoly) -> BiPoly:
    terms = {}
    for j in range(poly.y_degree + 1):
        c = poly.coeff_in_y(j)
        if c.is_zero():
            continue
        for i, v in enumerate(c.exact_div(g).coeffs):
            terms[(i, j)] = v
    return BiPoly(terms)


def _residual_index(poly: BiPoly, h: Sequence) -> int:
    N = len(h)
    pows = series_powers(h, max(poly.y_degree, 0), N)
    acc = [0] * N
    for (i, j), c in poly.terms.items():
        pj = pows[j]
        for m in range(i, N):
            v = pj[m - i]
            if v != 0:
                acc[m] = acc[m] + c * v
    for m, v in enumerate(acc):
        if v != 0:
            return m
    return N


def verify_algebraic(eq: AlgEquation | BiPoly, series) -> Verification:
    """Expand P(x, h) mod x^N and report the first nonzero coefficient."""
    poly = eq.poly if isinstance(eq, AlgEquation) else eq
    h = _values(series)
    idx = _residual_index(poly, h)
    return Verification(idx == len(h), idx)


# -- P-recurrences ----------------------------------------------------------

def required_terms_recurrence(r: int, d: int) -> int:
    return (r + 1) * (d + 1) + r + 10


def guess_precurrence(terms, r: int, d: int) -> PRecurrence | None:
    """Search for sum_{i<=r} c_i(j) u_{j+i} = 0 with deg c_i <= d.

    Solved on the first (r+1)(d+1)+5 windows, the rest held out. Among
    kernel vectors, the first with c_0 != 0 is returned, with trailing zero
    c_i dropped and the first nonzero coefficient scaled to 1.
    """
    if r < 0 or d < 0:
        raise DomainError("need r, d >= 0")
    u = _values(terms)
    L = len(u)
    need = required_terms_recurrence(r, d)
    if L < need:
        raise PrefixTooShortError(need, L)
    ncols = (r + 1) * (d + 1)
    rows = []
    for j in range(L - r):
        jp = [j ** t for t in range(d + 1)]
        rows.append([jp[t] * u[j + i] for i in range(r + 1) for t in range(d + 1)])
    nsolve = ncols + 5
    kernel = _kernel(rows[:nsolve], rows[nsolve:], ncols, u)
    for vec in kernel:
        blocks = [UniPoly(vec[i * (d + 1):(i + 1) * (d + 1)]) for i in range(r + 1)]
        if blocks[0].is_zero():
            continue
        while blocks[-1].is_zero():
            blocks.pop()
        flat = [c for b in blocks for c in b.coeffs]
        lead = next(c for c in flat if c != 0)
        inv = Fraction(1, lead) if isinstance(lead, int) else 1 / lead
        blocks = [b.map(lambda c: _demote(c * inv)) for b in blocks]
        return PRecurrence(tuple(blocks), _field_order(u))
    return None


def verify_precurrence(rec: PRecurrence, terms) -> Verification:
    u = _values(terms)
    windows = len(u) - rec.r
    if windows < 1:
        raise PrefixTooShortError(rec.r + 1, len(u))
    for j in range(windows):
        if rec.residual(u, j) != 0:
            return Verification(False, j)
    return Verification(True, windows)
