"""Lines through the q-Pascal triangle and their generating series.

For admissible ``(n, k, a, b)`` the series is
``h_q(x) = sum_j [n + a j choose k + b j]_q x^j``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith.cyclotomic import (
    CyclotomicNumber,
    as_cyclotomic,
    root_of_unity_order,
    totient,
)
from .arith.poly import UniPoly
from .errors import DomainError, FormatError, InadmissibleSpecError, NotRootOfUnityError
from .qcomb import PowerCache, q_binomial, q_binomial_eval, q_lucas_eval

CONDITIONS = ("n>=k>=0", "a>b>0", "gcd(a,b)=1", "n-k<a-b or k<b")


def is_admissible(n: int, k: int, a: int, b: int) -> tuple[bool, str | None]:
    """Check admissibility; returns ``(ok, first violated condition)``."""
    if not (n >= k >= 0):
        return False, CONDITIONS[0]
    if not (a > b > 0):
        return False, CONDITIONS[1]
    if math.gcd(a, b) != 1:
        return False, CONDITIONS[2]
    if not (n - k < a - b or k < b):
        return False, CONDITIONS[3]
    return True, None


@dataclass(frozen=True)
class LineSpec:
    n: int
    k: int
    a: int
    b: int

    def __post_init__(self):
        ok, cond = is_admissible(self.n, self.k, self.a, self.b)
        if not ok:
            raise InadmissibleSpecError(cond)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.a, self.b)

    def top(self, j: int) -> int:
        return self.n + self.a * j

    def bottom(self, j: int) -> int:
        return self.k + self.b * j

    def __str__(self):
        return f"({self.n},{self.k},{self.a},{self.b})"


def as_spec(spec) -> LineSpec:
    return spec if isinstance(spec, LineSpec) else LineSpec(*spec)


@dataclass(frozen=True)
class SeriesPrefix:
    """Exact prefix u_0..u_{N-1}. ``q`` is ``None`` for prefixes read back
    from a dump, which records only the field order."""

    spec: LineSpec
    order: int
    terms: tuple[CyclotomicNumber, ...]
    q: CyclotomicNumber | None = None

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, j):
        return self.terms[j]

    def field_values(self) -> list:
        """Terms as ``Fraction`` when all are rational, else as-is."""
        if all(t.is_rational() for t in self.terms):
            return [t.to_fraction() for t in self.terms]
        return list(self.terms)

    def scaled(self, c) -> SeriesPrefix:
        return SeriesPrefix(self.spec, self.order, tuple(t * c for t in self.terms), None)


def prefix(spec, q, N: int) -> SeriesPrefix:
    """First ``N`` coefficients of h_q(x)."""
    spec = as_spec(spec)
    q = as_cyclotomic(q)
    if q.is_zero():
        raise DomainError("q must be nonzero")
    if N < 1:
        raise DomainError(f"need N >= 1, got {N}")
    s = root_of_unity_order(q)
    powers = None
    if s is None:
        powers = PowerCache(q.to_fraction() if q.is_rational() else q)
    terms = tuple(
        q_binomial_eval(spec.top(j), spec.bottom(j), q, order=s, powers=powers)
        for j in range(N)
    )
    return SeriesPrefix(spec, q.order, terms, q)


def symbolic_coefficient(spec, j: int) -> UniPoly:
    spec = as_spec(spec)
    if j < 0:
        raise DomainError("j must be non-negative")
    return q_binomial(spec.top(j), spec.bottom(j))


def coefficient_degree(spec, j: int) -> int:
    """(k + b j)(n - k + (a - b) j)."""
    spec = as_spec(spec)
    return (spec.k + spec.b * j) * (spec.n - spec.k + (spec.a - spec.b) * j)


def _q_power_minus_one(m: int) -> UniPoly:
    return UniPoly.monomial(m) - 1


def ratio_factors(spec, j: int) -> tuple[UniPoly, UniPoly]:
    """Numerator and denominator of u_{j+1} / u_j as products of (q^m - 1)."""
    spec = as_spec(spec)
    n, k, a, b = spec.as_tuple()
    num = UniPoly([1])
    for l in range(1, a + 1):
        num = num * _q_power_minus_one(n + a * j + l)
    den = UniPoly([1])
    for l in range(1, b + 1):
        den = den * _q_power_minus_one(k + b * j + l)
    for l in range(1, a - b + 1):
        den = den * _q_power_minus_one(n - k + (a - b) * j + l)
    return num, den


def ratio_identity_check(spec, j: int) -> bool:
    """u_{j+1} * den_j == u_j * num_j as an identity in Z[q]."""
    if j < 0:
        raise DomainError("j must be non-negative")
    num, den = ratio_factors(spec, j)
    return symbolic_coefficient(spec, j + 1) * den == symbolic_coefficient(spec, j) * num


@dataclass(frozen=True)
class LucasComponent:
    residue: int
    scalar: CyclotomicNumber
    n_shift: int
    k_shift: int
    stride: int
    a: int
    b: int

    def coefficient(self, l: int) -> CyclotomicNumber:
        """Coefficient of x^(l*stride + residue)."""
        return self.scalar * math.comb(self.n_shift + self.a * l, self.k_shift + self.b * l)

    def exponent(self, l: int) -> int:
        return l * self.stride + self.residue


def lucas_decomposition(spec, omega) -> list[LucasComponent]:
    """Split h_omega into s pieces, one per residue class of j mod s."""
    spec = as_spec(spec)
    omega = as_cyclotomic(omega)
    s = root_of_unity_order(omega)
    if s is None:
        raise NotRootOfUnityError(f"{omega} is not a root of unity")
    n, k, a, b = spec.as_tuple()
    comps = []
    for r in range(s):
        top, bot = n + a * r, k + b * r
        tr, br = top % s, bot % s
        scalar = q_lucas_eval(tr, br, omega, order=s)
        comps.append(LucasComponent(r, scalar, top // s, bot // s, s, a, b))
    return comps


def reassemble(components: Sequence[LucasComponent], N: int) -> list[CyclotomicNumber]:
    """Sum of the component series, truncated to N terms."""
    if not components:
        return []
    order = components[0].scalar.order
    out = [CyclotomicNumber.rational(0, order) for _ in range(N)]
    for comp in components:
        l = 0
        while comp.exponent(l) < N:
            out[comp.exponent(l)] = out[comp.exponent(l)] + comp.coefficient(l)
            l += 1
    return out


# -- dump format -----------------------------------------------------------

def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def dumps_prefix(p: SeriesPrefix) -> str:
    n, k, a, b = p.spec.as_tuple()
    lines = [f"s={p.order} n={n} k={k} a={a} b={b} N={len(p.terms)}"]
    for t in p.terms:
        t = t.embed(p.order) if t.order != p.order else t
        lines.append(",".join(_frac_str(c) for c in t.coordinates()))
    return "\n".join(lines) + "\n"


def _parse_frac(tok: str, lineno: int) -> Fraction:
    num, sep, den = tok.partition("/")
    try:
        if not sep:
            raise ValueError
        d = int(den)
        if d <= 0:
            raise ValueError
        return Fraction(int(num), d)
    except ValueError:
        raise FormatError(f"line {lineno}: bad rational {tok!r}") from None


def loads_prefix(text: str) -> SeriesPrefix:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty prefix dump")
    header = {}
    for field in lines[0].split(" "):
        key, sep, val = field.partition("=")
        if not sep:
            raise FormatError(f"line 0: bad header field {field!r}")
        try:
            header[key] = int(val)
        except ValueError:
            raise FormatError(f"line 0: bad integer in {field!r}") from None
    if list(header) != ["s", "n", "k", "a", "b", "N"]:
        raise FormatError("line 0: header must be 's= n= k= a= b= N='")
    s, N = header["s"], header["N"]
    if s < 1:
        raise FormatError("line 0: order must be >= 1")
    spec = LineSpec(header["n"], header["k"], header["a"], header["b"])
    if len(lines) - 1 != N:
        raise FormatError(f"expected {N} coefficient lines, found {len(lines) - 1}")
    width = totient(s)
    terms = []
    for i, line in enumerate(lines[1:], start=1):
        toks = line.split(",")
        if len(toks) != width:
            raise FormatError(f"line {i}: expected {width} entries, got {len(toks)}")
        coords = [_parse_frac(t, i) for t in toks]
        terms.append(CyclotomicNumber(coords, s, reduced=False))
    return SeriesPrefix(spec, s, tuple(terms), None)


def dump_prefix(p: SeriesPrefix, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps_prefix(p))


def load_prefix(path) -> SeriesPrefix:
    with open(path, encoding="ascii", newline="") as fh:
        return loads_prefix(fh.read())
