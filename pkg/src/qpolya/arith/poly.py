"""Dense univariate and sparse bivariate polynomials.

Coefficients may be ``int``, ``Fraction`` or ``CyclotomicNumber``; anything
supporting ``+ - *`` and comparison with ``0`` works for ring operations,
and field division additionally needs ``/`` (ints are promoted to
``Fraction`` before dividing).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

KARATSUBA_THRESHOLD = 32

NEG_INF = -math.inf


def _fdiv(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def _trim(c: list) -> list:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    del c[n:]
    return c


def _add_lists(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = out[i] + v
    return out


def _sub_lists(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = out[i] - v
    return out


def _school(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _karatsuba(a, b, threshold):
    if not a or not b:
        return []
    if min(len(a), len(b)) <= threshold:
        return _school(a, b)
    m = max(len(a), len(b)) // 2
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = _karatsuba(a0, b0, threshold)
    z2 = _karatsuba(a1, b1, threshold)
    z1 = _karatsuba(_add_lists(a0, a1), _add_lists(b0, b1), threshold)
    z1 = _sub_lists(_sub_lists(z1, z0), z2)
    out = [0] * (len(a) + len(b) - 1)
    for i, v in enumerate(z0):
        out[i] = out[i] + v
    for i, v in enumerate(z1):
        out[i + m] = out[i + m] + v
    for i, v in enumerate(z2):
        out[i + 2 * m] = out[i + 2 * m] + v
    return out


def mul_lists(a, b, threshold=KARATSUBA_THRESHOLD):
    """Product of coefficient lists; Karatsuba above ``threshold``."""
    return _trim(_karatsuba(list(a), list(b), threshold))


class UniPoly:
    """Immutable dense polynomial, ``coeffs[i]`` is the coefficient of x^i.

    The zero polynomial has no coefficients and degree ``-inf``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", tuple(_trim(list(coeffs))))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def monomial(cls, deg: int, coeff=1) -> UniPoly:
        return cls([0] * deg + [coeff])

    @classmethod
    def x(cls) -> UniPoly:
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self.coeffs, "x")

    @staticmethod
    def _coerce(other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other):
        other = self._coerce(other)
        return UniPoly(_add_lists(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        return UniPoly(_sub_lists(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        return UniPoly(mul_lists(self.coeffs, other.coeffs))

    def __rmul__(self, other):
        return UniPoly([other * c for c in self.coeffs])

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result, base = UniPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int) -> UniPoly:
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return UniPoly([0] * k + list(self.coeffs))

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    evaluate = __call__

    def compose_power(self, m: int) -> UniPoly:
        """p(x^m)."""
        out = [0] * (m * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return UniPoly(out)

    def map(self, f) -> UniPoly:
        return UniPoly([f(c) for c in self.coeffs])

    def divmod(self, other: UniPoly):
        """Euclidean division over a field."""
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dl = other.lead
        dd = len(other.coeffs) - 1
        if len(rem) - 1 < dd:
            return UniPoly(), UniPoly(rem)
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = _fdiv(c, dl)
            quot[i - dd] = f
            for j, oc in enumerate(other.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - f * oc
        return UniPoly(quot), UniPoly(rem[:dd])

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = self.divmod(other)
        if r.coeffs:
            raise ArithmeticError("inexact polynomial division")
        return q.map(_demote)

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        lc = self.lead
        return UniPoly([_fdiv(c, lc) for c in self.coeffs])

    def derivative(self) -> UniPoly:
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def trailing_zeros(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0


def _demote(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over a field."""
    while b.coeffs:
        a, b = b, a.divmod(b)[1]
    return a.monic()


def poly_xgcd(a: UniPoly, b: UniPoly):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly([1]), UniPoly()
    t0, t1 = UniPoly(), UniPoly([1])
    while r1.coeffs:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0.coeffs:
        return r0, s0, t0
    lc = r0.lead
    inv = _fdiv(1, lc)
    return r0 * inv, s0 * inv, t0 * inv


class BiPoly:
    """Sparse bivariate polynomial; ``terms`` maps ``(i, j)`` to the
    coefficient of ``x^i y^j`` (zero coefficients are never stored)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for key, c in items:
            key = (int(key[0]), int(key[1]))
            if key[0] < 0 or key[1] < 0:
                raise ValueError("negative exponent")
            acc[key] = acc[key] + c if key in acc else c
        object.__setattr__(self, "terms", {k: v for k, v in acc.items() if v != 0})

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def from_y_poly(cls, p: UniPoly, x_exp: int = 0) -> BiPoly:
        return cls({(x_exp, j): c for j, c in enumerate(p.coeffs)})

    @classmethod
    def from_x_poly(cls, p: UniPoly, y_exp: int = 0) -> BiPoly:
        return cls({(i, y_exp): c for i, c in enumerate(p.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self):
        return max((i + j for i, j in self.terms), default=NEG_INF)

    @property
    def x_degree(self):
        return max((i for i, _ in self.terms), default=NEG_INF)

    @property
    def y_degree(self):
        return max((j for _, j in self.terms), default=NEG_INF)

    def __getitem__(self, key):
        return self.terms.get(key, 0)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __repr__(self):
        return f"BiPoly({dict(sorted(self.terms.items()))!r})"

    def __str__(self):
        return format_bipoly(self, "x", "y")

    @staticmethod
    def _coerce(other):
        return other if isinstance(other, BiPoly) else BiPoly({(0, 0): other})

    def __add__(self, other):
        other = self._coerce(other)
        return BiPoly(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        acc: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                acc[key] = acc[key] + c1 * c2 if key in acc else c1 * c2
        return BiPoly(acc)

    def __rmul__(self, other):
        return BiPoly({k: other * v for k, v in self.terms.items()})

    def __call__(self, x, y):
        # Horner in y over x-polynomials, with power caches
        xp = [1]
        yp = [1]
        total = 0
        for (i, j), c in self.terms.items():
            while len(xp) <= i:
                xp.append(xp[-1] * x)
            while len(yp) <= j:
                yp.append(yp[-1] * y)
            total = total + c * xp[i] * yp[j]
        return total

    evaluate = __call__

    def coeff_in_y(self, j: int) -> UniPoly:
        """Coefficient of y^j as a polynomial in x."""
        d = max((i for i, jj in self.terms if jj == j), default=-1)
        out = [0] * (d + 1)
        for (i, jj), c in self.terms.items():
            if jj == j:
                out[i] = c
        return UniPoly(out)

    def coeff_in_x(self, i: int) -> UniPoly:
        """Coefficient of x^i as a polynomial in y."""
        d = max((jj for ii, jj in self.terms if ii == i), default=-1)
        out = [0] * (d + 1)
        for (ii, j), c in self.terms.items():
            if ii == i:
                out[j] = c
        return UniPoly(out)

    def map(self, f) -> BiPoly:
        return BiPoly({k: f(v) for k, v in self.terms.items()})

    def sorted_terms(self):
        """Terms in ascending ``(j, i)`` order (y-degree first)."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))


class _Paren(str):
    pass


def _coeff_str(c) -> str:
    if isinstance(c, _Paren):
        return f"({c})"

    s = str(c)
    if any(op in s.lstrip("-") for op in "+-") or (" " in s):
        return f"({s})"
    return s


def format_poly(coeffs, var: str = "x") -> str:
    """Ascending-order text rendering, e.g. ``1 + q + 2*q^2``."""
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        parts.append(_term_str(c, mono))
    return _join_terms(parts)


def format_bipoly(p: BiPoly, xvar: str = "x", yvar: str = "z") -> str:
    parts = []
    for (i, j), c in p.sorted_terms():
        mono = "*".join(
            m
            for m in (
                "" if i == 0 else (xvar if i == 1 else f"{xvar}^{i}"),
                "" if j == 0 else (yvar if j == 1 else f"{yvar}^{j}"),
            )
            if m
        )
        parts.append(_term_str(c, mono))
    return _join_terms(parts)


def _term_str(c, mono: str):
    neg = False
    if hasattr(c, "is_rational"):
        if c.is_rational():
            c = c.to_fraction()
        else:
            c = _Paren(c.format("zeta"))
    if isinstance(c, (int, Fraction)):
        neg = c < 0
        c = -c if neg else c
    if not mono:
        return neg, (f"({c})" if isinstance(c, _Paren) else str(c))
    if c == 1:
        return neg, mono
    return neg, f"{_coeff_str(c)}*{mono}"


def _join_terms(parts) -> str:
    if not parts:
        return "0"
    out = []
    for k, (neg, s) in enumerate(parts):
        if k == 0:
            out.append(f"-{s}" if neg else s)
        else:
            out.append(f" - {s}" if neg else f" + {s}")
    return "".join(out)
