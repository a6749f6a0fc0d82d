"""Exact arithmetic in cyclotomic fields Q(zeta_s).

An element is stored as its canonical residue modulo the s-th cyclotomic
polynomial, so equality within one field is equality of coefficient tuples.
Operands of different orders are embedded into Q(zeta_lcm) by the dilation
zeta_s = zeta_{ms}^m.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath.ctx_iv import MPIntervalContext

from ..errors import CyclotomicZeroDivisionError, DomainError, UndecidedError
from .poly import UniPoly, poly_xgcd, format_poly

DEFAULT_START_PRECISION = 64
DEFAULT_MAX_PRECISION = 4096


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def _phi_coeffs(s: int) -> tuple[int, ...]:
    if s < 1:
        raise DomainError(f"cyclotomic order must be >= 1, got {s}")
    num = UniPoly([-1] + [0] * (s - 1) + [1])
    for d in _divisors(s)[:-1]:
        num = num.exact_div(UniPoly(_phi_coeffs(d)))
    return tuple(int(c) for c in num.coeffs)


def cyclotomic_poly(s: int) -> UniPoly:
    """The s-th cyclotomic polynomial as an integer UniPoly."""
    return UniPoly(_phi_coeffs(s))


def totient(s: int) -> int:
    return len(_phi_coeffs(s)) - 1


def _reduce(coeffs: list, s: int) -> tuple:
    """Reduce a coefficient list modulo Phi_s (monic, integer)."""
    phi = _phi_coeffs(s)
    d = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, d - 1, -1):
        t = c[i]
        if t == 0:
            continue
        base = i - d
        for j in range(d):
            pj = phi[j]
            if pj:
                c[base + j] -= t * pj
        c[i] = 0
    c = c[:d]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected a rational, got {type(v).__name__}")


class CyclotomicNumber:
    """Element of Q(zeta_order), immutable."""

    __slots__ = ("order", "residue")

    def __init__(self, residue=(), order: int = 1, *, reduced: bool = False):
        if order < 1:
            raise DomainError(f"cyclotomic order must be >= 1, got {order}")
        if isinstance(residue, UniPoly):
            residue = residue.coeffs
        elif isinstance(residue, (int, Fraction)):
            residue = (residue,)
        res = [_as_fraction(c) for c in residue]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "residue", tuple(res) if reduced else _reduce(res, order))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    def __reduce__(self):
        return (CyclotomicNumber, (self.residue, self.order))

    @classmethod
    def zeta(cls, s: int) -> CyclotomicNumber:
        return cls((0, 1), s)

    @classmethod
    def rational(cls, r, order: int = 1) -> CyclotomicNumber:
        return cls((_as_fraction(r),), order, reduced=True) if r != 0 else cls((), order, reduced=True)

    def coordinates(self) -> list[Fraction]:
        """Residue in the power basis, padded to exactly phi(order) entries."""
        return list(self.residue) + [Fraction(0)] * (totient(self.order) - len(self.residue))

    def is_zero(self) -> bool:
        return not self.residue

    def is_rational(self) -> bool:
        return len(self.residue) <= 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element")
        return self.residue[0] if self.residue else Fraction(0)

    def embed(self, order: int) -> CyclotomicNumber:
        """Same value viewed in Q(zeta_order); ``self.order`` must divide it."""
        if order == self.order:
            return self
        if order % self.order:
            raise DomainError(f"cannot embed order {self.order} into order {order}")
        m = order // self.order
        out = [Fraction(0)] * (m * max(len(self.residue) - 1, 0) + 1) if self.residue else []
        for i, c in enumerate(self.residue):
            out[i * m] = c
        return CyclotomicNumber(out, order)

    def _common(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order == self.order:
                return self, other
            s = math.lcm(self.order, other.order)
            return self.embed(s), other.embed(s)
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicNumber.rational(other, self.order)
        return None, None

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        x, y = a.residue, b.residue
        if len(x) < len(y):
            x, y = y, x
        out = list(x)
        for i, v in enumerate(y):
            out[i] += v
        while out and out[-1] == 0:
            out.pop()
        return CyclotomicNumber(out, a.order, reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber([-c for c in self.residue], self.order, reduced=True)

    def __sub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return CyclotomicNumber((), self.order, reduced=True)
            return CyclotomicNumber([c * other for c in self.residue], self.order, reduced=True)
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        x, y = a.residue, b.residue
        if not x or not y:
            return CyclotomicNumber((), a.order, reduced=True)
        if len(x) == 1:
            return CyclotomicNumber([x[0] * c for c in y], a.order, reduced=True)
        if len(y) == 1:
            return CyclotomicNumber([y[0] * c for c in x], a.order, reduced=True)
        out = [Fraction(0)] * (len(x) + len(y) - 1)
        for i, u in enumerate(x):
            if u:
                for j, v in enumerate(y):
                    out[i + j] += u * v
        return CyclotomicNumber(_reduce(out, a.order), a.order, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        if not self.residue:
            raise CyclotomicZeroDivisionError()
        if len(self.residue) == 1:
            return CyclotomicNumber((1 / self.residue[0],), self.order, reduced=True)
        g, s, _ = poly_xgcd(UniPoly(self.residue), cyclotomic_poly(self.order).map(Fraction))
        if g.degree != 0:
            raise CyclotomicZeroDivisionError()
        return CyclotomicNumber(s.coeffs, self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise CyclotomicZeroDivisionError()
            return CyclotomicNumber([c / other for c in self.residue], self.order, reduced=True)
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        result = CyclotomicNumber.rational(1, self.order)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conj(self) -> CyclotomicNumber:
        """Complex conjugate: zeta -> zeta^(s-1)."""
        s = self.order
        if len(self.residue) <= 1:
            return self
        out = [Fraction(0)] * ((s - 1) * (len(self.residue) - 1) + 1)
        for i, c in enumerate(self.residue):
            out[(i * (s - 1))] += c
        return CyclotomicNumber(out, s)

    def __eq__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a.residue == b.residue

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    # Values equal across different orders would need a canonical field to
    # hash consistently; not needed, so instances are unhashable.
    __hash__ = None

    def __bool__(self):
        return bool(self.residue)

    def __repr__(self):
        return f"CyclotomicNumber({[str(c) for c in self.residue]}, order={self.order})"

    def format(self, var: str = "z") -> str:
        return format_poly(self.residue, var)

    def __str__(self):
        return self.format("z")

    def to_complex(self, dps: int = 30) -> complex:
        with mpmath.workdps(dps):
            z = mpmath.expjpi(mpmath.mpf(2) / self.order)
            acc = mpmath.mpc(0)
            for c in reversed(self.residue):
                acc = acc * z + mpmath.mpf(c.numerator) / c.denominator
            return acc


def cyc_add(a, b):
    return a + b


def cyc_mul(a, b):
    return a * b


def cyc_inv(a: CyclotomicNumber) -> CyclotomicNumber:
    return a.inverse()


def cyc_conj(a: CyclotomicNumber) -> CyclotomicNumber:
    return a.conj()


def as_cyclotomic(v, order: int = 1) -> CyclotomicNumber:
    if isinstance(v, CyclotomicNumber):
        return v
    return CyclotomicNumber.rational(v, order)


def _torsion_exponent(q: CyclotomicNumber) -> int:
    return math.lcm(2, q.order)


def is_root_of_unity(q) -> bool:
    """True iff q^L = 1 with L = lcm(2, order); the torsion units of
    Q(zeta_s) are exactly +-zeta_s^k."""
    q = as_cyclotomic(q)
    if q.is_zero():
        raise DomainError("zero is not a unit")
    return q ** _torsion_exponent(q) == 1


def root_of_unity_order(q) -> int | None:
    """Minimal m >= 1 with q^m = 1, or None."""
    q = as_cyclotomic(q)
    if not is_root_of_unity(q):
        return None
    for m in _divisors(_torsion_exponent(q)):
        if q ** m == 1:
            return m
    raise AssertionError("unreachable")  # pragma: no cover


def _interval_real(w: CyclotomicNumber, prec: int):
    # private context: the shared mpmath.iv precision is global state
    iv = MPIntervalContext()
    iv.prec = prec
    total = iv.mpf(0)
    for k, c in enumerate(w.residue):
        if c == 0:
            continue
        ck = iv.mpf(c.numerator) / iv.mpf(c.denominator)
        total += ck if k == 0 else ck * iv.cos(2 * iv.pi * k / w.order)
    return total


def max_precision_from_env(default: int = DEFAULT_MAX_PRECISION) -> int:
    raw = os.environ.get("QPOLYA_MAX_PRECISION")
    return int(raw) if raw else default


def compare_abs_to_one(q, max_precision: int | None = None) -> str:
    """Classify |q| against 1 as ``"less"``, ``"equal"`` or ``"greater"``.

    Equality is decided exactly through q * conj(q) = 1; otherwise |q|^2 - 1
    is enclosed in a real interval at zeta_s = exp(2 pi i / s), doubling the
    working precision until the interval excludes zero.
    """
    q = as_cyclotomic(q)
    if q.is_zero():
        raise DomainError("compare_abs_to_one of zero")
    w = q * q.conj() - 1
    if w.is_zero():
        return "equal"
    if w.is_rational():
        return "greater" if w.to_fraction() > 0 else "less"
    cap = max_precision if max_precision is not None else max_precision_from_env()
    prec = DEFAULT_START_PRECISION
    while prec <= cap:
        box = _interval_real(w, prec)
        if box.a > 0:
            return "greater"
        if box.b < 0:
            return "less"
        prec *= 2
    raise UndecidedError(f"|q| vs 1 undecided at precision cap {cap} bits")
