"""q-integers, Gaussian binomial coefficients and the lattice-path oracle."""

from __future__ import annotations

import itertools
import math
import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .arith.cyclotomic import CyclotomicNumber, as_cyclotomic, root_of_unity_order
from .arith.poly import UniPoly
from .errors import CapExceededError, DomainError, NotRootOfUnityError

PATH_ENUMERATION_CAP = 20

# Rows of the q-Pascal triangle up to this n are memoized; larger n use a
# rolling window over the needed band only.
_TRIANGLE_LIMIT = 96
_triangle: list[list[list[int]]] = [[[1]]]
_triangle_lock = threading.Lock()


def q_int(n: int) -> UniPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise DomainError(f"q_int needs n >= 0, got {n}")
    return UniPoly([1] * n)


def _shift_add(low: list[int], high: list[int], k: int) -> list[int]:
    """low + q^k * high, as coefficient lists."""
    out = list(low) + [0] * max(0, k + len(high) - len(low))
    for i, c in enumerate(high):
        out[i + k] += c
    return out


def _extend_triangle(n: int) -> None:
    with _triangle_lock:
        while len(_triangle) <= n:
            prev = _triangle[-1]
            m = len(_triangle)
            row = [[1]]
            for k in range(1, m):
                row.append(_shift_add(prev[k - 1], prev[k], k))
            row.append([1])
            _triangle.append(row)


def _q_binomial_band(n: int, k: int) -> list[int]:
    # rows m = 0..n, keeping only entries k' that can still reach (n, k)
    row = {0: [1]}
    for m in range(1, n + 1):
        lo, hi = max(0, k - (n - m)), min(m, k)
        new = {}
        for kk in range(lo, hi + 1):
            left = row.get(kk - 1) if kk >= 1 else None
            up = row.get(kk) if kk <= m - 1 else None
            if left is None:
                new[kk] = [c for c in up] if kk == 0 else _shift_add([], up, kk)
            elif up is None:
                new[kk] = list(left)
            else:
                new[kk] = _shift_add(left, up, kk)
        row = new
    return row[k]


def q_binomial(n: int, k: int) -> UniPoly:
    """Gaussian binomial [n choose k]_q in Z[q], via the q-Pascal rule
    [n,k] = [n-1,k-1] + q^k [n-1,k]; no division anywhere."""
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    if n <= _TRIANGLE_LIMIT:
        if len(_triangle) <= n:
            _extend_triangle(n)
        return UniPoly(_triangle[n][k])
    return UniPoly(_q_binomial_band(n, k))


def q_factorial(n: int) -> UniPoly:
    out = UniPoly([1])
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


def _residual(x: int, y: int, omega: CyclotomicNumber) -> CyclotomicNumber:
    if y > x:
        return CyclotomicNumber.rational(0, omega.order)
    return as_cyclotomic(q_binomial(x, y)(omega), omega.order)


def q_lucas_eval(x: int, y: int, omega, order: int | None = None) -> CyclotomicNumber:
    """[x choose y] at a root of unity of order s, by the q-Lucas reduction
    C(x div s, y div s) * [x mod s choose y mod s]_omega.

    Out-of-range ``y > x`` gives 0, as the reduction itself does.
    """
    omega = as_cyclotomic(omega)
    s = order if order is not None else root_of_unity_order(omega)
    if s is None:
        raise NotRootOfUnityError(f"{omega} is not a root of unity")
    if x < 0 or y < 0:
        raise DomainError("q_lucas_eval needs x, y >= 0")
    zero = CyclotomicNumber.rational(0, omega.order)
    if y > x:
        return zero
    c = math.comb(x // s, y // s)
    if c == 0:
        return zero
    return _residual(x % s, y % s, omega) * c


class PowerCache:
    """Memoized powers q^0, q^1, ... of a fixed field element."""

    def __init__(self, q):
        self.q = q
        self._pows = [q ** 0 if not isinstance(q, Fraction) else Fraction(1)]

    def __getitem__(self, m: int):
        pows = self._pows
        while len(pows) <= m:
            pows.append(pows[-1] * self.q)
        return pows[m]


def _product_formula(n: int, k: int, pw: PowerCache):
    k = min(k, n - k)
    num = den = pw[0]
    for i in range(1, k + 1):
        num = num * (1 - pw[n - k + i])
        den = den * (1 - pw[i])
    return num / den


def q_binomial_eval(n: int, k: int, q, *, order: int | None | bool = False,
                    powers: PowerCache | None = None) -> CyclotomicNumber:
    """[n choose k] evaluated at q.

    Roots of unity go through :func:`q_lucas_eval`; any other q uses the
    product formula, whose denominators (1 - q^i) cannot vanish then.
    ``order`` may pass a precomputed root-of-unity order (``None`` meaning
    "not a root of unity") to skip the check.
    """
    q = as_cyclotomic(q)
    if q.is_zero():
        raise DomainError("q must be nonzero")
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"q_binomial_eval needs 0 <= k <= n, got n={n}, k={k}")
    s = root_of_unity_order(q) if order is False else order
    if s is not None:
        return q_lucas_eval(n, k, q, order=s)
    if q.is_rational():
        if powers is None:
            powers = PowerCache(q.to_fraction())
        return CyclotomicNumber.rational(_product_formula(n, k, powers), q.order)
    if powers is None:
        powers = PowerCache(q)
    return _product_formula(n, k, powers)


@dataclass(frozen=True)
class AreaDistribution:
    endpoint: tuple[int, int]
    distribution: UniPoly

    def total(self) -> int:
        return sum(self.distribution.coeffs)


def path_area_distribution(x: int, y: int, cap: int = PATH_ENUMERATION_CAP) -> AreaDistribution:
    """Brute-force area statistic over all North/East paths to (x, y).

    Area is the sum, over East steps, of the number of North steps taken
    before it.
    """
    if x < 0 or y < 0:
        raise DomainError("path endpoint must be non-negative")
    if x + y > cap:
        raise CapExceededError("path enumeration", cap, x + y)
    counts = Counter()
    for east in itertools.combinations(range(x + y), x):
        counts[sum(p - t for t, p in enumerate(east))] += 1
    top = max(counts)
    return AreaDistribution((x, y), UniPoly([counts.get(i, 0) for i in range(top + 1)]))
