"""Reduction of Q(zeta_s) elements to GF(p) with p = 1 mod s.

zeta_s maps to an element of exact multiplicative order s, which is a root
of Phi_s mod p, so the map is a ring homomorphism on p-integral elements.
Rank can only drop under it: full column rank mod p proves a trivial kernel.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import gmpy2

from .cyclotomic import CyclotomicNumber


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def prime_and_root(s: int, bits: int = 61) -> tuple[int, int]:
    """A prime p = 1 (mod s) just below 2^bits and an element of order s."""
    t = ((1 << bits) - 1) // s
    while True:
        p = 1 + s * t
        if gmpy2.is_prime(p):
            break
        t -= 1
    if s == 1:
        return p, 1
    factors = _prime_factors(s)
    for h in range(2, p):
        g = pow(h, (p - 1) // s, p)
        if all(pow(g, s // l, p) != 1 for l in factors):
            return p, g
    raise AssertionError("no root found")  # pragma: no cover


class ModularImage:
    def __init__(self, order: int):
        self.order = order
        self.p, self.root = prime_and_root(order)

    def __call__(self, v) -> int | None:
        """Image in GF(p), or None if a denominator vanishes mod p."""
        p = self.p
        if isinstance(v, int):
            return v % p
        if isinstance(v, Fraction):
            if v.denominator % p == 0:
                return None
            return v.numerator * pow(v.denominator, -1, p) % p
        if isinstance(v, CyclotomicNumber):
            if self.order % v.order:
                raise ValueError("element order does not divide image order")
            g = pow(self.root, self.order // v.order, p)
            acc = 0
            for c in reversed(v.residue):
                img = self(c)
                if img is None:
                    return None
                acc = (acc * g + img) % p
            return acc
        raise TypeError(f"cannot reduce {type(v).__name__} mod p")
