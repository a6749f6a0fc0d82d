"""JSON encoding of library results.

Exactness survives serialization: rationals are ``"num/den"`` strings, a
field element of Q(zeta_s) is the list of its phi(s) power-basis
coordinates, univariate polynomials are lists indexed by exponent and
bivariate ones are lists of ``{"i", "j", "coeff"}``. The full shape is in
``schema/output.schema.json``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .algdecide import (
    Algebraic,
    DegreeGrowth,
    NotRootOfUnity,
    SearchRecord,
    Transcendental,
    Undecided,
    Verdict,
)
from .arith.cyclotomic import CyclotomicNumber, as_cyclotomic
from .arith.poly import BiPoly, UniPoly, format_poly
from .guess import AlgEquation, PRecurrence
from .lineseries import LineSpec, LucasComponent, SeriesPrefix


def rational(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def element(v, order: int = 1) -> list[str]:
    v = as_cyclotomic(v, order)
    if v.order != order and order % v.order == 0:
        v = v.embed(order)
    return [rational(c) for c in v.coordinates()]


def int_poly(p: UniPoly) -> list[str]:
    return [rational(c) for c in p.coeffs]


def field_poly(p: UniPoly, order: int) -> list[list[str]]:
    return [element(c, order) for c in p.coeffs]


def bipoly(p: BiPoly, order: int) -> list[dict]:
    return [{"i": i, "j": j, "coeff": element(c, order)} for (i, j), c in p.sorted_terms()]


def spec(s: LineSpec) -> dict:
    return {"n": s.n, "k": s.k, "a": s.a, "b": s.b}


def equation(eq: AlgEquation) -> dict:
    return {
        "terms": bipoly(eq.poly, eq.order),
        "dx": eq.dx,
        "dz": eq.dz,
        "verified_order": eq.verified_order,
        "order": eq.order,
        "text": str(eq),
    }


def recurrence(rec: PRecurrence) -> dict:
    return {
        "r": rec.r,
        "d": rec.d,
        "order": rec.order,
        "coeffs": [field_poly(c, rec.order) for c in rec.coeffs],
        "text": str(rec),
    }


def _search(records: tuple[SearchRecord, ...]) -> list[dict]:
    return [{"dx": r.dx, "dz": r.dz, "terms": r.terms, "found": r.found} for r in records]


def certificate(c) -> dict:
    if isinstance(c, DegreeGrowth):
        return {
            "kind": c.kind,
            "degree_poly": format_poly(c.degree_poly.coeffs, "j"),
            "degree_coeffs": int_poly(c.degree_poly),
            "leading_coefficient": rational(c.leading_coefficient),
            "abs_class": c.abs_class,
        }
    if isinstance(c, NotRootOfUnity):
        return {
            "kind": c.kind,
            "order_check_exponent": c.order_check_exponent,
            "abs_class": c.abs_class,
            "searched": _search(c.searched),
        }
    raise TypeError(f"unknown certificate {c!r}")


def verdict(v: Verdict) -> dict:
    if isinstance(v, Algebraic):
        return {
            "verdict": v.kind,
            "root_order": v.root_order,
            "equation": equation(v.equation),
            "searched": _search(v.searched),
        }
    if isinstance(v, Transcendental):
        return {"verdict": v.kind, "certificate": certificate(v.certificate)}
    if isinstance(v, Undecided):
        return {
            "verdict": v.kind,
            "root_order": v.root_order,
            "reason": v.reason,
            "searched": _search(v.searched),
        }
    raise TypeError(f"unknown verdict {v!r}")


def series(p: SeriesPrefix) -> dict:
    out = {
        "spec": spec(p.spec),
        "order": p.order,
        "terms": [element(t, p.order) for t in p.terms],
    }
    if p.q is not None:
        out["q"] = element(p.q, p.order)
    return out


def lucas_component(c: LucasComponent, order: int) -> dict:
    return {
        "residue": c.residue,
        "scalar": element(c.scalar, order),
        "n_shift": c.n_shift,
        "k_shift": c.k_shift,
        "stride": c.stride,
    }


def error(exc: Exception) -> dict:
    return {"error": {"code": getattr(exc, "code", "error"), "message": str(exc)}}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=False)


def load_schema() -> dict:
    text = resources.files("qpolya").joinpath("schema/output.schema.json").read_text()
    return json.loads(text)


def parse_element(coords: list[str], order: int) -> CyclotomicNumber:
    return CyclotomicNumber([Fraction(c) for c in coords], order)
