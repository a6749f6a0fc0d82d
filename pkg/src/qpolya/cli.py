"""Command-line front end.

Exit codes: 0 success, 1 domain errors (inadmissible spec, bad q, ...),
2 syntax or usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import serialize as ser
from .algdecide import (
    Algebraic,
    DecideConfig,
    Transcendental,
    Undecided,
    decide,
    vandermonde_det,
)
from .arith.cyclotomic import root_of_unity_order
from .arith.poly import format_poly
from .cycexpr import parse_cyclotomic_expr
from .errors import NotRootOfUnityError, QPolyaError
from .guess import guess_algebraic, guess_precurrence
from .lineseries import (
    LineSpec,
    dump_prefix,
    load_prefix,
    lucas_decomposition,
    prefix,
    ratio_identity_check,
)
from .qcomb import path_area_distribution, q_binomial, q_binomial_eval


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def _spec_args(p):
    for name in ("n", "k", "a", "b"):
        p.add_argument(name, type=int)


def _q_args(p, required: bool):
    p.add_argument("--order", type=int, default=1, help="cyclotomic order s of the field (default 1)")
    p.add_argument("--q", required=required, help="expression in z = zeta_s, e.g. '(3 + 4*z)/5'")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="qpolya", description="q-binomial line series: exact values and algebraicity")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("qbinom", parents=[common], help="q-binomial polynomial or value")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    _q_args(p, required=False)

    p = sub.add_parser("series", parents=[common], help="prefix of h_q(x)")
    _spec_args(p)
    p.add_argument("--terms", type=int, required=True)
    _q_args(p, required=True)
    p.add_argument("--dump", metavar="FILE")

    p = sub.add_parser("decide", parents=[common], help="algebraicity verdict")
    _spec_args(p)
    _q_args(p, required=True)
    p.add_argument("--max-deg", type=int, default=8)
    p.add_argument("--verify", type=int, default=None)

    p = sub.add_parser("guess-alg", parents=[common], help="guess P(x,z) from a dump")
    p.add_argument("--input", required=True)
    p.add_argument("--dx", type=int, required=True)
    p.add_argument("--dz", type=int, required=True)

    p = sub.add_parser("guess-rec", parents=[common], help="guess a P-recurrence from a dump")
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("paths", parents=[common], help="area distribution of lattice paths")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)

    p = sub.add_parser("vandermonde", parents=[common], help="generalized Vandermonde determinant")
    p.add_argument("d", type=int)

    p = sub.add_parser("check-ratio", parents=[common], help="check the term-ratio identity in Z[q]")
    _spec_args(p)
    p.add_argument("--jmax", type=int, required=True)

    p = sub.add_parser("lucas-split", parents=[common], help="q-Lucas decomposition at zeta_s")
    _spec_args(p)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--q", default=None, help="root of unity in Q(zeta_s); default z")

    return parser


def _q(args):
    return parse_cyclotomic_expr(args.q, args.order)


def _spec(args) -> LineSpec:
    return LineSpec(args.n, args.k, args.a, args.b)


def cmd_qbinom(args):
    if args.q is None:
        poly = q_binomial(args.n, args.k)
        return {"command": "qbinom", "n": args.n, "k": args.k, "poly": ser.int_poly(poly)}, format_poly(
            poly.coeffs, "q"
        )
    q = _q(args)
    val = q_binomial_eval(args.n, args.k, q)
    return {"command": "qbinom", "n": args.n, "k": args.k, "order": q.order, "value": ser.element(val, q.order)}, str(val)


def cmd_series(args):
    p = prefix(_spec(args), _q(args), args.terms)
    if args.dump:
        dump_prefix(p, args.dump)
    out = {"command": "series", **ser.series(p)}
    return out, ", ".join(str(t) for t in p.terms)


_REL = {"less": "<", "equal": "=", "greater": ">"}


def _verdict_text(v) -> str:
    if isinstance(v, Algebraic):
        eq = v.equation
        return (
            f"algebraic (q root of unity of order {v.root_order})\n"
            f"P(x,z) = {eq}\nverified to order {eq.verified_order}"
        )
    if isinstance(v, Transcendental):
        c = ser.certificate(v.certificate)
        if c["kind"] == "degree_growth":
            return (
                f"transcendental: degree growth, deg u_j = {c['degree_poly']}, "
                f"|q| {c['abs_class']} than 1"
            )
        searched = ", ".join(f"({s['dx']},{s['dz']})" for s in c["searched"]) or "none"
        return (
            f"transcendental: not a root of unity (q^{c['order_check_exponent']} != 1), "
            f"|q| {_REL[c['abs_class']]} 1; guess search {searched}: no equation"
        )
    if isinstance(v, Undecided):
        return f"undecided: {v.reason} up to ({v.searched[-1].dx},{v.searched[-1].dz})"
    raise TypeError(v)


def cmd_decide(args):
    cfg = DecideConfig(max_degree=args.max_deg, verify_order=args.verify)
    v = decide(_spec(args), _q(args), cfg)
    return {"command": "decide", **ser.verdict(v)}, _verdict_text(v)


def cmd_guess_alg(args):
    p = load_prefix(args.input)
    eq = guess_algebraic(p, args.dx, args.dz)
    base = {"command": "guess-alg", "terms": len(p), "bounds": {"dx": args.dx, "dz": args.dz}}
    if eq is None:
        return {**base, "result": "none"}, f"none (dx={args.dx}, dz={args.dz}, {len(p)} terms)"
    return {**base, "result": "found", "equation": ser.equation(eq)}, f"{eq}\nverified to order {eq.verified_order}"


def cmd_guess_rec(args):
    p = load_prefix(args.input)
    rec = guess_precurrence(p, args.r, args.d)
    base = {"command": "guess-rec", "terms": len(p), "bounds": {"r": args.r, "d": args.d}}
    if rec is None:
        return {**base, "result": "none"}, f"none (r={args.r}, d={args.d}, {len(p)} terms)"
    return {**base, "result": "found", "recurrence": ser.recurrence(rec)}, str(rec)


def cmd_paths(args):
    dist = path_area_distribution(args.x, args.y)
    text = format_poly(dist.distribution.coeffs, "q")
    return {"command": "paths", "x": args.x, "y": args.y, "distribution": ser.int_poly(dist.distribution), "text": text}, text


def cmd_vandermonde(args):
    r = vandermonde_det(args.d)
    out = {
        "command": "vandermonde",
        "d": r.d,
        "determinant": ser.int_poly(r.determinant),
        "constant": ser.rational(r.constant),
        "z_power": r.z_power,
        "cyclotomic": [{"order": s, "multiplicity": m} for s, m in sorted(r.cyclotomic_multiplicities.items())],
        "factored": r.factored(),
    }
    return out, f"det = {format_poly(r.determinant.coeffs, 'z')}\n    = {r.factored()}"


def cmd_check_ratio(args):
    spec = _spec(args)
    results = [{"j": j, "holds": ratio_identity_check(spec, j)} for j in range(args.jmax + 1)]
    ok = all(r["holds"] for r in results)
    out = {"command": "check-ratio", "spec": ser.spec(spec), "jmax": args.jmax, "results": results, "all_hold": ok}
    bad = [r["j"] for r in results if not r["holds"]]
    return out, ("identity holds for all j <= %d" % args.jmax) if ok else f"identity fails at j = {bad}"


def cmd_lucas_split(args):
    spec = _spec(args)
    omega = parse_cyclotomic_expr(args.q or "z", args.order)
    s = root_of_unity_order(omega)
    if s is None:
        raise NotRootOfUnityError(f"{omega} is not a root of unity")
    comps = lucas_decomposition(spec, omega)
    out = {
        "command": "lucas-split",
        "spec": ser.spec(spec),
        "order": omega.order,
        "root_order": s,
        "components": [ser.lucas_component(c, omega.order) for c in comps],
    }
    lines = [
        f"r={c.residue}: ({c.scalar}) * sum_l C({c.n_shift}+{c.a}l, {c.k_shift}+{c.b}l) x^({c.stride}l+{c.residue})"
        for c in comps
    ]
    return out, "\n".join(lines)


COMMANDS = {
    "qbinom": cmd_qbinom,
    "series": cmd_series,
    "decide": cmd_decide,
    "guess-alg": cmd_guess_alg,
    "guess-rec": cmd_guess_rec,
    "paths": cmd_paths,
    "vandermonde": cmd_vandermonde,
    "check-ratio": cmd_check_ratio,
    "lucas-split": cmd_lucas_split,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    as_json = getattr(args, "format", "text") == "json"
    try:
        payload, text = COMMANDS[args.command](args)
    except (QPolyaError, OSError) as exc:
        code = exc.exit_code if isinstance(exc, QPolyaError) else 1
        if as_json:
            err = ser.error(exc)
            if isinstance(exc, OSError):
                err["error"]["code"] = "io_error"
            print(ser.dumps(err))
        else:
            print(f"qpolya: error: {exc}", file=sys.stderr)
        return code
    print(ser.dumps(payload) if as_json else text)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
