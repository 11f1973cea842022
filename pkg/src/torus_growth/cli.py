"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import formulas, group, spectral
from .polyring import RationalFunction, format_poly, rf_to_json, series_expand

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _exponent(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}")
    if v < 2:
        raise argparse.ArgumentTypeError(f"exponent must be >= 2, got {v}")
    return v


def _nonneg(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _odd_list(s: str) -> list[int]:
    try:
        vals = [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {s!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    bad = [v for v in vals if v < 3 or v % 2 == 0]
    if bad:
        raise argparse.ArgumentTypeError(f"entries must be odd and >= 3, got {bad}")
    return vals


def _f12(x) -> str:
    return "null" if x is None else f"{x:.12g}"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)


@dataclass
class VerificationRecord:
    p: int
    q: int
    terms_checked: int
    routes_compared: list[str]
    status: str
    first_mismatch_index: int | None = None
    failed_route: str | None = None

    def to_json(self) -> dict:
        out = {
            "p": self.p,
            "q": self.q,
            "terms_checked": self.terms_checked,
            "routes_compared": self.routes_compared,
            "status": self.status,
        }
        if self.first_mismatch_index is not None:
            out["first_mismatch_index"] = self.first_mismatch_index
            out["failed_route"] = self.failed_route
        return out


def _first_difference(a, b) -> int | None:
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    return None


def _rf_mismatch(f: RationalFunction, g: RationalFunction) -> int | None:
    """Index of the first differing Taylor coefficient, None when f == g."""
    if f == g:
        return None
    diff = f - g
    # diff = num/den with den(0) != 0, so some coefficient up to deg num is nonzero
    coeffs = series_expand(diff, max(diff.num.degree, 0), integral=False)
    return next(i for i, c in enumerate(coeffs) if c != 0)


def verify(p: int, q: int, N: int) -> VerificationRecord:
    params = formulas.TorusParams(p, q)
    main = formulas.main_growth_function(params)
    reference = series_expand(main, N)
    routes = ["formula"]
    mismatch: tuple[int, str] | None = None

    def note(idx, name):
        nonlocal mismatch
        if idx is not None and (mismatch is None or idx < mismatch[0]):
            mismatch = (idx, name)

    if p % 2 and q % 2:
        routes.append("odd-odd amalgam")
        note(_rf_mismatch(formulas.growth_odd_odd(params), main), "odd-odd amalgam")
    elif p % 2 == 0 and q % 2 == 0:
        routes.append("even-even components")
        A1, A2, Aa, Ab, Ag = formulas.components_even_even(params)
        note(_rf_mismatch(A1 + A2 + Aa + Ab - Ag, main), "even-even components")
    else:
        routes.append("even-odd components")
        pr = params if p % 2 == 0 else params.swapped()
        note(_rf_mismatch(sum(formulas.components_even_odd(pr), RationalFunction.make(0)), main),
             "even-odd components")
    routes.append("symmetry")
    note(_rf_mismatch(formulas.main_growth_function(params.swapped()), main), "symmetry")
    for name, fn in (("bfs", group.sphere_counts_bfs), ("grammar", group.sphere_counts_grammar)):
        routes.append(name)
        note(_first_difference(fn(params, N).counts, reference), name)
    if mismatch is None:
        return VerificationRecord(p, q, N + 1, routes, "OK")
    return VerificationRecord(p, q, N + 1, routes, "MISMATCH", *mismatch)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_series(args) -> int:
    params = formulas.TorusParams(args.p, args.q)
    f = formulas.main_growth_function(params)
    terms = series_expand(f, args.terms)
    oracles = {}
    if args.oracle in ("bfs", "both"):
        oracles["bfs"] = list(group.sphere_counts_bfs(params, args.terms).counts)
    if args.oracle in ("grammar", "both"):
        oracles["grammar"] = list(group.sphere_counts_grammar(params, args.terms).counts)
    match = all(v == terms for v in oracles.values())

    if args.format == "json":
        obj = {"p": args.p, "q": args.q, **rf_to_json(f), "terms": [str(a) for a in terms]}
        for name, v in oracles.items():
            obj[name] = [str(a) for a in v]
        if oracles:
            obj["match"] = match
        text = dumps(obj)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "a_n", *oracles])
        for n, a in enumerate(terms):
            w.writerow([n, a, *(v[n] for v in oracles.values())])
        text = buf.getvalue().rstrip("\n")
    else:
        lines = [
            f"p = {args.p}, q = {args.q}",
            f"A(t) = ({format_poly(f.num)}) / ({format_poly(f.den)})",
            f"num: {list(f.num.coeffs)}",
            f"den: {list(f.den.coeffs)}",
            f"formula: {terms}",
        ]
        for name, v in oracles.items():
            lines.append(f"{name}: {v}")
        if oracles:
            lines.append(f"match: {match}")
        text = "\n".join(lines)
    _emit(text, args.out)
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_rate(args) -> int:
    params = formulas.TorusParams(args.p, args.q)
    g = formulas.denominator_g(params)
    omega = spectral.growth_rate(params, args.tol)
    r0 = 1.0 / omega
    gcd_ = spectral.support_gcd(g)
    if args.format == "json":
        text = dumps({"p": args.p, "q": args.q, "r0": float(_f12(r0)),
                      "omega": float(_f12(omega)), "lemma_gcd": gcd_})
    elif args.format == "csv":
        text = f"p,q,r0,omega,lemma_gcd\n{args.p},{args.q},{_f12(r0)},{_f12(omega)},{gcd_}"
    else:
        text = "\n".join([
            f"p = {args.p}, q = {args.q}",
            f"g(t) = {format_poly(g)}",
            f"r0 = {_f12(r0)}",
            f"omega = {_f12(omega)}",
            f"lemma_gcd = {gcd_}",
        ])
    _emit(text, args.out)
    return EXIT_OK


def _report_text(r: spectral.PerronReport) -> str:
    return (f"p={r.p} q={r.q} r0={_f12(r.r0)} omega={_f12(r.omega)} "
            f"lemma_gcd={r.lemma_gcd} margin={_f12(r.dominance_margin)} {r.verdict.value}")


_REPORT_FIELDS = ["p", "q", "r0", "omega", "lemma_gcd", "dominance_margin", "verdict"]


def _reports_out(reports, fmt) -> str:
    if fmt == "text":
        return "\n".join(
            ["# dominance checked against the zeros of g*, not the minimal polynomial of omega"]
            + [_report_text(r) for r in reports])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=_REPORT_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in reports:
            w.writerow({k: ("" if v is None else v) for k, v in r.to_json().items()})
        return buf.getvalue().rstrip("\n")
    return dumps([r.to_json() for r in reports])


def cmd_perron(args) -> int:
    r = spectral.perron_check(formulas.TorusParams(args.p, args.q), args.margin)
    text = dumps(r.to_json()) if args.format == "json" else _reports_out([r], args.format)
    _emit(text, args.out)
    return EXIT_OK


def cmd_perron_scan(args) -> int:
    reports = spectral.perron_scan(args.max, args.margin)
    fmt = args.format if args.format != "text" or not args.out else "json"
    _emit(_reports_out(reports, fmt), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    rec = verify(args.p, args.q, args.terms)
    if args.format == "json":
        text = dumps(rec.to_json())
    else:
        text = (f"p={rec.p} q={rec.q} terms={rec.terms_checked} "
                f"routes=[{', '.join(rec.routes_compared)}] {rec.status}")
        if rec.first_mismatch_index is not None:
            text += f" first_mismatch_index={rec.first_mismatch_index} ({rec.failed_route})"
    _emit(text, args.out)
    return EXIT_OK if rec.status == "OK" else EXIT_MISMATCH


def cmd_general(args) -> int:
    f = formulas.growth_generalized_odd(args.list)
    terms = series_expand(f, args.terms)
    if args.format == "json":
        text = dumps({"orders": args.list, **rf_to_json(f), "terms": [str(a) for a in terms]})
    elif args.format == "csv":
        text = "n,a_n\n" + "\n".join(f"{n},{a}" for n, a in enumerate(terms))
    else:
        text = "\n".join([
            f"orders = {args.list}",
            f"A(t) = ({format_poly(f.num)}) / ({format_poly(f.den)})",
            f"num: {list(f.num.coeffs)}",
            f"den: {list(f.den.coeffs)}",
            f"series: {terms}",
        ])
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to this file")

    parser = argparse.ArgumentParser(
        prog="torus-growth",
        description="Growth series and growth rates of <x, y, z | x^p = y^q = z>.",
    )
    parser.add_argument("--format", choices=["text", "json", "csv"], default="text")
    parser.add_argument("--out", default=None, help="write output to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    def pq(sp):
        sp.add_argument("--p", type=_exponent, required=True)
        sp.add_argument("--q", type=_exponent, required=True)

    sp = sub.add_parser("series", parents=[common], help="formula coefficients a_0..a_N")
    pq(sp)
    sp.add_argument("--terms", type=_nonneg, default=10, help="highest index N")
    sp.add_argument("--oracle", choices=["none", "bfs", "grammar", "both"], default="none")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("rate", parents=[common], help="growth rate omega")
    pq(sp)
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.set_defaults(func=cmd_rate)

    sp = sub.add_parser("perron", parents=[common], help="dominance report for one pair")
    pq(sp)
    sp.add_argument("--margin", type=float, default=1e-7)
    sp.set_defaults(func=cmd_perron)

    sp = sub.add_parser("perron-scan", parents=[common],
                        help="dominance reports for 2 <= p <= q <= MAX")
    sp.add_argument("--max", type=_exponent, required=True)
    sp.add_argument("--margin", type=float, default=1e-7)
    sp.set_defaults(func=cmd_perron_scan)

    sp = sub.add_parser("verify", parents=[common], help="cross-check every route")
    pq(sp)
    sp.add_argument("--terms", type=_nonneg, default=12)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("general", parents=[common],
                        help="iterated amalgam for odd exponents p_1, ..., p_r")
    sp.add_argument("--list", type=_odd_list, required=True, help="comma-separated, e.g. 3,5,7")
    sp.add_argument("--terms", type=_nonneg, default=10)
    sp.set_defaults(func=cmd_general)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
