"""Command-line front end.

Exit codes: 0 all checks pass, 1 a mathematical identity failed,
2 usage or input error.  Rationals are written "a/b", complex numbers "x+yi".
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import classical, cusps, thetag, units, verify
from .qseries import PuiseuxSeries


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed rational {text!r}: {exc}") from exc


def parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "")
    t = t.replace("i", "j")
    if t.endswith("j") and t[:-1] in ("", "+", "-"):
        t = t[:-1] + "1j"
    try:
        return complex(t)
    except ValueError as exc:
        raise UsageError(f"malformed complex number {text!r}: {exc}") from exc


def format_series(series: PuiseuxSeries, fmt: str) -> str:
    if fmt == "json":
        return series.to_json()
    lines = [f"(2 pi i)^{series.two_pi_i_power} * (  # truncated at q^{series.trunc}"]
    for e in series.exponents():
        c = series.coefficient(e)
        if c.is_rational():
            coeff = str(c.rational_value())
        else:
            coeff = f"[order {c.order}] " + " + ".join(
                f"({x})*z^{i}" for i, x in enumerate(c.coeffs) if x
            )
        lines.append(f"  q^{str(e):>8}  {coeff}")
    lines.append(")")
    return "\n".join(lines)


def cmd_expand(args) -> int:
    trunc = Fraction(args.trunc)
    name = args.name
    params = args.params
    builders = {
        "eta": lambda: classical.eta(trunc),
        "theta2": lambda: classical.theta_classical(2, trunc),
        "theta3": lambda: classical.theta_classical(3, trunc),
        "theta4": lambda: classical.theta_classical(4, trunc),
        "g2": lambda: classical.eisenstein("g2", trunc),
        "g3": lambda: classical.eisenstein("g3", trunc),
        "delta": lambda: classical.discriminant(trunc),
        "j": lambda: classical.j_function(trunc),
        "klein": lambda: units.klein_form_0_half(trunc),
        "g14": lambda: units.g14(trunc),
    }
    if name in builders:
        if params:
            raise UsageError(f"{name!r} takes no positional parameters")
        series = builders[name]()
    elif name in ("siegel", "wp"):
        if len(params) != 2:
            raise UsageError(f"{name!r} needs two rational parameters r s")
        v = units.FracVector(parse_rational(params[0]), parse_rational(params[1]))
        series = units.siegel_function(v, trunc) if name == "siegel" else units.wp_expansion(v, trunc)
    elif name == "wunit":
        if len(params) != 8:
            raise UsageError("'wunit' needs eight rationals: r1 s1 r1' s1' r2 s2 r2' s2'")
        rs = [parse_rational(p) for p in params]
        series = units.weierstrass_unit(
            units.FracVector(rs[0], rs[1]),
            units.FracVector(rs[2], rs[3]),
            units.FracVector(rs[4], rs[5]),
            units.FracVector(rs[6], rs[7]),
            trunc,
        )
    elif name in ("h1N", "hN"):
        if len(params) != 1:
            raise UsageError(f"{name!r} needs a level parameter N")
        N = int(params[0])
        series = units.h1N(N, trunc) if name == "h1N" else units.hN(N, trunc)
    else:
        raise UsageError(f"unknown expansion name {name!r}")
    print(format_series(series, args.format))
    return 0


def cmd_verify(args) -> int:
    runner = verify.IDENTITY_RUNNERS.get(args.identity)
    if runner is None:
        raise UsageError(f"unknown identity {args.identity!r}")
    options = {}
    if args.trunc is not None:
        options["trunc"] = int(args.trunc)
    if args.tol is not None:
        options["tol"] = args.tol
    if args.N is not None:
        options["N"] = args.N
    if args.samples is not None:
        options["samples"] = args.samples
    if args.seed is not None:
        options["seed"] = args.seed
    report = runner(options)
    if args.format == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        status = "pass" if report.passed else "FAIL"
        extra = f" ({report.witness})" if report.witness else ""
        print(f"{report.identity} [{report.parameter}]: {status}{extra} in {report.wall_ms:.1f} ms")
    return 0 if report.passed else 1


def cmd_cusps(args) -> int:
    classes = cusps.enumerate_cusps(args.N)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "level": args.N,
                    "count": cusps.cusp_count(args.N),
                    "cusps": [{"a": c.a, "c": c.c} for c in classes],
                }
            )
        )
    else:
        print(f"X({args.N}) has {cusps.cusp_count(args.N)} cusps:")
        for c in classes:
            print(f"  {c}")
    return 0


def cmd_divisor(args) -> int:
    v = units.FracVector(parse_rational(args.r), parse_rational(args.s))
    div = cusps.divisor_of_siegel_power(v, args.N)
    payload = {
        "level": args.N,
        "index": [str(v.r), str(v.s)],
        "entries": [
            {"cusp": {"a": c.a, "c": c.c}, "order": str(m)} for c, m in sorted(div.entries.items())
        ],
        "degree": str(div.degree()),
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(f"divisor of g_[{v.r};{v.s}]^(12*{args.N}) on X({args.N}):")
        for c, m in sorted(div.entries.items()):
            print(f"  {str(c):>10}  {m}")
        print(f"  degree: {div.degree()}")
    return 0


def cmd_rank(args) -> int:
    rank = cusps.unit_group_rank(args.N)
    expected = cusps.cusp_count(args.N) - 1
    if args.format == "json":
        print(json.dumps({"level": args.N, "rank": rank, "cusp_count_minus_1": expected}))
    else:
        print(f"divisor-matrix rank at level {args.N}: {rank} (n - 1 = {expected})")
    return 0 if rank == expected else 1


def _parse_char(text: str, g: int) -> thetag.ThetaChar:
    try:
        r_part, s_part = text.split(":")
        r = [parse_rational(x) for x in r_part.split(",")]
        s = [parse_rational(x) for x in s_part.split(",")]
    except ValueError as exc:
        raise UsageError(f"malformed characteristic {text!r}: expected r1,..,rg:s1,..,sg") from exc
    if len(r) != g or len(s) != g:
        raise UsageError(f"characteristic length does not match --g {g}")
    return thetag.ThetaChar(r, s)


def _parse_point(text: str, g: int) -> thetag.SiegelPoint:
    entries = [parse_complex(x) for x in text.replace(";", ",").split(",")]
    if len(entries) == g:
        return thetag.SiegelPoint.diagonal(entries)
    if len(entries) == g * g:
        return thetag.SiegelPoint([entries[i * g : (i + 1) * g] for i in range(g)])
    raise UsageError(f"--point needs {g} diagonal entries or {g * g} matrix entries")


def cmd_theta(args) -> int:
    ch = _parse_char(args.char, args.g)
    point = _parse_point(args.point, args.g)
    radius = thetag.truncation_radius(ch, point, args.tol)
    value = thetag.theta_constant(ch, point, tol=args.tol, radius=radius)
    check = thetag.theta_constant(ch, point, tol=args.tol, radius=radius + 5)
    payload = {
        "value_re": value.real,
        "value_im": value.imag,
        "radius": radius,
        "residuals": {"two_radius": abs(value - check)},
    }
    print(json.dumps(payload))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modunits", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print the q-expansion of a named function")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--trunc", default="50")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="check a named identity")
    p.add_argument("identity")
    p.add_argument("--trunc", default=None)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cusps", help="list cusp classes of X(N)")
    p.add_argument("N", type=int)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_cusps)

    p = sub.add_parser("divisor", help="divisor of a 12N-th Siegel power")
    p.add_argument("r")
    p.add_argument("s")
    p.add_argument("N", type=int)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_divisor)

    p = sub.add_parser("rank", help="exact rank of the Siegel-power divisor matrix")
    p.add_argument("N", type=int)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("theta", help="numerically evaluate a degree-g theta constant")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--char", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_theta)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
