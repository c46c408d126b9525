"""Command-line interface.

Exit codes: 0 success (or verified / member), 1 verification failed or
membership false, 2 usage error (bad flags or unparsable input),
3 computational error (for instance a vanishing leading coefficient).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .core import QQ, GF, AlgebraError, Poly, VarTable
from .parser import ParseError, format_poly, identifiers, parse_poly
from .resultant import (
    BinaryForm,
    LeadingCoefficientZeroError,
    discriminant,
    discriminant_symbolic,
    form_from_homogeneous,
    form_from_poly,
    resultant,
    sylvester_matrix,
)
from .scan import scan_disc_quotient, scan_quotient, scan_resultant_equiv
from .symprod import (
    ProjPoint,
    ehsp,
    express_in_ehsp,
    member_dn,
    member_rnm,
    member_xn,
    member_xnm,
    pair_table,
    parse_tuple,
    viete,
)
from .verify import check_ind, check_inv, check_resdisc, check_resth

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _natural_key(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


def _coefficient_table(texts: Sequence[str], form_vars: Sequence[str], declared: str | None) -> VarTable:
    if declared:
        coeff = [v.strip() for v in declared.split(",") if v.strip()]
    else:
        found = {v for t in texts for v in identifiers(t)} - set(form_vars)
        coeff = sorted(found, key=_natural_key)
    return VarTable(tuple(coeff) + tuple(form_vars))


def _read_forms(args, texts: Sequence[str], degrees: Sequence[int | None]) -> list[BinaryForm]:
    ring = _ring(args)
    form_vars = ("X", "Y") if args.homog else ("Z",)
    table = _coefficient_table(texts, form_vars, args.vars)
    forms = []
    for text, deg in zip(texts, degrees):
        p = parse_poly(text, table, ring)
        if args.homog:
            forms.append(form_from_homogeneous(p, "X", "Y", deg))
        else:
            forms.append(form_from_poly(p, "Z", deg))
    return forms


def _ring(args):
    if getattr(args, "p", None) is None:
        return QQ
    try:
        return GF(args.p)
    except AlgebraError as exc:
        raise UsageError(str(exc)) from None


def _tuple(text: str, ring):
    try:
        return parse_tuple(text, ring)
    except AlgebraError as exc:
        raise UsageError(str(exc)) from None


def _point(text: str, ring) -> ProjPoint:
    try:
        return ProjPoint.parse(text, ring)
    except AlgebraError as exc:
        raise UsageError(str(exc)) from None


def _show(value) -> str:
    return format_poly(value) if isinstance(value, Poly) else str(value)


def _emit(args, plain: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(plain)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_res(args) -> int:
    f, g = _read_forms(args, [args.f, args.g], [args.n, args.m])
    r = resultant(f, g)
    _emit(args, _show(r), {"resultant": _show(r), "n": f.degree, "m": g.degree})
    return EXIT_OK


def cmd_disc(args) -> int:
    if args.form is None:
        if not args.symbolic or args.n is None:
            raise UsageError("disc needs --form, or --symbolic with --n")
        d = discriminant_symbolic(args.n)
        if args.p is not None:
            d = d.change_ring(_ring(args))
    else:
        (f,) = _read_forms(args, [args.form], [args.n])
        if f.symbolic and not args.symbolic:
            raise UsageError("form has symbolic coefficients; pass --symbolic")
        d = discriminant(f)
    _emit(args, _show(d), {"discriminant": _show(d)})
    return EXIT_OK


def cmd_sylvester(args) -> int:
    f, g = _read_forms(args, [args.f, args.g], [args.n, args.m])
    M = sylvester_matrix(f, g)
    rows = [[_show(a) for a in r] for r in M.rows]
    _emit(args, "\n".join("[" + ", ".join(r) + "]" for r in rows), {"rows": rows})
    return EXIT_OK


def cmd_ehsp(args) -> int:
    ps = ehsp(args.n)
    lines = {f"p{k}": format_poly(p) for k, p in enumerate(ps)}
    _emit(args, "\n".join(f"{k} = {v}" for k, v in lines.items()), lines)
    return EXIT_OK


def cmd_viete(args) -> int:
    pts = _tuple(args.points, _ring(args))
    pt = viete(pts)
    _emit(args, str(pt), {"point": [str(c) for c in pt.coords]})
    return EXIT_OK


def cmd_express(args) -> int:
    p = parse_poly(args.poly, pair_table(args.n), _ring(args))
    try:
        q = express_in_ehsp(p, args.n)
    except AlgebraError as exc:  # input outside the multigraded pieces
        print(f"not expressible: {exc}", file=sys.stderr)
        q = None
    if q is None:
        _emit(args, "not expressible", {"expressible": False})
        return EXIT_FALSE
    _emit(args, format_poly(q), {"expressible": True, "result": format_poly(q)})
    return EXIT_OK


def cmd_member(args) -> int:
    ring = _ring(args)
    locus = args.locus
    need = {"xnm": ("xs", "ys"), "xn": ("xs",), "rnm": ("pv", "pw"), "dn": ("pp",)}[locus]
    missing = [f"--{k}" for k in need if getattr(args, k) is None]
    if missing:
        raise UsageError(f"member {locus} needs {' '.join(missing)}")
    if locus == "xnm":
        result = member_xnm(_tuple(args.xs, ring), _tuple(args.ys, ring))
    elif locus == "xn":
        result = member_xn(_tuple(args.xs, ring))
    elif locus == "rnm":
        result = member_rnm(_point(args.pv, ring), _point(args.pw, ring))
    else:
        result = member_dn(_point(args.pp, ring))
    _emit(args, "true" if result else "false", {"locus": locus, "member": result})
    return EXIT_OK if result else EXIT_FALSE


def cmd_verify(args) -> int:
    n = args.n
    if args.what == "resth":
        check = check_resth(n, args.m if args.m is not None else n)
    elif args.what == "resdisc":
        check = check_resdisc(n)
    elif args.what == "ind":
        check = check_ind(n)
    else:
        check = check_inv(n)
    plain = "OK" if check.ok else f"FAILED: {check.detail}"
    _emit(args, plain, {"check": check.name, "ok": check.ok, "detail": check.detail})
    return EXIT_OK if check.ok else EXIT_FALSE


def cmd_scan(args) -> int:
    if args.what in ("res", "quotient") and args.m is None:
        raise UsageError(f"scan {args.what} needs --m")
    if args.what == "res":
        rep = scan_resultant_equiv(args.q, args.n, args.m, workers=args.workers)
    elif args.what == "quotient":
        rep = scan_quotient(args.q, args.n, args.m, workers=args.workers)
    else:
        rep = scan_disc_quotient(args.q, args.n, workers=args.workers)
    print(rep.to_json())
    return EXIT_OK if rep.passed else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="resultants", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--p", type=int, default=None, help="work over F_p instead of QQ")
    sub = ap.add_subparsers(dest="command", required=True)

    forms = argparse.ArgumentParser(add_help=False)
    forms.add_argument("--homog", action="store_true", help="forms are given in X, Y instead of Z")
    forms.add_argument("--vars", default=None, help="comma-separated coefficient variables")

    s = sub.add_parser("res", parents=[common, forms], help="resultant of two forms")
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s.add_argument("--n", type=int, help="degree of f (default: its degree)")
    s.add_argument("--m", type=int, help="degree of g (default: its degree)")
    s.set_defaults(func=cmd_res)

    s = sub.add_parser("disc", parents=[common, forms], help="discriminant of a form")
    s.add_argument("--form")
    s.add_argument("--symbolic", action="store_true")
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_disc)

    s = sub.add_parser("sylvester", parents=[common, forms], help="Sylvester matrix")
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int)
    s.set_defaults(func=cmd_sylvester)

    s = sub.add_parser("ehsp", parents=[common], help="elementary homogeneous symmetric polynomials")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_ehsp)

    s = sub.add_parser("viete", parents=[common], help="Viete map of a point tuple")
    s.add_argument("--points", required=True, help='e.g. "1:1, 1:2"')
    s.set_defaults(func=cmd_viete)

    s = sub.add_parser("express", parents=[common], help="rewrite a symmetric polynomial in P0..Pn")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--poly", required=True)
    s.set_defaults(func=cmd_express)

    s = sub.add_parser("member", parents=[common], help="locus membership (exit 1 when false)")
    s.add_argument("locus", choices=["xnm", "xn", "rnm", "dn"])
    s.add_argument("--xs")
    s.add_argument("--ys")
    s.add_argument("--pv")
    s.add_argument("--pw")
    s.add_argument("--pp")
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("verify", parents=[common], help="run a symbolic identity check")
    s.add_argument("what", choices=["resth", "resdisc", "ind", "inv"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="finite-field scan, prints a JSON report")
    s.add_argument("what", choices=["res", "quotient", "disc"])
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--json", action="store_true", help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_scan)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8", line_buffering=True)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LeadingCoefficientZeroError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except (AlgebraError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


run = main

if __name__ == "__main__":
    sys.exit(main())
