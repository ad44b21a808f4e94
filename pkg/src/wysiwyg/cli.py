"""Command-line front end.

Every subcommand is a thin wrapper over the library: elements are parsed
with :func:`wysiwyg.thompson.parse_element`, scalars come from
:mod:`wysiwyg.rep`, and the ``verify`` subcommand runs the full
acceptance suite.  Exit codes: 0 on success, 1 on a domain error (bad
input, mismatched arities), 2 when a resource cap is hit.

Exactly one delta specification is required wherever a scalar is
computed: ``--delta-exact`` works in the rational-function field over
the formal symbol, ``--delta X`` evaluates at a float, and
``--delta-root n`` evaluates at 2cos(pi/n).  Exact scalars print as
``num/den`` with integer coefficients in the symbol, e.g.
``(δ^2-3)/(δ^2-2)``; this format is stable and parseable downstream.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from . import acceptance, rep
from .config import ResourceCapError
from .forests import ArityMismatch, full_tree
from .scalars import EXACT, NumericRing, RationalFunction
from .thompson import (
    ElementParseError, FElement, identity, inverse, multiply,
    multiply_rewrite, parse_element,
)


def _add_delta_group(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--delta-exact", action="store_true",
                   help="compute in the exact rational-function field")
    g.add_argument("--delta", type=float, metavar="X",
                   help="evaluate numerically at delta = X")
    g.add_argument("--delta-root", type=int, metavar="N",
                   help="evaluate numerically at delta = 2cos(pi/N)")


def _add_out(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", choices=("text", "csv", "json"), default="text")


def _resolve_ring(args):
    """(ring, numeric delta or None) from the delta specification."""
    if args.delta_exact:
        return EXACT, None
    if args.delta is not None:
        d = args.delta
    else:
        if args.delta_root < 3:
            raise ValueError("--delta-root needs N >= 3")
        d = 2.0 * math.cos(math.pi / args.delta_root)
    if not d > 1.0:
        raise ValueError(f"delta must exceed 1, got {d}")
    return NumericRing(d, warn=False), d


def _parse_elem(text: str) -> FElement:
    if text.strip() == "id":
        return identity()
    return parse_element(text)


def _fmt_scalar(x) -> str:
    if x is None:
        return ""
    if isinstance(x, RationalFunction):
        return str(x)
    return repr(float(x))


def _emit_reports(args, rows: List[rep.CoeffReport],
                  extra: Optional[dict] = None) -> None:
    """Coefficient rows in the fixed schema (n, mode, exact, numeric,
    terms, millis); ``n`` is blank for single-element queries."""
    if args.out == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "mode", "exact", "numeric", "terms", "millis"])
        for n, r in rows:
            w.writerow(["" if n is None else n, r.mode,
                        _fmt_scalar(r.exact), _fmt_scalar(r.numeric),
                        r.terms, int(r.millis)])
        sys.stdout.write(buf.getvalue())
    elif args.out == "json":
        payload = [{"n": n, "mode": r.mode, "element": r.element,
                    "exact": _fmt_scalar(r.exact),
                    "numeric": None if r.numeric is None else float(r.numeric),
                    "terms": r.terms, "millis": r.millis}
                   for n, r in rows]
        if extra:
            payload = {"rows": payload, **extra}
        print(json.dumps(payload, indent=2))
    else:
        for n, r in rows:
            prefix = f"n={n}  " if n is not None else ""
            value = (_fmt_scalar(r.numeric) if r.numeric is not None
                     else _fmt_scalar(r.exact))
            print(f"{prefix}{value}")
        if extra:
            for k, v in extra.items():
                print(f"{k}: {v}")


# ---------------------------------------------------------------------------
# Subcommands.

def _cmd_mul(args) -> int:
    g, h = _parse_elem(args.g), _parse_elem(args.h)
    prod = (multiply_rewrite(g, h) if args.algorithm == "rewrite"
            else multiply(g, h))
    _print_element(args, prod)
    return 0


def _cmd_inv(args) -> int:
    _print_element(args, inverse(_parse_elem(args.g)))
    return 0


def _print_element(args, g: FElement) -> None:
    if args.out == "json":
        print(json.dumps({"element": str(g)}))
    elif args.out == "csv":
        print("element")
        print(str(g))
    else:
        print(str(g))


def _cmd_coeff(args) -> int:
    _, delta = _resolve_ring(args)
    g = _parse_elem(args.elem)
    r = rep.coeff_report(g, args.mode, delta)
    _emit_reports(args, [(None, r)])
    return 0


def _an_report(payload):
    n, mode, delta = payload
    from .thompson import power_A
    return rep.coeff_report(power_A(n), mode, delta)


def _cmd_an_decay(args) -> int:
    _, delta = _resolve_ring(args)
    payloads = [(n, "omega", delta) for n in range(1, args.n_max + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_an_report, payloads))
    else:
        reports = [_an_report(p) for p in payloads]
    rows = list(zip(range(1, args.n_max + 1), reports))
    ratios = {}
    for (n, r), (_, prev) in zip(rows[1:], rows[:-1]):
        if delta is not None:
            ratios[f"ratio_{n}"] = r.numeric / prev.numeric
        else:
            ratios[f"ratio_{n}"] = str(r.exact / prev.exact)
    _emit_reports(args, rows,
                  extra=ratios if args.out != "csv" else None)
    return 0


def _cmd_gram(args) -> int:
    ring, delta = _resolve_ring(args)
    elements = [_parse_elem(t) for t in args.elems.split(",")]
    matrix = rep.gram(ring, args.mode, elements)
    if args.out == "json":
        print(json.dumps({
            "elements": [str(g) for g in elements],
            "matrix": [[_fmt_scalar(x) for x in row] for row in matrix],
            "min_eigenvalue": (rep.psd_check(matrix, delta)
                               if delta is not None else None),
        }, indent=2))
    elif args.out == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "value"])
        for i, row in enumerate(matrix):
            for j, x in enumerate(row):
                w.writerow([i, j, _fmt_scalar(x)])
        sys.stdout.write(buf.getvalue())
    else:
        for row in matrix:
            print("  ".join(_fmt_scalar(x) for x in row))
        if delta is not None:
            print(f"min eigenvalue: {rep.psd_check(matrix, delta):.12g}")
    return 0


def _cmd_lemma43(args) -> int:
    ring, _ = _resolve_ring(args)
    g, h = _parse_elem(args.g), _parse_elem(args.h)
    n = rep.lemma43_threshold(ring, g, h, args.n_max)
    _print_threshold(args, n, args.n_max)
    return 0


def _cmd_sigma_limit(args) -> int:
    ring, _ = _resolve_ring(args)
    g = _parse_elem(args.g)
    xi = rep.vacuum(ring, "psi", full_tree(2))
    n = rep.sigma_limit_check(ring, g, xi, xi, args.n_max)
    _print_threshold(args, n, args.n_max)
    return 0


def _print_threshold(args, n: Optional[int], n_max: int) -> None:
    if args.out == "json":
        print(json.dumps({"threshold": n, "n_max": n_max}))
    elif args.out == "csv":
        print("threshold,n_max")
        print(f"{'' if n is None else n},{n_max}")
    elif n is None:
        print(f"no threshold up to n_max={n_max}")
    else:
        print(f"threshold N = {n} (checked through n = {n_max})")
    if n is None:
        raise ValueError(f"identity not yet stable at n_max={n_max}")


def _cmd_verify(args) -> int:
    results = acceptance.run_all()
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] criterion {r.number:2d}  {r.name}  "
              f"({r.seconds:.1f}s)  {r.detail}")
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wysiwyg",
        description="Thompson group arithmetic and Wysiwyg representation "
                    "coefficients.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("mul", help="product of two elements")
    sp.add_argument("--g", required=True)
    sp.add_argument("--h", required=True)
    sp.add_argument("--algorithm", choices=("join", "rewrite"),
                    default="join")
    _add_out(sp)
    sp.set_defaults(func=_cmd_mul)

    sp = sub.add_parser("inv", help="inverse of an element")
    sp.add_argument("--g", required=True)
    _add_out(sp)
    sp.set_defaults(func=_cmd_inv)

    sp = sub.add_parser("coeff", help="vacuum coefficient of an element")
    sp.add_argument("--mode", choices=("psi", "omega"), required=True)
    sp.add_argument("--elem", required=True)
    _add_delta_group(sp)
    _add_out(sp)
    sp.set_defaults(func=_cmd_coeff)

    sp = sub.add_parser("gram", help="Gram matrix of vacuum translates")
    sp.add_argument("--mode", choices=("psi", "omega"), default="psi")
    sp.add_argument("--elems", required=True,
                    help="comma-separated elements; 'id' for the identity")
    _add_delta_group(sp)
    _add_out(sp)
    sp.set_defaults(func=_cmd_gram)

    sp = sub.add_parser("lemma43",
                        help="threshold of <A^n g Psi, h Psi> "
                             "= <g Psi,Psi><Psi,h Psi>")
    sp.add_argument("--g", required=True)
    sp.add_argument("--h", required=True)
    sp.add_argument("--n-max", type=int, default=12)
    _add_delta_group(sp)
    _add_out(sp)
    sp.set_defaults(func=_cmd_lemma43)

    sp = sub.add_parser("sigma-limit",
                        help="threshold of <sigma^n(g) Psi, Psi> "
                             "= coeff(omega, g)")
    sp.add_argument("--g", required=True)
    sp.add_argument("--n-max", type=int, default=6)
    _add_delta_group(sp)
    _add_out(sp)
    sp.set_defaults(func=_cmd_sigma_limit)

    sp = sub.add_parser("an-decay",
                        help="omega coefficients of A^n and their ratios")
    sp.add_argument("--n-max", type=int, default=10)
    sp.add_argument("--jobs", type=int, default=1)
    _add_delta_group(sp)
    _add_out(sp)
    sp.set_defaults(func=_cmd_an_decay)

    sp = sub.add_parser("verify", help="run the full acceptance suite")
    _add_out(sp)
    sp.set_defaults(func=_cmd_verify)

    return p


def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"resource cap: {exc} (reached {exc.reached})",
              file=sys.stderr)
        return 2
    except (ElementParseError, ArityMismatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
