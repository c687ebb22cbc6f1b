"""Command-line interface.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

import argparse
import json
import sys

from . import closed_forms, graded_quotient, lattice, permstats, verify
from .qpoly import DEFAULT_ORDER, render_laurent, series_equal, series_expand, to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_weights(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--weights must be comma-separated integers, got {text!r}") from None


def _load_polytope(args):
    if args.polytope:
        try:
            with open(args.polytope) as fh:
                obj = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read polytope file {args.polytope!r}: {exc}") from None
        try:
            return lattice.from_json(obj)
        except KeyError as exc:
            raise UsageError(f"polytope file is missing field {exc}") from None
        except lattice.PolytopeError as exc:
            raise UsageError(str(exc)) from None
    if args.family is None or args.dim is None:
        raise UsageError("give either --polytope FILE or both --family and --dim")
    try:
        return lattice.make_family(args.family, args.dim)
    except lattice.PolytopeError as exc:
        raise UsageError(str(exc)) from None


def _weights_for(P, args):
    a = _parse_weights(args.weights)
    if len(a) != P.dim:
        raise UsageError(f"--weights has {len(a)} entries but the polytope has dimension {P.dim}")
    return a


def _render(obj, fmt):
    if fmt == "json":
        return to_json(obj)
    if fmt == "latex":
        return obj.to_latex()
    return obj.to_str()


def _dump(payload):
    return json.dumps(payload, sort_keys=True)


def cmd_points(args, out):
    P = _load_polytope(args)
    pts = lattice.enumerate_points(P, args.r)
    if args.format == "json":
        out.append(_dump({"polytope": lattice.to_json(P), "r": args.r, "count": len(pts), "points": [list(p) for p in pts]}))
    elif args.format == "latex":
        body = ", ".join("(" + ",".join(map(str, p)) + ")" for p in pts)
        out.append(f"\\{{{body}\\}}")
    else:
        out.extend("(" + ", ".join(map(str, p)) + ")" for p in pts)
        out.append(f"# {len(pts)} points")
    return EXIT_OK


def cmd_slice(args, out):
    P = _load_polytope(args)
    a = _weights_for(P, args)
    out.append(_render(lattice.slice_polynomial(P, args.r, a), args.format))
    return EXIT_OK


def cmd_series(args, out):
    P = _load_polytope(args)
    a = _weights_for(P, args)
    N = args.order
    mode = args.mode or "brute"
    brute = closed = None
    if mode in ("brute", "both"):
        brute = lattice.refined_series_bruteforce(P, a, N)
    if mode in ("closed", "both"):
        try:
            closed = closed_forms.closed_series_for(P, a)
        except closed_forms.NoClosedForm as exc:
            raise UsageError(str(exc)) from None
    if mode == "brute":
        out.append(_render(brute, args.format))
        return EXIT_OK
    expanded = series_expand(closed, N)
    if mode == "closed":
        if args.format == "json":
            out.append(_dump({"closed": json.loads(to_json(closed)), "series": json.loads(to_json(expanded))}))
        else:
            out.append(_render(closed, args.format))
            out.append(_render(expanded, args.format))
        return EXIT_OK
    agree = series_equal(brute, expanded, N)
    if args.format == "json":
        out.append(_dump({
            "brute": json.loads(to_json(brute)),
            "closed": json.loads(to_json(closed)),
            "agree": agree,
        }))
    else:
        out.append(_render(brute, args.format))
        out.append(_render(closed, args.format))
        out.append("AGREE" if agree else "DISAGREE")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_eulerian(args, out):
    try:
        poly = permstats.refined_eulerian(args.dim) if args.refined else permstats.eulerian_polynomial(args.dim)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out.append(to_json(poly))
    elif args.refined:
        out.append(_render(poly, args.format))
    else:
        out.append(render_laurent(poly, "t", latex=args.format == "latex"))
    return EXIT_OK


def cmd_verify(args, out):
    results = verify.run_suite(args.suite, args.order)
    if args.format == "json":
        out.append(_dump({
            "suite": args.suite,
            "order": args.order,
            "results": [{"name": r.name, "cases": r.cases, "passed": r.passed} for r in results],
        }))
    else:
        out.extend(r.line() for r in results)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_quotient(args, out):
    d = args.dim
    if not 1 <= d <= graded_quotient.MAX_DIM:
        raise UsageError(f"quotient supports --dim 1..{graded_quotient.MAX_DIM}, got {d}")
    ok, table = graded_quotient.verify_regular_sequence(d)
    if args.rmax is not None and args.rmax != d + 2:
        table = graded_quotient.quotient_hilbert(d, args.rmax)
    entries = table.nonzero()
    if args.format == "json":
        out.append(_dump({
            "dim": d,
            "entries": [{"r": r, "k": k, "dim": v} for (r, k), v in entries.items()],
            "matches_refined_eulerian": ok,
        }))
    else:
        if args.format == "latex":
            out.append(table.to_qtpoly().to_latex())
        else:
            out.append("r k dim")
            out.extend(f"{r} {k} {v}" for (r, k), v in entries.items())
            out.append(f"total {table.total()}")
        out.append("matches refined Eulerian polynomial: " + ("yes" if ok else "NO"))
    return EXIT_OK if ok else EXIT_FAIL


def _add_polytope_args(p):
    p.add_argument("--polytope", metavar="FILE", help="polytope JSON file")
    p.add_argument("--family", choices=lattice.FAMILIES)
    p.add_argument("--dim", type=int)


def build_parser():
    parser = argparse.ArgumentParser(prog="refined-ehrhart", description=__doc__.splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "json", "latex"), default="plain")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("points", parents=[fmt], help="list lattice points of a dilation")
    _add_polytope_args(p)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("slice", parents=[fmt], help="slice polynomial of a dilation")
    _add_polytope_args(p)
    p.add_argument("--weights", required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("series", parents=[fmt], help="truncated refined Ehrhart series")
    _add_polytope_args(p)
    p.add_argument("--weights", required=True)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    g = p.add_mutually_exclusive_group()
    for m in ("closed", "brute", "both"):
        g.add_argument(f"--{m}", dest="mode", action="store_const", const=m)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("eulerian", parents=[fmt], help="Eulerian polynomials")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--refined", action="store_true")
    p.set_defaults(func=cmd_eulerian)

    p = sub.add_parser("verify", parents=[fmt], help="check the closed-form identities")
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("quotient", parents=[fmt], help="Hilbert function of the cube algebra mod y_0..y_d")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--rmax", type=int)
    p.set_defaults(func=cmd_quotient)
    return parser


def _glue_weights(argv):
    # "--weights -1,2" would otherwise parse "-1,2" as an option
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--weights":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--weights={nxt}")
        else:
            out.append(tok)
    return out


def run(argv, stdout=None, stderr=None):
    """Run the CLI; returns ``(exit_code, output_text)``."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    argv = _glue_weights(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_USAGE), ""
    for name in ("r", "order", "rmax"):
        if getattr(args, name, None) is not None and getattr(args, name) < 0:
            stderr.write(f"error: --{name} must be nonnegative\n")
            return EXIT_USAGE, ""
    out = []
    try:
        code = args.func(args, out)
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE, ""
    text = "\n".join(out) + "\n"
    stdout.write(text)
    return code, text


def main(argv=None):
    code, _ = run(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
