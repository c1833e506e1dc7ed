"""Command-line front end.

Exit codes: 0 every check passed, 1 a mathematical check failed (the witness
is printed), 2 bad usage or parameters.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from . import checks as trials
from .cyclic import CyclicParams, cyclic_f, cyclic_h, cyclic_v
from .oracle import DEFAULT_CAP, gale_face_census, write_golden
from .ordinary import (
    InvalidParams,
    PolytopeParams,
    c_vec,
    triangle_tail,
    triangle_start,
    ordinary_f,
    ordinary_f_closed,
    u_vec,
)
from .render import (
    csv_rows,
    csv_text,
    failure_line,
    plain,
    point_doc,
    render_triangle,
    sweep_json,
    sweep_point_doc,
    sweep_summary,
    triangle_json,
    write_csv,
)
from .seqvec import OffsetVec, is_log_concave, trace_f, trace_t
from .sweep import iter_sweep, parse_checks, run_sweep, validate_grid
from .transform import f_to_h

FORMAT_ENV = "ORDPOLY_FORMAT"
FORMATS = ("text", "json", "csv")

OK, CHECK_FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _lc_line(lc) -> str:
    line = f"log_concave = {'true' if lc.holds else 'false'}"
    if not lc.holds:
        line += f" (witness {lc.witness}: {lc.lhs} > {lc.rhs})"
    return line


# -- cyclic -------------------------------------------------------------------

def cmd_cyclic(args) -> int:
    d, v = args.d, args.vertices
    try:
        CyclicParams(d, v)
    except ValueError as e:
        raise UsageError(str(e)) from None
    h, f = cyclic_h(d, v), cyclic_f(d, v)
    lc = is_log_concave(f)
    n = v - 1
    if args.format == "json":
        doc = point_doc(d, n, n, f, lc, None, h=h, extra={"vertices": v})
        _emit(json.dumps(doc) + "\n")
    elif args.format == "csv":
        _emit(csv_text(csv_rows(d, n, n, f, lc)))
    else:
        _emit(
            f"cyclic polytope C({v}, {d})\n"
            f"h = {plain(h)}\nf = {plain(f)}\n{_lc_line(lc)}\n"
        )
    return OK if lc.holds else CHECK_FAILED


# -- ordinary -----------------------------------------------------------------

def cmd_ordinary(args) -> int:
    try:
        params = PolytopeParams(args.d, args.k, args.n, strict=args.strict)
    except InvalidParams as e:
        raise UsageError(str(e)) from None
    d, k, n = params.d, params.k, params.n
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        f = ordinary_f(params)
    lc = is_log_concave(f)
    routes_agree = None
    notes = list(params.warnings)
    if params.odd:
        routes_agree = ordinary_f_closed(d, k, n) == f
    else:
        notes.append(f"even d: P^{{{d},{k},{n}}} is the cyclic polytope C({n + 1}, {d})")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        h = f_to_h(f, d)
    verbose = {}
    if args.verbose and params.odd:
        verbose = {
            "u": u_vec(d, k),
            "v": cyclic_v(d, k + 1),
            "border": triangle_start(d, k, n),
            "c": c_vec(d, k),
            "h_tail": triangle_tail(d, k),
        }
    if args.format == "json":
        extra = {name: [str(x) for x in vec] for name, vec in verbose.items()}
        doc = point_doc(d, k, n, f, lc, routes_agree, notes, h=None if h.allow_negative else h, extra=extra)
        _emit(json.dumps(doc) + "\n")
    elif args.format == "csv":
        _emit(csv_text(csv_rows(d, k, n, f, lc)))
    else:
        out = [f"ordinary polytope P^{{{d},{k},{n}}}"]
        out += [f"note: {w}" for w in notes]
        labels = {"border": f"v+{n - k}u"}
        out += [f"{labels.get(name, name)} = {plain(vec)}" for name, vec in verbose.items()]
        out.append(f"f = {plain(f)}")
        out.append(f"routes_agree = {'null' if routes_agree is None else str(routes_agree).lower()}")
        out.append(_lc_line(lc))
        _emit("\n".join(out) + "\n")
    if routes_agree is False or not lc.holds:
        return CHECK_FAILED
    return OK


# -- triangle -----------------------------------------------------------------

def _triangle_trace(args):
    if args.f is not None:
        b = _int_list(args.f)
        if not b:
            raise UsageError("--f needs at least one entry")
        return trace_f(OffsetVec(0, b))
    if args.t is not None:
        a, b = (_int_list(x) for x in args.t)
        if not a:
            raise UsageError("--t needs a nonempty first vector")
        return trace_t(OffsetVec(-1, a), b)
    if args.c is not None:
        dk = _int_list(args.c)
        if len(dk) != 2:
            raise UsageError("--c takes d,k")
        d, k = dk
        try:
            u = u_vec(d, k)
        except InvalidParams as e:
            raise UsageError(str(e)) from None
        return trace_t(u, (0,) * len(u))
    dkn = _int_list(args.ordinary)
    if len(dkn) != 3:
        raise UsageError("--ordinary takes d,k,n")
    d, k, n = dkn
    try:
        p = PolytopeParams(d, k, n)
    except InvalidParams as e:
        raise UsageError(str(e)) from None
    if not p.odd:
        raise UsageError("--ordinary triangles exist for odd d only; even d is cyclic")
    return trace_t(triangle_start(d, k, n), triangle_tail(d, k))


def cmd_triangle(args) -> int:
    trace = _triangle_trace(args)
    if args.format == "json":
        _emit(triangle_json(trace))
    else:
        _emit(render_triangle(trace, align=args.align))
    return OK


# -- sweep ----------------------------------------------------------------------

def cmd_sweep(args) -> int:
    d_set = _int_list(args.d)
    try:
        checks = parse_checks(args.check)
        validate_grid(d_set, args.kmax, args.nmax)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.jobs is not None and args.jobs < 1:
        raise UsageError("--jobs must be positive")
    out = open(args.output, "w", newline="", encoding="utf-8") if args.output else sys.stdout
    try:
        if args.stream:
            code = _sweep_stream(d_set, args, checks, out)
        else:
            code = _sweep_document(d_set, args, checks, out)
    finally:
        if args.output:
            out.close()
    return code


def _sweep_stream(d_set, args, checks, out) -> int:
    failures = []
    for kept, failed in iter_sweep(d_set, args.kmax, args.nmax, checks, args.jobs, keep_points=True):
        for p in kept:
            out.write(json.dumps(sweep_point_doc(p)) + "\n")
        failures.extend(failed)
    for fl in failures:
        print(failure_line(fl), file=sys.stderr)
    return CHECK_FAILED if failures else OK


def _sweep_document(d_set, args, checks, out) -> int:
    keep = args.format != "text"
    report = run_sweep(d_set, args.kmax, args.nmax, checks, args.jobs, keep_points=keep)
    if args.format == "json":
        out.write(sweep_json(report, checks))
    elif args.format == "csv":
        rows = (row for p in report.points for row in csv_rows(p.d, p.k, p.n, p.f, p.log_concave))
        write_csv(rows, out)
    else:
        out.write(sweep_summary(report, checks))
    if out is not sys.stdout:
        sys.stdout.write(sweep_summary(report, checks))
    elif args.format != "text":
        for fl in report.failures:
            print(failure_line(fl), file=sys.stderr)
    print(f"elapsed = {report.elapsed:.3f}s", file=sys.stderr)
    return OK if report.ok else CHECK_FAILED


# -- oracle / golden / selftest -----------------------------------------------

def cmd_oracle(args) -> int:
    try:
        census = gale_face_census(args.vertices, args.d, cap=args.cap)
    except ValueError as e:
        raise UsageError(str(e)) from None
    formula = cyclic_f(args.d, args.vertices)
    match = census.counts == formula
    euler = census.euler_holds()
    if args.format == "json":
        doc = {
            "vertices": args.vertices,
            "d": args.d,
            "census": [str(x) for x in census.counts],
            "formula": [str(x) for x in formula],
            "match": match,
            "euler": euler,
        }
        _emit(json.dumps(doc) + "\n")
    else:
        _emit(
            f"Gale census of C({args.vertices}, {args.d})\n"
            f"census = {plain(census.counts)}\n"
            f"formula = {plain(formula)}\n"
            f"euler = {'ok' if euler else 'FAILED'}\n"
            f"{'MATCH' if match else 'MISMATCH'}\n"
        )
    return OK if match and euler else CHECK_FAILED


def cmd_golden(args) -> int:
    paths = write_golden(args.out)
    _emit(f"wrote {len(paths)} facet files to {args.out}\n")
    return OK


def cmd_selftest(args) -> int:
    seed, it = args.seed, args.iterations
    suite = [
        ("golden P^{5,7,9}", trials.golden_mismatches),
        ("oracle d<=6, V<=10", lambda: trials.oracle_failures(range(3, 7), 10)),
        ("route d in 5,7, n<=20", lambda: run_sweep([5, 7], 20, 20, ("route",), jobs=1).failures),
        ("log-concavity d in 5..8, n<=40", lambda: run_sweep([5, 6, 7, 8], 40, 40, ("logconcave", "border"), jobs=1).failures),
        ("F preserves log-concavity", lambda: trials.f_trials(seed, it)),
        ("T preserves log-concavity (junction condition)", lambda: trials.t_junction_trials(seed, it)),
        ("lemma n<=40", lambda: trials.lemma_failures(40)),
        ("bridge identity", lambda: trials.bridge_failures((5, 7), 20)),
        ("roundtrip d=5..8", lambda: [h for d in range(5, 9) for h in trials.roundtrip_trials(seed, d, max(1, it // 4))]),
        ("split consistency", trials.split_failures),
    ]
    failed = 0
    for name, run in suite:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            bad = run()
        if bad:
            failed += 1
            _emit(f"FAIL {name}: {len(bad)} counterexamples, first {bad[0]}\n")
        else:
            _emit(f"PASS {name}\n")
    literal = trials.t_trials(seed, it)
    _emit(
        f"NOTE T without junction condition: {len(literal)}/{it} counterexamples "
        "(e.g. T((1,1),(5)) = (1,2,6))\n"
    )
    return CHECK_FAILED if failed else OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get(FORMAT_ENV, "text")
    if default_format not in FORMATS:
        default_format = "text"

    parser = argparse.ArgumentParser(
        prog="ordpoly",
        description="Exact face vectors of cyclic and ordinary polytopes, with log-concavity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=FORMATS):
        p.add_argument("--format", choices=choices, default=default_format if default_format in choices else "text")

    p = sub.add_parser("cyclic", help="h- and f-vector of the cyclic polytope C(V, d)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--vertices", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_cyclic)

    p = sub.add_parser("ordinary", help="f-vector of the ordinary polytope P^{d,k,n}")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="vertex count minus one")
    p.add_argument("--strict", action="store_true", help="reject d=5 for the odd-dimensional formulas")
    p.add_argument("--verbose", action="store_true", help="also print u, v, v+(n-k)u, c and the h tail")
    fmt(p)
    p.set_defaults(func=cmd_ordinary)

    p = sub.add_parser("triangle", help="print a modified Pascal triangle row by row")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--f", metavar="B", help="F of the border vector B, e.g. 1,3,6,6,3,1")
    g.add_argument("--t", nargs=2, metavar=("A", "B"), help="T(A, B); B may be empty")
    g.add_argument("--c", metavar="D,K", help="the c(d,k) triangle T(u, 0)")
    g.add_argument("--ordinary", metavar="D,K,N", help="the f-vector triangle of P^{d,k,n}")
    p.add_argument("--align", action="store_true", help="fixed-width columns")
    fmt(p, ("text", "json"))
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("sweep", help="check every P^{d,k,n} on a grid")
    p.add_argument("--d", required=True, help="comma-separated dimensions")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--check", default="logconcave", help="logconcave,unimodal,route,border or all")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")
    p.add_argument("--output", help="write the result document here instead of stdout")
    p.add_argument("--stream", action="store_true", help="newline-delimited JSON, one line per grid point")
    fmt(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oracle", help="brute-force face census of C(V, d) via Gale evenness")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    fmt(p, ("text", "json"))
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("golden", help="regenerate the facet-list golden files")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_golden)

    p = sub.add_parser("selftest", help="golden example plus reduced property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iterations", type=int, default=200)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
