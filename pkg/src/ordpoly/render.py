"""Text, JSON and CSV renderings of vectors, triangles and sweep results.

Big integers are always written as decimal strings in JSON.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable

from .seqvec import CheckResult, OffsetVec, TriangleTrace
from .sweep import Failure, PointResult, SweepReport

CSV_HEADER = ("d", "k", "n", "j", "f_j", "log_concave")


def plain(v: OffsetVec) -> str:
    return ",".join(map(str, v.entries))


def strings(v: OffsetVec) -> list[str]:
    return [str(x) for x in v.entries]


def bool_text(b: bool | None) -> str:
    return "null" if b is None else ("true" if b else "false")


def render_triangle(trace: TriangleTrace, align: bool = False) -> str:
    """One line per row, ``(entries) | border`` except for the final row.

    With ``align`` every entry is padded to the widest entry in the trace and
    the border column lines up.
    """
    width = max(len(str(x)) for row in trace.rows for x in row) if align else 0
    bodies = ["(" + " ".join(str(x).rjust(width) for x in row) + ")" for row in trace.rows]
    if align:
        col = max(len(b) for b in bodies[:-1]) if len(bodies) > 1 else 0
        bwidth = max((len(str(b)) for b in trace.appended), default=0)
        lines = [
            f"{body.ljust(col)} | {str(b).rjust(bwidth)}"
            for body, b in zip(bodies, trace.appended)
        ]
    else:
        lines = [f"{body} | {b}" for body, b in zip(bodies, trace.appended)]
    lines.append(bodies[-1])
    return "\n".join(lines) + "\n"


def triangle_json(trace: TriangleTrace) -> str:
    doc = {
        "start": trace.rows[0].start,
        "rows": [strings(r) for r in trace.rows],
        "appended": [str(b) for b in trace.appended],
        "result": strings(trace.result),
    }
    return json.dumps(doc) + "\n"


def point_doc(
    d: int,
    k: int,
    n: int,
    f: OffsetVec,
    lc: CheckResult,
    routes_agree: bool | None,
    warnings: Iterable[str] = (),
    h: OffsetVec | None = None,
    extra: dict | None = None,
) -> dict:
    doc = {"d": d, "k": k, "n": n, "f": strings(f)}
    if h is not None:
        doc["h"] = strings(h)
    doc.update(
        log_concave=lc.holds,
        witness=lc.witness,
        routes_agree=routes_agree,
        warnings=list(warnings),
    )
    if extra:
        doc.update(extra)
    return doc


def csv_rows(d: int, k: int, n: int, f: OffsetVec, lc: CheckResult) -> list[tuple]:
    return [(d, k, n, j, x, bool_text(lc.holds)) for j, x in f.items()]


def write_csv(rows: Iterable[tuple], out, header: bool = True) -> None:
    w = csv.writer(out, lineterminator="\r\n")
    if header:
        w.writerow(CSV_HEADER)
    w.writerows(rows)


def csv_text(rows: Iterable[tuple]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def sweep_point_doc(p: PointResult) -> dict:
    return point_doc(
        p.d, p.k, p.n, p.f, p.log_concave,
        None if p.route is None else p.route.holds,
        p.warnings,
    )


def failure_doc(fl: Failure) -> dict:
    r = fl.result
    return {
        "d": fl.d, "k": fl.k, "n": fl.n, "check": fl.check,
        "witness": r.witness, "lhs": str(r.lhs), "rhs": str(r.rhs),
    }


def failure_line(fl: Failure) -> str:
    r = fl.result
    return f"FAIL {fl.check} P^{{{fl.d},{fl.k},{fl.n}}} at index {r.witness}: {r.lhs} vs {r.rhs}"


def sweep_summary(report: SweepReport, checks: Iterable[str]) -> str:
    lines = [f"points = {report.total}", f"checks = {','.join(checks)}", f"failures = {len(report.failures)}"]
    lines.extend(failure_line(fl) for fl in report.failures)
    return "\n".join(lines) + "\n"


def sweep_json(report: SweepReport, checks: Iterable[str]) -> str:
    doc = {
        "total": report.total,
        "checks": list(checks),
        "failures": [failure_doc(fl) for fl in report.failures],
        "points": [sweep_point_doc(p) for p in report.points or ()],
    }
    return json.dumps(doc) + "\n"
