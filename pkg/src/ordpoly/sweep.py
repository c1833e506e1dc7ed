"""Grid sweeps over P^{d,k,n}: evaluate f-vectors and run the checks.

Work is split by (d, k) column; every grid point is independent, so columns
can go to separate processes. Results come back in grid order whatever the
worker count.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .cyclic import cyclic_f
from .ordinary import (
    D5_WARNING,
    PolytopeParams,
    triangle_tail,
    triangle_start,
    ordinary_f_closed,
)
from .seqvec import PASS, CheckResult, OffsetVec, apply_t, is_log_concave, is_unimodal, junction_check

CHECKS = ("logconcave", "unimodal", "route", "border")


def parse_checks(spec: str) -> tuple[str, ...]:
    names = [s.strip() for s in spec.split(",") if s.strip()]
    if not names:
        raise ValueError("no checks selected")
    if "all" in names:
        return CHECKS
    for s in names:
        if s not in CHECKS:
            raise ValueError(f"unknown check {s!r}; choose from {', '.join(CHECKS)} or all")
    return tuple(c for c in CHECKS if c in names)


@dataclass(frozen=True)
class PointResult:
    d: int
    k: int
    n: int
    f: OffsetVec
    log_concave: CheckResult
    # None when a check was not requested or does not apply (even d)
    unimodal: CheckResult | None = None
    route: CheckResult | None = None
    border: CheckResult | None = None

    @property
    def warnings(self) -> tuple[str, ...]:
        return (D5_WARNING,) if self.d == 5 else ()

    def failures(self) -> Iterator[tuple[str, CheckResult]]:
        for name in CHECKS:
            res = getattr(self, "log_concave" if name == "logconcave" else name)
            if res is not None and not res.holds:
                yield name, res


@dataclass(frozen=True)
class Failure:
    d: int
    k: int
    n: int
    check: str
    result: CheckResult


@dataclass
class SweepReport:
    grid: list[tuple[int, int, int]] = field(default_factory=list)
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    points: list[PointResult] | None = None

    @property
    def total(self) -> int:
        return len(self.grid)

    @property
    def ok(self) -> bool:
        return not self.failures


def grid_points(d_set: Iterable[int], k_max: int, n_max: int) -> list[tuple[int, int, int]]:
    pts = []
    for d in d_set:
        for k in range(d, min(k_max, n_max) + 1):
            for n in range(k, n_max + 1):
                pts.append((d, k, n))
    return pts


def validate_grid(d_set: Iterable[int], k_max: int, n_max: int) -> None:
    d_set = list(d_set)
    if not d_set:
        raise ValueError("empty dimension set")
    if k_max > n_max:
        raise ValueError(f"kmax={k_max} exceeds nmax={n_max}")
    for d in d_set:
        PolytopeParams(d, d, d)


def _mismatch(a: OffsetVec, b: OffsetVec) -> CheckResult:
    for j, x in a.items():
        if x != b[j]:
            return CheckResult(False, j, x, b[j])
    return PASS


def _nonincreasing(v: OffsetVec) -> CheckResult:
    e = v.entries
    for p in range(len(e) - 1):
        if e[p + 1] > e[p]:
            return CheckResult(False, v.start + p + 1, e[p + 1], e[p])
    return PASS


def evaluate_point(d: int, k: int, n: int, checks: tuple[str, ...] = ("logconcave",)) -> PointResult:
    route = border = unimodal = None
    if d % 2 == 0:
        f = cyclic_f(d, n + 1)
    else:
        start = triangle_start(d, k, n)
        tail = triangle_tail(d, k)
        f = apply_t(start, tail)
        if "route" in checks:
            route = _mismatch(ordinary_f_closed(d, k, n), f)
        if "border" in checks:
            border = is_log_concave(start)
            if border.holds:
                border = _nonincreasing(tail)
            if border.holds:
                border = junction_check(start, tail)
    if "unimodal" in checks:
        unimodal = is_unimodal(f)
    return PointResult(d, k, n, f, is_log_concave(f), unimodal, route, border)


def _column(job: tuple[int, int, int, tuple[str, ...], bool]) -> tuple[list[PointResult], list[Failure]]:
    d, k, n_max, checks, keep = job
    kept, failed = [], []
    for n in range(k, n_max + 1):
        pr = evaluate_point(d, k, n, checks)
        if keep:
            kept.append(pr)
        for name, res in pr.failures():
            failed.append(Failure(d, k, n, name, res))
    return kept, failed


def default_jobs() -> int:
    return os.cpu_count() or 1


def iter_sweep(
    d_set: Iterable[int],
    k_max: int,
    n_max: int,
    checks: tuple[str, ...] = ("logconcave",),
    jobs: int | None = None,
    keep_points: bool = False,
) -> Iterator[tuple[list[PointResult], list[Failure]]]:
    """Yield ``(points, failures)`` per (d, k) column, in grid order."""
    d_set = list(d_set)
    validate_grid(d_set, k_max, n_max)
    jobs = jobs or default_jobs()
    cols = [
        (d, k, n_max, checks, keep_points)
        for d in d_set
        for k in range(d, min(k_max, n_max) + 1)
    ]
    if jobs == 1 or len(cols) < 2:
        yield from map(_column, cols)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_column, cols, chunksize=max(1, len(cols) // (8 * jobs)))


def run_sweep(
    d_set: Iterable[int],
    k_max: int,
    n_max: int,
    checks: tuple[str, ...] = ("logconcave",),
    jobs: int | None = None,
    keep_points: bool = False,
) -> SweepReport:
    d_set = list(d_set)
    t0 = time.perf_counter()
    report = SweepReport(points=[] if keep_points else None)
    for kept, failed in iter_sweep(d_set, k_max, n_max, checks, jobs, keep_points):
        if keep_points:
            report.points.extend(kept)
        report.failures.extend(failed)
    report.grid = grid_points(d_set, k_max, n_max)
    report.elapsed = time.perf_counter() - t0
    return report
