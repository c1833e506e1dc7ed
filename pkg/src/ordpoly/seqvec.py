"""Offset integer vectors, the modified Pascal triangle operators, and
sequence predicates.

All arithmetic is exact (Python ints). A vector carries the semantic index
of its first entry, so an f-vector ``(f_-1, f_0, ..., f_{d-1})`` has
``start == -1`` and ``v[-1]`` is the improper face count, not the last entry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, init=False)
class OffsetVec:
    start: int
    entries: tuple[int, ...]
    # set only by conversions that may legitimately leave the nonnegative cone
    allow_negative: bool = field(default=False, compare=False)

    def __init__(self, start: int, entries: Iterable[int], allow_negative: bool = False):
        entries = tuple(entries)
        if not entries:
            raise ValueError("OffsetVec needs at least one entry")
        for x in entries:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"entries must be integers, got {x!r}")
            if x < 0 and not allow_negative:
                raise ValueError(f"negative entry {x} in OffsetVec")
        object.__setattr__(self, "start", int(start))
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "allow_negative", allow_negative)

    @classmethod
    def of(cls, *entries: int, start: int = 0) -> "OffsetVec":
        return cls(start, entries)

    @property
    def stop(self) -> int:
        """One past the last semantic index."""
        return self.start + len(self.entries)

    def indices(self) -> range:
        return range(self.start, self.stop)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        if not self.start <= i < self.stop:
            raise IndexError(f"index {i} outside [{self.start}, {self.stop})")
        return self.entries[i - self.start]

    def items(self) -> Iterator[tuple[int, int]]:
        return zip(self.indices(), self.entries)

    def _check_aligned(self, other: "OffsetVec") -> None:
        if self.start != other.start or len(self) != len(other):
            raise ValueError(
                f"misaligned vectors: start {self.start}/len {len(self)} "
                f"vs start {other.start}/len {len(other)}"
            )

    def __add__(self, other: "OffsetVec") -> "OffsetVec":
        if not isinstance(other, OffsetVec):
            return NotImplemented
        self._check_aligned(other)
        return OffsetVec(self.start, (a + b for a, b in zip(self.entries, other.entries)))

    def __mul__(self, scalar: int) -> "OffsetVec":
        if not isinstance(scalar, int) or isinstance(scalar, bool):
            return NotImplemented
        return OffsetVec(self.start, (scalar * a for a in self.entries))

    __rmul__ = __mul__

    def head(self, count: int) -> "OffsetVec":
        """The first ``count`` entries, same start."""
        if not 1 <= count <= len(self):
            raise ValueError(f"cannot take {count} entries of a length-{len(self)} vector")
        return OffsetVec(self.start, self.entries[:count])

    def tail_from(self, index: int) -> "OffsetVec":
        """Entries from semantic ``index`` on, keeping their indices."""
        self[index]
        return OffsetVec(index, self.entries[index - self.start:])

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def _as_vec(v, start: int = 0) -> OffsetVec:
    if isinstance(v, OffsetVec):
        return v
    return OffsetVec(start, v)


@dataclass(frozen=True)
class CheckResult:
    """Verdict of a sequence predicate.

    On failure ``witness`` is the semantic index where the defining inequality
    first breaks and ``lhs``/``rhs`` are the two compared integers there (for
    log-concavity ``lhs = v[i-1]*v[i+1]`` and ``rhs = v[i]**2``).
    """

    holds: bool
    witness: int | None = None
    lhs: int | None = None
    rhs: int | None = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("CheckResult: holds must be true exactly when witness is absent")

    def __bool__(self) -> bool:
        return self.holds


PASS = CheckResult(True)


@dataclass(frozen=True)
class TriangleTrace:
    """Row-by-row record of a modified Pascal triangle.

    ``appended[r]`` is the border value that turned ``rows[r]`` into
    ``rows[r + 1]``.
    """

    rows: tuple[OffsetVec, ...]
    appended: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.appended) + 1:
            raise ValueError("TriangleTrace needs exactly one more row than appended values")
        for r, b in enumerate(self.appended):
            if self.rows[r + 1] != apply_n(self.rows[r], b):
                raise ValueError(f"row {r + 1} is not N(row {r}, {b})")

    @property
    def result(self) -> OffsetVec:
        return self.rows[-1]


def _n_step(a: Sequence[int], b: int) -> list[int]:
    out = [a[0]]
    out.extend(a[i] + a[i + 1] for i in range(len(a) - 1))
    out.append(a[-1] + b)
    return out


def _run(row: list[int], borders: Sequence[int]) -> list[int]:
    for b in borders:
        row = _n_step(row, b)
    return row


def apply_n(a: OffsetVec, b: int) -> OffsetVec:
    """One row of the modified Pascal triangle: ``(a0, a0+a1, ..., a_last+b)``."""
    return OffsetVec(a.start, _n_step(a.entries, b))


def apply_f(b: OffsetVec | Sequence[int]) -> OffsetVec:
    """Last row of the triangle seeded with ``(b_0)`` and bordered by ``b_1..b_r``.

    Applied to an h-vector this is the f-vector, so the result starts at -1.
    """
    b = _as_vec(b)
    return OffsetVec(-1, _run([b.entries[0]], b.entries[1:]))


def apply_t(a: OffsetVec | Sequence[int], b: OffsetVec | Sequence[int] = ()) -> OffsetVec:
    """Run the triangle from the row ``a`` with borders ``b``.

    An empty ``b`` returns ``a`` unchanged, which keeps
    ``apply_t(apply_f(b[:i+1]), b[i+1:]) == apply_f(b)`` true at every split.
    """
    a = _as_vec(a, start=-1)
    borders = b.entries if isinstance(b, OffsetVec) else tuple(b)
    return OffsetVec(a.start, _run(list(a.entries), borders))


def trace_f(b: OffsetVec | Sequence[int]) -> TriangleTrace:
    b = _as_vec(b)
    return _trace(OffsetVec(-1, b.entries[:1]), b.entries[1:])


def trace_t(a: OffsetVec | Sequence[int], b: OffsetVec | Sequence[int] = ()) -> TriangleTrace:
    a = _as_vec(a, start=-1)
    borders = b.entries if isinstance(b, OffsetVec) else tuple(b)
    return _trace(a, borders)


def _trace(first: OffsetVec, borders: Sequence[int]) -> TriangleTrace:
    rows = [first]
    for x in borders:
        rows.append(apply_n(rows[-1], x))
    return TriangleTrace(tuple(rows), tuple(borders))


# -- predicates -------------------------------------------------------------

def log_concave_witness(entries: Sequence[int]) -> int | None:
    """Position (0-based) of the first interior entry breaking log-concavity."""
    for p in range(1, len(entries) - 1):
        if entries[p - 1] * entries[p + 1] > entries[p] * entries[p]:
            return p
    return None


def is_log_concave(v: OffsetVec | Sequence[int]) -> CheckResult:
    """Check ``v[i-1] * v[i+1] <= v[i]**2`` at every index with two neighbours."""
    v = _as_vec(v)
    e = v.entries
    p = log_concave_witness(e)
    if p is None:
        return PASS
    return CheckResult(False, v.start + p, e[p - 1] * e[p + 1], e[p] * e[p])


def is_unimodal(v: OffsetVec | Sequence[int]) -> CheckResult:
    """Weakly rising to a peak, then weakly falling.

    The witness is the first index after the descent began where the
    sequence rises again; ``lhs``/``rhs`` are that entry and its predecessor.
    """
    v = _as_vec(v)
    e = v.entries
    falling = False
    for p in range(1, len(e)):
        if e[p] < e[p - 1]:
            falling = True
        elif e[p] > e[p - 1] and falling:
            return CheckResult(False, v.start + p, e[p], e[p - 1])
    return PASS


def is_nonincreasing(v: OffsetVec | Sequence[int]) -> bool:
    e = _as_vec(v).entries
    return all(e[p] >= e[p + 1] for p in range(len(e) - 1))


def is_positive(v: OffsetVec | Sequence[int]) -> bool:
    return all(x > 0 for x in _as_vec(v).entries)


def junction_check(a: OffsetVec | Sequence[int], b: OffsetVec | Sequence[int]) -> CheckResult:
    """Side condition under which T(a, b) stays log-concave.

    Log-concave ``a`` and nonincreasing ``b`` alone are not enough:
    ``T((1, 1), (5,)) == (1, 2, 6)``. The extra requirement checked here is
    that ``a`` extended by ``b_0`` is still log-concave and ``b_0 <= a_last``.
    The witness is reported in ``a``'s indexing; index ``a.stop`` refers to
    the appended ``b_0``.
    """
    a = _as_vec(a, start=-1)
    borders = b.entries if isinstance(b, OffsetVec) else tuple(b)
    if not borders:
        return is_log_concave(a)
    b0 = borders[0]
    if b0 > a.entries[-1]:
        return CheckResult(False, a.stop, b0, a.entries[-1])
    return is_log_concave(OffsetVec(a.start, a.entries + (b0,)))


# -- generators for property tests -------------------------------------------

def random_log_concave(
    rng: random.Random,
    max_len: int = 12,
    max_entry: int = 10**6,
    positive: bool = True,
    max_tries: int = 1000,
) -> OffsetVec:
    """Sample a log-concave vector from a first entry and falling ratios.

    ``a[i+1] = floor(a[i] * r_i)`` with ``r_0 >= r_1 >= ...`` rational; the
    flooring can break the inequality, so candidates are re-checked and
    resampled. With ``positive=False`` trailing zeros are kept.
    """
    for _ in range(max_tries):
        length = rng.randint(1, max_len)
        a = [rng.randint(1, min(max_entry, 10 ** rng.randint(0, 6)))]
        ratios = sorted(
            (Fraction(rng.randint(1, 40), rng.randint(1, 40)) for _ in range(length - 1)),
            reverse=True,
        )
        for r in ratios:
            a.append(int(a[-1] * r))
        if max(a) > max_entry:
            continue
        if positive and a[-1] == 0:
            continue
        if log_concave_witness(a) is None:
            return OffsetVec(0, a)
    raise RuntimeError("could not sample a log-concave vector")


def random_nonincreasing(rng: random.Random, max_len: int = 12, max_entry: int = 10**6) -> tuple[int, ...]:
    """A nonincreasing nonnegative tuple, possibly empty."""
    length = rng.randint(0, max_len)
    return tuple(sorted((rng.randint(0, max_entry) for _ in range(length)), reverse=True))
