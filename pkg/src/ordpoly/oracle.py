"""Brute-force face counts of cyclic polytopes from Gale's evenness condition.

This module deliberately shares nothing with the triangle machinery; it is
the ground truth the formulas are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .seqvec import OffsetVec

DEFAULT_CAP = 16


class OracleCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class FacetSet:
    vertices: int
    d: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(set(self.facets)) != len(self.facets):
            raise ValueError("duplicate facets")
        for s in self.facets:
            if len(s) != self.d or list(s) != sorted(s) or s[0] < 1 or s[-1] > self.vertices:
                raise ValueError(f"malformed facet {s}")

    def __len__(self):
        return len(self.facets)

    def vertex_degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(range(1, self.vertices + 1), 0)
        for s in self.facets:
            for x in s:
                deg[x] += 1
        return deg


@dataclass(frozen=True)
class FaceCensus:
    vertices: int
    d: int
    counts: OffsetVec

    def euler_sum(self) -> int:
        return sum((-1) ** j * self.counts[j] for j in range(self.d))

    def euler_holds(self) -> bool:
        return self.euler_sum() == 1 - (-1) ** self.d


def _check_range(vertices: int, d: int, cap: int) -> None:
    if vertices > cap:
        raise OracleCapExceeded(f"{vertices} vertices exceeds the oracle cap of {cap}")
    if not 2 <= d < vertices:
        raise ValueError(f"need 2 <= d < V, got d={d}, V={vertices}")


def is_gale_facet(s: tuple[int, ...], vertices: int) -> bool:
    """Every two non-members are separated by an even number of members."""
    members = set(s)
    outside = [x for x in range(1, vertices + 1) if x not in members]
    for a, b in combinations(outside, 2):
        if sum(1 for x in s if a < x < b) % 2:
            return False
    return True


def gale_facets(vertices: int, d: int, cap: int = DEFAULT_CAP) -> FacetSet:
    _check_range(vertices, d, cap)
    facets = tuple(
        s for s in combinations(range(1, vertices + 1), d) if is_gale_facet(s, vertices)
    )
    return FacetSet(vertices, d, facets)


def census_from_facets(fs: FacetSet) -> FaceCensus:
    # cyclic polytopes are simplicial: the faces are exactly the subsets of facets
    faces: list[set[tuple[int, ...]]] = [set() for _ in range(fs.d + 1)]
    for s in fs.facets:
        for size in range(1, fs.d + 1):
            faces[size].update(combinations(s, size))
    counts = [1] + [len(faces[size]) for size in range(1, fs.d + 1)]
    return FaceCensus(fs.vertices, fs.d, OffsetVec(-1, counts))


def gale_face_census(vertices: int, d: int, cap: int = DEFAULT_CAP) -> FaceCensus:
    return census_from_facets(gale_facets(vertices, d, cap))


# -- golden files -------------------------------------------------------------

GOLDEN_D = range(3, 10)
GOLDEN_V_MAX = 13


def golden_name(vertices: int, d: int) -> str:
    return f"cyclic_V{vertices:02d}_d{d}.facets"


def format_facets(fs: FacetSet) -> str:
    return "".join(" ".join(map(str, s)) + "\n" for s in fs.facets)


def parse_facets(text: str, vertices: int, d: int) -> FacetSet:
    facets = tuple(tuple(int(x) for x in line.split()) for line in text.splitlines() if line.strip())
    return FacetSet(vertices, d, facets)


def golden_grid():
    for d in GOLDEN_D:
        for v in range(d + 1, GOLDEN_V_MAX + 1):
            yield v, d


def write_golden(directory: Path | str) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for v, d in golden_grid():
        path = directory / golden_name(v, d)
        path.write_text(format_facets(gale_facets(v, d)))
        written.append(path)
    return written


def read_golden(directory: Path | str, vertices: int, d: int) -> FacetSet:
    path = Path(directory) / golden_name(vertices, d)
    return parse_facets(path.read_text(), vertices, d)
