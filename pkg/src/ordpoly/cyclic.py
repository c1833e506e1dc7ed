"""Face numbers of cyclic polytopes.

Everything here is parametrised by the vertex count ``V``. The ordinary
polytope notation P^{d,k,n} has n+1 vertices, so a cyclic polytope with V
vertices is P^{d,V-1,V-1}; :func:`_last_index` is the only place that shift
happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .seqvec import OffsetVec, apply_f
from .transform import binom


@dataclass(frozen=True)
class CyclicParams:
    d: int
    vertices: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"dimension must be positive, got d={self.d}")
        if self.vertices < self.d + 1:
            raise ValueError(
                f"a cyclic {self.d}-polytope needs at least {self.d + 1} vertices, got {self.vertices}"
            )


def _last_index(d: int, vertices: int) -> int:
    CyclicParams(d, vertices)
    return vertices - 1


@lru_cache(maxsize=4096)
def cyclic_h(d: int, vertices: int) -> OffsetVec:
    """h_i = C(n-d+i, i) up to the middle, mirrored above it (n = V-1)."""
    n = _last_index(d, vertices)
    half = [binom(n - d + i, i) for i in range(d // 2 + 1)]
    h = half + [half[d - i] for i in range(d // 2 + 1, d + 1)]
    return OffsetVec(0, h)


@lru_cache(maxsize=4096)
def cyclic_f(d: int, vertices: int) -> OffsetVec:
    return apply_f(cyclic_h(d, vertices))


def cyclic_v(d: int, vertices: int) -> OffsetVec:
    """Closed form of F(h_0..h_m) for odd d = 2m+1: v_i = C(k-m, i+1), k = V-1."""
    if d % 2 == 0:
        raise ValueError(f"cyclic_v is defined for odd d only, got d={d}")
    k = _last_index(d, vertices)
    m = (d - 1) // 2
    return OffsetVec(-1, (binom(k - m, i + 1) for i in range(-1, m)))
