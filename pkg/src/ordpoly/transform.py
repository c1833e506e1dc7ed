"""Binomials with zero extension and the linear maps between f- and h-vectors."""

from __future__ import annotations

import math
import warnings

from .seqvec import OffsetVec


class NonPolytopalWarning(UserWarning):
    """An f-vector converted to an h-vector with negative entries."""


def binom(n: int, k: int) -> int:
    """C(n, k), zero for ``k < 0`` or ``k > n``."""
    if n < 0:
        raise ValueError(f"binom needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def f_to_h(f: OffsetVec, d: int) -> OffsetVec:
    """h_i = sum_{j<=i} (-1)^(i-j) C(d-j, d-i) f_{j-1}.

    The alternating sum is signed; if any h_i comes out negative the input
    was not a polytope's f-vector, and the result is returned with
    ``allow_negative=True`` plus a :class:`NonPolytopalWarning`.
    """
    if f.start != -1 or len(f) != d + 1:
        raise ValueError(f"f-vector of a {d}-polytope needs indices -1..{d - 1}")
    h = []
    for i in range(d + 1):
        s = 0
        for j in range(i + 1):
            term = binom(d - j, d - i) * f[j - 1]
            s += -term if (i - j) % 2 else term
        h.append(s)
    negative = any(x < 0 for x in h)
    if negative:
        warnings.warn(f"f_to_h produced negative entries {h}", NonPolytopalWarning, stacklevel=2)
    return OffsetVec(0, h, allow_negative=negative)


def h_to_f(h: OffsetVec, d: int) -> OffsetVec:
    """f_j = sum_i C(d-i, d-j-1) h_i for j = -1..d-1."""
    if len(h) != d + 1:
        raise ValueError(f"h-vector of a {d}-polytope needs {d + 1} entries, got {len(h)}")
    e = h.entries
    return OffsetVec(
        -1,
        (sum(binom(d - i, d - j - 1) * e[i] for i in range(d + 1)) for j in range(-1, d)),
        allow_negative=h.allow_negative,
    )


def lemma_seq(n: int, m: int, length: int) -> OffsetVec:
    """Entries C(n+1, k) + m*C(n-1, k-1) for k = 0..length-1."""
    if n < 1 or m < 1 or length < 1:
        raise ValueError("lemma_seq needs n >= 1, m >= 1, length >= 1")
    return OffsetVec(0, (binom(n + 1, k) + m * binom(n - 1, k - 1) for k in range(length)))


def pascal_row(n: int) -> OffsetVec:
    return OffsetVec(0, (binom(n, k) for k in range(n + 1)))
