"""Seeded property trials and the golden P^{5,7,9} pipeline.

Each trial function returns the list of counterexamples found; an empty
list means the property held on every sample.
"""

from __future__ import annotations

import random

from .cyclic import cyclic_f, cyclic_h, cyclic_v
from .oracle import gale_face_census
from .ordinary import c_vec, triangle_tail, triangle_start, ordinary_f_triangle, ordinary_f_closed, u_vec
from .seqvec import (
    OffsetVec,
    apply_f,
    apply_t,
    is_log_concave,
    random_log_concave,
    junction_check,
    random_nonincreasing,
)
from .transform import f_to_h, h_to_f, lemma_seq

GOLDEN_PARAMS = (5, 7, 9)


def golden_pipeline() -> dict[str, OffsetVec]:
    d, k, n = GOLDEN_PARAMS
    return {
        "u": u_vec(d, k),
        "v": cyclic_v(d, k + 1),
        "border": triangle_start(d, k, n),
        "c": c_vec(d, k),
        "tail": triangle_tail(d, k),
        "f": ordinary_f_triangle(d, k, n),
        "f_closed": ordinary_f_closed(d, k, n),
    }


GOLDEN_EXPECTED = {
    "u": (0, 1, 3),
    "v": (1, 5, 10),
    "border": (1, 7, 16),
    "c": (0, 1, 6, 12, 10, 3),
    "tail": (6, 3, 1),
    "f": (1, 10, 40, 76, 70, 26),
    "f_closed": (1, 10, 40, 76, 70, 26),
}


def golden_mismatches() -> list[str]:
    got = golden_pipeline()
    return [
        f"{name}: expected {want}, got {got[name].entries}"
        for name, want in GOLDEN_EXPECTED.items()
        if got[name].entries != want
    ]


def f_trials(seed: int, count: int = 1000, max_len: int = 12, max_entry: int = 10**6) -> list[OffsetVec]:
    """Positive log-concave b whose F(b) is not log-concave."""
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        b = random_log_concave(rng, max_len, max_entry, positive=True)
        if not is_log_concave(apply_f(b)):
            bad.append(b)
    return bad


def t_trials(
    seed: int, count: int = 1000, max_len: int = 12, max_entry: int = 10**6
) -> list[tuple[OffsetVec, tuple[int, ...]]]:
    """Log-concave a and nonincreasing b whose T(a, b) is not log-concave."""
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        a = random_log_concave(rng, max_len, max_entry, positive=False)
        b = random_nonincreasing(rng, max_len, max_entry)
        if not is_log_concave(apply_t(OffsetVec(-1, a.entries), b)):
            bad.append((a, b))
    return bad


def t_junction_trials(
    seed: int, count: int = 1000, max_len: int = 12, max_entry: int = 10**6
) -> list[tuple[OffsetVec, tuple[int, ...]]]:
    """As :func:`t_trials`, restricted to pairs passing :func:`junction_check`."""
    rng = random.Random(seed)
    bad = []
    done = 0
    while done < count:
        a = OffsetVec(-1, random_log_concave(rng, max_len, max_entry, positive=False).entries)
        b = random_nonincreasing(rng, max_len, a.entries[-1])
        if not junction_check(a, b):
            continue
        done += 1
        if not is_log_concave(apply_t(a, b)):
            bad.append((a, b))
    return bad


def roundtrip_trials(seed: int, d: int, count: int = 500, max_entry: int = 10**6) -> list[OffsetVec]:
    """h where f_to_h(h_to_f(h)) != h or h_to_f(h) != F(h)."""
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        h = OffsetVec(0, (rng.randint(0, max_entry) for _ in range(d + 1)))
        f = h_to_f(h, d)
        if f_to_h(f, d) != h or f != apply_f(h):
            bad.append(h)
    return bad


def lemma_failures(n_max: int = 200, ms=tuple(range(1, 21)) + (1000, 10**6)) -> list[tuple[int, int]]:
    return [
        (n, m)
        for n in range(1, n_max + 1)
        for m in ms
        if not is_log_concave(lemma_seq(n, m, n + 2))
    ]


def bridge_failures(d_set=(5, 7, 9, 11), n_max: int = 60) -> list[tuple[int, int, int]]:
    """Grid points where v + (n-k) u differs from the matching lemma prefix."""
    bad = []
    for d in d_set:
        m = (d - 1) // 2
        for k in range(d, n_max + 1):
            for n in range(k + 1, n_max + 1):
                lhs = triangle_start(d, k, n).entries
                rhs = lemma_seq(k - m - 1, n - k, m + 1).entries
                if lhs != rhs:
                    bad.append((d, k, n))
    return bad


def split_failures(d_max: int = 9, v_max: int = 14, d_min: int = 5) -> list[tuple[int, int, int]]:
    """(d, V, i) where T(F(h_0..h_i), h_{i+1..d}) differs from the cyclic f-vector."""
    bad = []
    for d in range(d_min, d_max + 1):
        for v in range(d + 1, v_max + 1):
            h = cyclic_h(d, v).entries
            f = cyclic_f(d, v)
            for i in range(1, d):
                if apply_t(apply_f(h[: i + 1]), h[i + 1:]) != f:
                    bad.append((d, v, i))
    return bad


def oracle_failures(d_range=range(3, 10), v_max: int = 13) -> list[tuple[int, int]]:
    bad = []
    for d in d_range:
        for v in range(d + 1, v_max + 1):
            census = gale_face_census(v, d)
            if census.counts != cyclic_f(d, v) or not census.euler_holds():
                bad.append((v, d))
    return bad
