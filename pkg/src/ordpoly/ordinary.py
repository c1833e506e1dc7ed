"""f-vectors of ordinary polytopes P^{d,k,n} (n+1 vertices, characteristic k).

Odd dimensions have two independent routes: the closed form
``f = phi(d,k) + (n-k) c(d,k)`` and the triangle composition
``T(v + (n-k) u, (h_{m+1}, ..., h_d))``. Even-dimensional ordinary polytopes
are cyclic, so they go straight to :func:`cyclic_f`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .cyclic import cyclic_f, cyclic_h, cyclic_v
from .seqvec import OffsetVec, apply_t
from .transform import binom


class InvalidParams(ValueError):
    pass


class RouteMismatch(AssertionError):
    pass


D5_NOTE = "d=5 lies outside the closed-form hypothesis d=2m+1>5"
D5_WARNING = D5_NOTE + "; computed anyway"


@dataclass(frozen=True)
class PolytopeParams:
    d: int
    k: int
    n: int
    strict: bool = False
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        d, k, n = self.d, self.k, self.n
        if not (isinstance(d, int) and isinstance(k, int) and isinstance(n, int)):
            raise InvalidParams("d, k, n must be integers")
        if d < 5:
            raise InvalidParams(f"ordinary polytopes are handled for d >= 5, got d={d}")
        if not n >= k >= d:
            raise InvalidParams(f"need n >= k >= d, got d={d}, k={k}, n={n}")
        notes = []
        if d == 5:
            if self.strict:
                raise InvalidParams("strict mode: " + D5_NOTE)
            notes.append(D5_WARNING)
        object.__setattr__(self, "warnings", tuple(notes))

    @property
    def odd(self) -> bool:
        return self.d % 2 == 1

    @property
    def m(self) -> int | None:
        return (self.d - 1) // 2 if self.odd else None

    @property
    def vertices(self) -> int:
        return self.n + 1


def _half(d: int) -> int:
    if d % 2 == 0 or d < 3:
        raise InvalidParams(f"odd d >= 3 required, got d={d}")
    return (d - 1) // 2


def _odd_params(d: int, k: int, n: int, strict: bool) -> PolytopeParams:
    p = PolytopeParams(d, k, n, strict)
    if not p.odd:
        raise InvalidParams(f"the odd-dimensional formulas need odd d, got d={d}")
    return p


def u_vec(d: int, k: int) -> OffsetVec:
    """u_i = C(k-m-2, i) for i = -1..m-1; u_{-1} is always 0."""
    m = _half(d)
    if k < d:
        raise InvalidParams(f"need k >= d, got d={d}, k={k}")
    return OffsetVec(-1, (binom(k - m - 2, i) for i in range(-1, m)))


def c_vec(d: int, k: int) -> OffsetVec:
    """T(u, 0) with m+1 zero borders."""
    u = u_vec(d, k)
    return apply_t(u, (0,) * len(u))


def c_closed(d: int, k: int, j: int) -> int:
    """sum_{i=0}^{m-1} C(m+1, j-i) C(k-m-2, i)."""
    m = _half(d)
    if k < d:
        raise InvalidParams(f"need k >= d, got d={d}, k={k}")
    if not -1 <= j <= d - 1:
        raise InvalidParams(f"face dimension j={j} outside -1..{d - 1}")
    # binom(m+1, j-i) with j-i < 0 is zero; j = -1 therefore gives 0
    return sum(binom(m + 1, j - i) * binom(k - m - 2, i) for i in range(m))


def ordinary_f_closed(d: int, k: int, n: int, strict: bool = False) -> OffsetVec:
    """Closed form: f(cyclic d-polytope on k+1 vertices) + (n-k) c(d,k)."""
    _odd_params(d, k, n, strict)
    phi = cyclic_f(d, k + 1)
    c = OffsetVec(-1, (c_closed(d, k, j) for j in range(-1, d)))
    return phi + (n - k) * c


def triangle_start(d: int, k: int, n: int) -> OffsetVec:
    """The starting row v + (n-k) u of the odd-dimensional triangle."""
    return cyclic_v(d, k + 1) + (n - k) * u_vec(d, k)


def triangle_tail(d: int, k: int) -> OffsetVec:
    """Upper half (h_{m+1}, ..., h_d) of the cyclic h-vector on k+1 vertices."""
    return cyclic_h(d, k + 1).tail_from(_half(d) + 1)


def ordinary_f_triangle(d: int, k: int, n: int, strict: bool = False) -> OffsetVec:
    _odd_params(d, k, n, strict)
    return apply_t(triangle_start(d, k, n), triangle_tail(d, k))


def ordinary_f(params: PolytopeParams, verify: bool = False) -> OffsetVec:
    """f-vector of P^{d,k,n}.

    Even d dispatches to the cyclic polytope on n+1 vertices. Odd d uses the
    triangle route; ``verify=True`` also evaluates the closed form and raises
    :class:`RouteMismatch` if they disagree.
    """
    d, k, n = params.d, params.k, params.n
    for note in params.warnings:
        warnings.warn(note, stacklevel=2)
    if not params.odd:
        return cyclic_f(d, n + 1)
    f = ordinary_f_triangle(d, k, n, params.strict)
    if verify:
        g = ordinary_f_closed(d, k, n, params.strict)
        if f != g:
            raise RouteMismatch(f"P^{{{d},{k},{n}}}: triangle {f} != closed form {g}")
    return f
