"""Exact f- and h-vectors of cyclic and ordinary polytopes.

Face vectors are built with the modified Pascal triangle operators
(:func:`apply_n`, :func:`apply_f`, :func:`apply_t`), checked for
log-concavity with exact integer cross-multiplication, and compared against
a brute-force Gale evenness census for small cyclic polytopes.
"""

from .cyclic import CyclicParams, cyclic_f, cyclic_h, cyclic_v
from .oracle import FaceCensus, FacetSet, gale_face_census, gale_facets
from .ordinary import (
    InvalidParams,
    PolytopeParams,
    c_closed,
    c_vec,
    ordinary_f,
    ordinary_f_triangle,
    ordinary_f_closed,
    u_vec,
)
from .seqvec import (
    CheckResult,
    OffsetVec,
    TriangleTrace,
    apply_f,
    apply_n,
    apply_t,
    is_log_concave,
    is_nonincreasing,
    is_positive,
    is_unimodal,
    junction_check,
    trace_f,
    trace_t,
)
from .transform import binom, f_to_h, h_to_f, lemma_seq

__version__ = "0.1.0"
