import warnings
from math import comb

import pytest

from ordpoly.cyclic import cyclic_f, cyclic_h
from ordpoly.oracle import gale_face_census
from ordpoly.ordinary import (
    D5_WARNING,
    InvalidParams,
    PolytopeParams,
    RouteMismatch,
    c_closed,
    c_vec,
    triangle_tail,
    triangle_start,
    ordinary_f,
    ordinary_f_triangle,
    ordinary_f_closed,
    u_vec,
)
from ordpoly.seqvec import OffsetVec, is_log_concave, is_nonincreasing, junction_check
import ordpoly.ordinary as ordinary_mod

ODD = (5, 7, 9, 11)
N_MAX = 60


def grid(d_set=ODD, n_max=N_MAX):
    for d in d_set:
        for k in range(d, n_max + 1):
            for n in range(k, n_max + 1):
                yield d, k, n


@pytest.mark.parametrize(
    "d, k, n",
    [(4, 4, 4), (5, 4, 9), (5, 7, 6), (7, 7, 6)],
)
def test_params_reject(d, k, n):
    with pytest.raises(InvalidParams):
        PolytopeParams(d, k, n)


def test_params_d5_warning_and_strict():
    p = PolytopeParams(5, 7, 9)
    assert p.warnings == (D5_WARNING,)
    assert p.m == 2 and p.vertices == 10
    with pytest.raises(InvalidParams):
        PolytopeParams(5, 7, 9, strict=True)
    assert PolytopeParams(7, 7, 9, strict=True).warnings == ()
    assert PolytopeParams(6, 8, 10).m is None


def test_u_vec_examples():
    assert u_vec(5, 7) == OffsetVec(-1, (0, 1, 3))
    assert u_vec(5, 5).entries == (0, 1, 1)
    assert u_vec(7, 9).entries == (0, 1, 4, 6)


def test_u_vec_rejects_even():
    with pytest.raises(InvalidParams):
        u_vec(6, 8)


def test_c_vec_examples():
    assert c_vec(5, 7) == OffsetVec(-1, (0, 1, 6, 12, 10, 3))
    assert c_vec(5, 5).entries == (0, 1, 4, 6, 4, 1)


def test_c_closed_examples():
    assert c_closed(5, 7, 2) == 12
    assert c_closed(5, 7, -1) == 0
    assert c_closed(5, 7, 4) == 3
    with pytest.raises(InvalidParams):
        c_closed(5, 7, 5)


def test_c_triangle_equals_closed_form():
    for d in ODD:
        for k in range(d, N_MAX + 1):
            c = c_vec(d, k)
            assert [c[j] for j in range(-1, d)] == [c_closed(d, k, j) for j in range(-1, d)]


def test_golden_both_routes():
    f = (1, 10, 40, 76, 70, 26)
    assert ordinary_f_closed(5, 7, 9).entries == f
    assert ordinary_f_triangle(5, 7, 9).entries == f
    assert triangle_start(5, 7, 9).entries == (1, 7, 16)
    assert triangle_tail(5, 7).entries == (6, 3, 1)
    assert cyclic_f(5, 8) + 2 * c_vec(5, 7) == OffsetVec(-1, f)


def test_n_equals_k_is_cyclic():
    assert ordinary_f_triangle(5, 7, 7) == gale_face_census(8, 5).counts
    for d in ODD:
        for k in range(d, 30):
            assert ordinary_f_closed(d, k, k) == cyclic_f(d, k + 1)
            assert ordinary_f_triangle(d, k, k) == cyclic_f(d, k + 1)


def test_route_equivalence():
    for d, k, n in grid():
        assert ordinary_f_closed(d, k, n) == ordinary_f_triangle(d, k, n), (d, k, n)


def test_ordinary_f_dispatch():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert ordinary_f(PolytopeParams(5, 7, 9)).entries == (1, 10, 40, 76, 70, 26)
        assert ordinary_f(PolytopeParams(5, 5, 5)).entries == tuple(comb(6, j + 1) for j in range(-1, 5))
    assert ordinary_f(PolytopeParams(6, 8, 10)) == cyclic_f(6, 11)
    assert ordinary_f(PolytopeParams(7, 9, 11), verify=True) == ordinary_f_closed(7, 9, 11)


def test_ordinary_f_warns_for_d5():
    with pytest.warns(UserWarning, match="d=5"):
        ordinary_f(PolytopeParams(5, 7, 9))


def test_strict_rejects_d5_routes():
    with pytest.raises(InvalidParams):
        ordinary_f_triangle(5, 7, 9, strict=True)
    with pytest.raises(InvalidParams):
        ordinary_f_closed(6, 8, 10)


def test_verify_raises_on_disagreement(monkeypatch):
    monkeypatch.setattr(ordinary_mod, "ordinary_f_closed", lambda *a: OffsetVec(-1, (9,) * 8))
    with pytest.raises(RouteMismatch):
        ordinary_f(PolytopeParams(7, 9, 11), verify=True)


def test_cyclic_specialisation_both_parities():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for d in range(5, 12):
            for k in range(d, 25):
                assert ordinary_f(PolytopeParams(d, k, k)) == cyclic_f(d, k + 1)


def test_monotone_in_n():
    for d in ODD:
        for k in range(d, N_MAX + 1):
            prev = None
            for n in range(k, N_MAX + 1):
                f = ordinary_f_triangle(d, k, n)
                if prev is not None:
                    assert all(f[j] >= prev[j] for j in range(0, d))
                prev = f


def test_border_hypotheses_on_grid():
    for d, k, n in grid():
        start, tail = triangle_start(d, k, n), triangle_tail(d, k)
        assert is_log_concave(start).holds
        assert is_nonincreasing(tail)
        assert junction_check(start, tail).holds


def test_tail_is_upper_half_of_cyclic_h():
    assert triangle_tail(7, 11) == cyclic_h(7, 12).tail_from(4)


def test_log_concave_on_grid():
    for d, k, n in grid():
        assert is_log_concave(ordinary_f_triangle(d, k, n)).holds
