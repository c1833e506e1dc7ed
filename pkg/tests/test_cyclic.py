from math import comb

import pytest

from ordpoly.cyclic import cyclic_f, cyclic_h, cyclic_v
from ordpoly.oracle import gale_face_census
from ordpoly.seqvec import apply_f, apply_t, is_log_concave


def test_cyclic_h_examples():
    assert cyclic_h(5, 8).entries == (1, 3, 6, 6, 3, 1)
    # C(3,0), C(4,1), C(5,2), C(6,3), mirrored
    assert cyclic_h(6, 10).entries == (1, 4, 10, 20, 10, 4, 1)


@pytest.mark.parametrize("d", range(1, 16))
def test_simplex(d):
    assert cyclic_h(d, d + 1).entries == (1,) * (d + 1)
    assert cyclic_f(d, d + 1).entries == tuple(comb(d + 1, j + 1) for j in range(-1, d))


@pytest.mark.parametrize("d, v", [(5, 5), (3, 2), (0, 4)])
def test_rejects_too_few_vertices(d, v):
    with pytest.raises(ValueError):
        cyclic_h(d, v)


def test_cyclic_f_examples():
    assert cyclic_f(5, 8).entries == (1, 8, 28, 52, 50, 20)
    assert cyclic_f(4, 7).entries == (1, 7, 21, 28, 14)
    assert cyclic_f(5, 8) == gale_face_census(8, 5).counts
    assert cyclic_f(4, 7) == gale_face_census(7, 4).counts


def test_cyclic_f_basic_shape():
    for d in range(2, 12):
        for v in range(d + 1, 40):
            f = cyclic_f(d, v)
            assert f.start == -1 and len(f) == d + 1
            assert f[-1] == 1 and f[0] == v


def test_cyclic_v_examples():
    assert cyclic_v(5, 8).entries == (1, 5, 10)
    assert cyclic_v(5, 8).start == -1
    assert cyclic_v(5, 6).entries == (1, 3, 3)
    assert cyclic_v(7, 12).entries == (1, 8, 28, 56)


def test_cyclic_v_rejects_even():
    with pytest.raises(ValueError):
        cyclic_v(6, 10)


def test_v_identity():
    for d in range(5, 14, 2):
        m = (d - 1) // 2
        for v in range(d + 1, 201):
            assert cyclic_v(d, v) == apply_f(cyclic_h(d, v).head(m + 1)), (d, v)


def test_split_consistency():
    for d in range(5, 10):
        for v in range(d + 1, 15):
            h = cyclic_h(d, v).entries
            for i in range(1, d):
                assert apply_t(apply_f(h[: i + 1]), h[i + 1:]) == cyclic_f(d, v), (d, v, i)


def test_dehn_sommerville_symmetry():
    for d in range(2, 16):
        for v in range(d + 1, 60):
            h = cyclic_h(d, v).entries
            assert h == h[::-1]


def test_h_log_concave():
    for d in range(5, 16):
        for v in range(d + 1, 301):
            assert is_log_concave(cyclic_h(d, v)).holds, (d, v)


def test_f_log_concave():
    for d in range(2, 16):
        for v in range(d + 1, 301):
            res = is_log_concave(cyclic_f(d, v))
            assert res.holds, (d, v, res)
