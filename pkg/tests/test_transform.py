import random
import warnings
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordpoly.seqvec import OffsetVec, apply_f, is_log_concave
from ordpoly.transform import NonPolytopalWarning, binom, f_to_h, h_to_f, lemma_seq, pascal_row


def pascal_table(size):
    """Binomials by repeated addition only."""
    rows = [[1]]
    for _ in range(size):
        prev = rows[-1]
        rows.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return rows


def test_binom_examples():
    assert binom(3, -1) == 0
    assert binom(5, 2) == 10
    assert binom(7, 7) == 1
    assert binom(4, 9) == 0


def test_binom_rejects_negative_n():
    with pytest.raises(ValueError):
        binom(-1, 0)


def test_binom_matches_addition_table():
    table = pascal_table(60)
    for n, row in enumerate(table):
        for k in range(-2, n + 3):
            assert binom(n, k) == (row[k] if 0 <= k <= n else 0)


def test_binom_big():
    assert binom(300, 150) == factorial(300) // (factorial(150) ** 2)
    assert binom(300, 150) > 2**64


def test_pascal_recursion():
    for n in range(1, 31):
        for i in range(0, n):
            assert binom(n + 1, i + 1) == binom(n - 1, i - 1) + 2 * binom(n - 1, i) + binom(n - 1, i + 1)


@pytest.mark.parametrize("n", range(0, 61))
def test_pascal_rows_log_concave(n):
    assert is_log_concave(pascal_row(n)).holds


def test_f_to_h_cyclic_example():
    h = f_to_h(OffsetVec(-1, (1, 8, 28, 52, 50, 20)), 5)
    assert h == OffsetVec(0, (1, 3, 6, 6, 3, 1))


def test_zero_dimensional():
    assert f_to_h(OffsetVec(-1, (1,)), 0) == OffsetVec(0, (1,))
    assert h_to_f(OffsetVec(0, (1,)), 0) == OffsetVec(-1, (1,))


def test_h_to_f_cyclic_example():
    assert h_to_f(OffsetVec(0, (1, 3, 6, 6, 3, 1)), 5).entries == (1, 8, 28, 52, 50, 20)


def test_f_to_h_flags_non_polytopal_input():
    with pytest.warns(NonPolytopalWarning):
        h = f_to_h(OffsetVec(-1, (1, 1, 5)), 2)
    assert h.allow_negative
    assert min(h) < 0
    # the flagged vector still inverts exactly
    assert h_to_f(h, 2).entries == (1, 1, 5)


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        f_to_h(OffsetVec(-1, (1, 2)), 3)
    with pytest.raises(ValueError):
        h_to_f(OffsetVec(0, (1, 2)), 3)


@given(st.integers(min_value=0, max_value=15), st.data())
def test_roundtrip_and_stanley(d, data):
    h = OffsetVec(0, data.draw(st.lists(st.integers(0, 10**12), min_size=d + 1, max_size=d + 1)))
    f = h_to_f(h, d)
    assert f_to_h(f, d) == h
    assert f == apply_f(h)


def test_h_to_f_then_back_on_f_side():
    rng = random.Random(2)
    for d in range(0, 16):
        for _ in range(20):
            f = OffsetVec(-1, [1] + [rng.randint(0, 10**6) for _ in range(d)])
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", NonPolytopalWarning)
                h = f_to_h(f, d)
            assert h_to_f(h, d).entries == f.entries


def test_lemma_seq_examples():
    assert lemma_seq(4, 2, 3).entries == (1, 7, 16)
    assert lemma_seq(9, 5, 1).entries == (1,)
    assert is_log_concave(lemma_seq(6, 3, 8)).holds


def test_lemma_seq_trailing_zeros():
    s = lemma_seq(3, 1, 8)
    assert s.entries[5:] == (0, 0, 0)
    assert is_log_concave(s).holds


@pytest.mark.parametrize("args", [(0, 1, 1), (1, 0, 1), (1, 1, 0)])
def test_lemma_seq_rejects(args):
    with pytest.raises(ValueError):
        lemma_seq(*args)


def test_lemma_spot_values():
    # C(7,k) + 3*C(5,k-1), k = 0..7
    assert lemma_seq(6, 3, 8).entries == (1, 10, 36, 65, 65, 36, 10, 1)
