import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ewcodes.exactmat import (BoundMismatch, SignMatrix, block_l, block_x, det_exact,
                              ew_bounds, feasibility, identity, is_conference,
                              is_max_det_skew_type, is_skew_ew, is_skew_type, is_weighing,
                              ones, conference_possible)
from ewcodes.constructions import paley_conference
from oracles import det_cofactor, det_fraction, random_skew_type

IMPOSSIBLE = [10, 18, 22, 30, 34, 38, 46, 50, 54, 58, 66, 70, 74, 78, 82, 90]


def upper_ones_skew(n):
    K = np.where(np.arange(n)[:, None] < np.arange(n)[None, :], 1, -1)
    np.fill_diagonal(K, 1)
    return SignMatrix(K)


def test_sign_matrix_rejects_bad_entries():
    with pytest.raises(ValueError):
        SignMatrix([[1, 2], [0, 1]])
    with pytest.raises(ValueError):
        SignMatrix([[1, 1, 1]])


def test_sign_matrix_is_immutable(ew6):
    with pytest.raises(ValueError):
        ew6.a[0, 0] = -1


# -- determinants ----------------------------------------------------------

def test_det_identity():
    assert det_exact(identity(4)) == 1


def test_det_catalog(ew6, ew14):
    assert det_exact(ew6) == 160 == det_cofactor(ew6.a)
    assert det_exact(ew6.a - identity(6)) == 81 == det_cofactor(ew6.a - identity(6))
    # Fraction elimination as the independent route at order 14
    assert det_exact(ew14) == 77_635_584 == abs(det_fraction(ew14.a))
    assert det_exact(ew14.a - identity(14)) == 44_289_025 == abs(det_fraction(ew14.a - identity(14)))
    assert 77_635_584 == 26 * 12**6 and 44_289_025 == 25 * 11**6


def test_det_singular():
    assert det_exact(ones(5)) == 0
    assert det_exact(np.zeros((3, 3), dtype=int)) == 0


def test_det_matches_cofactor_on_seeded_sample():
    rng = np.random.default_rng(7)
    for _ in range(100):
        n = int(rng.integers(1, 8))
        a = rng.integers(-1, 2, size=(n, n))
        assert det_exact(a) == abs(det_cofactor(a))


@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.sampled_from([-1, 0, 1]), min_size=n, max_size=n),
                       min_size=n, max_size=n)))
def test_det_matches_cofactor_hypothesis(rows):
    assert det_exact(rows) == abs(det_cofactor(rows))


def test_det_beyond_int64():
    # |det (n-1)I + J| grows past 2^63 quickly; exact ints must survive it
    n = 30
    a = (n - 1) * identity(n) + ones(n)
    assert det_exact(a) == (2 * n - 1) * (n - 1) ** (n - 1)


# -- bounds ----------------------------------------------------------------

def test_ew_bounds_values():
    b = ew_bounds(6)
    assert b == (160, 81, 125)  # (n-1)^(n/2) = 5^3
    assert b.zero_diag_skew == 9 * 3**2
    assert ew_bounds(14).zero_diag_skew == 44_289_025
    assert ew_bounds(4).pm1_skew_type == 12


@pytest.mark.parametrize("n", [3, 2, 0, 7])
def test_ew_bounds_rejects(n):
    with pytest.raises(ValueError):
        ew_bounds(n)


@pytest.mark.parametrize("n", range(6, 51, 4))
def test_bound_ordering(n):
    b = ew_bounds(n)
    for k in range(1, n - 1):
        assert k ** (n // 2) <= b.zero_diag_skew <= b.conference


# -- predicates ------------------------------------------------------------

def test_is_weighing():
    assert is_weighing(paley_conference(5), 5)
    assert not any(is_weighing(ones(4), k) for k in range(5))
    assert is_weighing(identity(3), 1)


def test_is_conference(c6, ew6):
    assert is_conference(c6)
    assert not is_conference(ew6)


def test_is_skew_type(ew6):
    assert is_skew_type(ew6)
    assert is_skew_type(ew6.T)
    z = ew6.a.copy()
    z[0, 1] = 0
    assert not is_skew_type(z)
    assert not is_skew_type(ones(3))


def test_is_skew_ew(ew6, ew14, c6):
    assert is_skew_ew(ew6)
    assert is_skew_ew(ew14)
    assert not is_skew_ew(c6.a + identity(6))
    assert not is_skew_ew(upper_ones_skew(6))


def test_gram_block_form(ew6, ew14):
    for H in (ew6, ew14):
        n = H.n
        S = H.a - identity(n)
        assert (S @ S.T == block_l(n)).all()
        assert (S.T @ S == block_l(n)).all()
        assert (H.a @ H.a.T == block_l(n) + identity(n)).all()


def test_commuting_lemmas(ew6, ew14):
    for H in (ew6, ew14):
        n = H.n
        S = H.a - identity(n)
        X = block_x(n)
        assert (S @ X == X @ S).all()
        assert not (X @ S.T + S @ X).any()


def test_max_det_skew_type(ew6, ew14):
    assert is_max_det_skew_type(ew6)
    assert is_max_det_skew_type(ew14)
    K = upper_ones_skew(6)
    assert det_cofactor(K.a) == 32 < 160
    assert not is_max_det_skew_type(K)


def test_max_det_requires_skew_type(c6):
    with pytest.raises(ValueError):
        is_max_det_skew_type(c6)


def test_skew_ew_implies_max_det(ew6, ew14):
    for H in (ew6, ew14):
        assert is_skew_ew(H) and is_max_det_skew_type(H)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([4, 6, 8]), st.integers(0, 2**32 - 1))
def test_determinant_equivalence_random(n, seed):
    # either both bounds are met or neither; BoundMismatch would mean otherwise
    K = random_skew_type(n, np.random.default_rng(seed))
    try:
        is_max_det_skew_type(K)
    except BoundMismatch:  # pragma: no cover
        pytest.fail("det K and det(K - I) disagree")


# -- feasibility -----------------------------------------------------------

def test_feasibility_examples():
    r = feasibility(6)
    assert r.skew_ew_possible and r.two_n_minus_3_square == 3 and r.sum_two_squares == 1
    r = feasibility(18)
    assert not r.skew_ew_possible and r.n_minus_1_two_squares == (1, 4)
    r = feasibility(86)
    assert r.skew_ew_possible and r.two_n_minus_3_square == 13


def test_feasibility_impossible_list():
    assert not any(feasibility(n).skew_ew_possible for n in IMPOSSIBLE)


def test_feasibility_possible_set():
    # brute-force square test, independent of feasibility()
    brute = {n for n in range(6, 91) if n % 4 == 2
             and any(x * x == 2 * n - 3 for x in range(2 * n))}
    assert brute == {6, 14, 26, 42, 62, 86}
    assert {n for n in range(6, 91) if feasibility(n).skew_ew_possible} == brute


@given(st.integers(2, 5000))
def test_feasibility_report_invariants(n):
    r = feasibility(n)
    if r.two_n_minus_3_square is not None:
        x = r.two_n_minus_3_square
        assert x >= 0 and x * x == 2 * n - 3
        t = r.sum_two_squares
        assert t is not None and t * t + (t + 1) ** 2 == n - 1
        # a square forces n = 2 mod 4
        assert n % 4 == 2
    assert r.skew_ew_possible == (n % 4 == 2 and r.two_n_minus_3_square is not None)


def test_conference_feasibility():
    for n in (22, 34, 58, 70, 78, 94):
        assert not conference_possible(n)
    for n in (6, 10, 14, 18, 26, 66, 86):
        assert conference_possible(n)
