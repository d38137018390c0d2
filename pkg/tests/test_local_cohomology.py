"""Graded local cohomology pieces, Hilbert series, generic coefficients,
multiplication matrices, and the kernel-dimension formula against brute force."""

import pytest

from facering.linalg import GF, QQ, rank
from facering.local_cohomology import (
    HilbertSeries,
    all_minors_nonsingular,
    binom0,
    graded_piece,
    kernel_dim_bruteforce,
    kernel_dim_formula,
    lc_coarse_dim,
    lc_fine_dim,
    lc_hilbert_series,
    make_generic,
    pole_order,
    restricted_theta_rank,
    support,
    theta_action_matrix,
    vandermonde_coefficients,
)


# ---------------------------------------------------------------------------
# fine and coarse dimensions
# ---------------------------------------------------------------------------

def test_fine_dims(cycle3, bowtie):
    assert lc_fine_dim(cycle3, 2, (0, 0, 0), QQ) == 1
    assert lc_fine_dim(cycle3, 2, (-1, 0, 0), QQ) == 1
    assert lc_fine_dim(bowtie, 2, (-1, -1, 0, 0, 0), QQ) == 0
    # off-complex support gives zero
    assert lc_fine_dim(cycle3, 2, (-1, -1, -1), QQ) == 0
    with pytest.raises(ValueError):
        lc_fine_dim(cycle3, 2, (1, 0, 0), QQ)


def test_coarse_dims(cycle3):
    assert lc_coarse_dim(cycle3, 2, -1, QQ) == 3
    assert lc_coarse_dim(cycle3, 2, -2, QQ) == 6
    assert lc_coarse_dim(cycle3, 1, -1, QQ) == 0
    assert lc_coarse_dim(cycle3, 2, 0, QQ) == 1
    with pytest.raises(ValueError):
        lc_coarse_dim(cycle3, 2, 1, QQ)


def test_support_helper():
    assert support((0, -2, 1)) == frozenset({2, 3})
    assert support((0, 0)) == frozenset()


def test_binom0_convention():
    assert binom0(3, -1) == 0
    assert binom0(2, 3) == 0
    assert binom0(4, 2) == 6
    assert binom0(0, 0) == 1


# ---------------------------------------------------------------------------
# Hilbert series
# ---------------------------------------------------------------------------

def test_series_cycle3(cycle3):
    s = lc_hilbert_series(cycle3, 2, QQ)
    assert s.to_json() == {"numerator": [1, 1, 1], "denom_power": 2}
    assert s.pole_order == 2
    assert [s.coefficient(j) for j in range(5)] == [1, 3, 6, 9, 12]
    zero = lc_hilbert_series(cycle3, 1, QQ)
    assert zero.is_zero() and zero.pole_order == 0


def test_series_bowtie(bowtie):
    assert lc_hilbert_series(bowtie, 2, QQ).pole_order == 1
    s3 = lc_hilbert_series(bowtie, 3, QQ)
    assert s3.pole_order == 3
    assert s3.to_json() == {"numerator": [0, 0, 0, 2], "denom_power": 3}


def test_series_pair_edges(pair_edges):
    s = lc_hilbert_series(pair_edges, 1, QQ)
    assert s.to_json() == {"numerator": [1], "denom_power": 0}
    assert s.pole_order == 0


def test_pole_order_cancellation():
    # (1 - t)(1 + t) / (1 - t)^3 has a pole of order 2
    s = HilbertSeries((1, 0, -1), 3)
    assert pole_order(s) == 2
    assert HilbertSeries((), 0).pole_order == 0
    assert HilbertSeries((0, 0), 2).pole_order == 0


def test_series_polynomial_part_coefficients():
    s = HilbertSeries((2, 5), 0, True)
    assert [s.coefficient(j) for j in range(4)] == [2, 5, 0, 0]


def test_series_json_roundtrip(complexes):
    for cx in complexes.values():
        for i in range(0, cx.d + 1):
            s = lc_hilbert_series(cx, i, QQ)
            assert HilbertSeries.from_json(s.to_json()).to_json() == s.to_json()


@pytest.mark.parametrize("field", [QQ, GF(2)])
def test_series_coefficients_match_coarse_dims(complexes, field):
    for cx in complexes.values():
        for i in range(0, cx.d + 1):
            s = lc_hilbert_series(cx, i, field)
            for j in range(0, 7):
                assert s.coefficient(j) == lc_coarse_dim(cx, i, -j, field)


# ---------------------------------------------------------------------------
# generic coefficients
# ---------------------------------------------------------------------------

def test_vandermonde_matrix():
    A = make_generic(5, 2, QQ)
    assert A.verified
    assert A.matrix.tolist() == [[1, 1], [1, 2], [1, 3], [1, 4], [1, 5]]
    assert A.column(1) == [1, 2, 3, 4, 5]


def test_vandermonde_minors_are_nonsingular():
    A = vandermonde_coefficients([1, 3, 7, 20], 3)
    assert all_minors_nonsingular(A.matrix)


def test_make_generic_prime_field_verified_and_seeded():
    A = make_generic(4, 2, GF(32003), seed=7)
    B = make_generic(4, 2, GF(32003), seed=7)
    C = make_generic(4, 2, GF(32003), seed=8)
    assert A.verified
    assert all_minors_nonsingular(A.matrix)
    assert A.matrix == B.matrix
    assert A.matrix != C.matrix


def test_make_generic_too_small_field_errors():
    with pytest.raises(ValueError):
        make_generic(6, 2, GF(2), seed=0)


def test_column_with_all_nonzero_entries():
    A = make_generic(3, 1, GF(32003), seed=1)
    assert all(x != 0 for x in A.column(0))


# ---------------------------------------------------------------------------
# multiplication action
# ---------------------------------------------------------------------------

def test_theta_action_shape_and_rank(cycle3):
    M = theta_action_matrix(cycle3, 2, 0, [1, 1, 1], QQ)
    assert (M.nrows, M.ncols) == (1, 3)
    assert rank(M) == 1


def test_theta_zero_coefficients_kill_blocks(cycle3):
    # with theta = e_3 only transitions lowering the third exponent survive
    M = theta_action_matrix(cycle3, 2, 1, [0, 0, 1], QQ)
    src = graded_piece(cycle3, 2, 2, QQ)
    dst = graded_piece(cycle3, 2, 1, QQ)
    for k, U in enumerate(src.vectors):
        col = M.column(src.offsets[k])
        if U[2] == 0:
            assert all(x == 0 for x in col)
    # identity block: U = (0,0,2) -> T = (0,0,1), same support
    ku = src.block_index((0, 0, 2))
    kt = dst.vectors.index((0, 0, 1))
    assert M.tolist()[dst.offsets[kt]][src.offsets[ku]] == 1


def test_graded_piece_dims_match_coarse(complexes):
    for cx in complexes.values():
        for ell in range(1, cx.d + 1):
            for r in range(0, 5):
                piece = graded_piece(cx, ell, r, QQ)
                assert piece.total_dim == lc_coarse_dim(cx, ell, -r, QQ)


@pytest.mark.parametrize("field", [QQ, GF(32003)])
def test_theta_actions_commute(complexes, field):
    # multiplication by two linear forms must agree in either order, which
    # exercises the compatibility of all the induced-map blocks
    for cx in complexes.values():
        coeffs = make_generic(cx.n, 2, field, seed=3)
        t1, t2 = coeffs.column(0), coeffs.column(1)
        for ell in range(1, cx.d + 1):
            for i in range(0, 3):
                first = theta_action_matrix(cx, ell, i, t1, field) @ theta_action_matrix(
                    cx, ell, i + 1, t2, field
                )
                second = theta_action_matrix(cx, ell, i, t2, field) @ theta_action_matrix(
                    cx, ell, i + 1, t1, field
                )
                assert first == second


# ---------------------------------------------------------------------------
# kernel dimensions: formula vs brute force (small cases; full sweep in acceptance)
# ---------------------------------------------------------------------------

def test_kernel_formula_examples(cycle3):
    assert [kernel_dim_formula(cycle3, 2, 1, i, QQ) for i in (1, 2, 3)] == [3, 3, 3]
    assert kernel_dim_formula(cycle3, 2, 0, 2, QQ) == 9
    with pytest.raises(ValueError):
        kernel_dim_formula(cycle3, 2, 3, 3, QQ)
    with pytest.raises(ValueError):
        kernel_dim_formula(cycle3, 2, 1, 0, QQ)
    with pytest.raises(ValueError):
        kernel_dim_formula(cycle3, 5, 0, 1, QQ)


def test_kernel_formula_at_m_equals_i_counts_top_blocks(complexes):
    # at i = m only faces of size m+1 contribute, each by its cohomology dim
    from facering.cohomology import relative_cohomology

    for cx in complexes.values():
        d = cx.d
        for ell in range(1, d + 1):
            for m in range(0, d):
                direct = sum(
                    relative_cohomology(cx, F, ell - 1, QQ).dim
                    for F in cx.faces()
                    if len(F) == m + 1
                )
                assert kernel_dim_formula(cx, ell, m, m, QQ) == direct


def test_bruteforce_m0_equals_piece_dim(cycle3):
    for i in range(4):
        assert kernel_dim_bruteforce(cycle3, 2, 0, i, None, QQ) == 3 + 3 * i


def test_bruteforce_default_coefficients(cycle3):
    # rationals fall back to the Vandermonde; prime fields must be explicit
    assert kernel_dim_bruteforce(cycle3, 2, 1, 2, None, QQ) == 3
    with pytest.raises(ValueError):
        kernel_dim_bruteforce(cycle3, 2, 1, 2, None, GF(32003))


@pytest.mark.parametrize("field", [QQ, GF(32003)])
def test_lemma_equality_small(cycle3, bowtie, pair_edges, field):
    for cx in (cycle3, bowtie, pair_edges):
        coeffs = make_generic(cx.n, 3, field, seed=13)
        for ell in range(1, cx.d + 1):
            for m in (0, 1, 2):
                for i in range(m, m + 3):
                    assert (
                        kernel_dim_bruteforce(cx, ell, m, i, coeffs, field)
                        == kernel_dim_formula(cx, ell, m, i, field)
                    )


def test_surjectivity_rank(cycle3, bowtie):
    for cx in (cycle3, bowtie):
        coeffs = make_generic(cx.n, 3, QQ)
        for ell in range(1, cx.d + 1):
            for m in (0, 1):
                for i in range(m + 1, m + 4):
                    got = restricted_theta_rank(cx, ell, m, i, coeffs, QQ)
                    assert got == kernel_dim_formula(cx, ell, m, i - 1, QQ)
