from fractions import Fraction

import pytest

from gfenum.mzv import (
    DEPTH_DIAGONAL_CHECKED_MAX,
    CrossCheckError,
    MzvCounts,
    _cross_check_diagonals,
    build_eul_rhs,
    build_mzv_rhs,
    mzv_counts,
)
from gfenum.series import BiSeries, IndexOutOfRange, UniSeries
from gfenum.transforms import (
    PRODUCT_PLAIN,
    NonIntegerExponent,
    expand_exponents_bi,
    peel_bi,
    peel_uni,
)

from literals import DEPTH_DIAGONAL_7


class TestGenerators:
    def test_zeta_rhs_slice_at_x_zero(self):
        rhs = build_mzv_rhs(23)
        assert rhs.slice_x(0) == UniSeries.from_terms(7, {0: 1, 1: -1, 4: -1})

    def test_zeta_rhs_low_terms(self):
        rhs = build_mzv_rhs(18)
        assert rhs[(0, 0)] == 1
        assert rhs[(0, 1)] == -1

    def test_euler_rhs_structure(self):
        rhs = build_eul_rhs(24)
        for j in range(rhs.j_limit + 1):
            if 2 * j + 3 <= 24:
                assert rhs[(j, 1)] == -1
        for j, k, _ in rhs.nonzero_terms():
            assert k <= 1


class TestCounts:
    def test_deep_confirmed_value(self):
        assert mzv_counts(23).mzv_count(23, 7) == 4

    def test_weight_twelve_split(self):
        counts = mzv_counts(23)
        assert counts.mzv_count(12, 4) == 1
        assert counts.euler_count(12, 4) == 0
        # the depth-4 irreducible is traded for an extra depth-2 Euler sum
        assert counts.mzv_count(12, 2) == 1
        assert counts.euler_count(12, 2) == 2

    def test_tables_agree_through_weight_eleven(self):
        counts = mzv_counts(23)
        for w, d in counts.grid():
            if w <= 11:
                assert counts.mzv_count(w, d) == counts.euler_count(w, d)
        differing = sorted(w for w, d in counts.grid()
                           if counts.mzv_count(w, d) != counts.euler_count(w, d))
        assert differing[0] == 12

    def test_depth_one_counts(self):
        counts = mzv_counts(23)
        assert [counts.mzv_count(w, 1) for w in range(3, 22, 2)] == [1] * 10
        assert [counts.euler_count(w, 1) for w in range(3, 22, 2)] == [1] * 10

    def test_off_grid_lookups(self):
        counts = mzv_counts(23)
        assert counts.mzv_count(10, 3) == 0  # parity excludes (10, 3)
        assert counts.mzv_count(5, 2) == 0  # below minimum weight 3d
        with pytest.raises(IndexOutOfRange):
            counts.mzv_count(24, 1)

    def test_reexpansion_reproduces_both_generators(self):
        counts = mzv_counts(23)
        for table, rhs in ((counts.mzv, build_mzv_rhs(23)), (counts.euler, build_eul_rhs(23))):
            exponents = {((w - 3 * d) // 2, d): e for (w, d), e in table.items() if e}
            assert expand_exponents_bi(exponents, 2, 3, 23, PRODUCT_PLAIN) == rhs


class TestDepthDiagonal:
    def test_matches_the_univariate_peel(self):
        counts = mzv_counts(36)
        quadrinacci = UniSeries.from_terms(12, {0: 1, 1: -1, 4: -1})
        exponents = peel_uni(quadrinacci, PRODUCT_PLAIN)
        for d in range(1, 13):
            assert counts.mzv_count(3 * d, d) == exponents.get(d, 0)

    def test_checked_range_values(self):
        counts = mzv_counts(21)
        assert [counts.mzv_count(3 * d, d) for d in range(1, 8)] == DEPTH_DIAGONAL_7
        assert DEPTH_DIAGONAL_CHECKED_MAX == 7

    def test_slice_peel_equals_diagonal(self):
        rhs = build_mzv_rhs(36)
        exponents = peel_uni(rhs.slice_x(0), PRODUCT_PLAIN)
        counts = mzv_counts(36)
        for d in range(1, 13):
            assert exponents.get(d, 0) == counts.mzv_count(3 * d, d)


class TestConsistencyGuards:
    def test_cross_check_rejects_a_corrupted_table(self):
        counts = mzv_counts(12)
        broken = dict(counts.mzv)
        broken[(5, 1)] = 7
        with pytest.raises(CrossCheckError):
            _cross_check_diagonals(MzvCounts(12, broken, counts.euler))

    def test_fractional_input_propagates(self):
        series = BiSeries.from_terms(2, 3, 9, {(0, 0): 1, (0, 1): Fraction(1, 2)})
        with pytest.raises(NonIntegerExponent):
            peel_bi(series, PRODUCT_PLAIN)
