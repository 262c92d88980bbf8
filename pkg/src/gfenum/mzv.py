"""Counts of irreducible multiple zeta values and alternating Euler sums.

Both families carry a weight/depth bigrading (w, d).  The counts appear
as exponents of an infinite product over monomials x**j * y**d with
w = 2j + 3d, so the series substrate uses variable weights (2, 3) and
truncating by total weight keeps every count with w <= max_weight exact.

The depth diagonal w = 3d of the zeta-value table is generated by
1/(1 - y - y**4), the relation catalogued as A020999.  Independent checks
of that diagonal stop at depth 7; deeper entries are a consistent
extension of the same generator and are flagged as such in tabulated
output.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .generators import g_series
from .series import BiSeries, IndexOutOfRange
from .transforms import PRODUCT_PLAIN, peel_bi

DEPTH_DIAGONAL_CHECKED_MAX = 7


class CrossCheckError(ArithmeticError):
    """An embedded consistency check failed: the generator transcription is broken."""


@lru_cache(maxsize=None)
def build_mzv_rhs(max_weight: int) -> BiSeries:
    """The product side of the zeta-value count generator.

        1 - y/(1 - x) - (y**2/(1 - x**2)) * ((y**2 - x**3)/(1 - x**3))

    as an exact weight-(2, 3) series through max_weight.
    """
    w = max_weight
    one = BiSeries.one(2, 3, w)
    y = BiSeries.from_terms(2, 3, w, {(0, 1): 1})
    inv_1mx = BiSeries.from_terms(2, 3, w, {(0, 0): 1, (1, 0): -1}).inverse()
    inv_1mx2 = BiSeries.from_terms(2, 3, w, {(0, 0): 1, (2, 0): -1}).inverse()
    inv_1mx3 = BiSeries.from_terms(2, 3, w, {(0, 0): 1, (3, 0): -1}).inverse()
    y2_minus_x3 = BiSeries.from_terms(2, 3, w, {(0, 2): 1, (3, 0): -1})
    return one - y * inv_1mx - y * y * inv_1mx2 * y2_minus_x3 * inv_1mx3


@lru_cache(maxsize=None)
def build_eul_rhs(max_weight: int) -> BiSeries:
    """The product side of the Euler-sum count generator, 1 - y/(1 - x)."""
    w = max_weight
    one = BiSeries.one(2, 3, w)
    y = BiSeries.from_terms(2, 3, w, {(0, 1): 1})
    inv_1mx = BiSeries.from_terms(2, 3, w, {(0, 0): 1, (1, 0): -1}).inverse()
    return one - y * inv_1mx


@dataclass(frozen=True)
class MzvCounts:
    """Irreducible counts by (weight, depth), for the full grid w <= max_weight.

    ``mzv`` holds the zeta-value counts, ``euler`` the alternating-sum
    counts.  Zero entries are stored too: a vanishing count is data (the
    two tables first disagree at (12, 4), where the zeta count is 1 and
    the Euler-sum count is 0).
    """

    max_weight: int
    mzv: Mapping[tuple[int, int], int]
    euler: Mapping[tuple[int, int], int]

    def grid(self) -> list[tuple[int, int]]:
        """All (w, d) points with d >= 1 and w = 2j + 3d <= max_weight."""
        points = [
            (2 * j + 3 * d, d)
            for d in range(1, self.max_weight // 3 + 1)
            for j in range((self.max_weight - 3 * d) // 2 + 1)
        ]
        return sorted(points)

    def _lookup(self, table: Mapping[tuple[int, int], int], w: int, d: int) -> int:
        if w > self.max_weight:
            raise IndexOutOfRange(f"weight {w} exceeds the computed bound {self.max_weight}")
        if d < 1 or w < 3 * d or (w - 3 * d) % 2:
            return 0
        return table[(w, d)]

    def mzv_count(self, w: int, d: int) -> int:
        return self._lookup(self.mzv, w, d)

    def euler_count(self, w: int, d: int) -> int:
        return self._lookup(self.euler, w, d)


@lru_cache(maxsize=None)
def mzv_counts(max_weight: int) -> MzvCounts:
    """Peel both generators and return the (w, d) count tables.

    A weight of at least 23 reaches the depth-7 weight-23 zeta count that
    anchors the deep end of the table.  Embedded cross-checks compare the
    shallow-depth diagonals against their pseudopolynomial forms and raise
    CrossCheckError on any mismatch.
    """
    exps_mzv = peel_bi(build_mzv_rhs(max_weight), PRODUCT_PLAIN)
    exps_eul = peel_bi(build_eul_rhs(max_weight), PRODUCT_PLAIN)
    counts = MzvCounts(
        max_weight,
        _to_weight_depth(exps_mzv, max_weight),
        _to_weight_depth(exps_eul, max_weight),
    )
    _cross_check_diagonals(counts)
    return counts


def _to_weight_depth(
    exponents: Mapping[tuple[int, int], int], max_weight: int
) -> dict[tuple[int, int], int]:
    table = {}
    for d in range(1, max_weight // 3 + 1):
        for j in range((max_weight - 3 * d) // 2 + 1):
            table[(2 * j + 3 * d, d)] = exponents.get((j, d), 0)
    return table


def _cross_check_diagonals(counts: MzvCounts) -> None:
    w = counts.max_weight
    # depth 1: every odd weight from 3 up contributes exactly one count,
    # matching the geometric series 1/(1 - x)
    expect = g_series(0, max(0, (w - 3) // 2))
    for j in range(expect.trunc_order + 1):
        if counts.mzv_count(3 + 2 * j, 1) != expect[j]:
            raise CrossCheckError(f"depth-1 count at weight {3 + 2 * j} is off")
    # depth 2 starts at weight 8 and follows 1/((1 - x)(1 - x**3))
    if w >= 8:
        expect = g_series(1, (w - 8) // 2)
        for j in range(expect.trunc_order + 1):
            if counts.mzv_count(8 + 2 * j, 2) != expect[j]:
                raise CrossCheckError(f"depth-2 count at weight {8 + 2 * j} is off")
    if w >= 6 and counts.mzv_count(6, 2) != 0:
        raise CrossCheckError("depth-2 count at weight 6 should vanish")
    # depth 3: the differences against depth 2 follow the next diagonal fit
    if w >= 13:
        expect = g_series(2, (w - 13) // 2)
        for j in range(1, expect.trunc_order + 2):
            if 11 + 2 * j > w or 8 + 2 * j > w:
                break
            diff = counts.mzv_count(11 + 2 * j, 3) - counts.mzv_count(8 + 2 * j, 2)
            if diff != expect[j - 1]:
                raise CrossCheckError(f"depth-3 offset at weight {11 + 2 * j} is off")
    if w >= 11 and counts.mzv_count(11, 3) != counts.mzv_count(8, 2):
        raise CrossCheckError("depth-3 count at weight 11 should match depth 2 at weight 8")
