"""Growth rate of the primitive counts.

The only module that touches floating point: everything upstream is exact
integer or rational arithmetic, and rounding enters exactly where decimal
answers are reported.

The primitive gap series has a simple pole at y = 1/r inside the unit
disk, where r is the real root of r**4 = r**3 + 1 in (1, 2).  The ratio
P_m / r**m therefore tends to a finite constant, computed here two ways:
analytically from the closed rational form, and by extrapolating exact
series partial sums toward the pole.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .generators import p_closed_form, primitive_counts


def _quartic(r: float) -> float:
    return r ** 4 - r ** 3 - 1.0


@lru_cache(maxsize=None)
def growth_root() -> float:
    """The real root of r**4 - r**3 - 1 in (1, 2).

    Bisection brackets the root, Newton steps polish it to |f(r)| below
    1e-14 (in practice to machine precision).
    """
    lo, hi = 1.0, 2.0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if _quartic(mid) >= 0.0:
            hi = mid
        else:
            lo = mid
    r = 0.5 * (lo + hi)
    for _ in range(4):
        r -= _quartic(r) / (4.0 * r ** 3 - 3.0 * r ** 2)
    return r


@lru_cache(maxsize=None)
def growth_constant() -> float:
    """lim_m P_m / r**m, as the residue-style limit of (1 - r*y) times the gap series.

    At y = 1/r only the 1 - y - y**4 factor of the closed form vanishes;
    its limit against 1 - r*y is r**4 / (r**3 + 4) by first-order expansion,
    which avoids the catastrophic cancellation of evaluating next to the pole.
    """
    r = growth_root()
    y = 1.0 / r
    numerator = y ** 4 - y ** 8 - y ** 10 - y ** 12 - y ** 17
    plain_factors = (1.0 - y) * (1.0 - y ** 2) * (1.0 - y ** 3) * (1.0 - y ** 6)
    vanishing_limit = r ** 4 / (r ** 3 + 4.0)
    return numerator * vanishing_limit / plain_factors


def _gap_coefficients(count: int) -> list[int]:
    """Integer coefficients of the primitive gap series through degree count.

    Runs the linear recurrence induced by the closed form's denominator,
    so large truncations cost O(count) integer operations.
    """
    gf = p_closed_form()
    den = {0: 1}
    for factor in gf.denominator_factors:
        new: dict[int, int] = {}
        for d1, c1 in den.items():
            for d2, c2 in dict(factor).items():
                new[d1 + d2] = new.get(d1 + d2, 0) + c1 * c2
        den = new
    num = dict(gf.numerator)
    coeffs = [0] * (count + 1)
    for n in range(count + 1):
        acc = num.get(n, 0)
        for d, c in den.items():
            if 0 < d <= n:
                acc -= c * coeffs[n - d]
        coeffs[n] = acc
    return coeffs


def _scaled_floats(coeffs: list[int], scale: float) -> list[float]:
    """c_m * scale**m as floats, via exponent bookkeeping.

    The raw coefficients overflow float far before the truncations used
    here, but c_m * scale**m stays bounded when scale * r < 1, so each
    term is assembled from a 64-bit mantissa and a power-of-two exponent.
    """
    log2_scale = math.log2(scale)
    out = []
    for m, c in enumerate(coeffs):
        if c == 0:
            out.append(0.0)
            continue
        bits = c.bit_length()
        shift = max(0, bits - 64)
        mantissa = float(c >> shift)
        exponent = shift + m * log2_scale
        whole = math.floor(exponent)
        out.append(math.ldexp(mantissa * 2.0 ** (exponent - whole), whole))
    return out


def growth_constant_from_series(
    terms: int = 14000, max_offset: float = 0.08, node_ratio: float = 0.65, nodes: int = 10
) -> float:
    """The same limit, from exact partial sums extrapolated toward the pole.

    Evaluates (1 - r*y) times the degree-``terms`` partial sum at
    y = 1/r - t for a geometric ladder of offsets t and removes the Taylor
    error terms with Neville extrapolation to t = 0.  The extrapolated
    function is analytic there, so the ladder converges fast; ``terms``
    only has to make the series tail negligible at the smallest offset.
    Partial sums are evaluated by a Horner scheme rescaled so nothing
    overflows double precision.
    """
    r = growth_root()
    scale = 0.70  # any value below 1/r keeps the rescaled sweep bounded
    coeffs = _scaled_floats(_gap_coefficients(terms), scale)
    offsets = [max_offset * node_ratio ** i for i in range(nodes)]
    values = []
    for t in offsets:
        y = 1.0 / r - t
        growth = y / scale
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * growth + c
        values.append((1.0 - r * y) * acc)
    table = list(values)
    for level in range(1, nodes):
        for i in range(nodes - level):
            t_lo, t_hi = offsets[i], offsets[i + level]
            table[i] = (t_lo * table[i + 1] - t_hi * table[i]) / (t_lo - t_hi)
    return table[0]


def ratio_table(max_m: int) -> list[tuple[int, float]]:
    """(m, P_m / r**m) for m = 1 .. max_m, a convergence diagnostic."""
    if max_m < 2:
        raise ValueError("max_m must be >= 2")
    r = growth_root()
    counts = primitive_counts(max_m)
    return [(m, counts[m - 1] / r ** m) for m in range(1, max_m + 1)]


@dataclass(frozen=True)
class AsymptoticReport:
    """Growth root, limit constant and convergence diagnostics."""

    root: float
    constant: float
    quartic_residual: float
    reciprocal_residual: float
    ratios: tuple[tuple[int, float], ...]


def asymptotic_report(max_m: int = 40) -> AsymptoticReport:
    r = growth_root()
    return AsymptoticReport(
        root=r,
        constant=growth_constant(),
        quartic_residual=abs(_quartic(r)),
        reciprocal_residual=abs(1.0 - 1.0 / r - 1.0 / r ** 4),
        ratios=tuple(ratio_table(max_m)),
    )
