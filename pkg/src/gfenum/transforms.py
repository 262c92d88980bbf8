"""Euler transform, inverse product peeling, and a multiset-counting oracle.

The Euler transform maps nonnegative graded exponents {e_m} to the series
prod_m (1 - y**m)**(-e_m), whose coefficients count multisets of graded
objects.  Peeling inverts a product representation degree by degree: the
residual coefficient at a monomial reveals that monomial's exponent, the
factor is divided out, and the walk moves on.  Two sign conventions are
supported, a product of inverse factors and a plain product.

Exponent families are plain mappings, ``{degree: exponent}`` for one
grading and ``{(j, d): exponent}`` for two; absent indices mean zero.

Everything stays in integer arithmetic: the (1 - y**m)**n factors are
expanded with binomial coefficients rather than via log/exp, so no
rational intermediates appear and a fractional residual exponent is a
detectable error, never a rounding artefact.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Mapping

from .series import BiSeries, Coeff, UniSeries, _norm

PRODUCT_OF_INVERSES = "product_of_inverses"
PRODUCT_PLAIN = "product_plain"
_FORMS = (PRODUCT_OF_INVERSES, PRODUCT_PLAIN)


class NonUnitConstant(ValueError):
    """A peeled series must have constant term exactly 1."""


class NonIntegerExponent(ArithmeticError):
    """The input series is not an exact product of the expected form."""


class NegativeExponent(ValueError):
    """Euler expansion is defined for nonnegative exponents only."""


def _check_form(form: str) -> None:
    if form not in _FORMS:
        raise ValueError(f"form must be one of {_FORMS}, got {form!r}")


def _expanded_factor(n: int, tmax: int) -> list[int]:
    """Coefficients c_t of (1 - u)**n = sum_t c_t u**t, t = 0 .. tmax."""
    out = []
    for t in range(tmax + 1):
        if n >= 0:
            if t > n:
                break
            out.append(comb(n, t) * (-1 if t % 2 else 1))
        else:
            out.append(comb(-n - 1 + t, t))
    return out


def _one_minus_pow(step: int, n: int, trunc: int) -> dict[int, int]:
    """Coefficients of (1 - y**step)**n through degree trunc, any integer n."""
    return {t * step: c for t, c in enumerate(_expanded_factor(n, trunc // step))}


def euler_expand(exponents: Mapping[int, int], min_degree: int, trunc_order: int) -> UniSeries:
    """Expand prod_{m >= min_degree} (1 - y**m)**(-e_m) through trunc_order."""
    if min_degree < 1:
        raise ValueError("min_degree must be >= 1")
    result = UniSeries.one(trunc_order)
    for m in sorted(exponents):
        e = exponents[m]
        if e < 0:
            raise NegativeExponent(f"exponent {e} at degree {m}")
        if e == 0 or m < min_degree or m > trunc_order:
            continue
        result = result * UniSeries.from_terms(trunc_order, _one_minus_pow(m, -e, trunc_order))
    return result


def expand_exponents_uni(exponents: Mapping[int, int], trunc_order: int, form: str) -> UniSeries:
    """Re-expand a peeled exponent family, in either sign convention."""
    _check_form(form)
    sign = -1 if form == PRODUCT_OF_INVERSES else 1
    result = UniSeries.one(trunc_order)
    for m in sorted(exponents):
        e = exponents[m]
        if e == 0 or m > trunc_order:
            continue
        result = result * UniSeries.from_terms(
            trunc_order, _one_minus_pow(m, sign * e, trunc_order)
        )
    return result


def expand_exponents_bi(
    exponents: Mapping[tuple[int, int], int],
    weight_x: int,
    weight_y: int,
    max_weight: int,
    form: str,
) -> BiSeries:
    """Re-expand a bivariate exponent family over monomials x**j * y**d."""
    _check_form(form)
    sign = -1 if form == PRODUCT_OF_INVERSES else 1
    result = BiSeries.one(weight_x, weight_y, max_weight)
    order = sorted(exponents, key=lambda jd: (weight_x * jd[0] + weight_y * jd[1], jd[1]))
    for j, d in order:
        e = exponents[(j, d)]
        step = weight_x * j + weight_y * d
        if e == 0 or step > max_weight or step == 0:
            continue
        terms = {
            (t * j, t * d): c
            for t, c in enumerate(_expanded_factor(sign * e, max_weight // step))
        }
        result = result * BiSeries.from_terms(weight_x, weight_y, max_weight, terms)
    return result


def _require_int(value: Coeff) -> int:
    if isinstance(value, Fraction):
        raise NonIntegerExponent(f"residual exponent {value} is not an integer")
    return value


def _mul_inplace_uni(residual: list[Coeff], factor: Mapping[int, int]) -> None:
    # factor has constant term 1 and positive-degree shifts only, so a
    # descending sweep can update in place.
    shifts = sorted(d for d in factor if d > 0)
    for n in range(len(residual) - 1, 0, -1):
        acc = residual[n]
        for d in shifts:
            if d > n:
                break
            c = factor[d]
            if c != 0 and residual[n - d] != 0:
                acc += c * residual[n - d]
        residual[n] = _norm(acc)


def peel_uni(series: UniSeries, form: str) -> dict[int, int]:
    """Recover {e_m} with prod_m (1 - y**m)**(sign * e_m) == series.

    Degrees are processed in increasing order; each factor first perturbs
    exactly its own monomial, so the residual coefficient of y**m is the
    exponent (up to the sign convention).  Raises NonUnitConstant unless
    the constant term is 1, and NonIntegerExponent if a residual exponent
    is fractional, which falsifies the product form.
    """
    _check_form(form)
    if series[0] != 1:
        raise NonUnitConstant(f"constant term is {series[0]}, expected 1")
    residual: list[Coeff] = list(series.coeffs)
    exponents: dict[int, int] = {}
    for m in range(1, series.trunc_order + 1):
        c = residual[m]
        e = _require_int(c if form == PRODUCT_OF_INVERSES else -c)
        if e == 0:
            continue
        exponents[m] = e
        divisor_power = e if form == PRODUCT_OF_INVERSES else -e
        _mul_inplace_uni(residual, _one_minus_pow(m, divisor_power, series.trunc_order))
    return exponents


def peel_bi(series: BiSeries, form: str = PRODUCT_PLAIN) -> dict[tuple[int, int], int]:
    """Recover {(j, d): e} with prod (1 - x**j * y**d)**(sign * e) == series.

    Only monomials with positive y-degree are peeled, in increasing total
    weight with ties broken by increasing d.  After the walk the residual
    must be exactly 1; a leftover pure-x term means the input was not a
    product of the expected form and raises NonIntegerExponent.
    """
    _check_form(form)
    if series[(0, 0)] != 1:
        raise NonUnitConstant(f"constant term is {series[(0, 0)]}, expected 1")
    wx, wy, w = series.weight_x, series.weight_y, series.max_weight
    rows: list[list[Coeff]] = [list(row) for row in series.coeffs]
    monomials = sorted(
        (wx * j + wy * d, d, j)
        for j in range(len(rows))
        for d in range(1, len(rows[j]))
    )
    exponents: dict[tuple[int, int], int] = {}
    for weight, d, j in monomials:
        c = rows[j][d]
        e = _require_int(c if form == PRODUCT_OF_INVERSES else -c)
        if e == 0:
            continue
        exponents[(j, d)] = e
        divisor_power = e if form == PRODUCT_OF_INVERSES else -e
        factor = _expanded_factor(divisor_power, w // weight)
        _mul_inplace_bi(rows, j, d, factor)
    for j in range(1, len(rows)):
        if rows[j][0] != 0:
            raise NonIntegerExponent(
                f"residual x**{j} coefficient {rows[j][0]}; the input is not an "
                "exact product over positive-depth monomials"
            )
    return exponents


def _mul_inplace_bi(rows: list[list[Coeff]], bj: int, bd: int, factor: list[int]) -> None:
    # factor[0] == 1; shifts are positive multiples of (bj, bd), so a
    # descending sweep over the triangle can update in place.
    for j in range(len(rows) - 1, -1, -1):
        row = rows[j]
        for k in range(len(row) - 1, -1, -1):
            acc = row[k]
            for t in range(1, len(factor)):
                jj, kk = j - t * bj, k - t * bd
                if jj < 0 or kk < 0:
                    break
                c = factor[t]
                if c != 0 and rows[jj][kk] != 0:
                    acc += c * rows[jj][kk]
            row[k] = _norm(acc)


def multiset_oracle(exponents: Mapping[int, int], min_degree: int, target: int) -> int:
    """Count multisets of graded objects with total degree == target.

    There are e_m distinct objects of degree m.  The count is obtained by
    direct recursive enumeration over (object, multiplicity) choices, with
    no series arithmetic at all, so it is an independent cross-check of
    `euler_expand`.
    """
    if target < 0:
        raise ValueError("target degree must be >= 0")
    objects: list[int] = []
    for m in sorted(exponents, reverse=True):
        if min_degree <= m <= target:
            objects.extend([m] * max(exponents[m], 0))

    def count(idx: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        if idx == len(objects):
            return 0
        degree = objects[idx]
        total = 0
        for copies in range(remaining // degree + 1):
            total += count(idx + 1, remaining - copies * degree)
        return total

    return count(0, target)
