"""Exact truncated power series over the rationals.

A univariate series stores dense coefficients up to a declared truncation
order.  A bivariate series stores the triangle of monomials x**j * y**k
with j*weight_x + k*weight_y <= max_weight.  Reading outside the stored
region raises IndexOutOfRange instead of returning zero, so a stale or
too-short truncation fails loudly rather than producing silent zeros.

Coefficients are Python ints or fractions.Fraction, never floats; every
operation is exact.  Series values are immutable after construction and
an operation's result is valid exactly through the minimum truncation of
its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Coeff = int | Fraction


class ZeroConstantTerm(ZeroDivisionError):
    """Series inversion requires a nonzero constant term."""


class WeightMismatch(ValueError):
    """Bivariate operands carry incompatible variable weights."""


class IndexOutOfRange(IndexError):
    """Coefficient requested outside the declared truncation region."""


def _norm(value: Coeff) -> Coeff:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def _reciprocal(value: Coeff) -> Coeff:
    if value == 0:
        raise ZeroConstantTerm("constant term is zero, series is not invertible")
    return _norm(Fraction(1) / Fraction(value))


@dataclass(frozen=True)
class UniSeries:
    """Power series in one variable, exact through degree ``trunc_order``."""

    trunc_order: int
    coeffs: tuple[Coeff, ...]

    def __post_init__(self) -> None:
        if self.trunc_order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(self.coeffs) != self.trunc_order + 1:
            raise ValueError("need exactly trunc_order + 1 coefficients")
        object.__setattr__(self, "coeffs", tuple(_norm(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Coeff], trunc_order: int | None = None) -> UniSeries:
        """Series with the given low-order coefficients, zero-padded to fit.

        Coefficients beyond an explicit ``trunc_order`` are discarded: the
        result represents the input only through its truncation.
        """
        data = list(coeffs)
        if trunc_order is None:
            if not data:
                raise ValueError("empty coefficient list needs an explicit truncation order")
            trunc_order = len(data) - 1
        data = data[: trunc_order + 1]
        data += [0] * (trunc_order + 1 - len(data))
        return cls(trunc_order, tuple(data))

    @classmethod
    def from_terms(cls, trunc_order: int, terms: Mapping[int, Coeff]) -> UniSeries:
        """Series of a sparse polynomial; terms beyond the truncation are dropped."""
        data = [0] * (trunc_order + 1)
        for degree, coeff in terms.items():
            if degree < 0:
                raise ValueError("negative degrees are not representable")
            if degree <= trunc_order:
                data[degree] = coeff
        return cls(trunc_order, tuple(data))

    @classmethod
    def one(cls, trunc_order: int) -> UniSeries:
        return cls.from_terms(trunc_order, {0: 1})

    @classmethod
    def zero(cls, trunc_order: int) -> UniSeries:
        return cls.from_terms(trunc_order, {})

    def __getitem__(self, degree: int) -> Coeff:
        if not 0 <= degree <= self.trunc_order:
            raise IndexOutOfRange(
                f"degree {degree} is outside the truncation region [0, {self.trunc_order}]"
            )
        return self.coeffs[degree]

    def truncate(self, trunc_order: int) -> UniSeries:
        if trunc_order > self.trunc_order:
            raise IndexOutOfRange(
                f"cannot extend truncation {self.trunc_order} to {trunc_order}"
            )
        return UniSeries(trunc_order, self.coeffs[: trunc_order + 1])

    def __neg__(self) -> UniSeries:
        return UniSeries(self.trunc_order, tuple(-c for c in self.coeffs))

    def __add__(self, other: UniSeries) -> UniSeries:
        n = min(self.trunc_order, other.trunc_order)
        return UniSeries(n, tuple(self.coeffs[d] + other.coeffs[d] for d in range(n + 1)))

    def __sub__(self, other: UniSeries) -> UniSeries:
        return self + (-other)

    def __mul__(self, other: UniSeries | Coeff) -> UniSeries:
        if isinstance(other, (int, Fraction)):
            return UniSeries(self.trunc_order, tuple(c * other for c in self.coeffs))
        n = min(self.trunc_order, other.trunc_order)
        out: list[Coeff] = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return UniSeries(n, tuple(out))

    def __rmul__(self, other: Coeff) -> UniSeries:
        return self * other

    def inverse(self) -> UniSeries:
        """Multiplicative inverse through the truncation order.

        Raises ZeroConstantTerm when the constant term vanishes.
        """
        inv0 = _reciprocal(self.coeffs[0])
        out: list[Coeff] = [inv0] + [0] * self.trunc_order
        for n in range(1, self.trunc_order + 1):
            acc: Coeff = 0
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if a != 0:
                    acc += a * out[n - k]
            out[n] = _norm(-inv0 * acc)
        return UniSeries(self.trunc_order, tuple(out))

    def __truediv__(self, other: UniSeries) -> UniSeries:
        return self * other.inverse()


def _row_length(weight_x: int, weight_y: int, max_weight: int, j: int) -> int:
    return (max_weight - j * weight_x) // weight_y + 1


@dataclass(frozen=True)
class BiSeries:
    """Power series in two weighted variables, truncated by total weight.

    The coefficient of x**j * y**k is stored iff
    j*weight_x + k*weight_y <= max_weight; ``coeffs[j][k]`` indexes it.
    """

    weight_x: int
    weight_y: int
    max_weight: int
    coeffs: tuple[tuple[Coeff, ...], ...]

    def __post_init__(self) -> None:
        if self.weight_x < 1 or self.weight_y < 1:
            raise ValueError("variable weights must be positive integers")
        if self.max_weight < 0:
            raise ValueError("max_weight must be >= 0")
        jmax = self.max_weight // self.weight_x
        if len(self.coeffs) != jmax + 1:
            raise ValueError("row count does not match the weight bound")
        rows = []
        for j, row in enumerate(self.coeffs):
            width = _row_length(self.weight_x, self.weight_y, self.max_weight, j)
            if len(row) != width:
                raise ValueError(f"row {j} must hold exactly {width} coefficients")
            rows.append(tuple(_norm(c) for c in row))
        object.__setattr__(self, "coeffs", tuple(rows))

    @classmethod
    def from_terms(
        cls,
        weight_x: int,
        weight_y: int,
        max_weight: int,
        terms: Mapping[tuple[int, int], Coeff],
    ) -> BiSeries:
        """Series of a sparse polynomial; terms outside the triangle are dropped."""
        rows = _zero_rows(weight_x, weight_y, max_weight)
        for (j, k), coeff in terms.items():
            if j < 0 or k < 0:
                raise ValueError("negative exponents are not representable")
            if j * weight_x + k * weight_y <= max_weight:
                rows[j][k] = coeff
        return cls(weight_x, weight_y, max_weight, tuple(tuple(r) for r in rows))

    @classmethod
    def one(cls, weight_x: int, weight_y: int, max_weight: int) -> BiSeries:
        return cls.from_terms(weight_x, weight_y, max_weight, {(0, 0): 1})

    @classmethod
    def zero(cls, weight_x: int, weight_y: int, max_weight: int) -> BiSeries:
        return cls.from_terms(weight_x, weight_y, max_weight, {})

    @property
    def j_limit(self) -> int:
        return self.max_weight // self.weight_x

    def k_limit(self, j: int) -> int:
        if not 0 <= j <= self.j_limit:
            raise IndexOutOfRange(f"x-exponent {j} is outside the weight bound")
        return (self.max_weight - j * self.weight_x) // self.weight_y

    def __getitem__(self, index: tuple[int, int]) -> Coeff:
        j, k = index
        if j < 0 or k < 0 or j * self.weight_x + k * self.weight_y > self.max_weight:
            raise IndexOutOfRange(
                f"monomial ({j}, {k}) is outside the weight bound {self.max_weight}"
            )
        return self.coeffs[j][k]

    def nonzero_terms(self) -> Iterator[tuple[int, int, Coeff]]:
        for j, row in enumerate(self.coeffs):
            for k, c in enumerate(row):
                if c != 0:
                    yield j, k, c

    def truncate(self, max_weight: int) -> BiSeries:
        if max_weight > self.max_weight:
            raise IndexOutOfRange(
                f"cannot extend weight bound {self.max_weight} to {max_weight}"
            )
        rows = [
            row[: _row_length(self.weight_x, self.weight_y, max_weight, j)]
            for j, row in enumerate(self.coeffs[: max_weight // self.weight_x + 1])
        ]
        return BiSeries(self.weight_x, self.weight_y, max_weight, tuple(rows))

    def _check_weights(self, other: BiSeries) -> None:
        if (self.weight_x, self.weight_y) != (other.weight_x, other.weight_y):
            raise WeightMismatch(
                f"weights {(self.weight_x, self.weight_y)} vs "
                f"{(other.weight_x, other.weight_y)}"
            )

    def __neg__(self) -> BiSeries:
        rows = tuple(tuple(-c for c in row) for row in self.coeffs)
        return BiSeries(self.weight_x, self.weight_y, self.max_weight, rows)

    def __add__(self, other: BiSeries) -> BiSeries:
        self._check_weights(other)
        w = min(self.max_weight, other.max_weight)
        a, b = self.truncate(w), other.truncate(w)
        rows = tuple(
            tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.coeffs, b.coeffs)
        )
        return BiSeries(self.weight_x, self.weight_y, w, rows)

    def __sub__(self, other: BiSeries) -> BiSeries:
        return self + (-other)

    def __mul__(self, other: BiSeries | Coeff) -> BiSeries:
        if isinstance(other, (int, Fraction)):
            rows = tuple(tuple(c * other for c in row) for row in self.coeffs)
            return BiSeries(self.weight_x, self.weight_y, self.max_weight, rows)
        self._check_weights(other)
        wx, wy = self.weight_x, self.weight_y
        w = min(self.max_weight, other.max_weight)
        rows = _zero_rows(wx, wy, w)
        for j1, k1, c1 in self.nonzero_terms():
            w1 = j1 * wx + k1 * wy
            if w1 > w:
                continue
            budget = w - w1
            for j2, k2, c2 in other.nonzero_terms():
                if j2 * wx + k2 * wy <= budget:
                    rows[j1 + j2][k1 + k2] += c1 * c2
        return BiSeries(wx, wy, w, tuple(tuple(r) for r in rows))

    def __rmul__(self, other: Coeff) -> BiSeries:
        return self * other

    def inverse(self) -> BiSeries:
        """Multiplicative inverse on the weighted triangle."""
        inv0 = _reciprocal(self.coeffs[0][0])
        wx, wy, w = self.weight_x, self.weight_y, self.max_weight
        out = _zero_rows(wx, wy, w)
        out[0][0] = inv0
        for j in range(len(out)):
            for k in range(len(out[j])):
                if j == 0 and k == 0:
                    continue
                acc: Coeff = 0
                for j1 in range(min(j, self.j_limit) + 1):
                    row = self.coeffs[j1]
                    for k1 in range(min(k, len(row) - 1) + 1):
                        if j1 == 0 and k1 == 0:
                            continue
                        a = row[k1]
                        if a != 0:
                            acc += a * out[j - j1][k - k1]
                out[j][k] = _norm(-inv0 * acc)
        return BiSeries(wx, wy, w, tuple(tuple(r) for r in out))

    def __truediv__(self, other: BiSeries) -> BiSeries:
        return self * other.inverse()

    def substitute_x(self) -> UniSeries:
        """Evaluate at x = y**2, valid for weights (2, 1) only.

        The substitution maps x**j * y**k to y**(2j + k), which is the total
        weight, so the result is exact through the same bound.
        """
        if (self.weight_x, self.weight_y) != (2, 1):
            raise WeightMismatch(
                "x = y**2 substitution preserves truncation only for weights (2, 1)"
            )
        out: list[Coeff] = [0] * (self.max_weight + 1)
        for j, k, c in self.nonzero_terms():
            out[2 * j + k] += c
        return UniSeries(self.max_weight, tuple(out))

    def slice_x(self, j: int) -> UniSeries:
        """The series in y multiplying x**j, exact where the bound allows."""
        return UniSeries(self.k_limit(j), self.coeffs[j])

    def slice_y(self, k: int) -> UniSeries:
        """The series in x multiplying y**k, exact where the bound allows."""
        if k < 0 or k * self.weight_y > self.max_weight:
            raise IndexOutOfRange(f"y-exponent {k} is outside the weight bound")
        jmax = (self.max_weight - k * self.weight_y) // self.weight_x
        return UniSeries(jmax, tuple(self.coeffs[j][k] for j in range(jmax + 1)))


def _zero_rows(weight_x: int, weight_y: int, max_weight: int) -> list[list[Coeff]]:
    return [
        [0] * _row_length(weight_x, weight_y, max_weight, j)
        for j in range(max_weight // weight_x + 1)
    ]
