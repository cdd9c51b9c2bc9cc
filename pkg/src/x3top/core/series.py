"""Truncated power series over Q and the rank/series dictionary.

The central objects are formal series truncated at an explicit degree,
together with the two inverse operations relating a graded algebra's
dimension series to the exponents of its infinite-product form

    prod_{n odd} (1+z^n)^{r_n}  /  prod_{n even} (1-z^n)^{r_n}.

`series_from_product` expands the product; `pbw_extract` recovers the
exponents degree by degree by dividing out one factor at a time.
`pbw_extract_log` recovers them instead by matching logarithmic
coefficients and serves as an independent route to the same numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from x3top.core.rationals import format_rational


@dataclass(frozen=True)
class PowerSeries:
    """A series sum c_n z^n with exact coefficients, truncated at maxdeg.

    Arithmetic never reads or writes coefficients beyond maxdeg; mixed
    operations truncate to the smaller of the two degrees.
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @property
    def maxdeg(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    @staticmethod
    def one(maxdeg: int) -> "PowerSeries":
        return PowerSeries((Fraction(1),) + (Fraction(0),) * maxdeg)

    @staticmethod
    def from_coeffs(coeffs, maxdeg: int | None = None) -> "PowerSeries":
        cs = [Fraction(c) for c in coeffs]
        if maxdeg is not None:
            cs = cs[: maxdeg + 1]
            cs += [Fraction(0)] * (maxdeg + 1 - len(cs))
        return PowerSeries(tuple(cs))

    def truncate(self, maxdeg: int) -> "PowerSeries":
        return PowerSeries.from_coeffs(self.coefficients, maxdeg)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        d = min(self.maxdeg, other.maxdeg)
        return PowerSeries(
            tuple(self[n] + other[n] for n in range(d + 1))
        )

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        d = min(self.maxdeg, other.maxdeg)
        out = [Fraction(0)] * (d + 1)
        for i, ci in enumerate(self.coefficients[: d + 1]):
            if not ci:
                continue
            for j in range(d + 1 - i):
                cj = other.coefficients[j]
                if cj:
                    out[i + j] += ci * cj
        return PowerSeries(tuple(out))

    def reciprocal(self) -> "PowerSeries":
        """Multiplicative inverse; requires a unit constant term."""
        if self[0] == 0:
            raise ZeroDivisionError("series with zero constant term")
        d = self.maxdeg
        out = [Fraction(0)] * (d + 1)
        out[0] = 1 / self[0]
        for n in range(1, d + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc += self[k] * out[n - k]
            out[n] = -acc / self[0]
        return PowerSeries(tuple(out))

    def __truediv__(self, other: "PowerSeries") -> "PowerSeries":
        return self * other.reciprocal()

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coefficients]

    def __str__(self) -> str:
        return "[" + ", ".join(self.to_json()) + "]"


def _binomial_factor(n: int, r: int, maxdeg: int) -> PowerSeries:
    # (1 + z^n)^r for integer r >= 0
    out = [Fraction(0)] * (maxdeg + 1)
    for k in range(0, min(r, maxdeg // n) + 1):
        out[n * k] = Fraction(comb(r, k))
    return PowerSeries(tuple(out))


def _geometric_factor(n: int, r: int, maxdeg: int) -> PowerSeries:
    # 1 / (1 - z^n)^r for integer r >= 0
    out = [Fraction(0)] * (maxdeg + 1)
    for k in range(0, maxdeg // n + 1):
        out[n * k] = Fraction(comb(r + k - 1, k))
    return PowerSeries(tuple(out))


def geometric_series(n: int, r: int, maxdeg: int) -> PowerSeries:
    """1/(1-z^n)^r truncated at maxdeg; the series of r central even
    generators of degree n."""
    if n <= 0 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    return _geometric_factor(n, r, maxdeg)


def series_from_product(
    odd_exponents: dict[int, int],
    even_exponents: dict[int, int],
    maxdeg: int,
) -> PowerSeries:
    """Expand prod_odd (1+z^n)^{r_n} / prod_even (1-z^n)^{r_n} to maxdeg.

    Empty exponent maps give the constant series 1.  Exponents must be
    nonnegative integers; keys of the odd map must be odd and of the
    even map even.
    """
    if maxdeg < 0:
        raise ValueError("maxdeg must be >= 0")
    s = PowerSeries.one(maxdeg)
    for n, r in sorted(odd_exponents.items()):
        if n <= 0 or n % 2 == 0:
            raise ValueError(f"odd exponent map has non-odd degree {n}")
        if r < 0:
            raise ValueError(f"negative exponent r_{n}={r}")
        if r and n <= maxdeg:
            s = s * _binomial_factor(n, r, maxdeg)
    for n, r in sorted(even_exponents.items()):
        if n <= 0 or n % 2 == 1:
            raise ValueError(f"even exponent map has non-even degree {n}")
        if r < 0:
            raise ValueError(f"negative exponent r_{n}={r}")
        if r and n <= maxdeg:
            s = s * _geometric_factor(n, r, maxdeg)
    return s


def pbw_extract(
    series: PowerSeries, require_integral: bool = True
) -> tuple[dict[int, Fraction], dict[int, Fraction]]:
    """Recover the product exponents from a series with constant term 1.

    Works degree by degree: once r_1..r_{n-1} are known, the degree-n
    coefficient of the series with those factors divided out equals r_n.
    With `require_integral` (the default), any extracted exponent that
    is not a nonnegative integer raises ValueError, which signals that
    the input is not the dimension series of any graded algebra of this
    shape.
    """
    if series[0] != 1:
        raise ValueError("series must have constant coefficient 1")
    maxdeg = series.maxdeg
    remaining = series
    odd: dict[int, Fraction] = {}
    even: dict[int, Fraction] = {}
    for n in range(1, maxdeg + 1):
        r = remaining[n]
        if require_integral and (r.denominator != 1 or r < 0):
            raise ValueError(f"extracted exponent r_{n}={r} is not a nonnegative integer")
        (odd if n % 2 else even)[n] = r
        if r == 0:
            continue
        remaining = remaining / _product_factor(n, r, maxdeg)
    return odd, even


def _product_factor(n: int, r: Fraction, maxdeg: int) -> PowerSeries:
    # The true degree-n factor of the product: (1+z^n)^r for odd n and
    # (1-z^n)^(-r) for even n, by the generalized binomial series (exact
    # for fractional r as well).
    out = [Fraction(0)] * (maxdeg + 1)
    out[0] = Fraction(1)
    term = Fraction(1)
    if n % 2 == 1:
        for k in range(1, maxdeg // n + 1):
            term = term * (Fraction(r) - (k - 1)) / k
            out[n * k] = term
    else:
        for k in range(1, maxdeg // n + 1):
            term = term * (Fraction(r) + (k - 1)) / k
            out[n * k] = term
    return PowerSeries(tuple(out))


def pbw_extract_log(series: PowerSeries) -> dict[int, Fraction]:
    """Independent exponent extraction by matching logarithmic coefficients.

    Writes log(series) = sum L_m z^m and solves the triangular system

        L_m = sum_{n | m, n odd} r_n (-1)^{m/n+1} n/m
            + sum_{n | m, n even} r_n n/m

    for the r_n.  Used as a cross-check against `pbw_extract`.
    """
    if series[0] != 1:
        raise ValueError("series must have constant coefficient 1")
    maxdeg = series.maxdeg
    # log via L' = S'/S: m*L_m = m*c_m - sum_{k=1}^{m-1} k*L_k c_{m-k}
    L = [Fraction(0)] * (maxdeg + 1)
    for m in range(1, maxdeg + 1):
        acc = m * series[m]
        for k in range(1, m):
            acc -= k * L[k] * series[m - k]
        L[m] = acc / m
    r: dict[int, Fraction] = {}
    for m in range(1, maxdeg + 1):
        acc = L[m]
        for n in range(1, m):
            if m % n:
                continue
            k = m // n
            if n % 2 == 1:
                acc -= r[n] * Fraction((-1) ** (k + 1) * n, m)
            else:
                acc -= r[n] * Fraction(n, m)
        r[m] = acc
    return r


def loop_space_dims(maxdeg: int) -> PowerSeries:
    """Dimension series 1/(1 - 3z + z^2): h_0 = 1, h_1 = 3, and
    h_n = 3 h_{n-1} - h_{n-2}.

    This is the homology series of the based loop space of the
    two-point blow-up of the projective plane.
    """
    h = [Fraction(1), Fraction(3)]
    while len(h) <= maxdeg:
        h.append(3 * h[-1] - h[-2])
    return PowerSeries(tuple(h[: maxdeg + 1]))


def loop_space_ranks(maxdeg: int) -> dict[int, int]:
    """Homotopy ranks r_n extracted from `loop_space_dims`:
    r_1 = 3, r_2 = r_3 = 5, r_4 = 10, r_5 = 24, r_6 = 55, ...
    """
    odd, even = pbw_extract(loop_space_dims(maxdeg))
    out = {}
    out.update({n: int(v) for n, v in odd.items()})
    out.update({n: int(v) for n, v in even.items()})
    return dict(sorted(out.items()))
