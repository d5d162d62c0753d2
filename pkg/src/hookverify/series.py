"""Truncated power series in ``x`` with coefficients in Q(t).

Used to check the tree function ``y = exp(x*y)``, the expansion of ``y**t``
and the self-convolution identity ``(y**t)**2 = y**(2t)`` together with its
coefficientwise form.
"""
from __future__ import annotations

from math import factorial
from typing import Iterator, Sequence

from .engine import VerificationReport
from .exactnum import BigRat, Poly, RatFunc, rf_add, rf_mul

__all__ = [
    "TruncatedSeries",
    "series_add",
    "series_mul",
    "series_exp",
    "tree_function",
    "y_power_z",
    "y_power_2z",
    "power_coefficient",
    "verify_square",
    "lemma3_sides",
    "verify_lemma3",
    "SERIES_IDENTITIES",
    "series_reports",
]

DEFAULT_ORDER = 12

_ZERO = RatFunc(Poly(), Poly((1,)))
_ONE = RatFunc.const(1)


class TruncatedSeries:
    """``c_0 + c_1 x + ... + c_N x^N``; anything past ``x^N`` is dropped."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        order = len(coeffs) - 1 if order is None else order
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = [RatFunc.const(c) if not isinstance(c, RatFunc) else c for c in coeffs[: order + 1]]
        cs += [_ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([_ONE], order)

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        return cls([_ZERO, _ONE], order)

    def __getitem__(self, n: int) -> RatFunc:
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, {[str(c) for c in self.coeffs]})"

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other.scale(-1))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def scale(self, c) -> "TruncatedSeries":
        c = c if isinstance(c, RatFunc) else RatFunc.const(c)
        return TruncatedSeries([rf_mul(a, c) for a in self.coeffs], self.order)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> int:
    if a.order != b.order:
        raise ValueError(f"series orders differ: {a.order} vs {b.order}")
    return a.order


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    N = _check_orders(a, b)
    return TruncatedSeries([rf_add(p, q) for p, q in zip(a.coeffs, b.coeffs)], N)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    N = _check_orders(a, b)
    out = []
    for n in range(N + 1):
        acc = _ZERO
        for k in range(n + 1):
            if a.coeffs[k] and b.coeffs[n - k]:
                acc = rf_add(acc, rf_mul(a.coeffs[k], b.coeffs[n - k]))
        out.append(acc)
    return TruncatedSeries(out, N)


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """``sum_k a^k / k!``, exact to order N; needs ``a`` without constant term."""
    if a.coeffs[0]:
        raise ValueError("series_exp needs a series with zero constant term")
    N = a.order
    total = TruncatedSeries.one(N)
    power = TruncatedSeries.one(N)
    for k in range(1, N + 1):
        power = series_mul(power, a)
        total = series_add(total, power.scale(BigRat(1, factorial(k))))
    return total


def _times_x(a: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries((_ZERO,) + a.coeffs[:-1], a.order)


def tree_function(N: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Solve ``y = exp(x*y)`` by fixed-point iteration from ``y = 1``.

    Each round fixes one more coefficient, so N + 1 rounds are enough.
    """
    y = TruncatedSeries.one(N)
    for _ in range(N + 1):
        y = series_exp(_times_x(y))
    return y


def power_coefficient(n: int, scale: int = 1) -> RatFunc:
    """``s*t*(n + s*t)^(n-1) / n!`` for ``s = scale``, with the n = 0 term fixed at 1."""
    if n == 0:
        return _ONE
    st = Poly((0, scale))
    p = st * Poly.linear(scale, n) ** (n - 1)
    return RatFunc.poly(p.scale(BigRat(1, factorial(n))))


def y_power_z(N: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The stated expansion of ``y(x)**t``: coefficients ``t(n+t)^(n-1)/n!``."""
    return TruncatedSeries([power_coefficient(n) for n in range(N + 1)], N)


def y_power_2z(N: int = DEFAULT_ORDER) -> TruncatedSeries:
    return TruncatedSeries([power_coefficient(n, 2) for n in range(N + 1)], N)


def verify_square(N: int = DEFAULT_ORDER) -> bool:
    y = y_power_z(N)
    return series_mul(y, y) == y_power_2z(N)


def lemma3_sides(n: int) -> tuple[RatFunc, RatFunc]:
    """Closed form and convolution sum of the coefficientwise squaring identity."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lhs = power_coefficient(n, 2)
    rhs = _ZERO
    for k in range(n + 1):
        rhs = rf_add(rhs, rf_mul(power_coefficient(k), power_coefficient(n - k)))
    return lhs, rhs


def verify_lemma3(n: int) -> bool:
    lhs, rhs = lemma3_sides(n)
    return lhs == rhs


SERIES_IDENTITIES = ("lemma3", "square", "treefn")


def series_reports(identity: str, n_max: int) -> Iterator[VerificationReport]:
    """One report per n = 0..n_max.

    ``square`` and ``treefn`` compare coefficient n of a series computed to
    order ``n_max``; ``treefn`` also carries ``[x^n] exp(x*y)`` as a side.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if identity == "lemma3":
        for n in range(n_max + 1):
            closed, conv = lemma3_sides(n)
            yield VerificationReport("lemma3", n, rhs=closed, lhs_rec=conv)
    elif identity == "square":
        y = y_power_z(n_max)
        sq = series_mul(y, y)
        target = y_power_2z(n_max)
        for n in range(n_max + 1):
            yield VerificationReport("square", n, rhs=target[n], lhs_rec=sq[n])
    elif identity == "treefn":
        y = tree_function(n_max)
        e = series_exp(_times_x(y))
        for n in range(n_max + 1):
            closed = RatFunc.const(BigRat((n + 1) ** (n - 1), factorial(n))) if n else _ONE
            yield VerificationReport(
                "treefn", n, rhs=closed, lhs_rec=y[n], extra={"exp_xy": e[n]}
            )
    else:
        raise KeyError(f"unknown series identity {identity!r}")
