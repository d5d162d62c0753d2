"""Weighted hook sums by enumeration and by convolution recurrence.

For a weight ``w`` and a family, the weighted sum of size ``n`` is the sum,
over every object of that size, of the product of ``w(h)`` over its counted
vertices.  Two independent routes compute it:

* brute force walks every enumerated object;
* the recurrences remove the root (binary, 3-ary) or split off the first
  tree (forests) and convolve smaller sums.

:func:`verify` compares both against the closed form of an identity.
"""
from __future__ import annotations

import threading
import time
from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import Optional

from .exactnum import BigRat, Poly, RatFunc, rf_add, rf_eval, rf_make, rf_mul, rf_pow
from .trees import (
    DEFAULT_CAPS,
    EnumerationCaps,
    enumerate_binary,
    enumerate_forests,
    enumerate_ternary,
    hooks_binary,
    hooks_forest,
    hooks_ternary_internal,
)
from .weights import WEIGHTS, HookWeight, get_weight

__all__ = [
    "METHODS",
    "TREE_IDENTITIES",
    "WeightedSum",
    "VerificationReport",
    "sum_binary_brute",
    "sum_binary_rec",
    "sum_ternary_rec",
    "sum_forest_rec",
    "sum_brute",
    "sum_rec",
    "rhs_value",
    "verify",
    "clear_memo",
]

METHODS = ("brute", "recurrence", "both")
TREE_IDENTITIES = tuple(WEIGHTS)

ONE = RatFunc.const(1)
HALF = BigRat(1, 2)


@dataclass(frozen=True)
class WeightedSum:
    family: str
    n: int
    value: RatFunc
    method: str


@dataclass
class VerificationReport:
    """One identity checked at one size.

    ``extra`` holds further sides that must agree, e.g. specializations of
    another identity's sums.
    """

    identity: str
    n: int
    rhs: RatFunc
    lhs_brute: Optional[RatFunc] = None
    lhs_rec: Optional[RatFunc] = None
    extra: dict[str, RatFunc] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)

    def sides(self) -> dict[str, RatFunc]:
        out = {}
        if self.lhs_brute is not None:
            out["lhs_brute"] = self.lhs_brute
        if self.lhs_rec is not None:
            out["lhs_rec"] = self.lhs_rec
        out.update(self.extra)
        out["rhs"] = self.rhs
        return out

    @property
    def passed(self) -> bool:
        return all(v == self.rhs for v in self.sides().values())

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def lhs(self) -> RatFunc:
        return self.lhs_rec if self.lhs_rec is not None else self.lhs_brute


# -- brute force -------------------------------------------------------------

def _sum_over_hooks(hook_counts: Counter, w: HookWeight) -> RatFunc:
    """Sum ``mult * prod_h w(h)^k_h`` over the distinct hook multisets.

    Equal hook multisets contribute equal products, so each is expanded once
    and scaled by its multiplicity.  All terms are brought over the common
    denominator ``prod_h den(w(h))^K_h`` (``K_h`` the largest multiplicity of
    ``h`` in any term), which needs no gcd until the single final reduction.
    """
    if not hook_counts:
        return RatFunc(Poly(), Poly((1,)))
    counted = [(mult, Counter(hooks)) for hooks, mult in sorted(hook_counts.items())]
    top: dict[int, int] = {}
    for _, ks in counted:
        for h, k in ks.items():
            if k > top.get(h, 0):
                top[h] = k

    powers: dict[tuple[str, int, int], Poly] = {}

    def power(part: str, h: int, e: int) -> Poly:
        key = (part, h, e)
        if key not in powers:
            base = w(h).num if part == "num" else w(h).den
            powers[key] = base ** e
        return powers[key]

    common = Poly((1,))
    for h in sorted(top):
        common = common * power("den", h, top[h])
    total = Poly()
    for mult, ks in counted:
        term = Poly((mult,))
        for h in sorted(top):
            k = ks.get(h, 0)
            if k:
                term = term * power("num", h, k)
            if top[h] > k and not w(h).den.is_one():
                term = term * power("den", h, top[h] - k)
        total = total + term
    return rf_make(total, common)


def sum_binary_brute(n: int, w: HookWeight, caps: EnumerationCaps = DEFAULT_CAPS) -> RatFunc:
    return _sum_over_hooks(Counter(hooks_binary(T) for T in enumerate_binary(n, caps)), w)


def sum_brute(family: str, n: int, w: HookWeight, caps: EnumerationCaps = DEFAULT_CAPS) -> RatFunc:
    if family == "binary":
        return sum_binary_brute(n, w, caps)
    if family == "ternary":
        counts = Counter(hooks_ternary_internal(T) for T in enumerate_ternary(n, caps))
    elif family == "forest":
        counts = Counter(hooks_forest(F) for F in enumerate_forests(n, caps))
    else:
        raise ValueError(f"unknown family {family!r}")
    return _sum_over_hooks(counts, w)


# -- recurrences -------------------------------------------------------------

_memo: dict[tuple[str, str], list[RatFunc]] = {}
_memo_lock = threading.Lock()


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()


def _convolve(xs: list[RatFunc], ys: list[RatFunc], m: int) -> RatFunc:
    acc = RatFunc(Poly(), Poly((1,)))
    for k in range(m + 1):
        acc = rf_add(acc, rf_mul(xs[k], ys[m - k]))
    return acc


def _extend(key: tuple[str, str], n: int, step) -> RatFunc:
    with _memo_lock:
        seq = _memo.setdefault(key, [ONE])
        while len(seq) <= n:
            seq.append(step(seq, len(seq)))
        return seq[n]


def sum_binary_rec(n: int, w: HookWeight) -> RatFunc:
    """``S(0) = 1``, ``S(n) = w(n) * sum_k S(k) S(n-1-k)``."""

    def step(S, m):
        return rf_mul(w(m), _convolve(S, S, m - 1))

    return _extend(("binary", w.tag), n, step)


def sum_ternary_rec(n: int, w: HookWeight) -> RatFunc:
    """``A(0) = 1``, ``A(n) = w(n) * sum_{a+b+c=n-1} A(a) A(b) A(c)``.

    The triple sum is evaluated as ``sum_a A(a) * B(n-1-a)`` with ``B`` the
    self-convolution of ``A``.
    """
    with _memo_lock:
        pairs = _memo.setdefault(("ternary-pairs", w.tag), [])

    def step(A, m):
        while len(pairs) < m:
            pairs.append(_convolve(A, A, len(pairs)))
        return rf_mul(w(m), _convolve(A, pairs, m - 1))

    return _extend(("ternary", w.tag), n, step)


def sum_forest_rec(n: int, w: HookWeight) -> RatFunc:
    """``F(0) = 1``, ``F(n) = sum_{m=1..n} w(m) F(m-1) F(n-m)``."""

    def step(F, k):
        acc = RatFunc(Poly(), Poly((1,)))
        for m in range(1, k + 1):
            acc = rf_add(acc, rf_mul(rf_mul(w(m), F[m - 1]), F[k - m]))
        return acc

    return _extend(("forest", w.tag), n, step)


_REC = {"binary": sum_binary_rec, "ternary": sum_ternary_rec, "forest": sum_forest_rec}


def sum_rec(family: str, n: int, w: HookWeight) -> RatFunc:
    try:
        fn = _REC[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return fn(n, w)


# -- closed forms ------------------------------------------------------------

def rhs_value(identity: str, n: int) -> RatFunc:
    if n < 1:
        raise ValueError(f"closed forms are stated for n >= 1, got {n}")
    if identity == "postnikov":
        return RatFunc.const(BigRat(2**n * (n + 1) ** (n - 1), factorial(n)))
    if identity == "lascoux":
        p = Poly((1,))
        for k in range(n):
            p = p * Poly.linear(n + 1 + k, n + 1 - k)
        return RatFunc.poly(p.scale(BigRat(1, factorial(n + 1))))
    if identity == "han":
        t = Poly((0, 1))
        p = t * Poly.linear(1, n) ** (n - 1)
        return RatFunc.poly(p.scale(BigRat(2**n, factorial(n))))
    if identity in ("half", "ternary", "forest"):
        return RatFunc.const(BigRat((2 * n + 1) ** (n - 1), factorial(n)))
    raise KeyError(f"unknown identity {identity!r}")


# -- verification ------------------------------------------------------------

def verify(
    identity: str,
    n: int,
    method: str = "both",
    caps: EnumerationCaps = DEFAULT_CAPS,
) -> VerificationReport:
    """Check one identity at size ``n`` by exact canonical-form comparison.

    For ``half`` the ``han`` sums specialized at ``t = 1/2`` are compared as
    well, using whichever methods were requested.
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    w = get_weight(identity)
    if method in ("brute", "both"):
        caps.check(w.family, n)

    report = VerificationReport(identity, n, rhs=rhs_value(identity, n))
    timings = report.timings
    if method in ("brute", "both"):
        t0 = time.perf_counter()
        report.lhs_brute = sum_brute(w.family, n, w, caps)
        timings["brute"] = time.perf_counter() - t0
    if method in ("recurrence", "both"):
        t0 = time.perf_counter()
        report.lhs_rec = sum_rec(w.family, n, w)
        timings["recurrence"] = time.perf_counter() - t0
    if identity == "half":
        han = WEIGHTS["han"]
        if report.lhs_brute is not None:
            report.extra["han_brute_at_1/2"] = RatFunc.const(rf_eval(sum_binary_brute(n, han, caps), HALF))
        if report.lhs_rec is not None:
            report.extra["han_rec_at_1/2"] = RatFunc.const(rf_eval(sum_binary_rec(n, han), HALF))
    return report
