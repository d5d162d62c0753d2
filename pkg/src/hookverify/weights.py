"""Per-vertex hook weights ``h -> w(h)`` as exact rational functions of ``t``."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .exactnum import BigRat, Poly, RatFunc, rf_mul, rf_pow

__all__ = [
    "HookWeight",
    "WEIGHTS",
    "get_weight",
    "w_postnikov",
    "w_lascoux",
    "w_han",
    "w_half",
    "w_ternary",
    "w_forest",
]


def _check(h: int) -> None:
    if h < 1:
        raise ValueError(f"hook length must be a positive integer, got {h}")


@lru_cache(maxsize=None)
def w_postnikov(h: int) -> RatFunc:
    _check(h)
    return RatFunc.const(1 + BigRat(1, h))


@lru_cache(maxsize=None)
def w_lascoux(h: int) -> RatFunc:
    _check(h)
    return RatFunc.poly(Poly.linear(1, BigRat(1, h)))


@lru_cache(maxsize=None)
def w_han(h: int) -> RatFunc:
    """``(t+h)^(h-1) / (h * (2t+h-1)^(h-2))``; h = 1 gives ``2t``."""
    _check(h)
    top = rf_pow(RatFunc.poly(Poly.linear(1, h)), h - 1)
    bottom = rf_pow(RatFunc.poly(Poly.linear(2, h - 1)), -(h - 2))
    return rf_mul(rf_mul(top, bottom), RatFunc.const(BigRat(1, h)))


@lru_cache(maxsize=None)
def w_half(h: int) -> RatFunc:
    _check(h)
    return RatFunc.const((1 + BigRat(1, 2 * h)) ** (h - 1))


@lru_cache(maxsize=None)
def w_ternary(h: int) -> RatFunc:
    _check(h)
    return RatFunc.const(BigRat(2, 3) + BigRat(1, 3 * h))


@lru_cache(maxsize=None)
def w_forest(h: int) -> RatFunc:
    _check(h)
    return RatFunc.const(2 - BigRat(1, h))


@dataclass(frozen=True)
class HookWeight:
    """A named weight rule and the tree family its identity sums over.

    ``tag`` doubles as the memo key in the engine, so custom weights need a
    tag of their own.
    """

    tag: str
    family: str
    rule: Callable[[int], RatFunc] = field(compare=False)
    t_plays: str = ""  # which variable of the identity t stands for

    def __call__(self, h: int) -> RatFunc:
        return self.rule(h)


WEIGHTS: dict[str, HookWeight] = {
    w.tag: w
    for w in (
        HookWeight("postnikov", "binary", w_postnikov),
        HookWeight("lascoux", "binary", w_lascoux, "x"),
        HookWeight("han", "binary", w_han, "z"),
        HookWeight("half", "binary", w_half),
        HookWeight("ternary", "ternary", w_ternary),
        HookWeight("forest", "forest", w_forest),
    )
}


def get_weight(tag: str) -> HookWeight:
    try:
        return WEIGHTS[tag]
    except KeyError:
        raise KeyError(f"unknown identity {tag!r}; choose from {', '.join(WEIGHTS)}") from None
