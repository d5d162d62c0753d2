"""Lazy exhaustive enumeration of binary trees, 3-ary trees and plane forests.

Every family is generated in a fixed canonical order (smaller first subtree
first), one object at a time.  Objects also carry the hook lengths needed by
the weighted sums: the size of each vertex's subtree.

The empty binary tree is ``None``; a 3-ary leaf is :data:`LEAF`; a plane
forest is a tuple of :class:`PlaneTree`.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional, Sequence

__all__ = [
    "BinaryTree",
    "TernaryTree",
    "TernaryLeaf",
    "LEAF",
    "PlaneTree",
    "PlaneForest",
    "HookMultiset",
    "EnumerationCaps",
    "CapExceeded",
    "DEFAULT_CAPS",
    "catalan",
    "ternary_count",
    "family_count",
    "enumerate_binary",
    "enumerate_ternary",
    "enumerate_forests",
    "hooks_binary",
    "hooks_ternary_internal",
    "hooks_forest",
    "encode_binary",
    "encode_ternary",
    "encode_forest",
    "format_hooks",
]

HookMultiset = tuple[int, ...]

FAMILIES = ("binary", "ternary", "forest")


class CapExceeded(ValueError):
    """Enumeration refused because ``n`` exceeds the configured cap."""

    def __init__(self, family: str, n: int, cap: int):
        self.family, self.n, self.cap = family, n, cap
        super().__init__(
            f"refusing to enumerate {family} objects of size {n}: "
            f"that would generate {family_count(family, n):,} objects "
            f"(cap is {cap}; raise it with --cap-{family})"
        )


ENV_CAP_VARS = {
    "binary": "HOOKVERIFY_CAP_BINARY",
    "ternary": "HOOKVERIFY_CAP_TERNARY",
    "forest": "HOOKVERIFY_CAP_FOREST",
}


@dataclass(frozen=True)
class EnumerationCaps:
    binary: int = 14
    ternary: int = 9
    forest: int = 14

    def cap(self, family: str) -> int:
        return getattr(self, family)

    def check(self, family: str, n: int) -> None:
        if n < 0:
            raise ValueError(f"size must be nonnegative, got {n}")
        if n > self.cap(family):
            raise CapExceeded(family, n, self.cap(family))

    @classmethod
    def from_env(cls, environ: Optional[dict] = None) -> tuple["EnumerationCaps", dict[str, int]]:
        """Defaults overridden by ``HOOKVERIFY_CAP_*``; also returns the overrides seen."""
        environ = os.environ if environ is None else environ
        overrides = {}
        for family, var in ENV_CAP_VARS.items():
            if var in environ:
                try:
                    overrides[family] = int(environ[var])
                except ValueError:
                    raise ValueError(f"{var} must be an integer, got {environ[var]!r}") from None
        return cls(**overrides), overrides


DEFAULT_CAPS = EnumerationCaps()


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def ternary_count(n: int) -> int:
    return comb(3 * n, n) // (2 * n + 1)


def family_count(family: str, n: int) -> int:
    return ternary_count(n) if family == "ternary" else catalan(n)


# -- binary trees ------------------------------------------------------------

class BinaryTree:
    """A vertex with optional ordered left and right children."""

    __slots__ = ("left", "right", "size")

    def __init__(self, left: Optional["BinaryTree"] = None, right: Optional["BinaryTree"] = None):
        self.left = left
        self.right = right
        self.size = 1 + (left.size if left else 0) + (right.size if right else 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryTree):
            return NotImplemented
        return self.size == other.size and self.left == other.left and self.right == other.right

    def __hash__(self) -> int:
        return hash(encode_binary(self))

    def __repr__(self) -> str:
        return f"BinaryTree({encode_binary(self)!r})"


def _binary(n: int) -> Iterator[Optional[BinaryTree]]:
    if n == 0:
        yield None
        return
    for k in range(n):
        for left in _binary(k):
            for right in _binary(n - 1 - k):
                yield BinaryTree(left, right)


def enumerate_binary(n: int, caps: EnumerationCaps = DEFAULT_CAPS) -> Iterator[Optional[BinaryTree]]:
    """All binary trees with ``n`` vertices, left-subtree size ascending.

    ``n == 0`` yields the single empty tree, ``None``.
    """
    caps.check("binary", n)
    return _binary(n)


def hooks_binary(tree: Optional[BinaryTree]) -> HookMultiset:
    out: list[int] = []
    stack = [tree] if tree is not None else []
    while stack:
        node = stack.pop()
        out.append(node.size)
        if node.left is not None:
            stack.append(node.left)
        if node.right is not None:
            stack.append(node.right)
    out.sort()
    return tuple(out)


def encode_binary(tree: Optional[BinaryTree]) -> str:
    """``"(L)(R)"`` per vertex, ``"·"`` for an absent child or the empty tree."""
    if tree is None:
        return "·"
    return f"({encode_binary(tree.left)})({encode_binary(tree.right)})"


# -- 3-ary trees -------------------------------------------------------------

class TernaryLeaf:
    __slots__ = ()
    internal = 0

    def __repr__(self) -> str:
        return "LEAF"


LEAF = TernaryLeaf()


class TernaryTree:
    """An internal vertex with exactly three ordered children."""

    __slots__ = ("children", "internal")

    def __init__(self, a, b, c):
        self.children = (a, b, c)
        self.internal = 1 + a.internal + b.internal + c.internal

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TernaryTree):
            return NotImplemented
        return self.children == other.children

    def __hash__(self) -> int:
        return hash(self.children)

    def __repr__(self) -> str:
        return f"TernaryTree({encode_ternary(self)!r})"


def _compositions3(m: int) -> Iterator[tuple[int, int, int]]:
    for a in range(m + 1):
        for b in range(m - a + 1):
            yield a, b, m - a - b


def _ternary(n: int):
    if n == 0:
        yield LEAF
        return
    for a, b, c in _compositions3(n - 1):
        for x in _ternary(a):
            for y in _ternary(b):
                for z in _ternary(c):
                    yield TernaryTree(x, y, z)


def enumerate_ternary(n: int, caps: EnumerationCaps = DEFAULT_CAPS):
    """All 3-ary trees with ``n`` internal vertices (``n == 0``: the bare leaf)."""
    caps.check("ternary", n)
    return _ternary(n)


def hooks_ternary_internal(tree) -> HookMultiset:
    """Internal-descendant count (including the vertex) for each internal vertex."""
    out: list[int] = []
    stack = [tree]
    while stack:
        node = stack.pop()
        if node.internal:
            out.append(node.internal)
            stack.extend(node.children)
    out.sort()
    return tuple(out)


def encode_ternary(tree) -> str:
    if not tree.internal:
        return "*"
    return "".join(f"({encode_ternary(c)})" for c in tree.children)


# -- plane forests -----------------------------------------------------------

PlaneForest = tuple  # tuple[PlaneTree, ...]


class PlaneTree:
    """A root vertex over an ordered forest of subtrees."""

    __slots__ = ("children", "size")

    def __init__(self, children: Sequence["PlaneTree"] = ()):
        self.children = tuple(children)
        self.size = 1 + sum(c.size for c in self.children)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneTree):
            return NotImplemented
        return self.children == other.children

    def __hash__(self) -> int:
        return hash(self.children)

    def __repr__(self) -> str:
        return f"PlaneTree({encode_forest((self,))!r})"


def _forests(n: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for m in range(1, n + 1):
        for sub in _forests(m - 1):
            first = PlaneTree(sub)
            for rest in _forests(n - m):
                yield (first,) + rest


def enumerate_forests(n: int, caps: EnumerationCaps = DEFAULT_CAPS) -> Iterator[tuple]:
    """All plane forests with ``n`` vertices, first-tree size ascending."""
    caps.check("forest", n)
    return _forests(n)


def hooks_forest(forest: Sequence[PlaneTree]) -> HookMultiset:
    out: list[int] = []
    stack = list(forest)
    while stack:
        node = stack.pop()
        out.append(node.size)
        stack.extend(node.children)
    out.sort()
    return tuple(out)


def encode_forest(forest: Sequence[PlaneTree]) -> str:
    """Each tree is ``"(" + its subtree forest + ")"``; the empty forest is ``""``."""
    return "".join(f"({encode_forest(t.children)})" for t in forest)


def format_hooks(hooks: HookMultiset) -> str:
    return "{" + ",".join(map(str, hooks)) + "}"
