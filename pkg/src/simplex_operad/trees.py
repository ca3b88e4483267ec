"""Planar rooted trees with weighted leaves.

These trees are the symbolic side of composition: grafting a tree into a
leaf while painting it with that leaf's weight, then flattening, must
reproduce tuple composition exactly.  Every subtree carries a paint
factor (default 1) that multiplies everything below it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Union

from .scalars import Scalar, as_scalar, parse_scalar, scalar_json
from .simplex import Dist


@dataclass(frozen=True)
class Leaf:
    weight: Scalar
    paint: Scalar = 1

    def __post_init__(self):
        object.__setattr__(self, "weight", as_scalar(self.weight))
        object.__setattr__(self, "paint", as_scalar(self.paint))


@dataclass(frozen=True)
class Corolla:
    children: tuple["TreeExpr", ...]
    paint: Scalar = 1

    def __post_init__(self):
        children = tuple(self.children)
        if not children:
            raise ValueError("a corolla needs at least one child")
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "paint", as_scalar(self.paint))


TreeExpr = Union[Leaf, Corolla]


def corolla_of(d: Dist) -> Corolla:
    """One internal node whose leaves carry the entries of d."""
    return Corolla(tuple(Leaf(p) for p in d.probs))


def leaf_count(t: TreeExpr) -> int:
    if isinstance(t, Leaf):
        return 1
    return sum(leaf_count(c) for c in t.children)


def tree_flatten(t: TreeExpr) -> Dist:
    """Left-to-right leaf weights, each times the paints on its root path.

    Validates the result, so a tree whose effective weights do not form a
    distribution is rejected here.
    """
    return Dist(tuple(_flatten(t, 1)))


def _flatten(t: TreeExpr, acc: Scalar) -> list[Scalar]:
    acc = acc * t.paint
    if isinstance(t, Leaf):
        return [t.weight * acc]
    out: list[Scalar] = []
    for child in t.children:
        out.extend(_flatten(child, acc))
    return out


def tree_graft(t: TreeExpr, i: int, s: TreeExpr, paint: Scalar | None = None) -> TreeExpr:
    """Replace the i-th leaf of t (1-based, left to right) with s.

    The grafted subtree is painted by the replaced leaf's effective weight
    (weight times its own paint), so that
    tree_flatten(tree_graft(t, i, s)) == compose_at(tree_flatten(t),
    tree_flatten(s), i).  Passing `paint` overrides that factor.
    """
    n = leaf_count(t)
    if not 1 <= i <= n:
        raise IndexError(f"leaf slot {i} out of range 1..{n}")
    return _graft(t, i, s, paint)


def _graft(node: TreeExpr, i: int, s: TreeExpr, paint: Scalar | None) -> TreeExpr:
    if isinstance(node, Leaf):
        factor = node.weight * node.paint if paint is None else as_scalar(paint)
        return replace(s, paint=s.paint * factor)
    children = list(node.children)
    offset = i
    for idx, child in enumerate(children):
        c = leaf_count(child)
        if offset <= c:
            children[idx] = _graft(child, offset, s, paint)
            return Corolla(tuple(children), node.paint)
        offset -= c
    raise IndexError(f"leaf slot {i} out of range")


def tree_to_json(t: TreeExpr) -> list | str | float:
    """Nested-array form: ["node", child, ...] with leaf weights at the tips.

    The array form has no paint slot, so paint factors are pushed down
    into the leaf weights; the encoded tree flattens to the same
    distribution and keeps the same shape.
    """
    return _to_json(t, 1)


def _to_json(t: TreeExpr, acc: Scalar):
    acc = acc * t.paint
    if isinstance(t, Leaf):
        return scalar_json(t.weight * acc)
    return ["node", *(_to_json(c, acc) for c in t.children)]


def tree_from_json(obj) -> TreeExpr:
    """Inverse of :func:`tree_to_json` (all paints come back as 1)."""
    if isinstance(obj, list):
        if not obj or obj[0] != "node":
            raise ValueError('a tree array must start with "node"')
        if len(obj) < 2:
            raise ValueError("a corolla needs at least one child")
        return Corolla(tuple(tree_from_json(c) for c in obj[1:]))
    if isinstance(obj, (str, int, float)) and not isinstance(obj, bool):
        return Leaf(parse_scalar(obj))
    raise ValueError(f"bad tree node: {obj!r}")


def parse_tree(text: str) -> TreeExpr:
    """Parse the nested-array JSON text form."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad tree JSON: {exc}") from None
    return tree_from_json(obj)
