"""DOT export for trees and function expressions.

Plugged coordinates (the inputs a left composition ignores) are drawn as
filled point nodes; tree leaves are labeled with their effective
probabilities.  Output is plain Graphviz text, deterministic for a given
input.
"""

from __future__ import annotations

from .endo import Const, EndoComp, EndoFn, LeftComp, Proj, Repr, RightComp, Sum
from .scalars import Scalar, format_scalar
from .trees import Corolla, Leaf, TreeExpr


class _Dot:
    def __init__(self, name: str):
        self.lines = [f"digraph {name} {{", "  ordering=out;"]
        self.count = 0

    def node(self, label: str | None, shape: str = "circle", filled: bool = False) -> str:
        nid = f"n{self.count}"
        self.count += 1
        attrs = [f"shape={shape}"]
        if label is not None:
            attrs.append(f'label="{label}"')
        if filled:
            attrs.append("style=filled")
        self.lines.append(f"  {nid} [{', '.join(attrs)}];")
        return nid

    def edge(self, parent: str, child: str):
        self.lines.append(f"  {parent} -> {child};")

    def text(self) -> str:
        return "\n".join(self.lines + ["}"]) + "\n"


def tree_to_dot(t: TreeExpr) -> str:
    dot = _Dot("tree")
    _tree(dot, t, 1)
    return dot.text()


def _tree(dot: _Dot, t: TreeExpr, acc: Scalar) -> str:
    acc = acc * t.paint
    if isinstance(t, Leaf):
        return dot.node(format_scalar(t.weight * acc), shape="none")
    nid = dot.node("", shape="point")
    for child in t.children:
        dot.edge(nid, _tree(dot, child, acc))
    return nid


def endofn_to_dot(f: EndoFn) -> str:
    dot = _Dot("endofn")
    _endofn(dot, f)
    return dot.text()


def _probs(d) -> str:
    return ",".join(format_scalar(p) for p in d.probs)


def _endofn(dot: _Dot, f: EndoFn) -> str:
    if isinstance(f, Const):
        return dot.node(format_scalar(f.value), shape="none")
    if isinstance(f, Proj):
        return dot.node(f"x{f.index}", shape="none")
    if isinstance(f, Repr):
        return dot.node(f"repr {_probs(f.dist)}", shape="box")
    if isinstance(f, Sum):
        nid = dot.node("+")
        dot.edge(nid, _endofn(dot, f.left))
        dot.edge(nid, _endofn(dot, f.right))
        return nid
    if isinstance(f, LeftComp):
        # one child per slot of the distribution: the composed slot gets
        # the inner expression, every other slot is a plug
        nid = dot.node(f"lcomp@{f.index} {_probs(f.dist)}", shape="box")
        for slot in range(1, f.dist.arity + 1):
            if slot == f.index:
                dot.edge(nid, _endofn(dot, f.inner))
            else:
                dot.edge(nid, dot.node(None, shape="point", filled=True))
        return nid
    if isinstance(f, RightComp):
        nid = dot.node(f"rcomp@{f.index} {_probs(f.dist)}", shape="box")
        dot.edge(nid, _endofn(dot, f.inner))
        return nid
    if isinstance(f, EndoComp):
        nid = dot.node(f"ecomp@{f.index}", shape="box")
        dot.edge(nid, _endofn(dot, f.outer))
        dot.edge(nid, _endofn(dot, f.inner))
        return nid
    raise TypeError(f"not a function node: {f!r}")
