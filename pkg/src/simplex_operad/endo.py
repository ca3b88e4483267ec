"""Real n-ary functions as closed expression trees.

The node grammar covers constants, coordinate projections, inner products
against a distribution, pointwise sums, and the three composition shapes:
substitution of one function into another, and the left/right
compositions against a distribution.  Left composition evaluates the
inner function on the m-wide window starting at the chosen slot and
scales by that slot's probability; every coordinate outside the window is
a "plug" and is ignored.  Right composition feeds the inner product of
the distribution with the window into the chosen argument of the outer
function.

Keeping functions as data (instead of opaque callables) lets composites
be printed, serialized, and structurally inspected.  All nodes are
immutable; evaluation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .simplex import Dist

Point = tuple[float, ...]


def subtuple(x: Sequence[float], i: int, k: int) -> Point:
    """The k coordinates of x starting at position i (1-based)."""
    if i < 1 or i + k - 1 > len(x):
        raise IndexError(f"window [{i}, {i + k - 1}] outside 1..{len(x)}")
    return tuple(x[i - 1 : i - 1 + k])


class EndoFn:
    """Base class for function nodes; subclasses are frozen dataclasses."""

    arity: int

    def __call__(self, x: Sequence[float]) -> float:
        return evaluate(self, x)

    def __add__(self, other: "EndoFn") -> "EndoFn":
        return add(self, other)


@dataclass(frozen=True)
class Const(EndoFn):
    value: float
    arity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))
        if self.arity < 1:
            raise ValueError("arity must be >= 1")

    def _eval(self, x) -> float:
        return self.value


@dataclass(frozen=True)
class Proj(EndoFn):
    """The k-th coordinate of an arity-n input (defaults to arity k)."""

    index: int
    arity: int = 0

    def __post_init__(self):
        if self.arity == 0:
            object.__setattr__(self, "arity", self.index)
        if self.index < 1 or self.index > self.arity:
            raise ValueError(f"projection index {self.index} outside 1..{self.arity}")

    def _eval(self, x) -> float:
        return float(x[self.index - 1])


@dataclass(frozen=True)
class Repr(EndoFn):
    """The inner product against a fixed distribution."""

    dist: Dist

    @property
    def arity(self) -> int:
        return self.dist.arity

    def _eval(self, x) -> float:
        return sum(float(p) * float(xi) for p, xi in zip(self.dist.probs, x))


@dataclass(frozen=True)
class Sum(EndoFn):
    left: EndoFn
    right: EndoFn

    def __post_init__(self):
        if self.left.arity != self.right.arity:
            raise ValueError(
                f"cannot add arity {self.left.arity} to arity {self.right.arity}"
            )

    @property
    def arity(self) -> int:
        return self.left.arity

    def _eval(self, x) -> float:
        return self.left._eval(x) + self.right._eval(x)


@dataclass(frozen=True)
class LeftComp(EndoFn):
    """Slot-i composition of a distribution with a function: the value is
    dist's i-th probability times the inner function on the window
    starting at i.  Coordinates outside the window are plugged."""

    dist: Dist
    index: int
    inner: EndoFn

    def __post_init__(self):
        if not 1 <= self.index <= self.dist.arity:
            raise IndexError(f"slot {self.index} out of range 1..{self.dist.arity}")

    @property
    def arity(self) -> int:
        return self.dist.arity + self.inner.arity - 1

    def _eval(self, x) -> float:
        i, m = self.index, self.inner.arity
        return float(self.dist.probs[i - 1]) * self.inner._eval(x[i - 1 : i - 1 + m])


@dataclass(frozen=True)
class RightComp(EndoFn):
    """Slot-i composition of a function with a distribution: the inner
    product of dist with the window replaces the i-th argument."""

    inner: EndoFn
    index: int
    dist: Dist

    def __post_init__(self):
        if not 1 <= self.index <= self.inner.arity:
            raise IndexError(f"slot {self.index} out of range 1..{self.inner.arity}")

    @property
    def arity(self) -> int:
        return self.inner.arity + self.dist.arity - 1

    def _eval(self, x) -> float:
        i, m = self.index, self.dist.arity
        window = x[i - 1 : i - 1 + m]
        pooled = sum(float(q) * float(xk) for q, xk in zip(self.dist.probs, window))
        return self.inner._eval((*x[: i - 1], pooled, *x[i - 1 + m :]))


@dataclass(frozen=True)
class EndoComp(EndoFn):
    """Slot-i substitution: the inner function's output becomes the i-th
    input of the outer one."""

    outer: EndoFn
    index: int
    inner: EndoFn

    def __post_init__(self):
        if not 1 <= self.index <= self.outer.arity:
            raise IndexError(f"slot {self.index} out of range 1..{self.outer.arity}")

    @property
    def arity(self) -> int:
        return self.outer.arity + self.inner.arity - 1

    def _eval(self, x) -> float:
        i, m = self.index, self.inner.arity
        plugged = self.inner._eval(x[i - 1 : i - 1 + m])
        return self.outer._eval((*x[: i - 1], plugged, *x[i - 1 + m :]))


def evaluate(f: EndoFn, x: Sequence[float]) -> float:
    """Evaluate f at a point of matching length."""
    if len(x) != f.arity:
        raise ValueError(f"arity {f.arity} function applied to {len(x)} coordinates")
    return f._eval(tuple(x))


def represent(p: Dist) -> Repr:
    """The standard action of a distribution on real tuples: x -> <p, x>.

    Sends the unit distribution to the identity on one coordinate and
    turns slot composition of distributions into substitution of
    functions.
    """
    return Repr(p)


def endo_compose(f: EndoFn, i: int, g: EndoFn) -> EndoFn:
    """Use g's output as the i-th input of f."""
    return EndoComp(f, i, g)


def left_compose(p: Dist, i: int, f: EndoFn) -> EndoFn:
    """p_i times f on the window at slot i; other coordinates are plugged."""
    return LeftComp(p, i, f)


def right_compose(g: EndoFn, i: int, q: Dist) -> EndoFn:
    """Feed <q, window at slot i> into the i-th argument of g."""
    return RightComp(g, i, q)


def add(f: EndoFn, g: EndoFn) -> EndoFn:
    """Pointwise sum; Const(0, n) is the additive identity."""
    return Sum(f, g)
