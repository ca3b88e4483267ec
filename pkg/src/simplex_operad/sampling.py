"""Deterministic generators for law sweeps.

Each sample derives its own RNG from (seed, index), so sweeps are
reproducible and order-independent: evaluating samples in any order (or
in parallel) yields the same stream per index.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .endo import Const, EndoFn, Proj, Repr, Sum
from .simplex import Dist

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def rng_for(seed: int, index: int) -> random.Random:
    """A fresh RNG for sample `index` of a sweep seeded with `seed`."""
    x = (seed + _GOLDEN * (index + 1)) & _MASK
    # splitmix64 finalizer
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return random.Random(x ^ (x >> 31))


def random_exact_dist(
    rng: random.Random,
    arity: int,
    max_weight: int = 20,
    zero_at: int | None = None,
) -> Dist:
    """Integer weights in [0, max_weight] normalized by their sum: exact
    by construction.  Zero entries occur naturally; `zero_at` forces one
    (requires arity >= 2)."""
    if zero_at is not None and arity < 2:
        raise ValueError("cannot zero the only slot")
    while True:
        weights = [rng.randint(0, max_weight) for _ in range(arity)]
        if zero_at is not None:
            weights[zero_at - 1] = 0
        total = sum(weights)
        if total > 0:
            return Dist(tuple(Fraction(w, total) for w in weights))


def random_float_dist(rng: random.Random, arity: int, max_weight: int = 20) -> Dist:
    return random_exact_dist(rng, arity, max_weight).to_float()


def random_point(rng: random.Random, length: int, low: float = -10.0, high: float = 10.0):
    return tuple(rng.uniform(low, high) for _ in range(length))


def random_endofn(rng: random.Random, arity: int, depth: int = 3) -> EndoFn:
    """A random function body over constants, projections, inner products,
    and sums, nested at most `depth` deep."""
    if depth <= 0 or rng.random() < 0.3:
        kind = rng.choice(("const", "proj", "repr"))
        if kind == "const":
            return Const(rng.uniform(-2.0, 2.0), arity)
        if kind == "proj":
            return Proj(rng.randint(1, arity), arity)
        return Repr(random_exact_dist(rng, arity))
    return Sum(random_endofn(rng, arity, depth - 1), random_endofn(rng, arity, depth - 1))
