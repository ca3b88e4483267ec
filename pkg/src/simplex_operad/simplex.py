"""Finite probability distributions and their operadic composition.

A distribution of arity n is a point of the (n-1)-simplex, treated as an
abstract n-ary operation.  Plugging one distribution into a slot of
another multiplies the inner entries by the slot's probability; doing it
for every slot at once is simultaneous composition.  Both keep exact
rational entries exact, so the composition laws can be checked bit for
bit.

Indices are 1-based on the whole public surface.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import Scalar, as_scalar, format_scalar, is_exact, parse_scalar, scalar_json

# Absolute slack allowed on the total mass of a float-mode distribution.
FLOAT_SUM_TOL = 1e-9


class InvalidDistributionError(ValueError):
    """Entries outside [0, 1], wrong total mass, or an empty tuple."""


@dataclass(frozen=True)
class Dist:
    """An arity-n probability distribution, exact or float.

    Entries are all Fractions (exact mode) or all floats (float mode);
    mixed input is coerced to float.  Construction validates the simplex
    invariants and never renormalizes -- use :func:`normalize` for that.
    """

    probs: tuple[Scalar, ...]

    def __init__(self, probs: Iterable[Scalar]):
        entries = tuple(probs)
        if not entries:
            raise InvalidDistributionError("a distribution needs at least one entry")
        entries = tuple(as_scalar(p) for p in entries)
        if any(isinstance(p, float) for p in entries):
            entries = tuple(float(p) for p in entries)
        _validate(entries)
        object.__setattr__(self, "probs", entries)

    @classmethod
    def _trusted(cls, entries: tuple[Scalar, ...]) -> "Dist":
        # Fast path for compositions of already-validated distributions;
        # the simplex invariants hold by construction.
        out = object.__new__(cls)
        object.__setattr__(out, "probs", entries)
        return out

    @property
    def arity(self) -> int:
        return len(self.probs)

    @property
    def mode(self) -> str:
        return "exact" if is_exact(self.probs[0]) else "float"

    def prob(self, i: int) -> Scalar:
        """The i-th entry, 1-based."""
        if not 1 <= i <= len(self.probs):
            raise IndexError(f"slot {i} out of range 1..{len(self.probs)}")
        return self.probs[i - 1]

    def to_float(self) -> "Dist":
        """Float-mode copy (identity for float-mode inputs)."""
        if self.mode == "float":
            return self
        return Dist._trusted(tuple(float(p) for p in self.probs))

    def __str__(self) -> str:
        return format_dist(self)


def _validate(entries: tuple[Scalar, ...]) -> None:
    for p in entries:
        if not 0 <= p <= 1:
            raise InvalidDistributionError(f"entry {format_scalar(p)} outside [0, 1]")
    total = sum(entries)
    if is_exact(entries[0]):
        if total != 1:
            raise InvalidDistributionError(f"entries sum to {total}, expected 1")
    elif abs(total - 1.0) > FLOAT_SUM_TOL:
        raise InvalidDistributionError(
            f"entries sum to {total!r}, more than {FLOAT_SUM_TOL} away from 1"
        )


_UNIT = Dist((Fraction(1),))


def unit_dist() -> Dist:
    """The arity-1 distribution (1): the composition identity."""
    return _UNIT


def uniform_dist(n: int) -> Dist:
    """The exact uniform distribution on n outcomes."""
    if n < 1:
        raise InvalidDistributionError("arity must be >= 1")
    return Dist._trusted((Fraction(1, n),) * n)


def compose_at(p: Dist, q: Dist, i: int) -> Dist:
    """Plug q into slot i of p.

    The i-th entry of p is replaced by that entry times each entry of q,
    giving arity(p) + arity(q) - 1.  Exact in, exact out.
    """
    if not 1 <= i <= p.arity:
        raise IndexError(f"slot {i} out of range 1..{p.arity}")
    pi = p.probs[i - 1]
    entries = p.probs[: i - 1] + tuple(pi * qk for qk in q.probs) + p.probs[i:]
    if p.mode != q.mode:
        # mixed modes collapse to float
        entries = tuple(float(x) for x in entries)
    return Dist._trusted(entries)


def compose_simul(p: Dist, qs: Sequence[Dist]) -> Dist:
    """Plug one distribution into every slot of p at once.

    Defined as the right-to-left fold of :func:`compose_at` (slots n down
    to 1), which leaves earlier slot indices undisturbed and produces
    (p_1 q^1_1, ..., p_1 q^1_{k_1}, ..., p_n q^n_1, ..., p_n q^n_{k_n}).
    """
    if len(qs) != p.arity:
        raise ValueError(f"expected {p.arity} operands, got {len(qs)}")
    out = p
    for i in range(p.arity, 0, -1):
        out = compose_at(out, qs[i - 1], i)
    return out


def normalize(values: Iterable[Scalar]) -> Dist:
    """Scale nonnegative weights to total mass 1.

    Provided as an explicit step only: no constructor or operation ever
    renormalizes silently.
    """
    entries = tuple(as_scalar(v) for v in values)
    if not entries:
        raise InvalidDistributionError("nothing to normalize")
    total = sum(entries)
    if total <= 0:
        raise InvalidDistributionError(f"weights sum to {total}, expected > 0")
    return Dist(tuple(v / total for v in entries))


def eta(x: Scalar, base: float = math.e) -> float:
    """The entropy summand -x log x on [0, 1], with 0 log 0 = 0.

    Satisfies the multiplicative Leibniz identity
    eta(x*y) = eta(x)*y + x*eta(y).
    """
    xf = float(x)
    if not 0.0 <= xf <= 1.0:
        raise ValueError(f"eta is defined on [0, 1], got {xf!r}")
    if xf == 0.0:
        return 0.0
    value = -xf * math.log(xf)
    if base != math.e:
        value /= math.log(base)
    return value


def entropy(p: Dist, base: float = math.e) -> float:
    """Shannon entropy -sum p_i log p_i, zero entries contributing 0."""
    if base <= 0 or base == 1:
        raise ValueError(f"bad logarithm base {base!r}")
    acc = 0.0
    for pi in p.probs:
        x = float(pi)
        if x > 0.0:
            acc -= x * math.log(x)
    if base != math.e:
        acc /= math.log(base)
    return acc


def parse_dist(text: str) -> Dist:
    """Parse the inline form: comma-separated fractions or decimals."""
    parts = [part for part in text.split(",")]
    if not parts or not any(part.strip() for part in parts):
        raise InvalidDistributionError(f"no entries in {text!r}")
    return Dist(tuple(parse_scalar(part) for part in parts))


def format_dist(d: Dist) -> str:
    """Inline form; parse_dist round-trips it to an equal Dist."""
    return ",".join(format_scalar(p) for p in d.probs)


def dist_to_json(d: Dist) -> dict:
    """JSON object form: {"probs": ["1/6", ...]} or {"probs": [0.5, ...]}."""
    return {"probs": [scalar_json(p) for p in d.probs]}


def dist_from_json(obj: dict | str) -> Dist:
    """Inverse of :func:`dist_to_json`; accepts the JSON text or dict."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "probs" not in obj:
        raise InvalidDistributionError('expected an object with a "probs" array')
    probs = obj["probs"]
    if not isinstance(probs, list):
        raise InvalidDistributionError('"probs" must be an array')
    return Dist(tuple(parse_scalar(p) for p in probs))
