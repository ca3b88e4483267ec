"""Outcome records for law sweeps."""

from __future__ import annotations

import json
from dataclasses import dataclass

ASSOC_LEFT = "assoc-left"
ASSOC_NESTED = "assoc-nested"
ASSOC_RIGHT = "assoc-right"
ASSOC_CASES = (ASSOC_LEFT, ASSOC_NESTED, ASSOC_RIGHT)

KNOWN_CASES = ASSOC_CASES + (
    "identity-left",
    "identity-right",
    "representation",
    "module-assoc",
    "distributivity",
    "leibniz",
    "chain-rule",
)


def assoc_window(j: int, m: int, i: int) -> str:
    """Which associativity case covers recomposing at slot i after a slot-j
    composition with an arity-m operand.  The three windows partition the
    valid range 1 <= i <= n+m-1."""
    if i <= j - 1:
        return ASSOC_LEFT
    if i <= j + m - 1:
        return ASSOC_NESTED
    return ASSOC_RIGHT


@dataclass(frozen=True)
class LawCase:
    """One named instance of a law: the case, the arities involved, and
    the slot indices."""

    law: str
    arities: tuple[int, ...] = ()
    indices: tuple[int, ...] = ()

    def __post_init__(self):
        if self.law not in KNOWN_CASES:
            raise ValueError(f"unknown law case {self.law!r}")
        if self.law in ASSOC_CASES:
            n, m, k = self.arities
            i, j = self.indices
            if not 1 <= j <= n:
                raise ValueError(f"slot j={j} out of range 1..{n}")
            if not 1 <= i <= n + m - 1:
                raise ValueError(f"slot i={i} out of range 1..{n + m - 1}")
            if assoc_window(j, m, i) != self.law:
                raise ValueError(
                    f"(i={i}, j={j}) lies in the {assoc_window(j, m, i)} window, "
                    f"not {self.law}"
                )

    def to_dict(self) -> dict:
        return {"law": self.law, "arities": list(self.arities), "indices": list(self.indices)}


@dataclass
class LawReport:
    """Result of one sweep: sample and violation counts, the worst
    residual seen, and the inputs that produced it."""

    law: str
    samples: int
    violations: int
    worst_residual: float
    witness: dict | None
    seed: int

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "samples": self.samples,
            "violations": self.violations,
            "worst_residual": self.worst_residual,
            "witness": self.witness,
            "seed": self.seed,
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)


def merge_reports(a: LawReport, b: LawReport) -> LawReport:
    """Associative reduction of two partial sweeps of the same law:
    counts add, residuals take the max, the worse witness survives."""
    if a.law != b.law or a.seed != b.seed:
        raise ValueError("can only merge reports from the same sweep")
    worse = a if a.worst_residual >= b.worst_residual else b
    return LawReport(
        law=a.law,
        samples=a.samples + b.samples,
        violations=a.violations + b.violations,
        worst_residual=worse.worst_residual,
        witness=worse.witness,
        seed=a.seed,
    )


class _Tracker:
    """Accumulates sweep state; shared by all checkers."""

    def __init__(self, law: str, seed: int, tol: float):
        self.law = law
        self.seed = seed
        self.tol = tol
        self.samples = 0
        self.violations = 0
        self.worst = 0.0
        self.witness: dict | None = None

    def record(self, residual: float, witness):
        # witness may be a dict or a zero-arg callable producing one, so
        # sweeps only pay for formatting when a sample becomes the worst
        self.samples += 1
        if residual > self.worst or self.witness is None:
            self.worst = residual
            self.witness = witness() if callable(witness) else witness
        if residual > self.tol:
            self.violations += 1

    def report(self) -> LawReport:
        return LawReport(
            law=self.law,
            samples=self.samples,
            violations=self.violations,
            worst_residual=self.worst,
            witness=self.witness,
            seed=self.seed,
        )
