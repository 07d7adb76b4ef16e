"""Exact game semantics for both propagation rules, plus strategy verification.

State evolution starts from the fully burning node set.  Each round the
firefighter set is removed, then fire propagates from the provisionally
burning remainder:

* firefighter rule: the remainder keeps burning and ignites its neighbors;
* hunter rule: the new burning set is exactly the union of the neighbors of
  the remainder (the fugitive has to move).

A strategy wins when the burning set is empty after its last step.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, adjacent_union, iter_bits, mask_of, nodes_of

FIREFIGHTER = "firefighter"
HUNTER = "hunter"
VARIANTS = (FIREFIGHTER, HUNTER)


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"unknown game variant {variant!r}; choose from {VARIANTS}")


@dataclass(frozen=True)
class Strategy:
    """A budgeted sequence of firefighter sets, stored as node bitmasks."""

    m: int
    steps: tuple[int, ...]
    provenance: str | None = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("strategy budget must be a positive integer")
        for t, f in enumerate(self.steps, start=1):
            if f < 0:
                raise ValueError(f"step {t} is not a node mask")
            if f.bit_count() > self.m:
                raise ValueError(f"step {t} uses {f.bit_count()} firefighters, budget is {self.m}")

    def __len__(self) -> int:
        return len(self.steps)

    @staticmethod
    def from_node_lists(m: int, steps: Iterable[Iterable[int]], provenance: str | None = None) -> "Strategy":
        return Strategy(m, tuple(mask_of(s) for s in steps), provenance)

    def step_nodes(self) -> list[list[int]]:
        return [nodes_of(f) for f in self.steps]

    def to_json(self) -> dict:
        out = {"m": self.m, "steps": self.step_nodes()}
        if self.provenance is not None:
            out["provenance"] = self.provenance
        return out

    @staticmethod
    def from_json(data: dict) -> "Strategy":
        return Strategy.from_node_lists(data["m"], data["steps"], data.get("provenance"))

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @staticmethod
    def loads(text: str) -> "Strategy":
        return Strategy.from_json(json.loads(text))

    def check_in_range(self, g: Graph) -> None:
        for t, f in enumerate(self.steps, start=1):
            if f & ~g.full_mask:
                raise ValueError(f"step {t} targets nodes outside 0..{g.n - 1}")


def step(g: Graph, burning: int, firefighters: int, variant: str = FIREFIGHTER) -> int:
    """One extinguish-then-propagate round; returns the new burning mask."""
    _check_variant(variant)
    if firefighters & ~g.full_mask:
        raise ValueError("firefighter set out of node range")
    remainder = burning & ~firefighters
    if variant == FIREFIGHTER:
        return remainder | adjacent_union(g, remainder)
    return adjacent_union(g, remainder)


def run(g: Graph, strategy: Strategy, variant: str = FIREFIGHTER) -> list[int]:
    """Burning-set trace of the strategy; trace[0] is the full node set."""
    strategy.check_in_range(g)
    trace = [g.full_mask]
    for f in strategy.steps:
        trace.append(step(g, trace[-1], f, variant))
    return trace


def is_winning(g: Graph, strategy: Strategy, variant: str = FIREFIGHTER) -> bool:
    """True iff the burning set is empty after the final step."""
    return run(g, strategy, variant)[-1] == 0


@dataclass(frozen=True)
class VerifyResult:
    won: bool
    final_time: int
    final_burning: int

    @property
    def failing_step(self) -> int | None:
        return None if self.won else self.final_time


def verify(g: Graph, strategy: Strategy, variant: str = FIREFIGHTER) -> VerifyResult:
    """Streaming verification; reports the final time and burning set on loss."""
    strategy.check_in_range(g)
    burning = g.full_mask
    t = 0
    for f in strategy.steps:
        burning = step(g, burning, f, variant)
        t += 1
    return VerifyResult(burning == 0, t, burning)


def doubled(strategy: Strategy) -> Strategy:
    """(F1, F1, F2, F2, ...): each firefighter set repeated once."""
    steps: list[int] = []
    for f in strategy.steps:
        steps += [f, f]
    return Strategy(strategy.m, tuple(steps), provenance="doubled")


def concat(m: int, parts: Sequence[Strategy | Sequence[int]], provenance: str | None = None) -> Strategy:
    """Concatenate step sequences under a common budget."""
    steps: list[int] = []
    for part in parts:
        steps.extend(part.steps if isinstance(part, Strategy) else part)
    return Strategy(m, tuple(steps), provenance)


__all__ = [
    "FIREFIGHTER",
    "HUNTER",
    "VARIANTS",
    "Strategy",
    "VerifyResult",
    "step",
    "run",
    "is_winning",
    "verify",
    "doubled",
    "concat",
    "iter_bits",
]
