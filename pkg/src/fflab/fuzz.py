"""Seeded random-strategy sampling: the nondeterministic membership algorithm
run as a Monte Carlo search.

Each trial plays `steps` rounds, drawing m node picks with replacement per
round (so firefighter sets have size at most m).  Deterministic per seed.
Vectorized over trials with numpy for graphs up to 63 nodes, with a plain
loop fallback above that.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import FIREFIGHTER, VARIANTS, Strategy, step
from .graph import Graph


@dataclass(frozen=True)
class FuzzReport:
    wins: int
    trials: int
    steps: int
    m: int
    seed: int
    variant: str
    first_win_trial: int | None
    first_win_length: int | None
    witness: Strategy | None

    def to_json(self) -> dict:
        return {
            "wins": self.wins,
            "trials": self.trials,
            "steps": self.steps,
            "m": self.m,
            "seed": self.seed,
            "variant": self.variant,
            "first_win_trial": self.first_win_trial,
            "first_win_length": self.first_win_length,
            "witness": self.witness.to_json() if self.witness else None,
        }


def fuzz_strategies(
    g: Graph,
    m: int,
    steps: int,
    trials: int,
    seed: int = 0,
    variant: str = FIREFIGHTER,
) -> FuzzReport:
    """Sample random m-strategies of the given length; report wins."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown game variant {variant!r}")
    if m < 1 or steps < 0 or trials < 1:
        raise ValueError("need m >= 1, steps >= 0, trials >= 1")
    if g.n == 0:
        witness = Strategy(m, (), provenance="fuzz")
        return FuzzReport(trials, trials, steps, m, seed, variant, 0, 0, witness)
    if g.n <= 63:
        return _fuzz_vectorized(g, m, steps, trials, seed, variant)
    return _fuzz_plain(g, m, steps, trials, seed, variant)


def _draw(rng: np.random.Generator, trials: int, m: int, n: int) -> np.ndarray:
    picks = rng.integers(0, n, size=(trials, m), dtype=np.int64)
    masks = np.bitwise_or.reduce(np.int64(1) << picks, axis=1)
    return masks


def _fuzz_vectorized(g: Graph, m: int, steps: int, trials: int, seed: int, variant: str) -> FuzzReport:
    adj = np.array(g.adj, dtype=np.int64)
    full = np.int64(g.full_mask)
    rng = np.random.default_rng(seed)
    burning = np.full(trials, full, dtype=np.int64)
    win_step = np.full(trials, -1, dtype=np.int64)
    for t in range(1, steps + 1):
        fmask = _draw(rng, trials, m, g.n)
        remainder = burning & ~fmask
        spread = remainder if variant == FIREFIGHTER else np.zeros(trials, dtype=np.int64)
        for v in range(g.n):
            hit = (remainder >> v) & 1
            spread = spread | np.where(hit.astype(bool), adj[v], np.int64(0))
        burning = spread
        fresh = (burning == 0) & (win_step < 0)
        win_step[fresh] = t
    wins = int((win_step > 0).sum())
    if wins == 0:
        return FuzzReport(0, trials, steps, m, seed, variant, None, None, None)
    first = int(np.argmax(win_step > 0))
    length = int(win_step[first])
    witness = _replay_witness(g, m, steps, trials, seed, first, length)
    return FuzzReport(wins, trials, steps, m, seed, variant, first, length, witness)


def _replay_witness(g: Graph, m: int, steps: int, trials: int, seed: int, trial: int, length: int) -> Strategy:
    """Regenerate the RNG stream and pull out the winning trial's moves."""
    rng = np.random.default_rng(seed)
    moves = []
    for _ in range(length):
        fmask = _draw(rng, trials, m, g.n)
        moves.append(int(fmask[trial]))
    return Strategy(m, tuple(moves), provenance="fuzz")


def _fuzz_plain(g: Graph, m: int, steps: int, trials: int, seed: int, variant: str) -> FuzzReport:
    rng = np.random.default_rng(seed)
    wins = 0
    first_trial = None
    first_length = None
    witness = None
    for trial in range(trials):
        picks = rng.integers(0, g.n, size=(steps, m))
        burning = g.full_mask
        moves = []
        won_at = None
        for t in range(steps):
            f = 0
            for v in picks[t]:
                f |= 1 << int(v)
            moves.append(f)
            burning = step(g, burning, f, variant)
            if burning == 0:
                won_at = t + 1
                break
        if won_at is not None:
            wins += 1
            if first_trial is None:
                first_trial = trial
                first_length = won_at
                witness = Strategy(m, tuple(moves[:won_at]), provenance="fuzz")
    return FuzzReport(wins, trials, steps, m, seed, variant, first_trial, first_length, witness)
