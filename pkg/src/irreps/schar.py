"""Randomized estimation of normalized S_n characters with Roichman's rule.

For a cycle type mu with partial-sum set B(mu), each standard tableau T
gets a weight W_mu(T) in {-1, 0, 1}; the sum of weights over all standard
tableaux of a shape is the character value. Averaging W over hook-walk
samples estimates chi / d with Hoeffding-bounded error.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .perm import validate_partition
from .tableaux import DEFAULT_SYT_CAP, StandardTableau, YoungDiagram, enumerate_syt, hook_walk_sample


@dataclass(frozen=True)
class RoichmanContext:
    mu: tuple[int, ...]
    b_set: frozenset[int]

    @classmethod
    def from_mu(cls, mu: Sequence[int]) -> RoichmanContext:
        mu = validate_partition(mu)
        sums = set()
        total = 0
        for part in mu:
            total += part
            sums.add(total)
        return cls(mu, frozenset(sums))

    @property
    def n(self) -> int:
        return sum(self.mu)


@dataclass(frozen=True)
class EstimatorReport:
    estimate: float
    shots: int
    epsilon: float
    delta: float
    seed: int | None

    def to_json(self) -> dict:
        return {
            "estimate": self.estimate,
            "shots": self.shots,
            "epsilon": self.epsilon,
            "delta": self.delta,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, data: dict) -> EstimatorReport:
        return cls(float(data["estimate"]), int(data["shots"]), float(data["epsilon"]),
                   float(data["delta"]), data.get("seed"))


def hoeffding_shots(epsilon: float, delta: float) -> int:
    """Samples needed for a [-1, 1]-bounded mean to be within epsilon w.p. 1 - delta.

    Two-sided Hoeffding for range 2: P(|mean - mu| >= epsilon) <= 2 exp(-N epsilon^2 / 2).
    """
    if not (0 < epsilon < 1 and 0 < delta < 1):
        raise ValueError(f"epsilon and delta must lie in (0, 1), got {epsilon}, {delta}")
    return math.ceil(2 * math.log(2 / delta) / epsilon**2)


def _rows(t: StandardTableau) -> list[int]:
    # rows[label] = row index of the box holding label
    out = [0] * (t.n + 2)
    for r, row in enumerate(t.rows):
        for x in row:
            out[x] = r
    return out


def _f(ctx: RoichmanContext, i: int, rows: list[int], n: int) -> int:
    # southwest: strictly lower row; otherwise the box is northeast
    if rows[i + 1] > rows[i]:
        return -1
    if i + 2 <= n and rows[i + 2] > rows[i + 1] and (i + 1) not in ctx.b_set:
        return 0
    return 1


def roichman_f(ctx: RoichmanContext, i: int, t: StandardTableau) -> int:
    if not 1 <= i < t.n:
        raise ValueError(f"roichman_f needs 1 <= i <= {t.n - 1}, got {i}")
    return _f(ctx, i, _rows(t), t.n)


def roichman_weight(ctx: RoichmanContext, t: StandardTableau) -> int:
    if t.n != ctx.n:
        raise ValueError(f"tableau has {t.n} boxes but mu partitions {ctx.n}")
    rows = _rows(t)
    weight = 1
    for i in range(1, t.n):
        if i in ctx.b_set:
            continue
        weight *= _f(ctx, i, rows, t.n)
        if weight == 0:
            break
    return weight


def exact_character_roichman(shape, mu: Sequence[int], cap: int = DEFAULT_SYT_CAP) -> int:
    shape = YoungDiagram.parse(shape)
    ctx = RoichmanContext.from_mu(mu)
    if ctx.n != shape.n:
        raise ValueError(f"mu partitions {ctx.n} but the shape has {shape.n} boxes")
    return sum(roichman_weight(ctx, t) for t in enumerate_syt(shape, cap))


def estimate_normalized_character(
    shape,
    mu: Sequence[int],
    epsilon: float,
    delta: float,
    rng: np.random.Generator | int | None = None,
) -> EstimatorReport:
    """Mean of W_mu over hook-walk samples, with the Hoeffding sample count."""
    shape = YoungDiagram.parse(shape)
    ctx = RoichmanContext.from_mu(mu)
    if ctx.n != shape.n:
        raise ValueError(f"mu partitions {ctx.n} but the shape has {shape.n} boxes")
    shots = hoeffding_shots(epsilon, delta)
    seed = rng if isinstance(rng, int) else None
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    total = sum(roichman_weight(ctx, hook_walk_sample(shape, rng)) for _ in range(shots))
    return EstimatorReport(total / shots, shots, epsilon, delta, seed)
