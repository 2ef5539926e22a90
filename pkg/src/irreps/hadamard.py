"""Shot-level simulation of the Hadamard test.

A control qubit prepared in (|0> + |1>)/sqrt(2), a controlled U on |psi>
and a final Hadamard give outcome 0 with probability (1 + Re<psi|U|psi>)/2.
Preparing the control in (|0> - i|1>)/sqrt(2) instead gives
(1 + Im<psi|U|psi>)/2. The ancilla is never built: the outcome distribution
is computed from the exact overlap and sampled directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .schar import hoeffding_shots

NORM_TOL = 1e-10

Operator = Union[Callable[[np.ndarray], np.ndarray], np.ndarray]


@dataclass(frozen=True)
class ShotPlan:
    epsilon: float
    delta: float
    shots: int
    part: str = "real"
    seed: int | None = None

    def __post_init__(self):
        if self.part not in ("real", "imaginary"):
            raise ValueError(f"part must be 'real' or 'imaginary', got {self.part!r}")
        needed = hoeffding_shots(self.epsilon, self.delta)
        if self.shots < needed:
            raise ValueError(
                f"{self.shots} shots cannot reach epsilon={self.epsilon}, delta={self.delta}; "
                f"need at least {needed}"
            )

    @classmethod
    def for_accuracy(cls, epsilon: float, delta: float, part: str = "real",
                     seed: int | None = None) -> ShotPlan:
        return cls(epsilon, delta, hoeffding_shots(epsilon, delta), part, seed)

    def to_json(self) -> dict:
        return {"epsilon": self.epsilon, "delta": self.delta, "part": self.part,
                "seed": self.seed, "shots": self.shots}

    @classmethod
    def from_json(cls, data: dict) -> ShotPlan:
        eps, delta = float(data["epsilon"]), float(data["delta"])
        shots = data.get("shots")
        shots = hoeffding_shots(eps, delta) if shots is None else int(shots)
        return cls(eps, delta, shots, data.get("part", "real"), data.get("seed"))


def _apply(apply_U: Operator, psi: np.ndarray) -> np.ndarray:
    if callable(apply_U):
        return np.asarray(apply_U(psi))
    return np.asarray(apply_U) @ psi


def overlap(apply_U: Operator, psi) -> complex:
    """<psi| U |psi> for a unit vector psi."""
    psi = np.asarray(psi, dtype=complex)
    norm = np.linalg.norm(psi)
    if abs(norm - 1) > NORM_TOL:
        raise ValueError(f"state must be normalized, got norm {norm}")
    return complex(np.vdot(psi, _apply(apply_U, psi)))


def p_zero(overlap_part: float) -> float:
    """Probability of reading 0 on the control qubit."""
    if not -1 - NORM_TOL <= overlap_part <= 1 + NORM_TOL:
        raise ValueError(f"overlap part must lie in [-1, 1], got {overlap_part}")
    return min(1.0, max(0.0, (1 + overlap_part) / 2))


def simulate_estimate(
    apply_U: Operator,
    psi,
    plan: ShotPlan,
    rng: np.random.Generator | int | None = None,
    workers: int = 1,
) -> dict:
    """Estimate Re or Im of <psi|U|psi> from ``plan.shots`` simulated measurements.

    Shots are split over ``workers`` independent streams spawned from one seed
    and merged by total count, so the result depends only on the seed and
    the worker count.
    """
    z = overlap(apply_U, psi)
    p0 = p_zero(z.real if plan.part == "real" else z.imag)
    if rng is None:
        rng = plan.seed
    if isinstance(rng, np.random.Generator):
        streams = [rng] if workers == 1 else rng.spawn(workers)
    else:
        streams = [np.random.default_rng(s) for s in np.random.SeedSequence(rng).spawn(workers)]
    sizes = [plan.shots // workers + (k < plan.shots % workers) for k in range(workers)]
    zeros = sum(int(g.binomial(m, p0)) for g, m in zip(streams, sizes))
    estimate = 2 * zeros / plan.shots - 1
    stderr = float(np.sqrt(max(0.0, 1 - estimate**2) / plan.shots))
    return {"estimate": estimate, "stderr": stderr}
