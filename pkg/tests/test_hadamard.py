import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from irreps.hadamard import ShotPlan, overlap, p_zero, simulate_estimate
from irreps.liegroup import random_unitary
from irreps.schar import hoeffding_shots
from irreps.symrep import rep_adjacent


def random_state(d, rng):
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def circuit_p_zero(U, psi, control):
    """Outcome-0 probability of the explicit two-register circuit.

    Control starts in (|0> + control|1>)/sqrt(2); after controlled-U and a
    Hadamard the 0 branch holds (psi + control U psi)/2.
    """
    branch = (psi + control * (U @ psi)) / 2
    return float(np.vdot(branch, branch).real)


# ---- overlap and p_zero ----

def test_overlap_identity_and_minus_identity(rng):
    psi = random_state(4, rng)
    assert overlap(np.eye(4), psi) == pytest.approx(1)
    assert overlap(-np.eye(4), psi) == pytest.approx(-1)


def test_overlap_symrep_entry():
    psi = np.array([1.0, 0.0])
    assert overlap(rep_adjacent((2, 1), 2).toarray(), psi) == pytest.approx(-0.5)


def test_overlap_accepts_callable(rng):
    U = random_unitary(3, rng)
    psi = random_state(3, rng)
    assert overlap(lambda v: U @ v, psi) == pytest.approx(np.vdot(psi, U @ psi))
    assert abs(overlap(U, psi)) <= 1 + 1e-12


def test_overlap_rejects_unnormalized():
    with pytest.raises(ValueError):
        overlap(np.eye(2), np.array([1.0, 1.0]))


@pytest.mark.parametrize("part, p", [(1, 1), (-1, 0), (0, 0.5), (0.2, 0.6)])
def test_p_zero_values(part, p):
    assert p_zero(part) == pytest.approx(p)


@pytest.mark.parametrize("part", [1.5, -1.01])
def test_p_zero_rejects_out_of_range(part):
    with pytest.raises(ValueError):
        p_zero(part)


@given(st.floats(-1, 1))
def test_p_zero_in_unit_interval(x):
    assert 0 <= p_zero(x) <= 1


def test_p_zero_matches_explicit_circuit(rng):
    for _ in range(20):
        U = random_unitary(4, rng)
        psi = random_state(4, rng)
        z = overlap(U, psi)
        assert p_zero(z.real) == pytest.approx(circuit_p_zero(U, psi, 1), abs=1e-12)
        assert p_zero(z.imag) == pytest.approx(circuit_p_zero(U, psi, -1j), abs=1e-12)


# ---- shot plans ----

def test_plan_for_accuracy_uses_hoeffding():
    plan = ShotPlan.for_accuracy(0.05, 0.01)
    assert plan.shots == hoeffding_shots(0.05, 0.01) == 4239


@pytest.mark.parametrize("kwargs", [
    dict(epsilon=0.1, delta=0.1, shots=10),
    dict(epsilon=0.05, delta=0.01, shots=1060),
    dict(epsilon=0.1, delta=0.1, shots=1000, part="complex"),
    dict(epsilon=0.0, delta=0.1, shots=1000),
    dict(epsilon=0.1, delta=1.0, shots=1000),
])
def test_plan_validation(kwargs):
    with pytest.raises(ValueError):
        ShotPlan(**kwargs)


def test_plan_json_round_trip():
    plan = ShotPlan(0.1, 0.05, 1000, "imaginary", 9)
    assert ShotPlan.from_json(plan.to_json()) == plan
    assert ShotPlan.from_json({"epsilon": 0.1, "delta": 0.05, "part": "real", "seed": 3}).shots == 738


# ---- simulation ----

def test_identity_estimate_is_exact(rng):
    plan = ShotPlan.for_accuracy(0.2, 0.2, seed=4)
    out = simulate_estimate(np.eye(3), random_state(3, rng), plan)
    assert out == {"estimate": 1.0, "stderr": 0.0}


def test_zero_part_concentration():
    # Re <0| diag(i, 1) |0> = 0
    U, psi = np.diag([1j, 1]), np.array([1.0, 0.0])
    plan = ShotPlan(0.05, 0.5, 10_000)
    hits = sum(abs(simulate_estimate(U, psi, plan, rng=s)["estimate"]) <= 0.05 for s in range(100))
    assert hits >= 95


def test_imaginary_part_estimate(rng):
    U = random_unitary(3, rng)
    psi = random_state(3, rng)
    z = overlap(U, psi)
    plan = ShotPlan.for_accuracy(0.05, 0.01, part="imaginary", seed=12)
    assert abs(simulate_estimate(U, psi, plan)["estimate"] - z.imag) <= 0.05


def test_matrix_element_pipeline():
    U = rep_adjacent((2, 1), 2).toarray()
    plan = ShotPlan.for_accuracy(0.05, 0.01)
    hits = sum(abs(simulate_estimate(U, np.array([1.0, 0.0]), plan, rng=s)["estimate"] + 0.5) <= 0.05
               for s in range(100))
    assert hits >= 99


def test_estimator_unbiased(rng):
    U = random_unitary(4, rng)
    psi = random_state(4, rng)
    truth = overlap(U, psi).real
    plan = ShotPlan.for_accuracy(0.2, 0.2)
    estimates = np.array([simulate_estimate(U, psi, plan, rng=s)["estimate"] for s in range(1000)])
    stderr = estimates.std(ddof=1) / math.sqrt(len(estimates))
    assert abs(estimates.mean() - truth) <= 4 * stderr
    assert np.all(np.abs(estimates) <= 1)


def test_seeded_runs_identical(rng):
    U = random_unitary(3, rng)
    psi = random_state(3, rng)
    plan = ShotPlan.for_accuracy(0.1, 0.1, seed=77)
    assert simulate_estimate(U, psi, plan) == simulate_estimate(U, psi, plan)
    assert simulate_estimate(U, psi, plan, workers=4) == simulate_estimate(U, psi, plan, workers=4)


def test_sharded_runs_stay_accurate(rng):
    U = random_unitary(3, rng)
    psi = random_state(3, rng)
    truth = overlap(U, psi).real
    plan = ShotPlan.for_accuracy(0.05, 0.01)
    for workers in (2, 3, 8):
        out = simulate_estimate(U, psi, plan, rng=5, workers=workers)
        assert abs(out["estimate"] - truth) <= 0.05


def test_generator_rng_accepted(rng):
    U = np.diag([1j, 1])
    psi = np.array([1.0, 0.0])
    out = simulate_estimate(U, psi, ShotPlan.for_accuracy(0.1, 0.1), rng=np.random.default_rng(1), workers=2)
    assert -1 <= out["estimate"] <= 1 and out["stderr"] >= 0


def test_permutation_operator_as_callable():
    U = rep_adjacent((2, 1), 1).toarray()
    plan = ShotPlan.for_accuracy(0.1, 0.1, seed=1)
    assert simulate_estimate(lambda v: U @ v, np.array([0.0, 1.0]), plan)["estimate"] == -1.0
