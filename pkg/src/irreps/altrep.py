"""Irreducible representations of the alternating group A_n.

A non-self-conjugate shape restricts irreducibly to A_n ("whole" branch).
A self-conjugate shape splits into the +1 and -1 eigenspaces of the
associator S, defined on the Young-Yamanouchi basis by

    S T = i^((n - d)/2) * sign(w_T) * conj(T)

with d the diagonal length, conj(T) the transposed tableau and w_T the
label permutation carrying T to typewriter order.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .operators import SparseOperator
from .perm import Permutation, sign
from .symrep import basis, rep_permutation, tableau_index
from .tableaux import StandardTableau, YoungDiagram, conjugate_tableau, typewriter_data


class Branch(str, Enum):
    WHOLE = "whole"
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class AltIrrepLabel:
    shape: YoungDiagram
    branch: Branch

    def __post_init__(self):
        shape = YoungDiagram.parse(self.shape)
        branch = Branch(self.branch)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "branch", branch)
        if shape.is_self_conjugate() == (branch is Branch.WHOLE):
            raise ValueError(
                f"branch {branch.value!r} is invalid for shape {shape.to_json()}: "
                "self-conjugate shapes take plus/minus, all others take whole"
            )


@dataclass(frozen=True)
class ConjugatePair:
    first: StandardTableau
    second: StandardTableau
    # S first = coeff * second, S second = conj(coeff) * first
    coeff: complex


@dataclass(frozen=True)
class AssociatorOperator:
    shape: YoungDiagram
    matrix: SparseOperator
    pairs: tuple[ConjugatePair, ...]

    def toarray(self) -> np.ndarray:
        return self.matrix.toarray()


def _require_self_conjugate(shape: YoungDiagram):
    if not shape.is_self_conjugate():
        raise ValueError(f"shape {shape.to_json()} is not self-conjugate")


def _phase(shape: YoungDiagram) -> complex:
    k = (shape.n - shape.diagonal_length()) // 2
    return [1, 1j, -1, -1j][k % 4]


def associator(shape) -> AssociatorOperator:
    shape = YoungDiagram.parse(shape)
    _require_self_conjugate(shape)
    return _associator(shape)


@lru_cache(maxsize=None)
def _associator(shape: YoungDiagram) -> AssociatorOperator:
    tabs = basis(shape)
    half = (shape.n - shape.diagonal_length()) // 2
    phase = _phase(shape)
    entries = {}
    pairs = []
    for t in tabs:
        hat = conjugate_tableau(t)
        s_t = typewriter_data(t).sign
        s_hat = typewriter_data(hat).sign
        if s_t * s_hat != (-1) ** half:
            raise AssertionError(
                f"sign(w_T) * sign(w_That) = {s_t * s_hat} for T = {t.to_json()}, "
                f"expected {(-1) ** half}"
            )
        entries[(tableau_index(shape, hat), tableau_index(shape, t))] = phase * s_t
        if t.word < hat.word:
            pairs.append(ConjugatePair(t, hat, phase * s_t))
    op = SparseOperator(len(tabs), entries)
    return AssociatorOperator(shape, op, tuple(pairs))


def split_basis(shape) -> dict[str, np.ndarray]:
    """Orthonormal bases of the +1 and -1 eigenspaces of S, one vector per column.

    For a pair with ``S T = c T^`` the eigenvectors are ``(T +/- c T^)/sqrt(2)``.
    Pairs are ordered by reading word, ``T`` the smaller. The one-box shape,
    whose only tableau is its own conjugate, has S = 1 and an empty minus branch.
    """
    shape = YoungDiagram.parse(shape)
    s = associator(shape)
    d = s.matrix.dim
    plus = np.zeros((d, len(s.pairs)), dtype=complex)
    minus = np.zeros((d, len(s.pairs)), dtype=complex)
    for k, pair in enumerate(s.pairs):
        a = tableau_index(shape, pair.first)
        b = tableau_index(shape, pair.second)
        plus[a, k] = minus[a, k] = 1 / np.sqrt(2)
        plus[b, k] = pair.coeff / np.sqrt(2)
        minus[b, k] = -pair.coeff / np.sqrt(2)
    if 2 * len(s.pairs) < d:
        plus = np.eye(d, dtype=complex)
    return {"plus": plus, "minus": minus}


def branch_dimension(label: AltIrrepLabel) -> int:
    if label.branch is Branch.WHOLE:
        return len(basis(label.shape))
    return split_basis(label.shape)[label.branch.value].shape[1]


def branch_block(label: AltIrrepLabel, p: Permutation) -> np.ndarray:
    """The full matrix of the A_n irrep ``label`` at the even permutation p."""
    _require_even(p)
    rho = rep_permutation(label.shape, p).entries
    if label.branch is Branch.WHOLE:
        return rho
    vecs = split_basis(label.shape)[label.branch.value]
    return vecs.conj().T @ rho @ vecs


def _require_even(p: Permutation):
    if sign(p) != 1:
        raise ValueError(f"{p.to_json()} is odd and not an element of A_{p.n}")


def alt_matrix_element(label: AltIrrepLabel, p: Permutation, row_idx: int, col_idx: int) -> complex:
    """<v_row| rho(p) |v_col> as a combination of at most four Young-Yamanouchi elements."""
    _require_even(p)
    dim = branch_dimension(label)
    if not (0 <= row_idx < dim and 0 <= col_idx < dim):
        raise IndexError(f"indices ({row_idx}, {col_idx}) outside a {dim}-dim branch")
    rho = rep_permutation(label.shape, p).entries
    if label.branch is Branch.WHOLE:
        return complex(rho[row_idx, col_idx])
    pairs = associator(label.shape).pairs
    if not pairs:
        return complex(branch_block(label, p)[row_idx, col_idx])
    sgn = 1 if label.branch is Branch.PLUS else -1

    def components(pair):
        # v = (T + sgn*c*T^)/sqrt(2)
        return [(tableau_index(label.shape, pair.first), 1 / np.sqrt(2)),
                (tableau_index(label.shape, pair.second), sgn * pair.coeff / np.sqrt(2))]

    total = 0j
    for a, ca in components(pairs[row_idx]):
        for b, cb in components(pairs[col_idx]):
            total += np.conj(ca) * cb * rho[a, b]
    return complex(total)
