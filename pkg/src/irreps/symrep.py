"""Young's orthogonal (Young-Yamanouchi) form of the irreducible representations of S_n.

The basis of the irrep labelled by a shape is ``enumerate_syt(shape)``.
The adjacent transposition sigma_i sends a tableau T to

    (1/tau) T + sqrt(1 - 1/tau^2) T'

where tau is the axial distance from box i+1 to box i and T' swaps the
labels i and i+1. When T' is not standard, |tau| = 1 and the second
coefficient vanishes.
"""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
import scipy.sparse as sp

from .operators import DenseUnitary, SparseOperator
from .perm import Permutation, bubblesort_decompose
from .tableaux import (
    CapExceededError,
    StandardTableau,
    YoungDiagram,
    axial_distance,
    enumerate_syt,
    swap_labels,
    syt_count,
)

DEFAULT_DIM_CAP = 4096


def basis(shape, dim_cap: int = DEFAULT_DIM_CAP) -> list[StandardTableau]:
    shape = YoungDiagram.parse(shape)
    d = syt_count(shape)
    if d > dim_cap:
        raise CapExceededError(f"irrep {shape.to_json()} has dimension {d} > cap {dim_cap}")
    return enumerate_syt(shape, cap=max(shape.n, 1))


@lru_cache(maxsize=None)
def _index(rows: tuple[int, ...]) -> dict[StandardTableau, int]:
    return {t: k for k, t in enumerate(enumerate_syt(rows, cap=sum(rows)))}


def tableau_index(shape, t: StandardTableau) -> int:
    shape = YoungDiagram.parse(shape)
    if t.shape != shape:
        raise ValueError(f"tableau {t.to_json()} does not have shape {shape.to_json()}")
    return _index(shape.rows)[t]


@lru_cache(maxsize=None)
def _adjacent_real(rows: tuple[int, ...], i: int) -> sp.csr_array:
    tabs = enumerate_syt(rows, cap=sum(rows))
    index = _index(rows)
    r_idx, c_idx, vals = [], [], []
    for col, t in enumerate(tabs):
        tau = axial_distance(t, i)
        r_idx.append(col)
        c_idx.append(col)
        vals.append(1.0 / tau)
        swapped = swap_labels(t, i)
        if swapped is None:
            if abs(tau) != 1:
                raise AssertionError(f"non-standard swap with axial distance {tau}")
            continue
        r_idx.append(index[swapped])
        c_idx.append(col)
        vals.append(math.sqrt(1.0 - 1.0 / tau**2))
    d = len(tabs)
    return sp.csr_array((vals, (r_idx, c_idx)), shape=(d, d))


def rep_adjacent(shape, i: int) -> SparseOperator:
    """rho_shape(sigma_i) as a sparse real symmetric orthogonal matrix."""
    shape = YoungDiagram.parse(shape)
    if not 1 <= i < shape.n:
        raise ValueError(f"sigma_{i} is not a generator of S_{shape.n}")
    mat = _adjacent_real(shape.rows, i)
    return SparseOperator(mat.shape[0], mat)


def rep_permutation(shape, p: Permutation, dim_cap: int = DEFAULT_DIM_CAP) -> DenseUnitary:
    """rho_shape(p) as the product of generator matrices along the bubblesort word."""
    shape = YoungDiagram.parse(shape)
    if p.n != shape.n:
        raise ValueError(f"permutation of {p.n} points does not act on shape {shape.to_json()}")
    d = len(basis(shape, dim_cap))
    out = np.eye(d)
    for i in bubblesort_decompose(p):
        # out @ G computed as (G^T @ out^T)^T; G is symmetric
        out = (_adjacent_real(shape.rows, i) @ out.T).T
    return DenseUnitary(out)


def matrix_element(shape, p: Permutation, row: StandardTableau, col: StandardTableau) -> float:
    """<row| rho_shape(p) |col>."""
    shape = YoungDiagram.parse(shape)
    r = tableau_index(shape, row)
    c = tableau_index(shape, col)
    return float(rep_permutation(shape, p).entries[r, c])


def apply_permutation(shape, p: Permutation, vec: np.ndarray) -> np.ndarray:
    """rho_shape(p) @ vec without forming the dense matrix."""
    shape = YoungDiagram.parse(shape)
    out = np.asarray(vec)
    for i in reversed(bubblesort_decompose(p)):
        out = _adjacent_real(shape.rows, i) @ out
    return out


def exact_character(shape, p: Permutation, dim_cap: int = DEFAULT_DIM_CAP) -> float:
    return float(np.trace(rep_permutation(shape, p, dim_cap).entries))


def rms(mat) -> float:
    mat = np.asarray(mat)
    return float(np.sqrt(np.mean(np.abs(mat) ** 2)))
