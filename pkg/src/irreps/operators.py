"""Sparse generator matrices and dense assembled unitaries."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np
import scipy.sparse as sp

UNITARY_TOL = 1e-9


class SparseOperator:
    """Square complex sparse matrix with no explicitly stored zeros."""

    def __init__(self, dim: int, entries: Mapping[tuple[int, int], complex] | sp.sparray | None = None):
        self.dim = int(dim)
        if entries is None:
            mat = sp.csr_array((self.dim, self.dim), dtype=complex)
        elif sp.issparse(entries):
            mat = sp.csr_array(entries, dtype=complex)
        else:
            keys = [k for k, v in entries.items() if v != 0]
            for r, c in keys:
                if not (0 <= r < self.dim and 0 <= c < self.dim):
                    raise IndexError(f"entry ({r}, {c}) outside a {self.dim}-dim operator")
            data = [entries[k] for k in keys]
            mat = sp.csr_array(
                (np.asarray(data, dtype=complex),
                 ([k[0] for k in keys], [k[1] for k in keys])),
                shape=(self.dim, self.dim),
            )
        mat.sum_duplicates()
        mat.eliminate_zeros()
        if mat.shape != (self.dim, self.dim):
            raise ValueError(f"expected shape {(self.dim, self.dim)}, got {mat.shape}")
        self.matrix = mat

    @classmethod
    def from_dense(cls, dense: np.ndarray) -> SparseOperator:
        dense = np.asarray(dense, dtype=complex)
        return cls(dense.shape[0], sp.csr_array(dense))

    @classmethod
    def zeros(cls, dim: int) -> SparseOperator:
        return cls(dim)

    def rows(self) -> list[list[tuple[int, complex]]]:
        m = self.matrix
        return [
            [(int(c), complex(v)) for c, v in zip(m.indices[m.indptr[r]:m.indptr[r + 1]],
                                                  m.data[m.indptr[r]:m.indptr[r + 1]])]
            for r in range(self.dim)
        ]

    def toarray(self) -> np.ndarray:
        return self.matrix.toarray()

    @property
    def nnz(self) -> int:
        return self.matrix.nnz

    @property
    def T(self) -> SparseOperator:
        return SparseOperator(self.dim, self.matrix.T)

    def adjoint(self) -> SparseOperator:
        return SparseOperator(self.dim, self.matrix.conj().T)

    def __add__(self, other: SparseOperator) -> SparseOperator:
        return SparseOperator(self.dim, self.matrix + other.matrix)

    def __sub__(self, other: SparseOperator) -> SparseOperator:
        return SparseOperator(self.dim, self.matrix - other.matrix)

    def __neg__(self) -> SparseOperator:
        return SparseOperator(self.dim, -self.matrix)

    def __mul__(self, scalar: complex) -> SparseOperator:
        return SparseOperator(self.dim, self.matrix * scalar)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, SparseOperator):
            return SparseOperator(self.dim, self.matrix @ other.matrix)
        return self.matrix @ other

    def commutator(self, other: SparseOperator) -> SparseOperator:
        return self @ other - other @ self

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.matrix.data))) if self.nnz else 0.0

    def __repr__(self) -> str:
        return f"SparseOperator(dim={self.dim}, nnz={self.nnz})"


def unitarity_error(mat: np.ndarray) -> float:
    mat = np.asarray(mat)
    return float(np.max(np.abs(mat.conj().T @ mat - np.eye(mat.shape[0]))))


@dataclass(frozen=True)
class DenseUnitary:
    entries: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.entries)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {mat.shape}")
        err = unitarity_error(mat)
        if err > UNITARY_TOL * max(1, mat.shape[0]):
            raise ValueError(f"matrix is not unitary (max |U^H U - I| = {err:.3e})")
        mat.setflags(write=False)
        object.__setattr__(self, "entries", mat)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    def __matmul__(self, other: DenseUnitary) -> DenseUnitary:
        return DenseUnitary(self.entries @ other.entries)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


def matrix_to_json(mat: np.ndarray) -> list[list[list[float]]]:
    """Nested rows of ``[re, im]`` pairs."""
    mat = np.asarray(mat, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in mat]


def matrix_from_json(data) -> np.ndarray:
    rows = []
    for row in data:
        out = []
        for z in row:
            if isinstance(z, (list, tuple)):
                re, im = z
                out.append(complex(re, im))
            else:
                out.append(complex(z))
        rows.append(out)
    return np.array(rows, dtype=complex)
