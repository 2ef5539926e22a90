"""Group-level representations of U(n), SU(n) and SO(n), plus Weyl characters.

A unitary U is factored into two-level unitaries, each of which is moved
onto adjacent indices by conjugating with swaps. Every adjacent factor u
has an antihermitian logarithm h, and its image is ``expm(a(H_p))`` where
H_p embeds h and ``a`` is the Gel'fand-Tsetlin algebra action. SO(n)
elements are factored into adjacent Givens rotations instead.

Logarithms follow the antihermitian convention ``u = expm(h)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import mpmath
import numpy as np
import scipy.linalg as la

from .gelfand import (
    DEFAULT_PATTERN_CAP,
    GTWeight,
    enumerate_patterns,
    gl_algebra_element,
    so_action,
)
from .operators import DenseUnitary, unitarity_error

INPUT_TOL = 1e-10
EIGEN_GAP = 1e-6


@dataclass(frozen=True)
class TwoLevelFactor:
    """``block`` acting on basis vectors i and j (one-based, i < j)."""

    block: np.ndarray
    i: int
    j: int

    def __post_init__(self):
        block = np.asarray(self.block, dtype=complex)
        if block.shape != (2, 2):
            raise ValueError(f"two-level blocks are 2x2, got shape {block.shape}")
        if not 1 <= self.i < self.j:
            raise ValueError(f"need 1 <= i < j, got ({self.i}, {self.j})")
        if unitarity_error(block) > 1e-12:
            raise ValueError("two-level block is not unitary")
        object.__setattr__(self, "block", block)

    def embed(self, n: int) -> np.ndarray:
        out = np.eye(n, dtype=complex)
        a, b = self.i - 1, self.j - 1
        out[np.ix_([a, b], [a, b])] = self.block
        return out

    @property
    def adjacent(self) -> bool:
        return self.j == self.i + 1


SWAP = np.array([[0, 1], [1, 0]], dtype=complex)


def _check_unitary(u: np.ndarray, tol: float = INPUT_TOL):
    err = unitarity_error(u)
    if err > tol:
        raise ValueError(f"input is not unitary (max |U^H U - I| = {err:.3e})")


def log_unitary_2x2(u: np.ndarray) -> np.ndarray:
    """Antihermitian h with expm(h) = u, eigenphases in (-pi, pi]."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {u.shape}")
    _check_unitary(u)
    # complex Schur form of a normal matrix is diagonal, with unitary Z
    t, z = la.schur(u, output="complex")
    phases = np.angle(np.diag(t))
    h = z @ np.diag(1j * phases) @ z.conj().T
    return (h - h.conj().T) / 2


def two_level_decompose(U: np.ndarray) -> list[TwoLevelFactor]:
    """Factors F_1, ..., F_k with ``U = F_1 @ F_2 @ ... @ F_k`` (embedded).

    Column elimination: for each column j the entries below the diagonal
    are rotated into the diagonal one by one, leaving it real and positive.
    At most n(n-1)/2 + 1 factors are produced; neighbouring factors on the
    same index pair are merged, so n = 2 always gives one factor.
    """
    U = np.asarray(U, dtype=complex)
    n = U.shape[0]
    if U.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {U.shape}")
    _check_unitary(U)
    V = U.copy()
    applied = []  # G with G @ V eliminating entries, in application order

    def apply(block, a, b):
        V[[a, b], :] = block @ V[[a, b], :]
        applied.append(TwoLevelFactor(block, a + 1, b + 1))

    for j in range(n - 1):
        rotated = False
        for k in range(j + 1, n):
            a, b = V[j, j], V[k, j]
            if abs(b) == 0:
                continue
            r = math.hypot(abs(a), abs(b))
            apply(np.array([[np.conj(a), np.conj(b)], [-b, a]]) / r, j, k)
            rotated = True
        if not rotated and V[j, j] != 1:
            phase = V[j, j] / abs(V[j, j])
            apply(np.diag([np.conj(phase), phase]), j, j + 1)
    if n > 1:
        phase = V[n - 1, n - 1] / abs(V[n - 1, n - 1])
        if phase != 1:
            apply(np.diag([1, np.conj(phase)]), n - 2, n - 1)
    out: list[TwoLevelFactor] = []
    for f in applied:
        block = f.block.conj().T
        # neighbours on the same pair of indices multiply into one factor
        if out and (out[-1].i, out[-1].j) == (f.i, f.j):
            block = out.pop().block @ block
        out.append(TwoLevelFactor(block, f.i, f.j))
    return out


def adjacency_reduce(f: TwoLevelFactor) -> list[TwoLevelFactor]:
    """Rewrite a two-level factor on (i, j) as swaps around a factor on (i, i+1)."""
    if f.adjacent:
        return [f]
    swaps = [TwoLevelFactor(SWAP, q, q + 1) for q in range(f.j - 1, f.i, -1)]
    return swaps + [TwoLevelFactor(f.block, f.i, f.i + 1)] + swaps[::-1]


def product(factors: Sequence[TwoLevelFactor], n: int) -> np.ndarray:
    out = np.eye(n, dtype=complex)
    for f in factors:
        out = out @ f.embed(n)
    return out


def _embed_adjacent(h: np.ndarray, p: int, n: int) -> np.ndarray:
    """H_p = 0_p (+) h (+) 0_(n-p-2)."""
    H = np.zeros((n, n), dtype=complex)
    H[p:p + 2, p:p + 2] = h
    return H


def group_rep_u(weight: GTWeight, U: np.ndarray, cap: int = DEFAULT_PATTERN_CAP) -> DenseUnitary:
    """A_weight(U) for U in U(n)."""
    if weight.group != "gl":
        raise ValueError("group_rep_u needs a gl weight")
    U = np.asarray(U, dtype=complex)
    n = weight.n
    if U.shape != (n, n):
        raise ValueError(f"weight of length {n} needs a {n}x{n} unitary, got shape {U.shape}")
    _check_unitary(U)
    dim = len(enumerate_patterns(weight, cap))
    if n == 1:
        return DenseUnitary(np.array([[U[0, 0] ** weight.entries[0]]]))
    out = np.eye(dim, dtype=complex)
    for factor in two_level_decompose(U):
        for f in adjacency_reduce(factor):
            H = _embed_adjacent(log_unitary_2x2(f.block), f.i - 1, n)
            out = out @ la.expm(gl_algebra_element(weight, H).toarray())
    return DenseUnitary(out)


def givens_decompose(G: np.ndarray) -> list[tuple[int, float]]:
    """Pairs (q, theta) with ``G = prod expm(theta * I_{q+1,q})`` in list order.

    ``I_{q+1,q} = E_{q,q+1} - E_{q+1,q}`` (one-based q).
    """
    G = np.asarray(G, dtype=float)
    n = G.shape[0]
    if G.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {G.shape}")
    err = float(np.max(np.abs(G.T @ G - np.eye(n))))
    if err > INPUT_TOL:
        raise ValueError(f"input is not orthogonal (max |G^T G - I| = {err:.3e})")
    if abs(np.linalg.det(G) - 1) > INPUT_TOL:
        raise ValueError("input does not have determinant 1")
    V = G.copy()
    rotations = []
    for j in range(n - 1):
        for k in range(n - 1, j, -1):
            a, b = V[k - 1, j], V[k, j]
            if b == 0 and (k > j + 1 or a >= 0):
                continue
            r = math.hypot(a, b)
            c, s = a / r, b / r
            V[[k - 1, k], :] = np.array([[c, s], [-s, c]]) @ V[[k - 1, k], :]
            # the inverse rotation [[c, -s], [s, c]] is expm(theta * I) with theta = atan2(-s, c)
            rotations.append((k, math.atan2(-s, c)))
    return rotations


def group_rep_so(weight: GTWeight, G: np.ndarray, cap: int = DEFAULT_PATTERN_CAP) -> DenseUnitary:
    """B_weight(G) for G in SO(n) from exponentiated generator actions.

    Half-integer weights give the algebra-level exponential only; no claim is
    made about single-valuedness on SO(n).
    """
    if weight.group == "gl":
        raise ValueError("group_rep_so needs an so_odd or so_even weight")
    G = np.asarray(G)
    if np.iscomplexobj(G):
        if np.max(np.abs(G.imag)) > INPUT_TOL:
            raise ValueError("SO(n) elements are real")
        G = G.real
    if G.shape != (weight.n, weight.n):
        raise ValueError(f"weight needs a {weight.n}x{weight.n} matrix, got shape {G.shape}")
    dim = len(enumerate_patterns(weight, cap))
    out = np.eye(dim, dtype=complex)
    for q, theta in givens_decompose(G):
        if theta:
            out = out @ la.expm(theta * so_action(weight, q).toarray())
    return DenseUnitary(out)


def so_torus_element(n: int, angles: Sequence[float]) -> np.ndarray:
    """Block-diagonal rotation expm(sum theta_r I_{2r,2r-1})."""
    if len(angles) != n // 2:
        raise ValueError(f"SO({n}) has {n // 2} torus angles, got {len(angles)}")
    out = np.eye(n)
    for r, theta in enumerate(angles):
        c, s = math.cos(theta), math.sin(theta)
        out[2 * r:2 * r + 2, 2 * r:2 * r + 2] = [[c, s], [-s, c]]
    return out


def su_canonical_weight(weight: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Shift a weight so its last entry is 0; A_weight = A_canonical on SU(n)."""
    weight = tuple(int(x) for x in weight)
    if any(a < b for a, b in zip(weight, weight[1:])):
        raise ValueError(f"weight entries must be weakly decreasing, got {list(weight)}")
    s = weight[-1]
    return tuple(x - s for x in weight), s


def exponent_vector(weight: Sequence[int]) -> tuple[int, ...]:
    """l_i = m_i + n - i, strictly decreasing."""
    n = len(weight)
    return tuple(int(m) + n - i for i, m in enumerate(weight, start=1))


def weyl_dimension(weight: Sequence[int]) -> int:
    l = exponent_vector(weight)
    num = math.prod(abs(l[i] - l[j]) for i, j in combinations(range(len(l)), 2))
    den = math.prod(j - i for i, j in combinations(range(len(l)), 2))
    return num // den


def gt_character_u(weight: Sequence[int], eigenvalues: Sequence[complex]) -> complex:
    """Sum over patterns of prod_p lambda_p^(row-sum difference)."""
    w = GTWeight.gl(weight)
    lam = np.asarray(eigenvalues, dtype=complex)
    total = 0j
    for M in enumerate_patterns(w):
        term = 1 + 0j
        for p in range(1, w.n + 1):
            term *= lam[p - 1] ** int(M.row_sum(p) - M.row_sum(p - 1))
        total += term
    return complex(total)


def weyl_character_u(weight: Sequence[int], eigenvalues: Sequence[complex]) -> complex:
    """Bialternant ratio det(lambda_i^l_j) / det(lambda_i^(n-j)).

    Falls back to the pattern sum when two eigenvalues are closer than 1e-6.
    """
    lam = np.asarray(eigenvalues, dtype=complex)
    n = len(weight)
    if lam.shape != (n,):
        raise ValueError(f"need {n} eigenvalues, got {lam.shape}")
    gap = min((abs(a - b) for a, b in combinations(lam, 2)), default=np.inf)
    if gap <= EIGEN_GAP:
        return gt_character_u(weight, lam)
    l = exponent_vector(weight)
    A = np.array([[x**lj for lj in l] for x in lam])
    B = np.array([[x ** (n - j) for j in range(1, n + 1)] for x in lam])
    return complex(np.linalg.det(A) / np.linalg.det(B))


def _so_ratio(entries: Sequence, angles: Sequence, odd: bool, ctx):
    """Weyl ratio for SO(2k+1) or SO(2k) evaluated in the numeric context ``ctx``."""
    k = len(entries)
    if odd:
        def row(e):
            return [ctx.exp(1j * e * t) - ctx.exp(-1j * e * t) for t in angles]
        num = ctx.det(ctx.matrix([row(m + k - i + ctx.mpf(1) / 2) for i, m in enumerate(entries, start=1)]))
        den = ctx.det(ctx.matrix([row(k - i + ctx.mpf(1) / 2) for i in range(1, k + 1)]))
        return num / den
    l = [m + k - i for i, m in enumerate(entries, start=1)]
    E = ctx.matrix([[ctx.exp(1j * li * t) + ctx.exp(-1j * li * t) for t in angles] for li in l])
    F = ctx.matrix([[ctx.exp(1j * li * t) - ctx.exp(-1j * li * t) for t in angles] for li in l])
    G = ctx.matrix([[ctx.exp(1j * (k - i) * t) + ctx.exp(-1j * (k - i) * t) for t in angles]
                    for i in range(1, k + 1)])
    return (ctx.det(E) + ctx.det(F)) / ctx.det(G)


def _so_degenerate(angles: Sequence[float], odd: bool) -> bool:
    cos = [math.cos(t) for t in angles]
    gaps = [abs(a - b) for a, b in combinations(cos, 2)]
    if odd:
        gaps += [abs(math.sin(t / 2)) for t in angles]
    return min(gaps, default=np.inf) <= EIGEN_GAP


def weyl_character_so(weight: GTWeight, angles: Sequence[float]) -> complex:
    """Character of SO(n) at the torus element with rotation angles ``angles``.

    Degenerate spectra are handled by moving the angles a distance h along a
    fixed direction in both senses and averaging, in extended precision.
    """
    if weight.group == "gl":
        raise ValueError("weyl_character_so needs an so_odd or so_even weight")
    entries = [mpmath.mpf(x) / 2 for x in weight.twice_entries]
    k = len(entries)
    if len(angles) != k:
        raise ValueError(f"SO({weight.n}) has {k} torus angles, got {len(angles)}")
    odd = weight.group == "so_odd"
    if not _so_degenerate(angles, odd):
        with mpmath.workdps(30):
            return complex(_so_ratio(entries, [mpmath.mpf(t) for t in angles], odd, mpmath.mp))
    h_exp = 12
    with mpmath.workdps(40 + 2 * h_exp * k * k):
        entries = [mpmath.mpf(x) / 2 for x in weight.twice_entries]
        h = mpmath.mpf(10) ** -h_exp
        vals = []
        for sgn in (1, -1):
            moved = [mpmath.mpf(t) + sgn * (r + 1) * h for r, t in enumerate(angles)]
            vals.append(_so_ratio(entries, moved, odd, mpmath.mp))
        return complex((vals[0] + vals[1]) / 2)


@dataclass(frozen=True)
class NormEntry:
    p: int
    norm: float
    gershgorin: float

    def to_json(self) -> dict:
        return {"p": self.p, "norm": self.norm, "gershgorin": self.gershgorin}


def norm_profile(weight: GTWeight, h: np.ndarray, cap: int = DEFAULT_PATTERN_CAP) -> list[NormEntry]:
    """Spectral norm and Gershgorin row-sum bound of a(H_p) for p = 0..n-2."""
    h = np.asarray(h, dtype=complex)
    if h.shape != (2, 2):
        raise ValueError(f"h must be 2x2, got shape {h.shape}")
    if np.max(np.abs(h + h.conj().T)) > INPUT_TOL:
        raise ValueError("h must be antihermitian")
    enumerate_patterns(weight, cap)
    out = []
    for p in range(weight.n - 1):
        a = gl_algebra_element(weight, _embed_adjacent(h, p, weight.n)).toarray()
        out.append(NormEntry(
            p=p,
            norm=float(np.linalg.norm(a, 2)),
            gershgorin=float(np.max(np.sum(np.abs(a), axis=1))),
        ))
    return out


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random U(n) element via QR with phase correction."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_special_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    u = random_unitary(n, rng)
    return u / np.linalg.det(u) ** (1 / n)


def random_special_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q
