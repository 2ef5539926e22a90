"""Gel'fand-Tsetlin patterns and the gl(n) / so(n) generator actions on them.

Pattern entries are stored doubled (``2 * m``) so half-integer so(n)
weights stay exact. ``rows[q - 1]`` is row q counted from the bottom; for
gl(n) row q has q entries, for so(n) it has q // 2.

Formula coefficients are evaluated in exact rational arithmetic and only
square-rooted at the end. A coefficient whose target pattern violates the
betweenness conditions is never used, but the formula is still evaluated
there and required to vanish whenever its denominator is nonzero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod, sqrt
from typing import Iterable, Sequence

import numpy as np

from .operators import SparseOperator
from .tableaux import CapExceededError

DEFAULT_PATTERN_CAP = 20000
GROUPS = ("gl", "so_odd", "so_even")
HALF = Fraction(1, 2)


class FormulaConsistencyError(AssertionError):
    """A coefficient attached to an invalid target pattern did not vanish."""


@dataclass(frozen=True)
class GTWeight:
    group: str
    twice_entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.twice_entries)
        object.__setattr__(self, "twice_entries", entries)
        if self.group not in GROUPS:
            raise ValueError(f"unknown group {self.group!r}; expected one of {GROUPS}")
        if not entries:
            raise ValueError("a weight needs at least one entry")
        if any(a < b for a, b in zip(entries, entries[1:])):
            raise ValueError(f"weight entries must be weakly decreasing, got {self.entries}")
        if self.group == "gl":
            if any(x % 2 for x in entries):
                raise ValueError(f"gl weights must be integers, got {self.entries}")
        else:
            if len({x % 2 for x in entries}) != 1:
                raise ValueError(f"so weights must be all integers or all half-integers, got {self.entries}")
            if self.group == "so_odd" and entries[-1] < 0:
                raise ValueError(f"so_odd weights need a nonnegative last entry, got {self.entries}")
            if self.group == "so_even" and len(entries) > 1 and entries[-2] < abs(entries[-1]):
                raise ValueError(f"so_even weights need m_(k-1) >= |m_k|, got {self.entries}")

    @classmethod
    def gl(cls, entries: Iterable[int]) -> GTWeight:
        return cls("gl", tuple(2 * int(x) for x in entries))

    @classmethod
    def so(cls, n: int, entries: Iterable) -> GTWeight:
        """SO(n) weight from integer or half-integer entries (k = n // 2 of them)."""
        twice = []
        for x in entries:
            doubled = Fraction(x) * 2
            if doubled.denominator != 1:
                raise ValueError(f"so weight entries must be half-integers, got {x}")
            twice.append(int(doubled))
        if len(twice) != n // 2:
            raise ValueError(f"SO({n}) weights have {n // 2} entries, got {len(twice)}")
        return cls("so_odd" if n % 2 else "so_even", tuple(twice))

    @property
    def entries(self) -> tuple:
        return tuple(Fraction(x, 2) if x % 2 else x // 2 for x in self.twice_entries)

    @property
    def n(self) -> int:
        k = len(self.twice_entries)
        return {"gl": k, "so_odd": 2 * k + 1, "so_even": 2 * k}[self.group]

    def to_json(self) -> dict:
        return {"group": self.group, "twice_entries": list(self.twice_entries)}

    @classmethod
    def from_json(cls, data: dict) -> GTWeight:
        return cls(data["group"], tuple(data["twice_entries"]))


@dataclass(frozen=True)
class GelfandPattern:
    group: str
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def m(self, j: int, q: int) -> Fraction:
        """Entry m_{j,q} (one-based column j, row q from the bottom)."""
        return Fraction(self.rows[q - 1][j - 1], 2)

    def l(self, j: int, q: int) -> Fraction:
        if self.group == "gl":
            return self.m(j, q) - j
        p = q // 2
        return self.m(j, q) + p - j + (q % 2)

    def row_sum(self, q: int) -> Fraction:
        return Fraction(sum(self.rows[q - 1]), 2) if q >= 1 else Fraction(0)

    def shifted(self, j: int, q: int, step: int) -> GelfandPattern:
        rows = [list(r) for r in self.rows]
        rows[q - 1][j - 1] += 2 * step
        return GelfandPattern(self.group, tuple(tuple(r) for r in rows))

    def to_json(self) -> dict:
        """Rows listed from the top (the weight) down, entries doubled."""
        return {"group": self.group, "twice_rows": [list(r) for r in reversed(self.rows)]}

    @classmethod
    def from_json(cls, data: dict) -> GelfandPattern:
        pattern = cls(data["group"], tuple(tuple(int(x) for x in r) for r in reversed(data["twice_rows"])))
        weight = GTWeight(pattern.group, pattern.rows[-1])
        # row q holds q entries for gl and q // 2 for so
        lengths = [q if weight.group == "gl" else q // 2 for q in range(1, weight.n + 1)]
        parity = {x % 2 for r in pattern.rows for x in r}
        if [len(r) for r in pattern.rows] != lengths or len(parity) > 1 or not is_valid(pattern):
            raise ValueError(f"not a valid Gel'fand-Tsetlin pattern: {data['twice_rows']}")
        return pattern


def _row_range(group: str, above: Sequence[int], q: int) -> list[tuple[int, int]]:
    """Allowed (lo, hi) doubled bounds for each entry of row q given row q + 1."""
    if group == "gl":
        return [(above[j + 1], above[j]) for j in range(q)]
    k = len(above)
    if q % 2 == 0:
        # row q = 2k below row 2k+1; both have k entries
        return [(above[j + 1] if j + 1 < k else -above[k - 1], above[j]) for j in range(k)]
    # row q = 2k-1 below row 2k; k-1 entries, the last bounded below by |m_k|
    return [(above[j + 1] if j + 1 < k - 1 else abs(above[k - 1]), above[j]) for j in range(k - 1)]


def _row_valid(group: str, above: Sequence[int], row: Sequence[int], q: int) -> bool:
    return all(lo <= x <= hi for x, (lo, hi) in zip(row, _row_range(group, above, q)))


def is_valid(pattern: GelfandPattern) -> bool:
    rows = pattern.rows
    return all(_row_valid(pattern.group, rows[q], rows[q - 1], q) for q in range(1, len(rows)))


def enumerate_patterns(weight: GTWeight, cap: int = DEFAULT_PATTERN_CAP) -> list[GelfandPattern]:
    """All patterns with the given top row, lexicographic from row n-1 downward."""
    patterns = _enumerate(weight)
    if len(patterns) > cap:
        raise CapExceededError(f"weight {weight.entries} has {len(patterns)} patterns > cap {cap}")
    return list(patterns)


@lru_cache(maxsize=128)
def _enumerate(weight: GTWeight) -> tuple[GelfandPattern, ...]:
    n, group = weight.n, weight.group
    found = []

    def rows_below(above, q):
        ranges = _row_range(group, above, q)

        def rec(j, prefix):
            if j == len(ranges):
                yield tuple(prefix)
                return
            lo, hi = ranges[j]
            for x in range(lo, hi + 1, 2):
                yield from rec(j + 1, prefix + [x])

        yield from rec(0, [])

    def descend(stack, q):
        if q == 0:
            found.append(stack[:])
            return
        for row in rows_below(stack[-1], q):
            stack.append(row)
            descend(stack, q - 1)
            stack.pop()

    descend([weight.twice_entries], n - 1)
    found.sort()
    return tuple(GelfandPattern(group, tuple(reversed(rows))) for rows in found)


@lru_cache(maxsize=128)
def _pattern_index(weight: GTWeight) -> dict[GelfandPattern, int]:
    return {m: k for k, m in enumerate(_enumerate(weight))}


def gt_dimension(weight: GTWeight, cap: int = DEFAULT_PATTERN_CAP) -> int:
    return len(enumerate_patterns(weight, cap))


def _coefficient(num: Iterable[Fraction], den: Iterable[Fraction], scale: Fraction = Fraction(1)) -> Fraction | None:
    """|scale^2 * prod(num) / prod(den)|, or None when the denominator vanishes."""
    d = prod(den, start=Fraction(1))
    if d == 0:
        return None
    return abs(scale * scale * prod(num, start=Fraction(1)) / d)


def _squared(value: Fraction | None, numerator_zero: bool) -> float:
    if value is None:
        if numerator_zero:
            return 0.0
        raise ZeroDivisionError("coefficient formula has a vanishing denominator")
    return sqrt(value)


# gl(n)

def _gl_raise_sq(M: GelfandPattern, j: int, p: int) -> tuple[Fraction | None, bool]:
    """Squared coefficient a^j_{p-1}(M), plus whether its numerator vanishes."""
    lj = M.l(j, p - 1)
    num = [M.l(i, p) - lj for i in range(1, p + 1)]
    num += [M.l(i, p - 2) - lj - 1 for i in range(1, p - 1)]
    den = []
    for i in range(1, p):
        if i != j:
            den += [M.l(i, p - 1) - lj, M.l(i, p - 1) - lj - 1]
    return _coefficient(num, den), any(x == 0 for x in num)


def _gl_lower_sq(M: GelfandPattern, j: int, p: int) -> tuple[Fraction | None, bool]:
    lj = M.l(j, p - 1)
    num = [M.l(i, p) - lj + 1 for i in range(1, p + 1)]
    num += [M.l(i, p - 2) - lj for i in range(1, p - 1)]
    den = []
    for i in range(1, p):
        if i != j:
            den += [M.l(i, p - 1) - lj, M.l(i, p - 1) - lj + 1]
    return _coefficient(num, den), any(x == 0 for x in num)


def _check_vanishes(value: Fraction | None, what: str):
    if value is not None and value != 0:
        raise FormulaConsistencyError(f"{what} attached to an invalid pattern is {float(value)}, not 0")


def _shift_terms(weight: GTWeight, p: int, row: int, step: int, coeff_sq) -> dict[tuple[int, int], complex]:
    """Entries for ``M -> sum_j c_j(M) M_row^{step j}`` with the source-evaluated coefficient."""
    index = _pattern_index(weight)
    entries = {}
    for col, M in enumerate(_enumerate(weight)):
        for j in range(1, len(M.rows[row - 1]) + 1):
            target = M.shifted(j, row, step)
            value, num_zero = coeff_sq(M, j, p)
            if target in index and is_valid(target):
                entries[(index[target], col)] = _squared(value, num_zero)
            else:
                _check_vanishes(value, f"coefficient for row {row}, entry {j}")
    return entries


@lru_cache(maxsize=512)
def gl_action(weight: GTWeight, row: int, col: int) -> SparseOperator:
    """a(E_{row,col}) for an adjacent or diagonal generator (one-based indices)."""
    if weight.group != "gl":
        raise ValueError("gl_action needs a gl weight")
    n = weight.n
    if not (1 <= row <= n and 1 <= col <= n) or abs(row - col) > 1:
        raise ValueError(f"E_({row},{col}) is not an adjacent or diagonal generator of gl({n})")
    patterns = _enumerate(weight)
    dim = len(patterns)
    if row == col:
        p = row
        return SparseOperator(dim, {(k, k): float(M.row_sum(p) - M.row_sum(p - 1)) for k, M in enumerate(patterns)})
    if row == col - 1:
        return SparseOperator(dim, _shift_terms(weight, col, col - 1, +1, _gl_raise_sq))
    return SparseOperator(dim, _shift_terms(weight, row, row - 1, -1, _gl_lower_sq))


@lru_cache(maxsize=512)
def gl_action_general(weight: GTWeight, i: int, j: int) -> SparseOperator:
    """a(E_{i,j}) for any i, j, built from adjacent generators by [E_ik, E_kj] = E_ij."""
    n = weight.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"E_({i},{j}) is not an element of gl({n})")
    if abs(i - j) <= 1:
        return gl_action(weight, i, j)
    k = i + 1 if i < j else i - 1
    return gl_action(weight, i, k).commutator(gl_action_general(weight, k, j))


def gl_algebra_element(weight: GTWeight, H: np.ndarray) -> SparseOperator:
    """a(H) for H supported on one adjacent 2x2 diagonal block."""
    H = np.asarray(H, dtype=complex)
    n = weight.n
    if H.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix, got shape {H.shape}")
    dim = len(_enumerate(weight))
    support = sorted({int(x) for x in np.flatnonzero(np.any(H != 0, axis=0) | np.any(H != 0, axis=1))})
    if not support:
        return SparseOperator.zeros(dim)
    if support[-1] - support[0] > 1:
        raise ValueError(f"H is supported on indices {[s + 1 for s in support]}, not an adjacent pair")
    lo = min(support[0], n - 2) if n > 1 else 0
    block = range(lo, min(lo + 2, n))
    out = SparseOperator.zeros(dim)
    for a in block:
        for b in block:
            if H[a, b] != 0:
                out = out + H[a, b] * gl_action(weight, a + 1, b + 1)
    return out


# so(n)

def _so_raise_even_sq(M: GelfandPattern, j: int, p: int) -> tuple[Fraction | None, bool]:
    """Squared A^j_{2p}(M)."""
    x = (M.l(j, 2 * p) + HALF) ** 2
    num = [(M.l(r, 2 * p - 1) - HALF) ** 2 - x for r in range(1, p)]
    num += [(M.l(r, 2 * p + 1) - HALF) ** 2 - x for r in range(1, p + 1)]
    lj = M.l(j, 2 * p)
    den = []
    for r in range(1, p + 1):
        if r != j:
            lr = M.l(r, 2 * p)
            den += [lr**2 - lj**2, lr**2 - (lj + 1) ** 2]
    return _coefficient(num, den, HALF), any(v == 0 for v in num)


def _so_raise_odd_sq(M: GelfandPattern, j: int, p: int) -> tuple[Fraction | None, bool]:
    """Squared B^j_{2p+1}(M)."""
    lj = M.l(j, 2 * p + 1)
    num = [M.l(r, 2 * p) ** 2 - lj**2 for r in range(1, p + 1)]
    num += [M.l(r, 2 * p + 2) ** 2 - lj**2 for r in range(1, p + 2)]
    den = [lj**2, 4 * lj**2 - 1]
    for r in range(1, p + 1):
        if r != j:
            lr = M.l(r, 2 * p + 1)
            den += [lr**2 - lj**2, lj**2 - (lr - 1) ** 2]
    return _coefficient(num, den), any(v == 0 for v in num)


def _so_diagonal(M: GelfandPattern, p: int) -> float:
    """C_{2p}(M); a vanishing numerator wins over a vanishing denominator."""
    num = prod((M.l(r, 2 * p) for r in range(1, p + 1)), start=Fraction(1))
    num *= prod((M.l(r, 2 * p + 2) for r in range(1, p + 2)), start=Fraction(1))
    if num == 0:
        return 0.0
    den = prod((M.l(r, 2 * p + 1) * (M.l(r, 2 * p + 1) - 1) for r in range(1, p + 1)), start=Fraction(1))
    if den == 0:
        raise ZeroDivisionError(f"C_{2 * p} has a vanishing denominator at {M.to_json()}")
    return float(num / den)


def _antisymmetric_shift(weight: GTWeight, row: int, p: int, coeff_sq) -> dict[tuple[int, int], complex]:
    """Entries of ``M -> sum_j c_j(M) M^{+j} - sum_j c_j(M^{-j}) M^{-j}``."""
    index = _pattern_index(weight)
    entries = {}
    for col, M in enumerate(_enumerate(weight)):
        for j in range(1, len(M.rows[row - 1]) + 1):
            up = M.shifted(j, row, +1)
            value, num_zero = coeff_sq(M, j, p)
            if up in index and is_valid(up):
                entries[(index[up], col)] = _squared(value, num_zero)
            else:
                _check_vanishes(value, f"raising coefficient for row {row}, entry {j}")
            down = M.shifted(j, row, -1)
            if down in index and is_valid(down):
                value, num_zero = coeff_sq(down, j, p)
                entries[(index[down], col)] = -_squared(value, num_zero)
    return entries


@lru_cache(maxsize=512)
def so_action(weight: GTWeight, q: int) -> SparseOperator:
    """b(I_{q+1,q}) with I_{k,i} = E_{i,k} - E_{k,i}; antihermitian."""
    if weight.group == "gl":
        raise ValueError("so_action needs an so_odd or so_even weight")
    n = weight.n
    if not 1 <= q <= n - 1:
        raise ValueError(f"I_({q + 1},{q}) is not a generator of so({n})")
    patterns = _enumerate(weight)
    dim = len(patterns)
    if q % 2 == 0:
        p = q // 2
        return SparseOperator(dim, _antisymmetric_shift(weight, 2 * p, p, _so_raise_even_sq))
    p = (q - 1) // 2
    entries = _antisymmetric_shift(weight, 2 * p + 1, p, _so_raise_odd_sq) if p >= 1 else {}
    for k, M in enumerate(patterns):
        c = _so_diagonal(M, p)
        if c:
            entries[(k, k)] = entries.get((k, k), 0) + 1j * c
    return SparseOperator(dim, entries)


def defining_so_generator(n: int, q: int) -> np.ndarray:
    """I_{q+1,q} = E_{q,q+1} - E_{q+1,q} as an n x n real matrix."""
    out = np.zeros((n, n))
    out[q - 1, q] = 1.0
    out[q, q - 1] = -1.0
    return out
