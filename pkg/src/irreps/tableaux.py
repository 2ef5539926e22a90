"""Young diagrams, standard Young tableaux and the hook walk.

Cells are ``(row, col)`` pairs, zero-based, rows counted downward
(English convention). Tableaux are identified externally by their
row-reading word: the rows concatenated from top to bottom.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .perm import Permutation, sign, validate_partition

DEFAULT_SYT_CAP = 12


class CapExceededError(ValueError):
    """An enumeration or dense construction would exceed its configured size cap."""


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", validate_partition(self.rows))

    @classmethod
    def parse(cls, shape) -> YoungDiagram:
        if isinstance(shape, YoungDiagram):
            return shape
        return cls(tuple(shape))

    @property
    def n(self) -> int:
        return sum(self.rows)

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, length in enumerate(self.rows) for c in range(length)]

    def conjugate(self) -> YoungDiagram:
        return YoungDiagram(tuple(sum(1 for x in self.rows if x > i) for i in range(self.rows[0])))

    def is_self_conjugate(self) -> bool:
        return self.conjugate() == self

    def diagonal_length(self) -> int:
        return sum(1 for i, x in enumerate(self.rows) if x > i)

    def column_lengths(self) -> tuple[int, ...]:
        return self.conjugate().rows

    def hook_length(self, r: int, c: int) -> int:
        return self.rows[r] - c + self.column_lengths()[c] - r - 1

    def corners(self) -> list[tuple[int, int]]:
        out = []
        for r, length in enumerate(self.rows):
            below = self.rows[r + 1] if r + 1 < len(self.rows) else 0
            if length > below:
                out.append((r, length - 1))
        return out

    def to_json(self) -> list[int]:
        return list(self.rows)


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        YoungDiagram(tuple(len(r) for r in rows))
        n = sum(len(r) for r in rows)
        if sorted(x for row in rows for x in row) != list(range(1, n + 1)):
            raise ValueError(f"tableau {self.to_json()} does not contain 1..{n} exactly once")
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if c + 1 < len(row) and row[c + 1] <= x:
                    raise ValueError(f"row {r} of {self.to_json()} is not increasing")
                if r + 1 < len(rows) and c < len(rows[r + 1]) and rows[r + 1][c] <= x:
                    raise ValueError(f"column {c} of {self.to_json()} is not increasing")

    @classmethod
    def from_word(cls, shape, word: Sequence[int]) -> StandardTableau:
        shape = YoungDiagram.parse(shape)
        if len(word) != shape.n:
            raise ValueError(f"word of length {len(word)} does not fill shape {shape.to_json()}")
        rows, start = [], 0
        for length in shape.rows:
            rows.append(tuple(word[start:start + length]))
            start += length
        return cls(tuple(rows))

    @classmethod
    def typewriter(cls, shape) -> StandardTableau:
        shape = YoungDiagram.parse(shape)
        return cls.from_word(shape, range(1, shape.n + 1))

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def positions(self) -> dict[int, tuple[int, int]]:
        return {x: (r, c) for r, row in enumerate(self.rows) for c, x in enumerate(row)}

    def position(self, label: int) -> tuple[int, int]:
        for r, row in enumerate(self.rows):
            if label in row:
                return r, row.index(label)
        raise KeyError(label)

    def relabel(self, p: Permutation) -> StandardTableau:
        """Apply p to every label. Raises if the result is not standard."""
        return StandardTableau(tuple(tuple(p(x) for x in row) for row in self.rows))

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    @classmethod
    def from_json(cls, data) -> StandardTableau:
        return cls(tuple(tuple(row) for row in data))


def enumerate_syt(shape, cap: int = DEFAULT_SYT_CAP) -> list[StandardTableau]:
    """All standard tableaux of ``shape`` in lexicographic order of reading word."""
    shape = YoungDiagram.parse(shape)
    if shape.n > cap:
        raise CapExceededError(f"shape with {shape.n} boxes exceeds the enumeration cap {cap}")
    return list(_enumerate_syt(shape.rows))


@lru_cache(maxsize=256)
def _enumerate_syt(rows: tuple[int, ...]) -> tuple[StandardTableau, ...]:
    words = []

    def fill(current: list[int], grid: list[list[int]], label: int):
        if label == 0:
            words.append(tuple(x for row in grid for x in row))
            return
        # the largest label occupies a corner of the current shape
        for r, length in enumerate(current):
            below = current[r + 1] if r + 1 < len(current) else 0
            if length > below:
                grid[r][length - 1] = label
                current[r] -= 1
                fill(current, grid, label - 1)
                current[r] += 1

    fill(list(rows), [[0] * length for length in rows], sum(rows))
    shape = YoungDiagram(rows)
    return tuple(StandardTableau.from_word(shape, w) for w in sorted(words))


def syt_count(shape) -> int:
    """Number of standard tableaux by the hook length formula."""
    shape = YoungDiagram.parse(shape)
    hooks = 1
    for r, c in shape.cells():
        hooks *= shape.hook_length(r, c)
    return math.factorial(shape.n) // hooks


def hook_walk_sample(shape, rng: np.random.Generator) -> StandardTableau:
    """Uniformly random standard tableau via the Greene-Nijenhuis-Wilf hook walk.

    Start at a uniformly random cell of the remaining diagram and jump to a
    uniformly random other cell of the current hook until a corner is
    reached; that corner receives the largest unplaced label.
    """
    shape = YoungDiagram.parse(shape)
    rows = list(shape.rows)
    grid = [[0] * length for length in rows]
    for label in range(shape.n, 0, -1):
        cols = [sum(1 for x in rows if x > c) for c in range(rows[0])]
        size = sum(rows)
        k = int(rng.integers(size))
        r = 0
        while k >= rows[r]:
            k -= rows[r]
            r += 1
        c = k
        while True:
            arm = rows[r] - c - 1
            leg = cols[c] - r - 1
            if arm + leg == 0:
                break
            step = int(rng.integers(arm + leg))
            if step < arm:
                c += step + 1
            else:
                r += step - arm + 1
        grid[r][c] = label
        rows[r] -= 1
        if rows[r] == 0:
            rows.pop()
    return StandardTableau(tuple(tuple(row) for row in grid))


def conjugate_diagram(shape) -> YoungDiagram:
    return YoungDiagram.parse(shape).conjugate()


def conjugate_tableau(t: StandardTableau) -> StandardTableau:
    width = len(t.rows[0])
    return StandardTableau(
        tuple(tuple(row[c] for row in t.rows if len(row) > c) for c in range(width))
    )


def axial_distance(t: StandardTableau, i: int) -> int:
    """Signed hop count from box i+1 to box i; moving down or left counts +1."""
    if not 1 <= i < t.n:
        raise ValueError(f"axial distance needs 1 <= i <= {t.n - 1}, got {i}")
    r1, c1 = t.position(i)
    r2, c2 = t.position(i + 1)
    return (r1 - r2) + (c2 - c1)


def swap_labels(t: StandardTableau, i: int) -> StandardTableau | None:
    """The tableau with labels i and i+1 exchanged, or None if that is not standard."""
    r1, c1 = t.position(i)
    r2, c2 = t.position(i + 1)
    if r1 == r2 or c1 == c2:
        return None
    rows = [list(row) for row in t.rows]
    rows[r1][c1], rows[r2][c2] = i + 1, i
    return StandardTableau(tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class TypewriterData:
    w: Permutation
    sign: int


def typewriter_data(t: StandardTableau) -> TypewriterData:
    """The permutation w of labels with ``w . t`` equal to the typewriter tableau."""
    target = StandardTableau.typewriter(t.shape)
    images = [0] * t.n
    for tr, trow in zip(t.rows, target.rows):
        for label, typed in zip(tr, trow):
            images[label - 1] = typed
    w = Permutation(tuple(images))
    return TypewriterData(w=w, sign=sign(w))
