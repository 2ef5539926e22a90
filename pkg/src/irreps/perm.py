"""Permutations of {1..n} in one-based image-array form.

Composition is fixed as ``(p * q)(i) = p(q(i))`` throughout the package, so
that representations satisfy ``rho(p * q) == rho(p) @ rho(q)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class Permutation:
    """An element of S_n stored as ``images[i - 1] = p(i)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n < 1:
            raise ValueError("a permutation needs at least one point")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"{list(images)} is not a bijection on 1..{n}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def adjacent(cls, n: int, i: int) -> Permutation:
        """The generator sigma_i swapping i and i+1."""
        if not 1 <= i < n:
            raise ValueError(f"sigma_{i} does not exist in S_{n}")
        return cls.transposition(n, i, i + 1)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> Permutation:
        return cls(tuple(int(x) + 1 for x in rng.permutation(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, pi in enumerate(self.images, start=1):
            inv[pi - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(pi == i for i, pi in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles including fixed points, each starting at its smallest point."""
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self(i)
            out.append(tuple(cycle))
        return out

    def to_json(self) -> list[int]:
        return list(self.images)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> Permutation:
        return cls(tuple(data))


@dataclass(frozen=True)
class PermutationStats:
    sign: int
    min_transpositions: int
    moved: int
    largest_moved: int
    coxeter_length: int

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "min_transpositions": self.min_transpositions,
            "moved": self.moved,
            "largest_moved": self.largest_moved,
            "coxeter_length": self.coxeter_length,
        }


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return p o q, i.e. ``i -> p(q(i))``."""
    if p.n != q.n:
        raise ValueError(f"cannot compose permutations of sizes {p.n} and {q.n}")
    return Permutation(tuple(p.images[qi - 1] for qi in q.images))


def word_to_permutation(n: int, word: Sequence[int]) -> Permutation:
    """Multiply out ``sigma_{w[0]} * sigma_{w[1]} * ...``."""
    result = Permutation.identity(n)
    for i in word:
        result = result * Permutation.adjacent(n, i)
    return result


def bubblesort_decompose(p: Permutation) -> list[int]:
    """Reduced word ``[a_1, ..., a_k]`` with ``p = sigma_{a_1} * ... * sigma_{a_k}``.

    Bubble sort swaps neighbouring array positions j, j+1, which is right
    multiplication by sigma_j. Sorting to the identity gives
    ``p * sigma_{b_1} * ... * sigma_{b_k} = id``, so the word is the swap
    sequence reversed. Every swap removes exactly one inversion.
    """
    arr = list(p.images)
    swaps = []
    n = len(arr)
    for end in range(n - 1, 0, -1):
        for j in range(end):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                swaps.append(j + 1)
    return swaps[::-1]


def inversions(p: Permutation) -> int:
    im = p.images
    return sum(1 for a in range(p.n) for b in range(a + 1, p.n) if im[a] > im[b])


def cycle_type(p: Permutation) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in p.cycles()), reverse=True))


def stats(p: Permutation) -> PermutationStats:
    moved = [i for i in range(1, p.n + 1) if p(i) != i]
    r = inversions(p)
    return PermutationStats(
        sign=-1 if r % 2 else 1,
        min_transpositions=p.n - len(p.cycles()),
        moved=len(moved),
        largest_moved=max(moved, default=0),
        coxeter_length=r,
    )


def sign(p: Permutation) -> int:
    return -1 if (p.n - len(p.cycles())) % 2 else 1


def hard_instance(n: int) -> Permutation:
    """The transposition (1 n): few moved points, but l and r grow linearly."""
    if n < 2:
        raise ValueError("hard instances need n >= 2")
    return Permutation.transposition(n, 1, n)


def validate_partition(parts: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    parts = tuple(int(x) for x in parts)
    if not parts or any(x <= 0 for x in parts):
        raise ValueError(f"partition parts must be positive, got {list(parts)}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition parts must be weakly decreasing, got {list(parts)}")
    if n is not None and sum(parts) != n:
        raise ValueError(f"{list(parts)} is not a partition of {n}")
    return parts


def partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def representative(mu: Sequence[int]) -> Permutation:
    """A permutation with cycle type mu, cycles on consecutive points."""
    mu = validate_partition(mu)
    cycles = []
    start = 1
    for part in mu:
        cycles.append(list(range(start, start + part)))
        start += part
    return Permutation.from_cycles(sum(mu), cycles)
