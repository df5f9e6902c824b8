"""Enumeration of face and diagonal labels of an N-parallelotope, plus their counts.

Index subsets are plain increasing tuples of ints in ``range(N)``.  All streams
are generators emitted in a fixed lexicographic order.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb
from typing import Iterator, NamedTuple, Sequence

from .errors import InvalidRange

IndexSubset = tuple


class FaceLabel(NamedTuple):
    """A k-subset of generators plus one translation bit per remaining generator."""

    subset: tuple
    translation: tuple

    def complement(self, N: int) -> tuple:
        return tuple(i for i in range(N) if i not in self.subset)


class DiagonalLabel(NamedTuple):
    """An (N-k+1)-subset ``t`` split into ``part1`` (holding ``min(t)``) and ``part2``."""

    t: tuple
    part1: tuple
    part2: tuple

    @classmethod
    def from_split(cls, part1: Sequence[int], part2: Sequence[int]) -> "DiagonalLabel":
        """Canonical label for the unordered split {part1, part2}."""
        p1, p2 = tuple(sorted(part1)), tuple(sorted(part2))
        if set(p1) & set(p2):
            raise ValueError("parts of a split must be disjoint")
        t = tuple(sorted(p1 + p2))
        if not t:
            raise ValueError("a split needs at least one index")
        if t[0] not in p1:
            p1, p2 = p2, p1
        return cls(t, p1, p2)

    def swapped(self) -> "DiagonalLabel":
        return DiagonalLabel.from_split(self.part2, self.part1)

    def is_canonical(self) -> bool:
        return (
            bool(self.part1)
            and self.t[0] in self.part1
            and not set(self.part1) & set(self.part2)
            and tuple(sorted(self.part1 + self.part2)) == self.t
        )


def check_k(N: int, k: int) -> None:
    if N < 2 or not 1 <= k <= N - 1:
        raise InvalidRange(f"need 1 <= k <= N-1, got N={N}, k={k}")


def k_subsets(N: int, k: int) -> Iterator[tuple]:
    """All C(N, k) increasing k-subsets of ``range(N)`` in lexicographic order."""
    if N < 0 or not 0 <= k <= N:
        raise InvalidRange(f"need 0 <= k <= N, got N={N}, k={k}")
    return combinations(range(N), k)


def face_labels(N: int, k: int) -> Iterator[FaceLabel]:
    check_k(N, k)
    return _faces(N, k)


def _faces(N, k):
    for s in combinations(range(N), k):
        for bits in product((0, 1), repeat=N - k):
            yield FaceLabel(s, bits)


def diagonal_labels(N: int, k: int) -> Iterator[DiagonalLabel]:
    """Canonical diagonal labels; for each T the bits choose which of ``T[1:]`` go to part2."""
    check_k(N, k)
    return _diagonals(N, k)


def _diagonals(N, k):
    for t in combinations(range(N), N - k + 1):
        rest = t[1:]
        for bits in product((0, 1), repeat=len(rest)):
            p2 = tuple(i for i, b in zip(rest, bits) if b)
            p1 = (t[0],) + tuple(i for i, b in zip(rest, bits) if not b)
            yield DiagonalLabel(t, p1, p2)


def count_faces(N: int, k: int) -> int:
    check_k(N, k)
    return 2 ** (N - k) * comb(N, k)


def count_diagonals(N: int, k: int) -> int:
    check_k(N, k)
    return 2 ** (N - k) * comb(N, N - k + 1)
