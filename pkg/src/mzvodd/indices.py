"""Totally odd index sets and the coordinate spaces they label.

An index of weight ``N`` and depth ``r`` is a tuple ``(n_1, ..., n_r)`` of odd
integers ``>= 3`` summing to ``N``.  Index sets are kept in ascending
lexicographic order, which is also the row/column order of every matrix in
this package.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational
from typing import Iterable, Iterator, Sequence

OddIndex = tuple  # tuple[int, ...]


def is_odd_index(idx: Sequence[int]) -> bool:
    return all(isinstance(n, int) and n >= 3 and n % 2 == 1 for n in idx)


def check_odd_index(idx: Sequence[int]) -> OddIndex:
    idx = tuple(idx)
    if not is_odd_index(idx):
        raise ValueError(f"not a totally odd index: {idx!r}")
    return idx


def index_count(N: int, r: int) -> int:
    """Number of totally odd indices of weight N and depth r (stars and bars)."""
    if N < 0 or r < 0:
        raise ValueError("weight and depth must be non-negative")
    if r == 0:
        return 1 if N == 0 else 0
    if (N - r) % 2 or N < 3 * r:
        return 0
    k = (N - 3 * r) // 2
    return comb(k + r - 1, r - 1)


def _compositions(N: int, r: int) -> Iterator[tuple]:
    if r == 0:
        if N == 0:
            yield ()
        return
    if r == 1:
        if N >= 3 and N % 2:
            yield (N,)
        return
    for first in range(3, N - 3 * (r - 1) + 1, 2):
        for rest in _compositions(N - first, r - 1):
            yield (first,) + rest


class IndexSet:
    """The ordered set S_{N,r} with a position lookup.

    Instances are interned by :func:`enumerate_indices`, so two index sets
    with the same weight and depth are normally the same object.
    """

    __slots__ = ("weight", "depth", "members", "_pos")

    def __init__(self, weight: int, depth: int, members: Iterable[OddIndex]):
        self.weight = weight
        self.depth = depth
        self.members = tuple(members)
        self._pos = {m: i for i, m in enumerate(self.members)}

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> OddIndex:
        return self.members[i]

    def __contains__(self, idx) -> bool:
        return tuple(idx) in self._pos

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, IndexSet):
            return NotImplemented
        return (self.weight, self.depth, len(self)) == (other.weight, other.depth, len(other))

    def __hash__(self) -> int:
        return hash((self.weight, self.depth))

    def __repr__(self) -> str:
        return f"IndexSet(N={self.weight}, r={self.depth}, size={len(self)})"

    def position(self, idx: Sequence[int]) -> int:
        try:
            return self._pos[tuple(idx)]
        except KeyError:
            raise KeyError(f"{tuple(idx)!r} is not in S_{{{self.weight},{self.depth}}}") from None

    def get_position(self, idx: Sequence[int]):
        return self._pos.get(tuple(idx))


@lru_cache(maxsize=None)
def enumerate_indices(N: int, r: int) -> IndexSet:
    """All totally odd indices of weight N and depth r, ascending lexicographically.

    Degenerate inputs (parity mismatch, ``N < 3r``) give an empty set; the
    depth-0 set of weight 0 holds the single empty index.
    """
    if N < 0 or r < 0:
        raise ValueError("weight and depth must be non-negative")
    return IndexSet(N, r, _compositions(N, r))


def _as_rational(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, Rational):
        return _as_rational(Fraction(x))
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


class RatVector:
    """Row vector of Vect_{N,r}: exact rationals in label order."""

    __slots__ = ("labels", "entries")

    def __init__(self, labels: IndexSet, entries: Iterable):
        entries = tuple(_as_rational(x) for x in entries)
        if len(entries) != len(labels):
            raise ValueError(f"expected {len(labels)} entries, got {len(entries)}")
        self.labels = labels
        self.entries = entries

    @classmethod
    def zero(cls, labels: IndexSet) -> "RatVector":
        return cls(labels, [0] * len(labels))

    @classmethod
    def unit(cls, labels: IndexSet, idx: Sequence[int]) -> "RatVector":
        e = [0] * len(labels)
        e[labels.position(idx)] = 1
        return cls(labels, e)

    @classmethod
    def from_mapping(cls, labels: IndexSet, mapping) -> "RatVector":
        e = [0] * len(labels)
        for idx, c in mapping.items():
            e[labels.position(idx)] += c
        return cls(labels, e)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, idx):
        if isinstance(idx, int):
            return self.entries[idx]
        return self.entries[self.labels.position(idx)]

    def items(self):
        return zip(self.labels.members, self.entries)

    def nonzero_items(self):
        return [(m, c) for m, c in zip(self.labels.members, self.entries) if c]

    def _check(self, other: "RatVector"):
        if self.labels != other.labels:
            raise ValueError(f"label mismatch: {self.labels!r} vs {other.labels!r}")

    def __add__(self, other: "RatVector") -> "RatVector":
        self._check(other)
        return RatVector(self.labels, (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RatVector") -> "RatVector":
        self._check(other)
        return RatVector(self.labels, (a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "RatVector":
        return RatVector(self.labels, (-a for a in self.entries))

    def __mul__(self, c) -> "RatVector":
        return RatVector(self.labels, (a * c for a in self.entries))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatVector):
            return NotImplemented
        return self.labels == other.labels and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.labels, self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self) -> str:
        return f"RatVector(N={self.labels.weight}, r={self.labels.depth}, {list(self.entries)})"
