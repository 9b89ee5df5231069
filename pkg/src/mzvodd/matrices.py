"""Labelled integer matrices E, E^(q), C, F and the embeddings Phi.

Rows and columns are both labelled by S_{N,r} in the fixed index order.
A matrix acts on row vectors from the right (v -> v.M); ``apply_transpose``
gives v -> v.M^T, which is the map written with a leading transpose sign
for the right annihilators.
"""
from __future__ import annotations

import hashlib
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .ihara import e_coeff
from .indices import IndexSet, RatVector, check_odd_index, enumerate_indices

FORMAT_HEADER = "MZVODD-MATRIX v1"


class IntMatrix:
    """Square integer matrix labelled by an index set (immutable)."""

    __slots__ = ("labels", "rows", "kind", "N", "r", "q")

    def __init__(self, labels: IndexSet, rows: Iterable[Sequence[int]], kind: str = "custom",
                 N: Optional[int] = None, r: Optional[int] = None, q: Optional[int] = None):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        k = len(labels)
        if len(rows) != k or any(len(row) != k for row in rows):
            raise ValueError(f"matrix must be {k}x{k} to match its labels")
        self.labels = labels
        self.rows = rows
        self.kind = kind
        self.N = labels.weight if N is None else N
        self.r = labels.depth if r is None else r
        self.q = q

    @property
    def side(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def entry(self, m: Sequence[int], n: Sequence[int]) -> int:
        return self.rows[self.labels.position(m)][self.labels.position(n)]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.labels == other.labels and self.rows == other.rows

    def __hash__(self):
        return hash((self.labels, self.rows))

    def __repr__(self) -> str:
        q = "" if self.q is None else f", q={self.q}"
        return f"IntMatrix(kind={self.kind}, N={self.N}, r={self.r}{q}, side={self.side})"

    def tolist(self):
        return [list(row) for row in self.rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.labels, zip(*self.rows) if self.rows else (), kind="custom", N=self.N, r=self.r)

    def columns(self):
        return list(zip(*self.rows))

    def to_text(self) -> str:
        q = "-" if self.q is None else str(self.q)
        lines = [f"{FORMAT_HEADER} kind={self.kind} N={self.N} r={self.r} q={q}",
                 f"rows={self.side} cols={self.side}"]
        lines.extend(" ".join(str(x) for x in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()

    @classmethod
    def from_text(cls, text: str) -> "IntMatrix":
        lines = text.splitlines()
        if len(lines) < 2 or not lines[0].startswith(FORMAT_HEADER + " "):
            raise ValueError("not an MZVODD-MATRIX v1 file")
        fields = dict(tok.split("=", 1) for tok in lines[0][len(FORMAT_HEADER) + 1:].split())
        dims = dict(tok.split("=", 1) for tok in lines[1].split())
        nrows, ncols = int(dims["rows"]), int(dims["cols"])
        N, r = int(fields["N"]), int(fields["r"])
        q = None if fields.get("q", "-") == "-" else int(fields["q"])
        body = [ln for ln in lines[2:] if ln.strip()]
        if len(body) != nrows:
            raise ValueError(f"expected {nrows} rows, found {len(body)}")
        rows = [[int(x) for x in ln.split()] for ln in body]
        if any(len(row) != ncols for row in rows):
            raise ValueError("ragged matrix rows")
        labels = enumerate_indices(N, r) if nrows else _empty_labels(N, r)
        return cls(labels, rows, kind=fields.get("kind", "custom"), N=N, r=r, q=q)


def _empty_labels(N: int, r: int) -> IndexSet:
    labels = enumerate_indices(N, r) if N >= 0 and r >= 0 else None
    if labels is not None and len(labels) == 0:
        return labels
    return IndexSet(N, r, ())


def _labels_for(N: int, r: int) -> IndexSet:
    if not N > r > 0:
        return _empty_labels(N, r)
    return enumerate_indices(N, r)


@lru_cache(maxsize=None)
def build_E(N: int, r: int) -> IntMatrix:
    labels = _labels_for(N, r)
    rows = [[e_coeff(m, n) for n in labels] for m in labels]
    return IntMatrix(labels, rows, kind="E", N=N, r=r)


@lru_cache(maxsize=None)
def build_Eq(N: int, r: int, q: int) -> IntMatrix:
    """delta(first r-q parts) * e(last q parts); block diagonal over prefixes."""
    if not 2 <= q <= r:
        raise ValueError(f"q must satisfy 2 <= q <= r, got q={q}, r={r}")
    labels = _labels_for(N, r)
    k = r - q
    rows = []
    for m in labels:
        head, tail = m[:k], m[k:]
        rows.append([e_coeff(tail, n[k:]) if n[:k] == head else 0 for n in labels])
    return IntMatrix(labels, rows, kind="Eq", N=N, r=r, q=q)


def identity(N: int, r: int) -> IntMatrix:
    labels = _labels_for(N, r)
    k = len(labels)
    return IntMatrix(labels, ([1 if i == j else 0 for j in range(k)] for i in range(k)), kind="I", N=N, r=r)


@lru_cache(maxsize=None)
def build_C(N: int, r: int) -> IntMatrix:
    """C = E^(2) E^(3) ... E^(r-1) E by exact integer products."""
    if r <= 1:
        out = identity(N, r)
    else:
        out = build_E(N, r)
        for q in range(r - 1, 1, -1):
            out = matmul(build_Eq(N, r, q), out)
    return IntMatrix(out.labels, out.rows, kind="C", N=N, r=r)


def build_F(N: int, r: int) -> IntMatrix:
    E = build_E(N, r)
    rows = [[x - (1 if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(E.rows)]
    return IntMatrix(E.labels, rows, kind="F", N=N, r=r)


def matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    if A.labels != B.labels:
        raise ValueError(f"label mismatch: {A.labels!r} vs {B.labels!r}")
    k = A.side
    out = []
    for row in A.rows:
        acc = [0] * k
        for a, brow in zip(row, B.rows):
            if a:
                for j, b in enumerate(brow):
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return IntMatrix(A.labels, out, kind="product", N=A.N, r=A.r)


def apply_row(v: RatVector, M: IntMatrix) -> RatVector:
    """v . M"""
    if v.labels != M.labels:
        raise ValueError(f"label mismatch: {v.labels!r} vs {M.labels!r}")
    acc = [0] * M.side
    for a, row in zip(v.entries, M.rows):
        if a:
            for j, x in enumerate(row):
                if x:
                    acc[j] += a * x
    return RatVector(M.labels, acc)


def apply_transpose(v: RatVector, M: IntMatrix) -> RatVector:
    """v . M^T, i.e. the row vector (M v^T)^T."""
    if v.labels != M.labels:
        raise ValueError(f"label mismatch: {v.labels!r} vs {M.labels!r}")
    nz = [(j, a) for j, a in enumerate(v.entries) if a]
    return RatVector(M.labels, (sum(row[j] * a for j, a in nz) for row in M.rows))


def phi_embed(prefix: Sequence[int], v: RatVector) -> RatVector:
    """Place v at the coordinates whose leading parts equal ``prefix``."""
    prefix = check_odd_index(prefix)
    N = sum(prefix) + v.labels.weight
    r = len(prefix) + v.labels.depth
    target = enumerate_indices(N, r)
    if not len(target):
        raise ValueError(f"S_{{{N},{r}}} is empty")
    out = [0] * len(target)
    for idx, c in v.items():
        if c:
            out[target.position(prefix + idx)] = c
    return RatVector(target, out)


def restrict(prefix: Sequence[int], v: RatVector) -> RatVector:
    """Coordinates of v whose leading parts equal ``prefix``, as a vector of the tail space."""
    prefix = tuple(prefix)
    labels = enumerate_indices(v.labels.weight - sum(prefix), v.labels.depth - len(prefix))
    return RatVector(labels, (v[prefix + idx] for idx in labels))
