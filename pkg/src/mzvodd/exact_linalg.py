"""Exact rank, kernels and span tests over the rationals.

Everything runs on Python integers with fraction-free (Bareiss style)
elimination; rational input rows are scaled to integers first.  Pivots are
chosen per column as the non-zero entry of smallest bit length.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence, Tuple

from .indices import IndexSet, RatVector, enumerate_indices
from .matrices import IntMatrix

KERNEL_HEADER = "MZVODD-KERNEL v1"


def _integer_row(row) -> List[int]:
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


def _as_rows(M) -> Tuple[List[List[int]], int]:
    if isinstance(M, IntMatrix):
        return [list(row) for row in M.rows], M.side
    rows = [list(v.entries) if isinstance(v, RatVector) else list(v) for v in M]
    ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged rows")
    return [_integer_row(r) for r in rows], ncols


def _pick_pivot(R, start: int, c: int):
    best, best_bits = None, None
    for i in range(start, len(R)):
        x = R[i][c]
        if x:
            bits = abs(x).bit_length()
            if best is None or bits < best_bits:
                best, best_bits = i, bits
                if bits == 1:
                    break
    return best


def ff_rref(rows: List[List[int]], ncols: int):
    """Fraction-free Gauss-Jordan reduction.

    Returns ``(R, pivots, d)`` where the first ``len(pivots)`` rows of ``R``
    equal ``d`` times the reduced row echelon form.  ``rows`` is consumed.
    """
    R = rows
    nrows = len(R)
    pivots: List[int] = []
    prev = 1
    k = 0
    for c in range(ncols):
        if k == nrows:
            break
        i = _pick_pivot(R, k, c)
        if i is None:
            continue
        R[k], R[i] = R[i], R[k]
        prow = R[k]
        p = prow[c]
        for i in range(nrows):
            if i == k:
                continue
            row = R[i]
            a = row[c]
            if a:
                R[i] = [(p * x - a * y) // prev for x, y in zip(row, prow)]
            elif p != prev:
                R[i] = [x * p // prev for x in row]
        pivots.append(c)
        prev = p
        k += 1
    if prev < 0:
        R = [[-x for x in row] for row in R]
        prev = -prev
    return R, pivots, prev


def _bareiss_rank(rows: List[List[int]], ncols: int) -> int:
    R = rows
    nrows = len(R)
    prev = 1
    k = 0
    for c in range(ncols):
        if k == nrows:
            break
        i = _pick_pivot(R, k, c)
        if i is None:
            continue
        R[k], R[i] = R[i], R[k]
        prow = R[k]
        p = prow[c]
        for i in range(k + 1, nrows):
            row = R[i]
            a = row[c]
            if a:
                R[i] = [(p * x - a * y) // prev for x, y in zip(row, prow)]
            elif p != prev:
                R[i] = [x * p // prev for x in row]
        prev = p
        k += 1
    return k


def primitive(vec: Sequence[int]) -> List[int]:
    """Divide by the content and make the first non-zero entry positive."""
    vec = _integer_row(vec)
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        return list(vec)
    first = next(x for x in vec if x)
    if first < 0:
        g = -g
    return [x // g for x in vec]


def rank(M) -> int:
    """Rank over Q of an IntMatrix, a list of rows, or a list of RatVectors."""
    rows, ncols = _as_rows(M)
    if not rows or not ncols:
        return 0
    return _bareiss_rank(rows, ncols)


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[List[int]]:
    """Primitive integer basis of {x : A x = 0} in reduced echelon form."""
    rows = [_integer_row(r) for r in rows]
    if not rows:
        return [[1 if j == f else 0 for j in range(ncols)] for f in range(ncols)]
    R, pivots, d = ff_rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        x = [0] * ncols
        x[f] = d
        for i, pc in enumerate(pivots):
            x[pc] = -R[i][f]
        basis.append(x)
    if len(basis) > 1:
        R, piv, _ = ff_rref(basis, ncols)
        basis = R[: len(piv)]
    return [primitive(x) for x in basis]


@dataclass(frozen=True)
class KernelBasis:
    side: str
    vectors: Tuple[RatVector, ...]
    source: str = ""

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def to_text(self) -> str:
        lines = [f"{KERNEL_HEADER} side={self.side} {self.source}".rstrip(), f"dim={self.dim}"]
        lines.extend(" ".join(str(x) for x in v.entries) for v in self.vectors)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "KernelBasis":
        lines = text.splitlines()
        if len(lines) < 2 or not lines[0].startswith(KERNEL_HEADER + " "):
            raise ValueError("not an MZVODD-KERNEL v1 file")
        fields = dict(tok.split("=", 1) for tok in lines[0][len(KERNEL_HEADER) + 1:].split())
        dim = int(lines[1].split("=", 1)[1])
        body = [ln for ln in lines[2:] if ln.strip()]
        if len(body) != dim:
            raise ValueError(f"expected {dim} vectors, found {len(body)}")
        labels = enumerate_indices(int(fields["N"]), int(fields["r"]))
        vectors = tuple(RatVector(labels, [int(x) for x in ln.split()]) for ln in body)
        source = " ".join(f"{k}={fields[k]}" for k in ("kind", "N", "r", "q") if k in fields)
        return cls(fields["side"], vectors, source)


def _source(M: IntMatrix) -> str:
    q = "-" if M.q is None else str(M.q)
    return f"kind={M.kind} N={M.N} r={M.r} q={q}"


def right_kernel(M: IntMatrix) -> KernelBasis:
    """Vectors v with v . M^T = 0 (equivalently M v^T = 0)."""
    vecs = nullspace(M.rows, M.side) if M.side else []
    return KernelBasis("right", tuple(RatVector(M.labels, v) for v in vecs), _source(M))


def left_kernel(M: IntMatrix) -> KernelBasis:
    """Vectors v with v . M = 0."""
    cols = [list(c) for c in zip(*M.rows)] if M.side else []
    vecs = nullspace(cols, M.side) if M.side else []
    return KernelBasis("left", tuple(RatVector(M.labels, v) for v in vecs), _source(M))


def _common_labels(vectors) -> IndexSet:
    labels = None
    for v in vectors:
        if labels is None:
            labels = v.labels
        elif v.labels != labels:
            raise ValueError(f"label mismatch: {labels!r} vs {v.labels!r}")
    return labels


def span_dim(vectors: Sequence[RatVector]) -> int:
    vectors = list(vectors)
    _common_labels(vectors)
    return rank(vectors) if vectors else 0


def in_span(v: RatVector, basis: Sequence[RatVector]) -> bool:
    basis = list(basis)
    _common_labels(basis + [v])
    if v.is_zero():
        return True
    if not basis:
        return False
    return rank(basis) == rank(basis + [v])


def span_equal(a: Sequence[RatVector], b: Sequence[RatVector]) -> bool:
    return all(in_span(v, b) for v in a) and all(in_span(v, a) for v in b)


def span_basis(vectors: Sequence[RatVector], labels: IndexSet = None) -> List[RatVector]:
    """Canonical echelon basis (primitive rows of the RREF) of the span."""
    vectors = list(vectors)
    labels = _common_labels(vectors) or labels
    if not vectors:
        return []
    rows, ncols = _as_rows(vectors)
    R, pivots, _ = ff_rref(rows, ncols)
    return [RatVector(labels, primitive(R[i])) for i in range(len(pivots))]


def intersection_dim(a: Sequence[RatVector], b: Sequence[RatVector]) -> int:
    a, b = list(a), list(b)
    return span_dim(a) + span_dim(b) - span_dim(a + b)
