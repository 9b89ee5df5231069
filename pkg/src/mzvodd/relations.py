"""Explicit linear relations among depth-graded totally odd MZVs.

A coefficient vector v gives the relation sum_n v_n zeta_D(n) = 0 exactly when
v . C^T = 0.  Relations are emitted in a fixed order: the right kernel of E
first, then (depth 4) the shuffle lifts, then whatever of ker tC is left,
each added only if it enlarges the span collected so far.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .exact_linalg import in_span, primitive, right_kernel
from .indices import RatVector, index_count
from .matrices import apply_transpose, build_C, build_E
from .report import VerificationError

SOURCES = ("kernel-of-E", "psi-lift", "kernel-of-C")


@dataclass(frozen=True)
class Relation:
    weight: int
    depth: int
    terms: Tuple[Tuple[tuple, int], ...]
    source: str

    @classmethod
    def from_vector(cls, v: RatVector, source: str) -> "Relation":
        """Primitive integer coefficients with the last non-zero one positive."""
        coeffs = primitive(v.entries)
        last = next((c for c in reversed(coeffs) if c), 0)
        if last < 0:
            coeffs = [-c for c in coeffs]
        terms = tuple((m, c) for m, c in zip(v.labels.members, coeffs) if c)
        return cls(v.labels.weight, v.labels.depth, terms, source)

    def vector(self, labels) -> RatVector:
        return RatVector.from_mapping(labels, dict(self.terms))

    def to_text(self) -> str:
        parts = []
        for idx, c in self.terms:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            arg = ",".join(str(n) for n in idx)
            coef = "" if mag == 1 else str(mag)
            parts.append(f"{sign} {coef}z({arg})")
        body = " ".join(parts)
        body = body[2:] if body.startswith("+ ") else "-" + body[2:]
        return f"{body} = 0"

    def to_dict(self) -> dict:
        return {
            "weight": self.weight,
            "depth": self.depth,
            "source": self.source,
            "terms": [{"index": list(idx), "coeff": str(c)} for idx, c in self.terms],
        }


def certify(rel: Relation) -> bool:
    C = build_C(rel.weight, rel.depth)
    return apply_transpose(rel.vector(C.labels), C).is_zero()


def cmd_relations(N: int, r: int) -> List[Relation]:
    """A basis of ker tC_{N,r}, written as relations and tagged by origin."""
    if r not in (2, 3, 4):
        raise ValueError("depth must be 2, 3 or 4")
    if not index_count(N, r):
        return []
    C = build_C(N, r)
    candidates: List[Tuple[RatVector, str]] = [(v, "kernel-of-E") for v in right_kernel(build_E(N, r))]
    if r == 4:
        from .shuffle import psi_lifts

        lifts = psi_lifts(N)
        candidates += [(v, "psi-lift") for _, v in lifts["odd"] + lifts["even"]]
    candidates += [(v, "kernel-of-C") for v in right_kernel(C)]

    chosen: List[RatVector] = []
    out: List[Relation] = []
    for v, source in candidates:
        if v.is_zero() or in_span(v, chosen):
            continue
        if not apply_transpose(v, C).is_zero():
            raise VerificationError(f"{source} vector at ({N}, {r}) does not annihilate C")
        chosen.append(v)
        out.append(Relation.from_vector(v, source))
    return out


def relations_to_text(rels: Sequence[Relation]) -> str:
    return "".join(f"[{r.source}] {r.to_text()}\n" for r in rels)
