"""Restricted even period polynomials and their images among left annihilators.

W_{N,r} is the subspace of P_{N,r} (span of x_1^{n_1-1}...x_r^{n_r-1} over
totally odd indices) cut out by

    p(x_1, ..., x_r) = p(x_2 - x_1, x_2, x_3, ...) - p(x_2 - x_1, x_1, x_3, ...).

Depth 2 is solved as a linear system; higher depth uses the tensor
decomposition W_{n,2} (x) P_{N-n,r-2}.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from .exact_linalg import in_span, left_kernel, nullspace, span_basis, span_dim
from .indices import RatVector, enumerate_indices
from .matrices import apply_row, build_E, build_F
from .polynomials import HomPolynomial, diff, monomial_of_index, pi1, pi1_inverse, substitute, var
from .report import Report, VerificationError
from .series import period_dimension_series


def functional_defect(p: HomPolynomial) -> HomPolynomial:
    """p - p(x_2-x_1, x_2, x_3, ...) + p(x_2-x_1, x_1, x_3, ...); zero exactly on W."""
    r = p.nvars
    rest = [var(j, r) for j in range(3, r + 1)]
    head = diff(2, 1, r)
    a = substitute(p, [head, var(2, r)] + rest, r)
    b = substitute(p, [head, var(1, r)] + rest, r)
    return p - a + b


@dataclass(frozen=True)
class WSpaceBasis:
    weight: int
    depth: int
    basis: Tuple[HomPolynomial, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def vectors(self) -> List[RatVector]:
        labels = enumerate_indices(self.weight, self.depth)
        return [pi1(p, labels) for p in self.basis]


def solve_W(N: int, r: int) -> WSpaceBasis:
    """Solve the defining functional equation directly over all of P_{N,r}."""
    if r < 2:
        raise ValueError("W_{N,r} needs depth r >= 2")
    labels = enumerate_indices(N, r)
    images = [functional_defect(monomial_of_index(m)) for m in labels]
    monos = sorted({e for img in images for e in img.terms})
    # a . A = 0 with A[i][j] = coefficient of monomial j in the defect of basis monomial i
    cols = [[img.coefficient(e) for img in images] for e in monos]
    vecs = [RatVector(labels, v) for v in nullspace(cols, len(labels))] if len(labels) else []
    basis = tuple(pi1_inverse(v) for v in span_basis(vecs))
    return WSpaceBasis(N, r, basis)


@lru_cache(maxsize=None)
def build_W2(N: int) -> WSpaceBasis:
    return solve_W(N, 2)


@lru_cache(maxsize=None)
def build_W(N: int, r: int) -> WSpaceBasis:
    """Basis of W_{N,r}: products p(x_1, x_2) x_3^{n_3-1}...x_r^{n_r-1}."""
    if r < 2:
        raise ValueError("W_{N,r} needs depth r >= 2")
    if r == 2:
        return build_W2(N)
    basis = []
    for n in range(6, N - 3 * (r - 2) + 1):
        W2 = build_W2(n)
        if not W2.dim:
            continue
        tails = enumerate_indices(N - n, r - 2)
        for p in W2.basis:
            lifted = substitute(p, [var(1, r), var(2, r)], r)
            for tail in tails:
                mono = HomPolynomial.monomial((0, 0) + tuple(t - 1 for t in tail))
                basis.append(lifted * mono)
    return WSpaceBasis(N, r, tuple(basis))


def expected_W_dim(N: int, r: int) -> int:
    return period_dimension_series(r, max(N, 0))[N]


def theorem37_map(N: int, r: int) -> List[RatVector]:
    """Images pi_1(p) . F_{N,r} for a basis of W_{N,r}.

    Raises VerificationError if an image fails to annihilate E_{N,r} on the
    left or the images are dependent.
    """
    if r < 3:
        raise ValueError("the map is defined for depth r >= 3")
    W = build_W(N, r)
    F, E = build_F(N, r), build_E(N, r)
    images = [apply_row(v, F) for v in W.vectors()]
    for v in images:
        if not apply_row(v, E).is_zero():
            raise VerificationError(f"image {v} does not annihilate E_{{{N},{r}}}")
    if span_dim(images) != len(images):
        raise VerificationError(f"images for (N, r) = ({N}, {r}) are linearly dependent")
    return images


def check_prop35(N: int) -> Report:
    """pi_1(W_{N,2}) equals the left kernel of E_{N,2}; both inclusions."""
    rep = Report("prop35", {"weight": N})
    W = build_W2(N).vectors()
    K = list(left_kernel(build_E(N, 2)))
    rep.values.update(dim_W=len(W), dim_ker=len(K), expected=expected_W_dim(N, 2))
    rep.check("W in ker", all(in_span(v, K) for v in W))
    rep.check("ker in W", all(in_span(v, W) for v in K))
    rep.check("dim W = [x^N] S", len(W) == rep.values["expected"], dim=len(W))
    for p in build_W2(N).basis:
        if not functional_defect(p).is_zero():
            rep.check("functional equation", False, poly=str(p))
            break
    return rep


def check_period_map(N: int, r: int) -> Report:
    """Annihilation, injectivity and the dimension count for the depth-r map."""
    rep = Report("thm37", {"weight": N, "depth": r})
    W = build_W(N, r)
    expected = expected_W_dim(N, r)
    F, E = build_F(N, r), build_E(N, r)
    images = [apply_row(v, F) for v in W.vectors()]
    kdim = len(left_kernel(E))
    rep.values.update(dim_W=W.dim, expected=expected, dim_ker=kdim)
    rep.check("functional equation", all(functional_defect(p).is_zero() for p in W.basis))
    rep.check("even exponents", all(p.is_even() for p in W.basis))
    rep.check("vanishes on coordinate hyperplanes", all(p.vanishes_at_zero(i) for p in W.basis for i in range(1, r + 1)))
    rep.check("dim W = [x^N] S O^(r-2)", W.dim == expected)
    rep.check("images annihilate E", all(apply_row(v, E).is_zero() for v in images))
    rep.check("images independent", span_dim(images) == len(images))
    rep.check("dim ker E >= [x^N] S O^(r-2)", kdim >= expected)
    return rep


def check_surjectivity_conjecture(N: int, r: int) -> Report:
    """Compare dim ker E_{N,r} with [x^N] S O^{r-2}; reports, never asserts."""
    if r < 3:
        raise ValueError("the conjecture concerns depth r >= 3")
    rep = Report("surjectivity", {"weight": N, "depth": r})
    kdim = len(left_kernel(build_E(N, r)))
    expected = expected_W_dim(N, r)
    rep.values.update(dim_ker=kdim, expected=expected)
    rep.observe("dim ker E = [x^N] S O^(r-2)", kdim == expected, dim_ker=kdim, expected=expected)
    return rep
