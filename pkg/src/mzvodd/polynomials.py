"""Sparse homogeneous polynomials with exact rational coefficients.

A polynomial in ``x_1, ..., x_r`` is a mapping from exponent vectors to
non-zero coefficients.  Linear forms used for substitution are integer
coefficient tuples over the target variables, so ``(-1, 1, 0)`` stands for
``x_2 - x_1`` in three variables.
"""
from __future__ import annotations

from typing import Dict, Mapping, Sequence

from .indices import IndexSet, RatVector, _as_rational, check_odd_index

LinearForm = tuple  # tuple[int, ...]


def var(i: int, nvars: int) -> LinearForm:
    """The linear form x_i (1-based) in ``nvars`` variables."""
    if not 1 <= i <= nvars:
        raise ValueError(f"variable x_{i} out of range for {nvars} variables")
    return tuple(1 if j == i - 1 else 0 for j in range(nvars))


def diff(i: int, j: int, nvars: int) -> LinearForm:
    """The linear form x_i - x_j; index 0 stands for the constant zero variable."""
    out = [0] * nvars
    if i:
        out[i - 1] += 1
    if j:
        out[j - 1] -= 1
    return tuple(out)


class HomPolynomial:
    __slots__ = ("nvars", "degree", "terms")

    def __init__(self, nvars: int, degree: int, terms: Mapping[tuple, object] = ()):
        self.nvars = nvars
        self.degree = degree
        clean: Dict[tuple, object] = {}
        for exps, c in dict(terms).items():
            exps = tuple(exps)
            if len(exps) != nvars or sum(exps) != degree or min(exps, default=0) < 0:
                raise ValueError(f"monomial {exps} does not fit {nvars} variables / degree {degree}")
            c = _as_rational(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, degree, terms):
        obj = cls.__new__(cls)
        obj.nvars, obj.degree, obj.terms = nvars, degree, terms
        return obj

    @classmethod
    def zero(cls, nvars: int, degree: int = 0) -> "HomPolynomial":
        return cls._raw(nvars, degree, {})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "HomPolynomial":
        exps = tuple(exps)
        return cls(len(exps), sum(exps), {exps: coeff})

    @classmethod
    def one(cls, nvars: int = 0) -> "HomPolynomial":
        return cls._raw(nvars, 0, {(0,) * nvars: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def _compatible(self, other: "HomPolynomial"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different numbers of variables")
        if self.terms and other.terms and self.degree != other.degree:
            raise ValueError("sum of polynomials of different degrees is not homogeneous")
        return self.degree if self.terms else other.degree

    def __add__(self, other: "HomPolynomial") -> "HomPolynomial":
        deg = self._compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return HomPolynomial._raw(self.nvars, deg, out)

    def __neg__(self) -> "HomPolynomial":
        return HomPolynomial._raw(self.nvars, self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "HomPolynomial") -> "HomPolynomial":
        return self + (-other)

    def scale(self, c) -> "HomPolynomial":
        c = _as_rational(c)
        if not c:
            return HomPolynomial.zero(self.nvars, self.degree)
        return HomPolynomial._raw(self.nvars, self.degree, {e: _as_rational(v * c) for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HomPolynomial):
            if self.nvars != other.nvars:
                raise ValueError("polynomials live in different numbers of variables")
            return HomPolynomial._raw(self.nvars, self.degree + other.degree, _mul(self.terms, other.terms))
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomPolynomial):
            return NotImplemented
        if self.nvars != other.nvars or self.terms != other.terms:
            return False
        return not self.terms or self.degree == other.degree

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = [f"x{i + 1}^{e}" for i, e in enumerate(exps) if e]
            mag = abs(c)
            body = "*".join([str(mag)] + factors) if factors else str(mag)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"HomPolynomial(nvars={self.nvars}, degree={self.degree}, {self})"

    def is_even(self) -> bool:
        return all(e % 2 == 0 for exps in self.terms for e in exps)

    def vanishes_at_zero(self, i: int) -> bool:
        """True if the polynomial restricted to x_i = 0 is identically zero."""
        return all(exps[i - 1] > 0 for exps in self.terms)


def _mul(a: Mapping, b: Mapping) -> Dict:
    out: Dict[tuple, object] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _form_power(form: LinearForm, k: int, cache: dict) -> Dict:
    key = (form, k)
    hit = cache.get(key)
    if hit is not None:
        return hit
    n = len(form)
    if k == 0:
        res = {(0,) * n: 1}
    else:
        support = [(j, a) for j, a in enumerate(form) if a]
        if not support:
            res = {}
        elif len(support) == 1:
            j, a = support[0]
            e = [0] * n
            e[j] = k
            res = {tuple(e): a ** k}
        elif k == 1:
            res = {tuple(1 if t == j else 0 for t in range(n)): a for j, a in support}
        else:
            half = _form_power(form, k // 2, cache)
            res = _mul(half, half)
            if k % 2:
                res = _mul(res, _form_power(form, 1, cache))
    cache[key] = res
    return res


def substitute(p: HomPolynomial, images: Sequence[LinearForm], nvars: int = None) -> HomPolynomial:
    """Replace x_i by the i-th linear form; result is homogeneous of the same degree."""
    images = [tuple(int(a) for a in f) for f in images]
    if len(images) != p.nvars:
        raise ValueError(f"need {p.nvars} linear forms, got {len(images)}")
    if nvars is None:
        if not images:
            raise ValueError("target variable count required for a constant polynomial")
        nvars = len(images[0])
    if any(len(f) != nvars for f in images):
        raise ValueError("linear forms must all live in the same number of variables")
    cache: dict = {}
    out: Dict[tuple, object] = {}
    for exps, c in p.terms.items():
        prod = {(0,) * nvars: c}
        for form, k in zip(images, exps):
            if k:
                prod = _mul(prod, _form_power(form, k, cache))
                if not prod:
                    break
        for e, v in prod.items():
            s = out.get(e, 0) + v
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return HomPolynomial._raw(nvars, p.degree, out)


def monomial_of_index(idx: Sequence[int]) -> HomPolynomial:
    """x_1^{n_1-1} ... x_r^{n_r-1} for a totally odd index."""
    idx = check_odd_index(idx)
    return HomPolynomial.monomial(tuple(n - 1 for n in idx))


def pi1(p: HomPolynomial, labels: IndexSet) -> RatVector:
    """Coefficient vector of p in the monomial basis labelled by ``labels``."""
    if p.is_zero():
        return RatVector.zero(labels)
    if p.nvars != labels.depth:
        raise ValueError("variable count does not match the depth of the labels")
    out = [0] * len(labels)
    for exps, c in p.terms.items():
        pos = labels.get_position(tuple(e + 1 for e in exps))
        if pos is None:
            raise ValueError(f"monomial with exponents {exps} is outside P_{{{labels.weight},{labels.depth}}}")
        out[pos] = c
    return RatVector(labels, out)


def pi1_inverse(v: RatVector) -> HomPolynomial:
    labels = v.labels
    r = labels.depth
    terms = {tuple(n - 1 for n in idx): c for idx, c in v.items() if c}
    return HomPolynomial(r, labels.weight - r, terms)


def sigma_action(p: HomPolynomial, i: int) -> HomPolynomial:
    """p | sigma^(i): f(x_{i+1}-x_i, x_1..^x_{i+1}..x_r) - f(x_{i+1}-x_i, x_1..^x_i..x_r)."""
    r = p.nvars
    if not 1 <= i <= r - 1:
        raise ValueError(f"sigma index {i} out of range for {r} variables")
    head = diff(i + 1, i, r)
    drop_next = [var(j, r) for j in range(1, r + 1) if j != i + 1]
    drop_this = [var(j, r) for j in range(1, r + 1) if j != i]
    return substitute(p, [head] + drop_next, r) - substitute(p, [head] + drop_this, r)


def sigma_total(p: HomPolynomial) -> HomPolynomial:
    """p | (sigma^(1) + ... + sigma^(r-1))."""
    out = HomPolynomial.zero(p.nvars, p.degree)
    for i in range(1, p.nvars):
        out = out + sigma_action(p, i)
    return out
