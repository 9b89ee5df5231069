"""Depth-graded linearised Ihara action and the integer families b, e, c."""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Sequence

from .indices import enumerate_indices, is_odd_index
from .polynomials import HomPolynomial, diff, substitute, var


def _binom(a: int, k: int) -> int:
    if k < 0 or a < 0 or k > a:
        return 0
    return comb(a, k)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def ihara_action(f: HomPolynomial, g: HomPolynomial) -> HomPolynomial:
    """The polynomial f o g in r + s variables (f in r variables, g in s).

    Uses the convention x_0 = 0.  In both sums the r consecutive variables
    fed to f are the ones removed from the argument list of g.
    """
    r, s = f.nvars, g.nvars
    n = r + s
    deg = f.degree + g.degree
    out = HomPolynomial.zero(n, deg)
    if f.is_zero() or g.is_zero():
        return out
    for i in range(s + 1):
        f_args = [diff(i + k, i, n) for k in range(1, r + 1)]
        g_args = [var(j, n) for j in range(1, i + 1)] + [var(j, n) for j in range(i + r + 1, n + 1)]
        out = out + substitute(f, f_args, n) * substitute(g, g_args, n)
    sign = _sign(f.degree + r)
    for i in range(1, s + 1):
        f_args = [diff(i + r - k, i + r, n) for k in range(1, r + 1)]
        g_args = [var(j, n) for j in range(1, i)] + [var(j, n) for j in range(i + r, n + 1)]
        term = substitute(f, f_args, n) * substitute(g, g_args, n)
        out = out + (term if sign > 0 else -term)
    return out


def b_coeff(m: int, n: int, nprime: int) -> int:
    """(-1)^n binom(m-1, n-1) + (-1)^(n'-m) binom(m-1, n'-1)."""
    return _sign(n) * _binom(m - 1, n - 1) + _sign(nprime - m) * _binom(m - 1, nprime - 1)


def e_coeff(m: Sequence[int], n: Sequence[int]) -> int:
    """Closed form for the single-step coefficient e(m; n).

    Returns 0 when the weights differ.
    """
    m, n = tuple(m), tuple(n)
    r = len(m)
    if len(n) != r:
        raise ValueError("e_coeff needs indices of equal depth")
    if r == 0 or sum(m) != sum(n):
        return 0 if r else 1
    total = 1 if m == n else 0
    m1 = m[0]
    for i in range(1, r):
        if m[1:i] == n[: i - 1] and m[i + 1 :] == n[i + 1 :]:
            total += b_coeff(m1, n[i - 1], n[i])
    return total


def _power_x1(k: int) -> HomPolynomial:
    return HomPolynomial.monomial((k,))


def e_coeff_ihara(m: Sequence[int], n: Sequence[int]) -> int:
    """Oracle for e(m; n): coefficient read off x_1^{m_1-1} o (x_1^{m_2-1} ... x_{r-1}^{m_r-1})."""
    m, n = tuple(m), tuple(n)
    if len(m) != len(n):
        raise ValueError("e_coeff needs indices of equal depth")
    if sum(m) != sum(n):
        return 0
    return _single_step(m).coefficient(tuple(k - 1 for k in n))


@lru_cache(maxsize=4096)
def _single_step(m: tuple) -> HomPolynomial:
    if len(m) == 1:
        return _power_x1(m[0] - 1)
    g = HomPolynomial.monomial(tuple(k - 1 for k in m[1:]))
    return ihara_action(_power_x1(m[0] - 1), g)


@lru_cache(maxsize=4096)
def nested_action(m: tuple) -> HomPolynomial:
    """x_1^{m_1-1} o ( ... o (x_1^{m_{r-1}-1} o x_1^{m_r-1}) ... )."""
    if len(m) == 1:
        return _power_x1(m[0] - 1)
    return ihara_action(_power_x1(m[0] - 1), nested_action(m[1:]))


def c_coeff_ihara(m: Sequence[int], n: Sequence[int]) -> int:
    m, n = tuple(m), tuple(n)
    if len(m) != len(n):
        raise ValueError("c_coeff needs indices of equal depth")
    if sum(m) != sum(n):
        return 0
    return nested_action(m).coefficient(tuple(k - 1 for k in n))


@lru_cache(maxsize=None)
def _c_factored(m: tuple, n: tuple) -> int:
    r = len(m)
    if r == 1:
        return 1 if m == n else 0
    total = 0
    for tail in enumerate_indices(sum(m) - m[0], r - 1):
        c = _c_factored(m[1:], tail)
        if c:
            e = e_coeff((m[0],) + tail, n)
            if e:
                total += c * e
    return total


def c_coeff(m: Sequence[int], n: Sequence[int], method: str = "factored") -> int:
    """Iterated coefficient c(m; n).

    ``method="factored"`` walks the recursion c(m; n) = sum_t c(m_2..; t_2..) e(m_1, t_2..; n)
    over totally odd t (valid for totally odd m and n); ``method="ihara"``
    expands the nested action symbolically and works for any positive indices.
    """
    m, n = tuple(m), tuple(n)
    if len(m) != len(n):
        raise ValueError("c_coeff needs indices of equal depth")
    if sum(m) != sum(n):
        return 0
    if method == "ihara" or not (is_odd_index(m) and is_odd_index(n)):
        return c_coeff_ihara(m, n)
    if method != "factored":
        raise ValueError(f"unknown method {method!r}")
    return _c_factored(m, n)
