"""Truncated integer power series: O(x), S(x) and the uneven Broadhurst-Kreimer table."""
from __future__ import annotations

from typing import Dict, List, Sequence

DEFAULT_ORDER = 40


class IntSeries:
    """c_0 + c_1 x + ... + c_T x^T with exact integer coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[int], order: int = None):
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c: int, order: int) -> "IntSeries":
        return cls([c], order)

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.order:
            raise IndexError(f"coefficient x^{n} lies beyond truncation order {self.order}")
        return self.coeffs[n]

    def _order_with(self, other: "IntSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "IntSeries") -> "IntSeries":
        T = self._order_with(other)
        return IntSeries([self.coeffs[n] + other.coeffs[n] for n in range(T + 1)], T)

    def __neg__(self) -> "IntSeries":
        return IntSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntSeries([c * other for c in self.coeffs], self.order)
        T = self._order_with(other)
        a, b = self.coeffs, other.coeffs
        out = [0] * (T + 1)
        for i in range(T + 1):
            if a[i]:
                for j in range(T + 1 - i):
                    if b[j]:
                        out[i + j] += a[i] * b[j]
        return IntSeries(out, T)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntSeries":
        out = IntSeries.constant(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"IntSeries(order={self.order}, {list(self.coeffs)})"

    def inverse(self) -> "IntSeries":
        """Multiplicative inverse; the constant term must be +1 or -1."""
        a0 = self.coeffs[0]
        if a0 not in (1, -1):
            raise ValueError("constant term must be a unit in Z")
        out = [0] * (self.order + 1)
        out[0] = a0
        for n in range(1, self.order + 1):
            s = sum(self.coeffs[k] * out[n - k] for k in range(1, n + 1))
            out[n] = -a0 * s
        return IntSeries(out, self.order)


def series_O(T: int = DEFAULT_ORDER) -> IntSeries:
    """x^3/(1-x^2) = x^3 + x^5 + x^7 + ..."""
    return IntSeries([1 if n >= 3 and n % 2 else 0 for n in range(T + 1)], T)


def series_S(T: int = DEFAULT_ORDER) -> IntSeries:
    """x^12/((1-x^4)(1-x^6)), expanded by inverting the denominator."""
    den = IntSeries([1], T) - IntSeries([0, 0, 0, 0, 1], T)
    den = den * (IntSeries([1], T) - IntSeries([0] * 6 + [1], T))
    x12 = IntSeries([1 if n == 12 else 0 for n in range(T + 1)], T)
    return x12 * den.inverse()


def bk_rows(T_x: int = DEFAULT_ORDER, T_y: int = 4) -> List[IntSeries]:
    """Coefficients of y^0..y^{T_y} in 1/(1 - O(x) y + S(x) y^2).

    The denominator a(y) = 1 + a_1 y + a_2 y^2 is inverted in the ring of
    series in y over truncated series in x: b_0 = 1, b_r = -sum_k a_k b_{r-k}.
    """
    O, S = series_O(T_x), series_S(T_x)
    a = {1: -O, 2: S}
    rows = [IntSeries.constant(1, T_x)]
    for r in range(1, T_y + 1):
        acc = IntSeries.constant(0, T_x)
        for k, ak in a.items():
            if r - k >= 0:
                acc = acc + ak * rows[r - k]
        rows.append(-acc)
    return rows


def bk_coefficients(T_x: int = DEFAULT_ORDER, T_y: int = 4) -> Dict[int, Dict[int, int]]:
    """Table ``{r: {N: coefficient of x^N y^r}}``."""
    return {r: {N: row[N] for N in range(T_x + 1)} for r, row in enumerate(bk_rows(T_x, T_y))}


def bk_coefficient(N: int, r: int) -> int:
    return bk_rows(max(N, 0), r)[r][N]


def period_dimension_series(r: int, T: int = DEFAULT_ORDER) -> IntSeries:
    """S(x) O(x)^{r-2}: expected dimension of the period-polynomial spaces in depth r."""
    if r < 2:
        raise ValueError("depth must be at least 2")
    return series_S(T) * series_O(T) ** (r - 2)


def compare_rank_to_bk(N: int, r: int) -> dict:
    """Rank of C_{N,r} next to the x^N y^r coefficient of the generating function."""
    from .exact_linalg import rank
    from .matrices import build_C

    if r not in (2, 3, 4):
        raise ValueError("depth must be 2, 3 or 4")
    rk = rank(build_C(N, r))
    bound = bk_coefficient(N, r)
    return {
        "weight": N,
        "depth": r,
        "rank": rk,
        "bk": bound,
        "inequality": rk <= bound if r == 4 else None,
        "equal": rk == bound,
    }
