"""Slow, independent reference implementations used only by the tests."""
from fractions import Fraction
from itertools import combinations, product


def compositions(N, r):
    """Brute force: all r-tuples of odd parts >= 3 summing to N, sorted."""
    if r == 0:
        return [()] if N == 0 else []
    parts = range(3, N + 1, 2)
    return sorted(t for t in product(parts, repeat=r) if sum(t) == N)


def rref(rows):
    """Plain Fraction Gauss-Jordan; returns (reduced rows, pivot columns)."""
    A = [[Fraction(x) for x in row] for row in rows]
    if not A:
        return [], []
    ncols = len(A[0])
    pivots = []
    k = 0
    for c in range(ncols):
        p = next((i for i in range(k, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[k], A[p] = A[p], A[k]
        piv = A[k][c]
        A[k] = [x / piv for x in A[k]]
        for i in range(len(A)):
            if i != k and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[k])]
        pivots.append(c)
        k += 1
        if k == len(A):
            break
    return A[:k], pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, ncols):
    """Solutions x of A x = 0, as Fraction lists."""
    R, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -R[i][f]
        basis.append(x)
    return basis


def same_span(a, b):
    if not a and not b:
        return True
    return rank(a) == rank(b) == rank(list(a) + list(b))


def shuffle_words(u, v):
    """Sum over position subsets: choose where the letters of u go."""
    n = len(u) + len(v)
    out = {}
    for pos in combinations(range(n), len(u)):
        w, iu, iv = [], 0, 0
        ps = set(pos)
        for i in range(n):
            if i in ps:
                w.append(u[iu])
                iu += 1
            else:
                w.append(v[iv])
                iv += 1
        w = tuple(w)
        out[w] = out.get(w, 0) + 1
    return out


def is_lyndon_by_rotation(w):
    """A word is Lyndon iff it is strictly smaller than all its nontrivial rotations."""
    w = tuple(w)
    return bool(w) and all(w < w[i:] + w[:i] for i in range(1, len(w)))


def s_coeff(N):
    """[x^N] x^12/((1-x^4)(1-x^6)) by counting 4a + 6b = N - 12."""
    M = N - 12
    if M < 0:
        return 0
    return sum(1 for a in range(M // 4 + 1) if (M - 4 * a) % 6 == 0)


def o_power_coeff(N, r):
    return len(compositions(N, r))


def binom(n, k):
    if k < 0 or n < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out
