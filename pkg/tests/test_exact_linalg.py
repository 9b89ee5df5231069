from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mzvodd.exact_linalg import (KernelBasis, in_span, left_kernel, nullspace, primitive, rank, right_kernel,
                                 span_basis, span_dim, span_equal)
from mzvodd.indices import RatVector, enumerate_indices
from mzvodd.matrices import apply_row, apply_transpose, build_C, build_E

import oracle
from conftest import KER_12_2, KER_15_3

RANK_E2 = {6: 1, 8: 2, 10: 3, 12: 3, 14: 5, 16: 5, 18: 6, 20: 7, 22: 8, 24: 8, 26: 10, 28: 10, 30: 11, 32: 12,
           34: 13, 36: 13, 38: 15, 40: 15}
RANK_E3 = {9: 1, 11: 3, 13: 6, 15: 9, 17: 14, 19: 19, 21: 25, 23: 32, 25: 40}
RANK_E4 = {12: 1, 14: 4, 16: 10, 18: 19, 20: 33, 22: 52, 24: 77}
RANK_C3 = {9: 1, 11: 3, 13: 6, 15: 8, 17: 13, 19: 17, 21: 22}
RANK_C4 = {12: 1, 14: 4, 16: 10, 18: 17, 20: 29, 22: 44, 24: 64}


@pytest.mark.parametrize("r,table", [(2, RANK_E2), (3, RANK_E3), (4, RANK_E4)])
def test_rank_E_frozen(r, table):
    for N, rk in table.items():
        assert rank(build_E(N, r)) == rk


@pytest.mark.parametrize("r,table", [(3, RANK_C3), (4, RANK_C4)])
def test_rank_C_frozen(r, table):
    for N, rk in table.items():
        assert rank(build_C(N, r)) == rk


def test_printed_kernels():
    K = right_kernel(build_E(12, 2))
    assert [list(v.entries) for v in K] == [KER_12_2]
    K3 = right_kernel(build_E(15, 3))
    assert [list(v.entries) for v in K3] == [[-x for x in KER_15_3]]
    assert dict(K3[0].nonzero_items()) == {(3, 3, 9): 14, (3, 5, 7): -15, (3, 7, 5): -6, (5, 5, 5): -36}


def test_kernel_dimensions_add_up():
    for N, r in [(15, 3), (18, 4), (20, 4), (21, 3)]:
        for M in (build_E(N, r), build_C(N, r)):
            rk = rank(M)
            R, L = right_kernel(M), left_kernel(M)
            assert R.dim == L.dim == M.side - rk
            for v in R:
                assert apply_transpose(v, M).is_zero()
            for v in L:
                assert apply_row(v, M).is_zero()


def test_kernel_vectors_are_primitive_and_normalised():
    for v in right_kernel(build_C(24, 4)):
        e = v.entries
        first = next(x for x in e if x)
        assert first > 0
        assert primitive(e) == list(e)


def test_kernel_text_round_trip():
    K = left_kernel(build_E(18, 4))
    text = K.to_text()
    assert text.startswith("MZVODD-KERNEL v1 side=left kind=E N=18 r=4 q=-\ndim=")
    back = KernelBasis.from_text(text)
    assert back.side == "left" and [v.entries for v in back] == [v.entries for v in K]
    with pytest.raises(ValueError):
        KernelBasis.from_text("junk")


def test_primitive():
    assert primitive([0, -4, 6]) == [0, 2, -3]
    assert primitive([0, 0]) == [0, 0]
    assert primitive([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]


def test_span_helpers():
    S = enumerate_indices(12, 2)
    a = RatVector(S, [1, 0, 0, 0])
    b = RatVector(S, [0, 1, 0, 0])
    assert span_dim([a, b, a + b]) == 2
    assert in_span(a * 3 - b, [a, b])
    assert not in_span(RatVector.unit(S, (9, 3)), [a, b])
    assert in_span(RatVector.zero(S), [])
    assert span_equal([a, b], [a + b, a - b])
    assert [v.entries for v in span_basis([a + b, a - b])] == [(1, 0, 0, 0), (0, 1, 0, 0)]
    with pytest.raises(ValueError):
        span_dim([a, RatVector.zero(enumerate_indices(14, 2))])


small = st.integers(-6, 6)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5), st.integers(1, 6), st.data())
def test_rank_and_nullspace_agree_with_fraction_oracle(nrows, ncols, data):
    rows = [data.draw(st.lists(small, min_size=ncols, max_size=ncols)) for _ in range(nrows)]
    assert rank(rows) == oracle.rank(rows)
    basis = nullspace(rows, ncols)
    assert len(basis) == ncols - oracle.rank(rows)
    for x in basis:
        assert all(sum(a * b for a, b in zip(row, x)) == 0 for row in rows)
        assert primitive(x) == x
    assert oracle.same_span(basis, oracle.nullspace(rows, ncols))
