import pytest
from hypothesis import given, settings, strategies as st

from mzvodd.ihara import c_coeff_ihara, e_coeff_ihara
from mzvodd.indices import RatVector, enumerate_indices
from mzvodd.matrices import (IntMatrix, apply_row, apply_transpose, build_C, build_E, build_Eq, build_F,
                             identity, matmul, phi_embed, restrict)

from conftest import E_12_2, E_15_3


def test_printed_E_12_2():
    assert build_E(12, 2).tolist() == E_12_2


def test_printed_E_15_3():
    assert build_E(15, 3).tolist() == E_15_3


def test_E_entries_against_ihara_oracle():
    for N, r in [(14, 2), (17, 3), (18, 4)]:
        E = build_E(N, r)
        for i, m in enumerate(E.labels):
            for j, n in enumerate(E.labels):
                assert E.rows[i][j] == e_coeff_ihara(m, n)


def test_Eq_entry_and_block_structure():
    Eq = build_Eq(15, 3, 2)
    assert Eq.entry((3, 3, 9), (3, 9, 3)) == 1
    for m in Eq.labels:
        for n in Eq.labels:
            if m[0] != n[0]:
                assert Eq.entry(m, n) == 0
    assert build_Eq(15, 3, 3) == build_E(15, 3)
    with pytest.raises(ValueError):
        build_Eq(15, 3, 1)


def test_C_against_nested_expansion():
    for N, r in [(15, 3), (18, 4)]:
        C = build_C(N, r)
        for i, m in enumerate(C.labels):
            for j, n in enumerate(C.labels):
                assert C.rows[i][j] == c_coeff_ihara(m, n)


def test_C_depth_two_is_E():
    assert build_C(12, 2).rows == build_E(12, 2).rows


def test_F_diagonal():
    F = build_F(12, 2)
    assert [F.rows[i][i] for i in range(4)] == [-1, -1, 14, 27]


def test_empty_matrices():
    M = build_E(7, 2)
    assert M.side == 0
    assert IntMatrix.from_text(M.to_text()).side == 0


def test_text_round_trip_and_digest():
    for M in (build_E(15, 3), build_Eq(18, 4, 3), build_C(18, 4), build_F(12, 2)):
        text = M.to_text()
        back = IntMatrix.from_text(text)
        assert back == M and back.kind == M.kind and back.q == M.q
        assert back.digest() == M.digest()
    assert build_E(12, 2).to_text().splitlines()[:3] == [
        "MZVODD-MATRIX v1 kind=E N=12 r=2 q=-", "rows=4 cols=4", "0 0 0 1"]


def test_from_text_rejects_garbage():
    with pytest.raises(ValueError):
        IntMatrix.from_text("hello\n")
    bad = build_E(12, 2).to_text().replace("0 0 0 1\n", "0 0 1\n")
    with pytest.raises(ValueError):
        IntMatrix.from_text(bad)


def test_row_and_transpose_conventions():
    E = build_E(12, 2)
    v = RatVector(E.labels, [1, 2, 3, 4])
    assert apply_row(v, E).entries == tuple(sum(v.entries[i] * E.rows[i][j] for i in range(4)) for j in range(4))
    assert apply_transpose(v, E) == apply_row(v, E.transpose())


def test_transpose_of_C_factors():
    for N, r in [(15, 3), (18, 4), (21, 3)]:
        C = build_C(N, r)
        labels = C.labels
        for k in range(min(4, len(labels))):
            v = RatVector.unit(labels, labels[k * 3 % len(labels)])
            w = apply_transpose(v, build_E(N, r))
            for q in range(r - 1, 1, -1):
                w = apply_transpose(w, build_Eq(N, r, q))
            assert w == apply_transpose(v, C)


def test_matmul_identity():
    E = build_E(15, 3)
    assert matmul(identity(15, 3), E).rows == E.rows
    assert matmul(E, identity(15, 3)).rows == E.rows
    with pytest.raises(ValueError):
        matmul(E, build_E(12, 2))


def test_phi_embed_examples():
    S = enumerate_indices(12, 2)
    v = phi_embed((3,), RatVector(S, [14, 75, 84, 0]))
    assert v.labels == enumerate_indices(15, 3)
    assert dict(v.nonzero_items()) == {(3, 3, 9): 14, (3, 5, 7): 75, (3, 7, 5): 84}
    u = phi_embed((5,), RatVector.unit(S, (5, 7)))
    assert u == RatVector.unit(enumerate_indices(17, 3), (5, 5, 7))
    assert restrict((5,), u) == RatVector.unit(S, (5, 7))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(15, 3), (17, 3), (18, 4)]), st.data())
def test_block_equivariance(Nr, data):
    # E^(r-1) acts on the tail, so embedding commutes with it
    N, r = Nr
    head = data.draw(st.sampled_from([3, 5]))
    tail = enumerate_indices(N - head, r - 1)
    coeffs = data.draw(st.lists(st.integers(-9, 9), min_size=len(tail), max_size=len(tail)))
    v = RatVector(tail, coeffs)
    lhs = apply_transpose(phi_embed((head,), v), build_Eq(N, r, r - 1))
    rhs = phi_embed((head,), apply_transpose(v, build_E(N - head, r - 1)))
    assert lhs == rhs
