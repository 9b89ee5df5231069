import pytest

from mzvodd.exact_linalg import left_kernel, span_equal
from mzvodd.matrices import build_E
from mzvodd.period_poly import (build_W, build_W2, check_prop35, check_surjectivity_conjecture, check_period_map,
                                expected_W_dim, functional_defect, solve_W, theorem37_map)
from mzvodd.polynomials import HomPolynomial

import oracle


def test_W_12_2_generator():
    (p,) = build_W2(12).basis
    want = HomPolynomial(2, 10, {(2, 8): 1, (4, 6): -3, (6, 4): 3, (8, 2): -1})
    assert p == want or p == -want


def test_W2_dimensions_follow_S():
    for N in range(6, 31, 2):
        assert build_W2(N).dim == oracle.s_coeff(N)


def test_W2_is_left_kernel_of_E():
    for N in (12, 16, 18, 20, 22, 24):
        assert span_equal(build_W2(N).vectors(), list(left_kernel(build_E(N, 2))))


@pytest.mark.parametrize("N", range(12, 31, 2))
def test_period_polys_span_left_kernel(N):
    rep = check_prop35(N)
    assert rep.passed, rep.failures()


@pytest.mark.parametrize("N,r", [(15, 3), (13, 3), (21, 3), (18, 4), (24, 4)])
def test_period_map_checks(N, r):
    rep = check_period_map(N, r)
    assert rep.passed, rep.failures()
    assert rep.values["dim_W"] == expected_W_dim(N, r)


def test_W_24_4_has_dimension_seven():
    assert build_W(24, 4).dim == 7 == expected_W_dim(24, 4)


def test_tensor_construction_spans_solution_space():
    for N, r in [(15, 3), (17, 3), (18, 4)]:
        direct = solve_W(N, r)
        assert span_equal(build_W(N, r).vectors(), direct.vectors())


def test_map_images_annihilate_E():
    assert len(theorem37_map(21, 3)) == expected_W_dim(21, 3)
    with pytest.raises(ValueError):
        theorem37_map(12, 2)


def test_surjectivity_observation_only():
    rep = check_surjectivity_conjecture(21, 3)
    assert rep.passed and not rep.checks
    assert rep.observations[0].ok


def test_defect_is_linear():
    a = HomPolynomial.monomial((2, 8))
    b = HomPolynomial.monomial((4, 6))
    assert functional_defect(a + b) == functional_defect(a) + functional_defect(b)
    with pytest.raises(ValueError):
        build_W(12, 1)
