import pytest

from pd2 import (GradedAlgebra, check_poincare_duality, hilbert_series, make_algebra,
                 make_truncated, minimal_generators, sphere, tensor_product, validate_algebra,
                 wedge_sum)
from pd2.algebra import canonical_signature, rebase


def test_truncated_polynomial():
    P = make_truncated(2, 3)
    assert P.dim == 4 and P.degrees == (0, 2, 4, 6)
    assert validate_algebra(P).ok
    assert str(hilbert_series(P)) == "1 + t^2 + t^4 + t^6"
    assert minimal_generators(P) == (1, (2,))
    assert P.height(1 << 1) == 3


def test_pd_and_witness():
    assert check_poincare_duality(tensor_product(sphere(1), sphere(2))).is_pd
    W = wedge_sum(make_truncated(1, 2), sphere(1))
    rep = check_poincare_duality(W)
    assert not rep.is_pd
    assert rep.failure_witness is not None


def test_validation_reports_each_axiom():
    names = ("1", "x", "y")
    # x*y = y  violates degree additivity; x*x nonzero only one way round
    bad = GradedAlgebra(names, (0, 1, 2), ((1, 2, 4), (2, 4, 4), (4, 0, 0)))
    kinds = validate_algebra(bad).kinds()
    assert "degree" in kinds
    assert "commutativity" in kinds


def test_json_round_trip():
    A = tensor_product(make_truncated(1, 2), sphere(3))
    assert GradedAlgebra.from_json(A.to_json()) == A


def test_rebase_preserves_signature():
    A = tensor_product(sphere(1, "a"), sphere(1, "b"))
    B = rebase(A, [1, 2 | 4, 4, 8])
    assert validate_algebra(B).ok
    assert canonical_signature(A) == canonical_signature(B)


def test_rebase_rejects_inhomogeneous():
    A = make_truncated(1, 2)
    with pytest.raises(ValueError):
        rebase(A, [1, 2 | 4, 4])


def test_make_algebra_is_symmetric():
    A = make_algebra(["1", "x", "x2"], [0, 1, 2], {(0, 0): 1, (0, 1): 2, (0, 2): 4, (1, 1): 4})
    assert A.table[1][0] == A.table[0][1] == 2
    assert validate_algebra(A).ok
