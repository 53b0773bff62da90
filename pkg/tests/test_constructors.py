import pytest

from pd2 import (check_poincare_duality, connected_sum, disjoint_union, from_presentation,
                 hilbert_series, make_truncated, parse_presentation, point, presentation, sphere,
                 tensor_product, validate_algebra, wedge_sum)
from pd2.constructors import PresentationError, disjoint_union_all
from pd2.iso import find_isomorphism


def test_rank_identities():
    A, B = make_truncated(1, 3), tensor_product(sphere(1), sphere(2))
    assert connected_sum(A, B).dim == A.dim + B.dim - 2
    assert tensor_product(A, sphere(4)).dim == 2 * A.dim
    assert disjoint_union(A, B).dim == A.dim + B.dim
    assert wedge_sum(A, sphere(2)).dim == A.dim + 1


def test_connected_sum_needs_equal_dimension():
    with pytest.raises(ValueError):
        connected_sum(make_truncated(1, 2), make_truncated(1, 3))


def test_connected_sum_is_pd():
    C = connected_sum(make_truncated(2, 3), tensor_product(sphere(2), sphere(4)))
    assert validate_algebra(C).ok
    assert check_poincare_duality(C).is_pd


def test_disjoint_union_names_stay_distinct():
    U = disjoint_union_all([sphere(1), sphere(1), point()])
    assert len(set(U.names)) == U.dim == 5
    assert not U.connected
    assert validate_algebra(U).ok


def test_presentation_of_projective_space():
    P = from_presentation(presentation([("x", 1)], "x^8"))
    assert P.dim == 8
    assert find_isomorphism(P, make_truncated(1, 7)) is not None


def test_parse_presentation():
    P = parse_presentation("gen x 2; gen y 2;\n# comment\nrel x^2 + y^2; rel x*y;\nrel y^3;")
    A = from_presentation(P)
    assert str(hilbert_series(A)) == "1 + 2t^2 + t^4"
    assert check_poincare_duality(A).is_pd


@pytest.mark.parametrize("text", ["gen x;", "gen x 0;", "gen x 1; gen x 2;", "gen x 1; rel z^2;",
                                  "gen x 1"])
def test_presentation_errors(text):
    with pytest.raises(PresentationError):
        from_presentation(parse_presentation(text))


def test_infinite_quotient_is_rejected():
    with pytest.raises(ValueError):
        from_presentation(presentation([("x", 1), ("y", 1)], "x*y"), degree_cap=20)
