import random

from oracles import brute_isomorphic, random_basis_change
from pd2 import (canonical_form, connected_sum, find_isomorphism, make_truncated, sphere,
                 tensor_product, wedge_sum)
from pd2.iso import is_isomorphism, presentation_string

SAME_SERIES = [
    tensor_product(sphere(1), sphere(1)),
    connected_sum(make_truncated(1, 2), make_truncated(1, 2)),
    wedge_sum(make_truncated(1, 2), sphere(1)),
]


def test_same_hilbert_series_distinguished():
    for i, A in enumerate(SAME_SERIES):
        for j, B in enumerate(SAME_SERIES):
            found = find_isomorphism(A, B) is not None
            assert found == (i == j)
            assert found == brute_isomorphic(A, B)


def test_basis_change_witness():
    rng = random.Random(5)
    A = connected_sum(make_truncated(2, 3), tensor_product(sphere(2), sphere(4)))
    B, _ = random_basis_change(rng, A)
    phi = find_isomorphism(A, B)
    assert phi is not None
    assert is_isomorphism(A, B, phi.images)
    inv = phi.inverse()
    assert all(inv(phi(1 << i)) == 1 << i for i in range(A.dim))


def test_canonical_form_is_an_invariant():
    rng = random.Random(9)
    A = tensor_product(make_truncated(1, 3), sphere(1))
    B, _ = random_basis_change(rng, A)
    assert canonical_form(A) == canonical_form(B)
    assert canonical_form(A) != canonical_form(tensor_product(make_truncated(1, 3), sphere(2)))


def test_degree_free_form_identifies_family_members():
    assert canonical_form(make_truncated(1, 3), degree_free=True) == \
        canonical_form(make_truncated(4, 3), degree_free=True)


def test_presentation_string():
    assert presentation_string(make_truncated(1, 7)) == "Z2[x|1]/(x^8)"
    assert presentation_string(tensor_product(sphere(1), sphere(2))) == "Z2[x|1, y|2]/(x^2, y^2)"
