import pytest

from pd2.spectral import (PRESETS, default_constraints, differential_patterns,
                          e2_page, enumerate_differential_patterns, extend_multiplicatively,
                          feasible_fixed_ranks, nontnhz_connected_possibilities,
                          permanent_classes, preset_action, product_of_spheres, validate_action)


@pytest.mark.parametrize("name", PRESETS)
def test_presets_are_valid_involutions(name):
    assert validate_action(preset_action(name, (2, 2, 5))).ok


def test_non_involution_is_reported():
    X = product_of_spheres(1, 1, 3)
    a, b, c = (X.index(s) for s in "abc")
    act = extend_multiplicatively(X, {a: 1 << b, b: 1 << b, c: 1 << c})
    kinds = {v.kind for v in validate_action(act).violations}
    assert "involution" in kinds


def test_preset_needs_equal_degrees():
    with pytest.raises(ValueError):
        preset_action("swap", (1, 2, 3))


def test_e2_rank_nullity_and_trivial_page():
    triv = e2_page(preset_action("trivial", (1, 2, 4)))
    X = product_of_spheres(1, 2, 4)
    for d in X.by_degree:
        assert triv.rank(0, d) == triv.rank(1, d) == len(X.piece(d))
    swap = e2_page(preset_action("swap", (2, 2, 5)))
    assert swap.rank(0, 2) == 1 and swap.rank(1, 2) == 0
    assert swap.rank(0, 4) == 1 and swap.rank(1, 4) == 1
    assert sum(swap.rank(1, d) for d in swap.rows) == 4


def test_swap_patterns_and_permanent_class():
    act = preset_action("swap", (2, 2, 5))
    X = act.base
    assert permanent_classes(act) == [1 << X.index("ab")]
    pats = differential_patterns(act)
    assert {r for _, r in pats} == {2, 4}
    none = [r for p, r in pats if not p.differentials]
    assert none == [4]


def test_trivial_patterns_within_floyd():
    pats = differential_patterns(preset_action("trivial", (1, 2, 4)))
    ranks = {r for _, r in pats}
    assert ranks <= feasible_fixed_ranks(8, tnhz=False) | {8}
    assert 8 in ranks and 2 in ranks


def test_empty_fixed_set_allows_rank_zero():
    act = preset_action("trivial", (1, 1, 1))
    page = e2_page(act)
    ranks = {r for _, r in enumerate_differential_patterns(
        page, default_constraints(act, fixed_nonempty=False), 3)}
    assert 0 in ranks


def test_feasible_fixed_ranks():
    assert feasible_fixed_ranks(8, tnhz=True) == {8}
    assert feasible_fixed_ranks(8, tnhz=False) == {2, 4, 6}
    assert feasible_fixed_ranks(8, tnhz=False, fixed_nonempty=False) == {0, 2, 4, 6}
    with pytest.raises(ValueError):
        feasible_fixed_ranks(7, tnhz=False)


def test_rank_two_fixed_sets_are_spheres():
    act = preset_action("swap", (1, 1, 2))
    found = nontnhz_connected_possibilities(act, 2)
    assert found.entries()
    for e in found.entries():
        assert e.match == "thm3.10.1"
        assert max(e.algebra.degrees) <= 4
    with pytest.raises(ValueError):
        nontnhz_connected_possibilities(act, 8)
