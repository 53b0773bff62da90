import pytest

from pd2 import (EnumerationConstraints, catalog_instantiate, check_rank_tail_inequality,
                 classify_connected, derive_profile, enumerate_connected_rank8, find_isomorphism,
                 make_truncated, sphere, tensor_product)
from pd2.catalog import component_family_name
from pd2.classifier import (RANK8_FREE_PAIRS, StructureProfile, parse_pattern, pattern_of,
                            pattern_str, realizable, REALIZABILITY_VARIANTS)


def test_derive_profile():
    assert derive_profile(1, 1, 1, 3).q[3:] == (2, 2, 2)
    assert derive_profile(1, 2, 3, 10).q[3:] == (7, 8, 9)
    with pytest.raises(ValueError, match="q3 <= r-q3"):
        derive_profile(2, 2, 3, 5)


def test_pattern_round_trip():
    p = frozenset(RANK8_FREE_PAIRS[:3])
    assert parse_pattern(pattern_str(p)) == p


def test_empty_pattern_gives_connected_sum_of_projective_spaces():
    for q in (1, 2):
        found = enumerate_connected_rank8(derive_profile(q, q, q, 3 * q), frozenset())
        assert len(found) == 1
        assert find_isomorphism(found.entries()[0].algebra, catalog_instantiate("thm3.1", q=q))


def test_empty_pattern_needs_equal_degrees():
    assert len(enumerate_connected_rank8(derive_profile(1, 1, 2, 4), frozenset())) == 0


def test_full_pattern_gives_truncated_polynomial():
    prof = StructureProfile((1, 2, 3, 4, 5, 6), 7)
    found = enumerate_connected_rank8(prof, frozenset(RANK8_FREE_PAIRS))
    assert len(found) == 1
    assert find_isomorphism(found.entries()[0].algebra, make_truncated(1, 7))
    assert pattern_of(make_truncated(1, 7)) == frozenset(RANK8_FREE_PAIRS)


def test_rank_tail_inequality():
    n, m, l = 2, 3, 4
    assert check_rank_tail_inequality(catalog_instantiate("thm3.1", q=2), (n, m, l)).ok
    bad = check_rank_tail_inequality(sphere(n + m + l + 1), (n, m, l))
    assert not bad.ok and bad.failing_j == n + m + l + 1
    assert check_rank_tail_inequality(sphere(n + m + l), (n, m, l)).ok
    # q = n + 1 is outside the realizability set, so build the ring directly
    from pd2 import connected_sum
    P = make_truncated(n + 1, 3)
    assert not check_rank_tail_inequality(connected_sum(connected_sum(P, P), P), (n, m, l)).ok


def test_realizability_filter():
    filt = REALIZABILITY_VARIANTS["paper-statement"]
    assert realizable(make_truncated(2, 2), filt)
    assert not realizable(make_truncated(3, 2), filt)
    assert realizable(make_truncated(3, 2), REALIZABILITY_VARIANTS["paper-proof"])
    assert realizable(tensor_product(sphere(3), sphere(3)), filt)


def test_small_ranks_by_family():
    names = {component_family_name(e.algebra) for e in classify_connected(4, max_degree=3)}
    assert names == {"thm3.10.2", "thm3.10.3", "thm3.10.4"}
    open_ = EnumerationConstraints(require_pd=False, require_nonzero_product=True)
    names = {component_family_name(e.algebra)
             for e in classify_connected(4, constraints=open_, max_degree=3)}
    assert names == {"thm3.10.2", "thm3.10.3", "thm3.10.4", "thm3.10.5"}
    names = {component_family_name(e.algebra) for e in classify_connected(5, max_degree=3)}
    assert names == {"thm3.13.#3P2", "thm3.13.P2#SxS", "thm3.13.P4"}


def test_betti_profile_argument():
    found = classify_connected(4, betti_profile=(0, 1, 1, 2), max_degree=2)
    assert {component_family_name(e.algebra) for e in found} == {"thm3.10.2", "thm3.10.4"}
    with pytest.raises(ValueError):
        classify_connected(4, betti_profile=(0, 1, 2))
