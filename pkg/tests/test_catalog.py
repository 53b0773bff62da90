import pytest

from pd2 import (catalog_instantiate, check_poincare_duality, find_isomorphism, make_truncated,
                 minimal_generators, sphere, tensor_product, validate_algebra)
from pd2.catalog import (CATALOG, CatalogError, COMPONENT_KEYS, RANK8_BY_SIZE, describe,
                         grid_instances, keys)


def test_every_entry_builds_a_valid_algebra():
    for k in keys():
        insts = grid_instances(k, 4)
        entry = CATALOG[k]
        for inst in insts[:3]:
            A = inst.algebra
            assert validate_algebra(A).ok, str(inst)
            assert check_poincare_duality(A).is_pd == entry.pd, str(inst)


def test_rank8_entries_have_rank_8():
    for size, ks in RANK8_BY_SIZE.items():
        for k in ks:
            for inst in grid_instances(k, 4)[:2]:
                assert inst.algebra.dim == 8, str(inst)
    for rk, ks in COMPONENT_KEYS.items():
        for k in ks:
            for inst in grid_instances(k, 3)[:2]:
                assert inst.algebra.dim == rk, str(inst)


def test_named_examples():
    A = catalog_instantiate("thm3.1", q=1)
    assert A.dim == 8 and minimal_generators(A)[0] == 3
    assert find_isomorphism(catalog_instantiate("thm3.7", q=2), make_truncated(2, 7))
    B = catalog_instantiate("thm3.5.1", r1=1, r2=2)
    assert find_isomorphism(B, tensor_product(make_truncated(1, 3), sphere(2)))
    C = catalog_instantiate("thm3.4.1", q=1)
    assert C.dim == 8 and minimal_generators(C) == (2, (1, 2))


def test_parameter_constraints():
    with pytest.raises(CatalogError):
        catalog_instantiate("thm3.1", q=3)
    assert catalog_instantiate("thm3.1", q=3, realizability="paper-proof").dim == 8
    with pytest.raises(CatalogError):
        catalog_instantiate("no-such-key")
    with pytest.raises(CatalogError, match="missing"):
        catalog_instantiate("thm3.2")


def test_discrepancy_is_displayed():
    assert any("DISCREPANCY" in line for line in describe(CATALOG["thm3.1"]))
