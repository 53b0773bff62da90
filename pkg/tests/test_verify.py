import pytest

from pd2.verify import THEOREM_IDS, UnknownTheorem, expected_multisets, verify_theorem


@pytest.mark.parametrize("theorem,bound", [("3.1", 4), ("3.7", 2), ("3.10", None),
                                           ("3.12", None), ("nontnhz-disconnected", None)])
def test_sound_and_complete(theorem, bound):
    rep = verify_theorem(theorem, max_degree=bound)
    assert rep.sound and rep.complete, rep.to_text()


def test_report_shape():
    rep = verify_theorem("3.1", max_degree=3)
    d = rep.to_dict()
    for key in ("theorem", "grid", "sound", "complete", "classes", "unlisted", "missing"):
        assert key in d
    assert d["grid"]["max_degree"] == 3
    assert "SOUND" in rep.to_text().splitlines()[2]
    assert all(c["match"].startswith("thm3.1") for c in d["classes"])


def test_incomplete_theorem_lists_unlisted_classes():
    rep = verify_theorem("3.3", max_degree=4)
    assert not rep.complete and rep.unlisted
    assert all(c.match == "UNLISTED" for c in rep.unlisted)


def test_expected_multisets_cover_partitions():
    exp = expected_multisets("3.13")
    assert (5, 3) in exp and all(sum(p) == 8 for p in exp)


def test_unknown_theorem():
    assert "3.11" not in THEOREM_IDS
    with pytest.raises(UnknownTheorem):
        verify_theorem("3.11")
