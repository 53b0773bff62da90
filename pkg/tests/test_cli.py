import json

import pytest

from pd2 import make_truncated, sphere, tensor_product
from pd2.cli import main, run


def test_catalog_list_and_show():
    status, body = run(["catalog", "list"])
    assert status == 0 and body.splitlines()[0].startswith("thm3.1 ")
    status, body = run(["catalog", "show", "thm3.1", "--param", "q=2"])
    assert status == 0 and "DISCREPANCY" in body and "1 + 3t^2 + 3t^4 + t^6" in body


def test_catalog_errors():
    assert run(["catalog", "show", "nope"])[0] == 2
    assert run(["catalog", "show", "thm3.1", "--param", "q=3"])[0] == 2
    assert run(["catalog", "show", "thm3.1", "--param", "q"])[0] == 2


def test_enumerate_csv():
    status, body = run(["enumerate", "--degrees", "1,1,1", "--nonzero", "6", "--format", "csv"])
    assert status == 0
    assert body.splitlines() == ["key,degrees,rank,generators", "thm3.7,0 1 2 3 4 5 6 7,8,1"]


def test_classify_json_is_deterministic():
    argv = ["classify", "--rank", "4", "--max-degree", "2", "--format", "json"]
    a, b = run(argv), run(argv)
    assert a == b and a[0] == 0
    data = json.loads(a[1])
    assert len(data["classes"]) == 7
    assert {c["key"] for c in data["classes"]} == {"thm3.10.2", "thm3.10.3", "thm3.10.4"}


def test_spectral_text():
    status, body = run(["spectral", "--action", "swap", "--degrees", "2,2,5"])
    assert status == 0 and "stable ranks: 2, 4" in body
    assert run(["spectral", "--action", "swap", "--degrees", "1,2,3"])[0] == 2


def test_verify_exit_codes():
    assert run(["verify", "3.1", "--max-degree", "3"])[0] == 0
    assert run(["verify", "3.3", "--max-degree", "4"])[0] == 1
    assert run(["verify", "9.9"])[0] == 2


def test_csv_output():
    status, body = run(["verify", "3.1", "--max-degree", "3", "--format", "csv"])
    assert status == 0 and body.splitlines()[0] == "theorem,key,degrees,rank,generators"
    assert run(["spectral", "--action", "swap", "--degrees", "2,2,5", "--format", "csv"])[0] == 2


def test_iso(tmp_path):
    f1, f2, f3 = (tmp_path / n for n in ("a.json", "b.json", "c.json"))
    f1.write_text(tensor_product(sphere(1), sphere(1)).to_json())
    f2.write_text(tensor_product(sphere(1), sphere(1)).to_json())
    f3.write_text(make_truncated(1, 3).to_json())
    assert run(["iso", str(f1), str(f2)])[0] == 0
    assert run(["iso", str(f1), str(f3)])[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["iso", str(f1), str(bad)])[0] == 2


def test_main_prints(capsys):
    assert main(["catalog", "show", "thm3.7", "--param", "q=1"]) == 0
    assert "thm3.7" in capsys.readouterr().out
    with pytest.raises(SystemExit):
        main(["bogus"])
