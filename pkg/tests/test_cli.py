import json

from bottcalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bott_text(capsys):
    code, out, _ = run(capsys, "bott", "--n", "4", "--r", "2", "--bundle", "theta",
                       "--twist", "-2")
    assert code == 0
    assert out.strip() == "H^1 = S_(-1^4), dim 1"


def test_bott_json(capsys):
    code, out, _ = run(capsys, "bott", "--n", "5", "--r", "2", "--bundle", "O",
                       "--twist", "1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data == {"vanishes": False, "degree": 0, "weight": [1, 1, 1, 0, 0],
                    "dimension": 10}


def test_bott_generic_weights(capsys):
    code, out, _ = run(capsys, "bott", "--n", "4", "--r", "2",
                       "--alpha", "0,-1", "--beta", "0,-1", "--twist", "0")
    assert code == 0
    assert "vanishes" in out


def test_bott_usage_errors(capsys):
    code, _, err = run(capsys, "bott", "--n", "4", "--r", "2")
    assert code == 2
    assert "alpha" in err
    code, _, err = run(capsys, "bott", "--n", "4", "--r", "2", "--alpha", "1,0",
                       "--beta", "0,1")
    assert code == 2
    assert "bott_grassmannian" in err


def test_iso_single_twist(capsys):
    code, out, _ = run(capsys, "iso", "--family", "LG", "--r", "2", "--n", "2",
                       "--bundle", "d2", "--m", "-2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["index"] == 1
    assert data["result"]["dimension"] == 1


def test_iso_ranges(capsys):
    code, out, _ = run(capsys, "iso", "--family", "OGodd", "--r", "1", "--n", "3",
                       "--bundle", "O", "--json")
    assert code == 0
    data = json.loads(out)
    statuses = [rng["status"] for rng in data["ranges"]]
    assert statuses == [5, "vanishes", 0]


def test_iso_invalid_bundle(capsys):
    code, _, err = run(capsys, "iso", "--family", "LG", "--r", "2", "--n", "2",
                       "--bundle", "rq")
    assert code == 2
    assert "bott_isotropic" in err


def test_scan(capsys):
    code, out, err = run(capsys, "scan", "--n", "5", "--r", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["certified_range"] == [1, 4]
    assert "scanning" in err


def test_table_row(capsys):
    code, out, _ = run(capsys, "table", "--g", "sp", "--bundle", "d2",
                       "--r-case", "2=r=n", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"]
    assert data["rows"][0]["singles"]["computed"] == [1, 4, 7]


def test_table_single_case(capsys):
    code, out, _ = run(capsys, "table", "--g", "so_odd", "--bundle", "wedge2",
                       "--r", "4", "--n", "4")
    assert code == 0
    assert "ok" in out


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--r", "2", "--n", "4", "--deg", "2",
                       "--json")
    assert code == 0
    data = json.loads(out)
    assert data["rows"][-1]["h1"] == 0 and data["rows"][-1]["h2"] == 0


def test_oracle_truncation_exit_code(capsys):
    code, out, _ = run(capsys, "oracle", "--r", "2", "--n", "5", "--deg", "3",
                       "--max-slice", "10")
    assert code == 3


def test_verify_paper_subset(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "2,3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["passed"]
    assert [c["id"] for c in data["criteria"]] == ["2", "3"]


def test_usage_error_exit_code(capsys):
    assert main(["bogus-subcommand"]) == 2
