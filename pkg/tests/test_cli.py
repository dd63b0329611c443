import json

import pytest

from bq_lab.cli import main
from bq_lab.quad import PairRecord


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_family_a(capsys):
    code, out, _ = run(capsys, "family-a", "--r1", "2", "--r2", "1")
    data = json.loads(out)
    assert code == 0
    assert data["quad_a"]["sides"] == ["165", "1635", "1313", "1313"]
    assert data["quad_b"]["sides"] == ["413", "1763", "1125", "1125"]
    assert data["common"] == {"perimeter": "4426", "area": "979200"}
    assert data["certificates"]["a"]["scale"] == "353"


def test_family_a_rational_params_and_seeds(capsys):
    code, out, _ = run(capsys, "family-a", "--r1", "4", "--r2", "2", "--seeds", "1")
    data = json.loads(out)
    assert code == 0 and data["params"] == {"r1": "2", "r2": "1"}
    assert len(data["seeds"]) == 1


def test_family_a_trapezium(capsys):
    code, out, _ = run(capsys, "family-a", "--r1", "2", "--r2", "1", "--trapezium")
    data = json.loads(out)
    assert {data["quad_a"]["d1"], data["quad_a"]["d2"], data["quad_b"]["d1"]} == {"1412"}


def test_family_a_degenerate(capsys):
    code, _, err = run(capsys, "family-a", "--r1", "1", "--r2", "1")
    assert code == 1 and "degenerate" in err


def test_family_b(capsys):
    code, out, _ = run(capsys, "family-b", "--t", "5")
    data = json.loads(out)
    assert code == 0
    assert data["common"]["perimeter"] == "554594981039603328364"
    assert data["quad_a"]["circumradius"] == "1338548290849915267747645/12376"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--sides", "3,4,3,4")
    data = json.loads(out)
    assert (data["area"], data["d1"], data["d2"], data["circumradius"]) == ("12", "5", "5", "5/2")


def test_verify_pair(capsys):
    code, out, _ = run(capsys, "verify", "--sides", "165,1635,1313,1313", "--other", "413,1763,1125,1125")
    assert code == 0 and json.loads(out)["ok"] is True
    code, out, _ = run(capsys, "verify", "--sides", "1,1,1,1", "--other", "1,2,3,4")
    assert code == 2 and json.loads(out)["equal_perimeter"] is False


def test_verify_nonconstructible(capsys):
    code, _, err = run(capsys, "verify", "--sides", "1,1,1,5")
    assert code == 1 and "not constructible" in err


def test_fermat(capsys):
    code, out, _ = run(capsys, "fermat", "--quartic", "4,-16,25,-16,4", "--anchor", "const")
    data = json.loads(out)
    assert data["solutions"] == [{"z": "32/17", "value": "498436/83521", "witness": "706/289"}]


def test_fermat_iterate_and_poly_text(capsys):
    code, out, _ = run(capsys, "fermat", "--quartic", "4*z^4 - 16*z^3 + 25*z^2 - 16*z + 4",
                       "--iterations", "3")
    data = json.loads(out)
    assert code == 0 and len(data["solutions"]) == 3 and data["stalled"] is False


def test_fermat_domain_error(capsys):
    code, _, _ = run(capsys, "fermat", "--quartic", "2,0,0,0,1")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["fermat", "--quartic", "1.5,1,1,1,1"],
    ["verify", "--sides", "1,2,3"],
    ["family-a", "--r1", "2"],
    ["nonsense"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 64


def test_search_csv(capsys):
    code, out, _ = run(capsys, "search", "--max-perimeter", "14", "--shards", "1")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("a1,a2,a3,a4")
    assert any(l.startswith("3,3,4,4,14,") for l in lines)


def test_search_pairs(capsys, monkeypatch):
    monkeypatch.setenv("BQ_LAB_SHARDS", "2")
    code, out, _ = run(capsys, "search", "--max-perimeter", "22", "--pairs")
    data = json.loads(out)
    assert [(d["quad_a"]["sides"], d["quad_b"]["sides"]) for d in data] == [
        (["2", "2", "9", "9"], ["2", "5", "5", "10"]),
        (["3", "3", "8", "8"], ["3", "5", "5", "9"]),
    ]


@pytest.mark.parametrize("section", ["2.1", "2.2", "isosceles", "scalene"])
def test_identities(capsys, section):
    code, out, _ = run(capsys, "identities", "--section", section)
    assert code == 0
    assert out and all(line.startswith("PASS") for line in out.splitlines())


def test_cross_check_command(capsys, tmp_path):
    run(capsys, "family-b", "--t", "5")
    code, out, _ = run(capsys, "family-b", "--t", "5")
    path = tmp_path / "pair.json"
    path.write_text(out)
    code, out, _ = run(capsys, "cross-check", str(path))
    assert code == 0 and json.loads(out)["ok"] is True
    data = json.loads(path.read_text())
    data["quad_b"]["sides"][0] = str(int(data["quad_b"]["sides"][0]) + 1)
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "cross-check", str(path))
    assert code == 2 and "equal_perimeter" in json.loads(out)["failures"]


@pytest.mark.parametrize("argv", [
    ["family-a", "--r1", "2", "--r2", "1"],
    ["family-a", "--r1", "3", "--r2", "2"],
    ["family-b", "--t", "5"],
])
def test_json_roundtrip(capsys, argv):
    _, out, _ = run(capsys, *argv)
    data = json.loads(out)
    assert PairRecord.from_json(data).to_json() == data


def test_deterministic_output(capsys):
    first = run(capsys, "family-b", "--t", "21/4")
    second = run(capsys, "family-b", "--t", "21/4")
    assert first == second and first[0] == 0
