import json

import pytest

from qnichols.cli import main


@pytest.fixture
def a3_file(tmp_path):
    path = tmp_path / "a3.json"
    path.write_text(json.dumps(
        {"family": "SuperA", "theta": 3, "order": 5, "J": [2]}))
    return str(path)


@pytest.fixture
def ideal_file(tmp_path):
    path = tmp_path / "rels.txt"
    path.write_text("# eminent quotient relations\n"
                    "x2^2\nxw(1,3)\nxw(1,1,2)\nxw(3,3,2)\n")
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_diagram_json_round_trip(capsys, a3_file):
    code, out, _ = run(capsys, ["diagram", "--matrix", a3_file, "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["vertex_exponents"] == [8, 5, 2]
    assert json.loads(json.dumps(obj)) == obj


def test_cartan(capsys, a3_file):
    code, out, _ = run(capsys, ["cartan", "--matrix", a3_file, "--json"])
    assert code == 0
    assert json.loads(out) == [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]


def test_roots_and_gkdim(capsys, a3_file):
    code, out, _ = run(capsys, ["roots", "--matrix", a3_file, "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["finite"] and obj["count"] == 6
    code, out, _ = run(capsys, ["gkdim", "--matrix", a3_file, "--json"])
    assert code == 0
    assert json.loads(out)["gkdim_distinguished"] == 2


def test_cartan_roots(capsys, a3_file):
    code, out, _ = run(capsys, ["cartan-roots", "--matrix", a3_file, "--json"])
    assert code == 0
    coords = sorted(tuple(r["coords"]) for r in json.loads(out))
    assert coords == [(0, 0, 1), (1, 0, 0)]


def test_verify_exit_codes(capsys, a3_file, ideal_file):
    code, _, _ = run(capsys, ["verify", "--matrix", a3_file, "--ideal",
                              ideal_file, "--element", "xw(1,2)^2",
                              "--degree", "6"])
    assert code == 0
    code, _, _ = run(capsys, ["verify", "--matrix", a3_file, "--ideal",
                              ideal_file, "--element", "x1*x2",
                              "--degree", "6"])
    assert code == 1


def test_primitive_and_central(capsys, a3_file, ideal_file):
    code, _, _ = run(capsys, ["primitive", "--matrix", a3_file, "--ideal",
                              ideal_file, "--element", "[xint(1,3),x2]",
                              "--degree", "8"])
    assert code == 0
    code, out, _ = run(capsys, ["central", "--matrix", a3_file, "--ideal",
                                ideal_file, "--element", "[xint(1,3),x2]",
                                "--degree", "8", "--json"])
    assert code == 0
    assert json.loads(out)["ok"]


def test_dims_round_trip(capsys, a3_file, ideal_file):
    code, out, _ = run(capsys, ["dims", "--matrix", a3_file, "--ideal",
                                ideal_file, "--degree", "4", "--json"])
    assert code == 0
    rows = json.loads(out)
    table = {tuple(r["degree"]): r["dim"] for r in rows}
    assert table[(1, 1, 0)] == 2
    assert table[(0, 2, 0)] == 0 if (0, 2, 0) in table else True
    assert table[(0, 0, 0)] == 1


def test_pbw_check(capsys, tmp_path, a3_file, ideal_file):
    pbw = tmp_path / "pbw.json"
    pbw.write_text(json.dumps([
        {"letter": "x3", "height": None},
        {"letter": "xw(2,3)", "height": 2},
        {"letter": "x2", "height": 2},
        {"letter": "[xint(1,3),x2]", "height": None},
        {"letter": "xint(1,3)", "height": 2},
        {"letter": "xw(1,2)", "height": 2},
        {"letter": "x1", "height": None},
    ]))
    code, _, _ = run(capsys, ["pbw-check", "--matrix", a3_file, "--ideal",
                              ideal_file, "--pbw", str(pbw), "--degree", "6"])
    assert code == 0


def test_hilbert(capsys, a3_file):
    code, out, _ = run(capsys, ["hilbert", "--family", a3_file, "--kind",
                                "eminent", "--degree", "4", "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["growth_degree"] == 3
    table = {tuple(c["degree"]): c["dim"] for c in obj["coefficients"]}
    assert table[(1, 1, 1)] == 4


def test_catalog_dump(capsys, a3_file):
    code, out, _ = run(capsys, ["catalog", "--family", a3_file, "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["entry"] == "super-a"
    assert "[xint(1,3),x2]" in obj["relations"]


def test_symmetrize_exit(capsys, a3_file):
    code, _, _ = run(capsys, ["symmetrize", "--matrix", a3_file,
                              "--element", "xw(1,3)"])
    assert code == 0
    code, _, _ = run(capsys, ["symmetrize", "--matrix", a3_file,
                              "--element", "x1*x2"])
    assert code == 1


def test_usage_errors(capsys, a3_file, ideal_file, tmp_path):
    code, _, err = run(capsys, ["verify", "--matrix", a3_file, "--ideal",
                                ideal_file, "--element", "[[xint(1,3),x2]",
                                "--degree", "6"])
    assert code == 2 and "error" in err
    missing = str(tmp_path / "nope.json")
    code, _, err = run(capsys, ["diagram", "--matrix", missing])
    assert code == 2


def test_replay_manifest(capsys, tmp_path):
    manifest = tmp_path / "m.json"
    manifest.write_text(json.dumps({"checks": [
        {"id": "coproduct-mixed-bracket", "params": {"orders": [5]}}]}))
    code, out, _ = run(capsys, ["replay", "--manifest", str(manifest)])
    assert code == 0
    assert "1/1 checks passed" in out
    empty = tmp_path / "empty.json"
    empty.write_text(json.dumps({"checks": []}))
    code, out, _ = run(capsys, ["replay", "--manifest", str(empty)])
    assert code == 0
    assert "0/0 checks passed" in out


def test_replay_order_list(capsys, tmp_path):
    manifest = tmp_path / "m.json"
    manifest.write_text(json.dumps({"checks": [
        {"id": "hilbert-eminent-a3-j2"}]}))
    code, out, _ = run(capsys, ["replay", "--manifest", str(manifest),
                                "--order-list", "5,7"])
    assert code == 0
    assert "order 7" in out


def test_unknown_check_id(capsys, tmp_path):
    manifest = tmp_path / "m.json"
    manifest.write_text(json.dumps({"checks": [{"id": "no-such-check"}]}))
    code, _, err = run(capsys, ["replay", "--manifest", str(manifest)])
    assert code == 2
