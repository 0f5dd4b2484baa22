"""CLI subcommands: outputs, formats, exit codes, determinism."""

import json

import pytest

from ampliface.cli import main


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_gf_command(capsys):
    code, out = run(capsys, ["gf", "--n", "5", "--k", "2"])
    assert code == 0
    assert "1      5     15     20     10" in out
    assert out.strip().endswith("PASS")


def test_gf_json(capsys):
    code, out = run(capsys, ["gf", "--n", "5", "--k", "2", "--json"])
    payload = json.loads(out)
    assert payload["pass"] and payload["poset"] == [1, 5, 15, 20, 10]


def test_pnk_checks(capsys):
    for check in ["gf", "euler", "ideal", "thin", "closure", "flip"]:
        code, out = run(capsys, ["pnk", "--n", "5", "--k", "2",
                                 "--check", check])
        assert code == 0, (check, out)
        assert "PASS" in out


def test_enumerate(capsys):
    code, out = run(capsys, ["enumerate", "--n", "4", "--json"])
    cells = json.loads(out)
    assert code == 0 and len(cells) == 33
    assert {"n": 4, "loops": [], "intervals": []} in cells


def test_lukowski_command(capsys):
    code, out = run(capsys, [
        "lukowski", "--k", "3",
        "--cell", '{"n":6,"loops":[1,2],"intervals":[[5,6]]}',
        "--seed", "7"])
    assert code == 0
    assert "0 0 0 0 * *" in out
    assert "125 126" in out


def test_lukowski_requires_seed(capsys, monkeypatch):
    monkeypatch.delenv("AMPLIFACE_SEED", raising=False)
    with pytest.raises(SystemExit):
        main(["lukowski", "--k", "2",
              "--cell", '{"n":5,"loops":[],"intervals":[]}'])


def test_lukowski_seed_from_env(capsys, monkeypatch):
    monkeypatch.setenv("AMPLIFACE_SEED", "5")
    code, _ = run(capsys, ["lukowski", "--k", "2",
                           "--cell", '{"n":5,"loops":[],"intervals":[]}'])
    assert code == 0


def test_codim_command(capsys):
    code, out = run(capsys, ["codim", "--n", "5", "--k", "2", "--json"])
    payload = json.loads(out)
    assert code == 0 and payload["pass"]
    assert all(r["c"] == r["codim"] for r in payload["rows"])


def test_residual_command(capsys, tmp_path):
    csv_path = tmp_path / "res.csv"
    code, out = run(capsys, ["residual", "--n", "5", "--k", "2",
                             "--csv", str(csv_path)])
    assert code == 0
    assert csv_path.exists()
    assert "PASS" in out


def test_numeric_verify_deterministic(capsys):
    argv = ["numeric-verify", "--n", "5", "--k", "2", "--samples", "2",
            "--seed", "3", "--cell", '{"n":5,"loops":[1],"intervals":[]}',
            "--json"]
    code1, out1 = run(capsys, argv)
    code2, out2 = run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["pass"]
    assert payload["cells"][0]["zero_pattern_ok"]


def test_dot_and_fig_outputs(capsys, tmp_path):
    dot = tmp_path / "p.dot"
    fig = tmp_path / "p.png"
    jsn = tmp_path / "p.json"
    code = main(["dot", "--n", "4", "--k", "2", "--out", str(dot),
                 "--fig", str(fig), "--json-out", str(jsn)])
    assert code == 0
    text = dot.read_text()
    assert text.startswith("digraph") and "->" in text
    assert fig.stat().st_size > 0
    obj = json.loads(jsn.read_text())
    assert obj["covers"] and obj["elements"]


def test_gf_figure(capsys, tmp_path):
    fig = tmp_path / "gf.png"
    csv_path = tmp_path / "gf.csv"
    code, _ = run(capsys, ["gf", "--n", "5", "--k", "2",
                           "--fig", str(fig), "--csv", str(csv_path)])
    assert code == 0
    assert fig.stat().st_size > 0
    header = csv_path.read_text().splitlines()[0]
    assert header == "corank,faces,closed_form"
