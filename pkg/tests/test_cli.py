import json

from brdlab.cli import main


def test_simulate_command(tmp_path, capsys):
    out = tmp_path / "traj.json"
    code = main(["simulate", "--graph", "path:5", "--delta", "0.99",
                 "--seed", "7", "--traj", str(out)])
    assert code == 0
    printed = capsys.readouterr().out
    assert "converged=true" in printed
    payload = json.loads(out.read_text())
    assert len(payload["terminal"]) == 5


def test_sweep_command_writes_csv(tmp_path):
    out = tmp_path / "table.csv"
    code = main(["sweep", "--graph", "path:2", "--delta-start", "0.1",
                 "--delta-end", "0.5", "--delta-step", "0.2",
                 "--trials", "2", "--seed", "5", "--out", str(out)])
    assert code == 0
    lines = out.read_text().strip().split("\n")
    assert lines[0].startswith("delta,trial,seed,")
    assert len(lines) == 7


def test_spectrum_command(capsys):
    assert main(["spectrum", "--graph", "path:3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["graph"]["n"] == 3
    assert len(payload["spectrum"]) == 3


def test_equilibria_command(capsys):
    assert main(["equilibria", "--graph", "path:5", "--delta", "0.7"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["stable"][0]["set"] == [0, 2, 4]


def test_scenario_command(capsys):
    assert main(["scenario", "--name", "singlecomp"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["graph"]["n"] == 7


def test_exit_codes(capsys):
    assert main(["simulate", "--graph", "path:0", "--delta", "0.5"]) == 2
    assert main(["sweep", "--graph", "path:5000", "--delta-start", "0",
                 "--delta-end", "0.1", "--delta-step", "0.1",
                 "--trials", "1"]) == 3
    assert main(["scenario", "--name", "wat"]) == 2
    assert main(["sweep", "--graph", "path:2"]) == 2
