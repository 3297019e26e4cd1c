import csv
import io
import json

import pytest

from hurwitz_divisors.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def rows(out):
    return json.loads(out)["rows"]


def test_maximize(capsys):
    status, out, _ = run(capsys, "maximize", "--d", "6", "--g", "11", "--a1", "2")
    assert status == 0
    assert rows(out)[0]["tuple"] == "2,3,3,4,4"


def test_maximize_defaults_to_k_and_condition3(capsys):
    _, out, _ = run(capsys, "maximize", "--d", "4", "--g", "8")
    assert rows(out)[0]["tuple"] == "2,4,5"
    status, _, err = run(capsys, "maximize", "--d", "4", "--g", "8", "--condition3", "literal")
    assert status == 1 and "no acceptable tuple" in err


def test_gate(capsys):
    status, out, _ = run(capsys, "gate", "--d", "3", "--g", "5")
    assert status == 0
    rec = rows(out)[0]
    assert rec["divisorial"] is False
    assert rec["reason"] == "(d,g) = (3,5) excluded"
    status, out, _ = run(capsys, "gate", "--d", "3", "--g", "5", "--format", "csv")
    assert "false" in out.splitlines()[1]
    assert run(capsys, "gate", "--d", "3", "--g", "5", "--strict")[0] == 1
    assert run(capsys, "gate", "--d", "5", "--g", "11", "--strict")[0] == 0


def test_table_csv(capsys):
    status, out, err = run(capsys, "table", "--d", "3", "--g", "4", "--format", "csv")
    assert status == 0
    data = list(csv.DictReader(io.StringIO(out)))
    assert len(data) == 15
    assert list(data[0]) == ["j", "mu", "m", "sigma", "provenance"]
    assert "default conventions" in err


def test_table_with_chain_file(capsys, tmp_path):
    entries = [{"j": j, "mu": mu, "m": 1, "delta": ["0", "0"], "e": ["1/2", "0"]}
               for j in range(2, 7) for mu in ("3", "2,1", "1,1,1")]
    path = tmp_path / "chain.json"
    path.write_text(json.dumps({"strata": entries}))
    status, out, err = run(capsys, "table", "--d", "3", "--g", "4", "--chain-file", str(path))
    assert status == 0 and err == ""
    assert {r["provenance"] for r in rows(out)} == {"explicit"}

    path.write_text(json.dumps({"strata": entries[:-1]}))
    status, _, err = run(capsys, "table", "--d", "3", "--g", "4", "--chain-file", str(path))
    assert status == 1 and "j=6, mu=(1,1,1)" in err


def test_sigma_command(capsys):
    status, out, _ = run(capsys, "sigma", "--d", "3", "--g", "3", "--j", "2", "--mu", "1,1,1")
    assert status == 0
    assert rows(out)[0]["sigma"] == "1/9"
    _, out, err = run(capsys, "sigma", "--d", "3", "--g", "3", "--j", "8", "--mu", "1,2")
    assert rows(out)[0]["mu"] == "2,1" and "reordered" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate", "--d", "3", "--g", "4"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["sigma", "--d", "3", "--g", "4"])
    assert info.value.code == 2
    assert run(capsys, "sigma", "--d", "3", "--g", "4", "--j", "2", "--mu", "x,1")[0] == 2
    assert run(capsys, "sigma", "--d", "3", "--g", "4", "--j", "2", "--mu", "2,2")[0] == 2
    assert run(capsys, "table", "--d", "3", "--g", "4", "--chain-file", "/nonexistent.json")[0] == 2


def test_domain_errors(capsys):
    assert run(capsys, "decompose", "--d", "2", "--g", "4")[0] == 1
    assert run(capsys, "sigma", "--d", "3", "--g", "4", "--j", "1", "--mu", "3")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("decompose", "--d", "5", "--g", "7"),
        ("splitting", "--d", "7", "--g", "13"),
        ("cohomology", "--d", "4", "--g", "6", "--twist", "0"),
        ("acceptable", "--d", "3", "--g", "4"),
        ("greedy", "--d", "5", "--g", "7"),
        ("strata", "--d", "3", "--g", "4"),
    ],
)
@pytest.mark.parametrize("fmt", ["json", "csv", "tex"])
def test_commands_run_in_every_format(capsys, argv, fmt):
    status, out, _ = run(capsys, *argv, "--format", fmt)
    assert status == 0 and out


def test_command_contents(capsys):
    assert rows(run(capsys, "decompose", "--d", "5", "--g", "7")[1])[0] == {
        "d": 5, "g": 7, "k": 1, "s": 3, "b": 22
    }
    assert rows(run(capsys, "cohomology", "--d", "4", "--g", "6", "--twist", "0")[1])[0]["h1"] == 6
    assert [r["tuple"] for r in rows(run(capsys, "acceptable", "--d", "3", "--g", "4")[1])] == ["2,4", "3,3"]
    assert rows(run(capsys, "greedy", "--d", "5", "--g", "7")[1])[0]["steps"] == "3,2,1,0"
    bundles = {r["bundle"]: r for r in rows(run(capsys, "splitting", "--d", "7", "--g", "13")[1])}
    assert bundles["cokernel_dual"]["type"] == "3,3,3,3,3,3"
    assert bundles["case1_pushforward"]["h0"] == 1
