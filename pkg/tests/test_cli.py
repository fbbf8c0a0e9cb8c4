import json

import pytest

from jackpoly import cli
from jackpoly.jack import symmetric_J
from jackpoly.polyring import SparsePoly
from jackpoly.report import Report


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_examples(capsys):
    assert run(capsys, "build", "F", "--n", "2", "--comp", "0,1", "--format", "text")[:2] == (0, "(α+2)·x2\n")
    assert run(capsys, "build", "E", "--n", "2", "--comp", "0,0")[:2] == (0, "1\n")
    assert run(capsys, "build", "J", "--n", "2", "--partition", "1,0", "--format", "latex")[:2] == (0, "x_{1}+x_{2}\n")


def test_build_partition_padding_and_errors(capsys):
    assert run(capsys, "build", "m", "--n", "3", "--partition", "1")[1] == "x1+x2+x3\n"
    code, _, err = run(capsys, "build", "J", "--n", "2", "--comp", "1,0")
    assert code == 2 and "partition" in err
    code, _, err = run(capsys, "build", "J", "--n", "2", "--partition", "0,1")
    assert code == 2
    code, _, _ = run(capsys, "build", "E", "--n", "3", "--comp", "1,0")
    assert code == 2
    code, _, _ = run(capsys, "build", "E", "--n", "2", "--comp", "x,1")
    assert code == 2


def test_constants_examples(capsys):
    code, out, _ = run(capsys, "constants", "--n", "2", "--comp", "0,1")
    table = dict(line.split("=", 1) for line in out.split())
    assert code == 0
    assert (table["d"], table["d'"], table["e"], table["f"]) == ("α+2", "α+1", "α+2", "α^2+3α+2")
    _, out, _ = run(capsys, "constants", "--n", "2", "--comp", "0,0")
    assert set(dict(line.split("=", 1) for line in out.split()).values()) == {"1"}
    _, out, _ = run(capsys, "constants", "--n", "2", "--comp", "1,0")
    table = dict(line.split("=", 1) for line in out.split())
    assert {k: table[k] for k in ("d", "d'", "e", "b", "c", "c'", "j")} == {
        "d": "α+1", "d'": "α", "e": "α+2", "b": "2", "c": "1", "c'": "α", "j": "α"}


def test_alpha_specialization(capsys):
    assert run(capsys, "build", "F", "--n", "2", "--comp", "0,1", "--alpha", "1/2")[1] == "(5/2)·x2\n"
    code, _, err = run(capsys, "build", "E", "--n", "2", "--comp", "1,0", "--alpha", "-1")
    assert code == 2 and "pole" in err


def test_pair_command(capsys):
    assert run(capsys, "pair", "--n", "2", "--f", "x2", "--g", "x2")[1] == "(α+1)/(α+2)\n"
    assert run(capsys, "pair", "--n", "2", "--f", "F:1,0", "--g", "F:0,1")[1] == "0\n"
    assert run(capsys, "pair", "--n", "2", "--f", "J:1", "--g", "J:1", "--symmetric")[1] == "α\n"


def test_json_roundtrip(capsys):
    _, out, _ = run(capsys, "build", "J", "--n", "3", "--partition", "2,1", "--format", "json")
    assert SparsePoly.from_json(out) == symmetric_J((2, 1, 0))


@pytest.mark.parametrize("argv", [
    ["verify", "orthogonality", "--n", "2", "--degree", "3"],
    ["verify", "recursions", "--n", "4", "--degree", "6"],
    ["verify", "las", "--n", "2", "--degree", "2", "--r", "1"],
])
def test_verify_examples(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.startswith("PASS")


def test_verify_failure_exit_code(capsys, monkeypatch):
    def failing(*args, **kw):
        rep = Report("fake", {})
        rep.add("x", {}, 1, 2)
        return rep

    monkeypatch.setattr(cli, "verify_all_for", failing)
    code, out, _ = run(capsys, "verify", "spec", "--n", "1", "--degree", "1")
    assert code == 1 and out.startswith("FAIL")


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nosuchsuite", "--n", "1", "--degree", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "spec", "--n", "0", "--degree", "1"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_output_deterministic_across_jobs(capsys, tmp_path):
    outs = []
    for jobs in ("1", "2"):
        path = tmp_path / f"rep{jobs}.json"
        code, _, _ = run(capsys, "verify", "orthogonality", "--n", "2", "--degree", "2",
                         "--jobs", jobs, "--format", "json", "--output", str(path))
        assert code == 0
        outs.append(path.read_text(encoding="utf-8"))
    assert outs[0] == outs[1]
    assert all(c["status"] == "pass" for c in json.loads(outs[0]))
