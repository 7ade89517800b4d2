import pytest

from di9.cli import main
from di9.world import parse_world


@pytest.fixture
def world(tmp_path):
    path = tmp_path / "w.txt"
    path.write_text("# sea battle\natom p settles 5 T\natom q settles always F\n")
    return str(path)


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_eval(capsys, world):
    assert run(capsys, "eval", "--world", world, "--formula", "p | ~p", "--at", "3") == (0, "T\n", "")
    assert run(capsys, "eval", "--world", world, "--formula", "p", "--at", "3") == (0, "O\n", "")
    assert run(capsys, "eval", "--world", world, "--formula", "p & q", "--at=-7/2") == (0, "F\n", "")


def test_trajectory(capsys, world):
    status, out, _ = run(capsys, "trajectory", "--world", world, "--formula", "p", "--probes", "0", "5", "19/2")
    assert status == 0
    assert out == "0 O\n5 T\n19/2 T\n"
    status, _, err = run(capsys, "trajectory", "--world", world, "--formula", "p", "--probes", "5", "0")
    assert status == 2 and "increasing" in err


def test_settle(capsys, world):
    assert run(capsys, "settle", "--world", world, "--formula", "p") == (0, "5 T\n", "")
    assert run(capsys, "settle", "--world", world, "--formula", "p | ~p") == (0, "always T\n", "")


def test_taut(capsys):
    assert run(capsys, "taut", "--formula", "p | ~p") == (0, "tautology\n", "")
    status, out, _ = run(capsys, "taut", "--formula", "p -> q")
    assert status == 0
    assert out == "not-tautology\ncountermodel p=T q=F\n"
    assert run(capsys, "taut", "--formula", "p", "--strict")[0] == 1


def test_entails(capsys):
    assert run(capsys, "entails", "--premise", "p", "--premise", "p -> q", "--conclusion", "q") == (0, "holds\n", "")
    status, out, _ = run(capsys, "entails", "--premise", "p | q", "--conclusion", "p")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "fails"
    assert lines[-1] == "# at 0"
    v = parse_world("\n".join(lines[1:]))
    assert v == parse_world("atom p settles always F\natom q settles always T\n")
    assert run(capsys, "entails", "--premise", "p | q", "--conclusion", "p", "--strict")[0] == 1
    assert run(capsys, "entails", "--conclusion", "p | ~p") == (0, "holds\n", "")


def test_fuzz(capsys):
    status, out, _ = run(capsys, "fuzz", "--seed", "3", "--iterations", "50", "--strict")
    assert status == 0
    assert "property=P5_recursive_equals_supervaluation cases=50 failures=0" in out
    assert out == run(capsys, "fuzz", "--seed", "3", "--iterations", "50")[1]
    assert run(capsys, "fuzz", "--max-atoms", "0")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["eval", "--formula", "p", "--at", "0"],
        ["eval", "--world", "w", "--formula", "p", "--at", "always"],
        ["eval", "--world", "w", "--formula", "p", "--at", "1.5"],
        ["taut", "--formula", "p", "--nope"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_input_errors(capsys, world, tmp_path):
    status, _, err = run(capsys, "eval", "--world", str(tmp_path / "missing"), "--formula", "p", "--at", "0")
    assert status == 2 and "cannot read" in err
    status, _, err = run(capsys, "eval", "--world", world, "--formula", "p |", "--at", "0")
    assert status == 2 and "position 3" in err
    status, _, err = run(capsys, "eval", "--world", world, "--formula", "r", "--at", "0")
    assert status == 2 and "'r'" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("atom p settles 5 T\natom p settles 6 T\n")
    status, _, err = run(capsys, "settle", "--world", str(bad), "--formula", "p")
    assert status == 2 and "line 2" in err


def test_bound_env_var(capsys, monkeypatch):
    monkeypatch.setenv("DI9_MAX_ATOMS", "1")
    status, _, err = run(capsys, "taut", "--formula", "p | q")
    assert status == 2 and "bound" in err
