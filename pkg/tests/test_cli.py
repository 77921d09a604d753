import json
import subprocess
import sys

import pytest

from skeinhecke.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_qdim_text(capsys):
    code, out, _ = run(capsys, "qdim", "-p", "1", "-N", "4")
    assert code == 0
    assert out.splitlines() == ["[4] = s^3 + s + s^-1 + s^-3", "classical dimension: 4"]


def test_qdim_nu(capsys):
    code, out, _ = run(capsys, "qdim", "-p", "4,2,1", "-N", "3")
    assert code == 0
    assert out.splitlines()[0] == "[5][3] = s^6 + 2*s^4 + 3*s^2 + 3 + 3*s^-2 + 2*s^-4 + s^-6"
    assert out.splitlines()[1] == "classical dimension: 15"


def test_qdim_zero_and_json(capsys):
    code, out, _ = run(capsys, "qdim", "-p", "1,1,1", "-N", "2")
    assert code == 0 and out.splitlines()[0] == "0"
    code, out, _ = run(capsys, "qdim", "-p", "2,1", "-N", "3", "--format", "json")
    data = json.loads(out)
    assert data == {"N": 3, "dim": 8, "factored": "[4][2]", "partition": [2, 1], "qdim": "s^4 + 2*s^2 + 2 + 2*s^-2 + s^-4"}


@pytest.mark.parametrize("argv", [["qdim", "-p", "2,a", "-N", "2"], ["qdim", "-p", "1,2", "-N", "2"], ["qdim", "-p", "2", "-N", "0"], ["bogus"]])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 1


def test_alpha(capsys):
    assert run(capsys, "alpha", "-p", "2")[1] == "s*[2] = s^2 + 1\n"
    assert run(capsys, "alpha", "-p", "1")[1] == "1\n"
    out = run(capsys, "alpha", "-p", "4,2,1")[1]
    assert out.startswith("s^3*[6][4][3][2] = s^14 + 4*s^12")


def test_homfly(capsys):
    code, out, _ = run(capsys, "homfly", "-n", "1", "-w", "")
    assert code == 0 and out == "framed: (-v^2*s + s)/(v*s^2 - v)\n"
    code, out, _ = run(capsys, "homfly", "-n", "2", "-w", "1 1 1", "--normalized")
    assert out.splitlines()[1] == "normalized: v^2*s^2 - v^4 + v^2*s^-2"
    code, out, _ = run(capsys, "homfly", "-n", "2", "-w", "-1 -1 -1", "--normalized", "--format", "json")
    assert json.loads(out)["normalized"] == "v^-2*s^2 - v^-4 + v^-2*s^-2"
    assert json.loads(out)["writhe"] == -3


def test_homfly_unlink_is_delta_squared(capsys):
    from skeinhecke.ring import DELTA

    _, out, _ = run(capsys, "homfly", "-n", "2", "-w", "1 -1")
    assert out == f"framed: {DELTA * DELTA}\n"


def test_homfly_bad_generator(capsys):
    code, _, err = run(capsys, "homfly", "-n", "2", "-w", "2")
    assert code == 1 and "invalid" in err


def test_homfly_guard(capsys):
    code, _, err = run(capsys, "homfly", "-n", "8", "-w", "1")
    assert code == 1 and "guard" in err


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--max-cells", "2", "-N", "2")
    assert code == 0
    assert out.splitlines() == [
        "partition,alpha,qdim,dim",
        "1,1,s + s^-1,2",
        "2,s^2 + 1,s^2 + 1 + s^-2,3",
        '"1,1",1 + s^-2,1,1',
    ]


def test_table_json(capsys):
    _, out, _ = run(capsys, "table", "--max-cells", "1", "-N", "2", "--format", "json")
    assert json.loads(out) == [{"partition": [1], "alpha": "1", "qdim": "s + s^-1", "dim": 2}]


def test_table_bounds(capsys):
    code, _, err = run(capsys, "table", "--max-cells", "9", "-N", "2")
    assert code == 1 and "unsafe-max" in err


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--max-cells", "3", "--checks", "idempotency")
    assert code == 0 and out.splitlines()[-1] == "6/6 passed"
    code, out, _ = run(capsys, "verify", "--max-cells", "4", "--checks", "marel")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--max-cells", "2", "--checks", "orthogonality")
    assert out.splitlines() == ["PASS [orthogonality] e(2) e(1,1) = 0", "1/1 passed"]


def test_verify_failure_exit_2(capsys, monkeypatch):
    from skeinhecke import verify

    monkeypatch.setitem(verify.CHECKS, "marel", lambda n: iter([("forced", False)]))
    code, out, _ = run(capsys, "verify", "--max-cells", "2", "--checks", "marel")
    assert code == 2 and "FAIL [marel] forced" in out


def test_verify_usage(capsys):
    code, _, err = run(capsys, "verify", "--checks", "nope")
    assert code == 1 and "unknown check" in err
    code, _, err = run(capsys, "verify", "--max-cells", "6", "--checks", "idempotency")
    assert code == 1


def test_unsafe_max_only_widens(capsys):
    from skeinhecke import hecke

    old = hecke._unsafe_max
    try:
        code, out, _ = run(capsys, "--unsafe-max", "6", "verify", "--max-cells", "6", "--checks", "closure")
        assert code == 0
        hecke.set_unsafe_max(2)
        assert hecke.max_strands(5) >= 6
    finally:
        hecke._unsafe_max = old


def test_deterministic_output():
    cmd = [sys.executable, "-m", "skeinhecke.cli", "table", "--max-cells", "5", "-N", "3", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b and a


def test_help_documents_syntax():
    out = subprocess.run(
        [sys.executable, "-m", "skeinhecke.cli", "--help"], capture_output=True, text=True
    ).stdout
    assert "4,2,1" in out and "1 -2 1" in out
