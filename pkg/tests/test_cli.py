import json
import subprocess
import sys
from pathlib import Path

import pytest

from peuler.cli import EXIT_INPUT, EXIT_OK, EXIT_REFUTED, EXIT_USAGE, main

N_SHAPE = str(Path(__file__).resolve().parents[1] / "posets" / "n_shape.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_extensions(capsys):
    code, out, _ = run(capsys, "extensions", N_SHAPE)
    assert code == EXIT_OK
    assert out.split() == ["1324", "1342", "3124", "3142", "3412"]


def test_eulerian_text_and_json(capsys):
    code, out, _ = run(capsys, "eulerian", N_SHAPE)
    assert out == "z1*z3*z1p*z2p*z4p + z1*z3*z1p*z2p*z3p + z1*z2*z1p*z2p*z4p + z1*z2*z1p*z2p*z3p + z1*z2*z3*z1p*z2p"
    code, out, _ = run(capsys, "--json", "eulerian", "chain:2")
    assert json.loads(out) == {"terms": [{"coeff": "1", "monomial": ["z1", "z1p", "z2p"]}]}


def test_inline_poset_json(capsys):
    code, out, _ = run(capsys, "eulerian-uni", '{"n": 3, "covers": []}')
    assert (code, out) == (EXIT_OK, "x + 4*x^2 + x^3")


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["db-eulerian", "antichain:2"], "z1 + z1*z2"),
        (["peak", "antichain:3"], "4*z1 + 2*z1*z2*z3"),
        (["peak-uni", "antichain:3"], "4 + 2*x"),
        (["shuffle", "1", "1"], "12 + 21"),
        (["dab-mul", "z1*z1p", "z1*z1p"], "z1*z1p*z2p + z1*z2*z1p"),
        (["dyck-mul", "uudu", "uuud"], "uududuud + uuduudud + uuduuudd + uuuuddud + uuuududd + uuuuuddd"),
        (["theta", "z1*z2*z1p*z2p*z4p"], "uuuudddu"),
        (["theta", "--inverse", "uuuudddu"], "z1*z2*z1p*z2p*z4p"),
    ],
)
def test_text_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert (code, out) == (EXIT_OK, expected)


def test_shuffle_json(capsys):
    code, out, _ = run(capsys, "--json", "shuffle", "132", "21")
    data = json.loads(out)
    assert len(data) == 10 and all(d["coeff"] == 1 for d in data)


def test_dyck_enum(capsys):
    code, out, _ = run(capsys, "dyck-enum", "3", "--json")
    assert json.loads(out) == ["uududu", "uuduud", "uuuddu", "uuudud", "uuuudd"]


def test_check_realrooted_exit_codes(capsys):
    assert run(capsys, "check-realrooted", "x^3 + 4*x^2 + x")[0] == EXIT_OK
    code, out, _ = run(capsys, "--json", "check-realrooted", "x^2 + 1")
    assert code == EXIT_REFUTED
    assert json.loads(out)["real_rooted"] is False


def test_check_stable(capsys):
    code, out, _ = run(capsys, "check-stable", "z1*z2 + 1")
    assert code == EXIT_REFUTED
    assert json.loads(out)["status"] == "Refuted"
    code, out, _ = run(capsys, "check-stable", "z1*z1p", "--region", "upper")
    assert code == EXIT_OK and json.loads(out)["status"] == "Certified"
    code, out, _ = run(capsys, "check-stable", "1 + z1", "--region", "right")
    assert code == EXIT_OK


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "malo", "--max", "3")
    assert code == EXIT_OK and "0 failures" in out
    code, out, _ = run(capsys, "--json", "verify", "dual", "--max", "2", "--threads", "1")
    assert code == EXIT_OK and json.loads(out)["failures"] == []


def test_verify_reports_failures(capsys):
    code, out, _ = run(capsys, "verify", "union-relabel", "--max", "2")
    assert code == 1
    assert "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["eulerian", "bogus"],
        ["eulerian", "antichain:x"],
        ["eulerian", '{"n": 2, "covers": [[1, 2], [2, 1]]}'],
        ["shuffle", "11", "1"],
        ["dyck-mul", "udud"],
        ["theta", "z1*z2"],
        ["check-realrooted", "x*y"],
        ["dab-mul", "z1^2", "z1*z1p"],
    ],
)
def test_bad_input_exit_65(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_INPUT
    assert err.startswith("peuler: error:")


def test_usage_errors_exit_64(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["check-stable", "z1", "--region", "left"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["--threads", "0", "dyck-enum", "2"])
    assert exc.value.code == EXIT_USAGE


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "peuler", "shuffle", "1", "21"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip() == "132 + 312 + 321"
