import subprocess
import sys

import pytest

from spherica.cli import main
from spherica.dynkin import build
from spherica.twist import parse_probe_rows, probe
from spherica.zigzag import ZigzagAlgebra, load


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("SPHERICA_TYPE", raising=False)
    monkeypatch.delenv("SPHERICA_FIELD", raising=False)


def test_equal(capsys):
    assert run(capsys, "equal", "1 2 1", "2 1 2") == (0, "equal\n", "")
    code, out, _ = run(capsys, "equal", "1 2", "2 1")
    assert code == 1 and out == "not equal\n"


def test_normalize(capsys):
    assert run(capsys, "normalize", "1 1 2")[1] == "D^0 | [1] [1 2]\n"
    assert run(capsys, "normalize", "1 -1 2")[1] == "D^0 | [2]\n"
    assert run(capsys, "normalize", "--type", "A", "--rank", "3", "1 3 2 1 3 2")[1].startswith("D^1")


def test_weyl_info(capsys):
    code, out, _ = run(capsys, "weyl-info", "--type", "D4", "--element", "1 2")
    assert code == 0
    assert "order: 192" in out and "length of w0: 12" in out
    assert "left descents: 1\n" in out and "right descents: 2\n" in out
    out = run(capsys, "weyl-info", "--type", "E8", "--cap", "10")[1]
    assert "not enumerated" in out and "length of w0: 120" in out


def test_twist_dump_loads(capsys):
    code, out, _ = run(capsys, "twist", "--word", "1 2", "--dump")
    assert code == 0 and out.startswith("generators: ")
    dumped = out[out.index("# A2"):]
    c = load(ZigzagAlgebra(build("A", 2)), dumped)
    assert len(c) == int(out.split()[1])
    assert run(capsys, "twist", "--word", "1 2", "--object", "1")[1] == "generators: 1\nP2 at 0\n"
    assert run(capsys, "twist", "--word", "1", "--object", "7")[0] == 4


def test_probe_rows_parse(capsys):
    code, out, _ = run(capsys, "probe", "--word", "1")
    assert code == 0
    assert "max degree: 3  top nodes: 1\n" in out
    t = parse_probe_rows(out)
    assert t.max_degree == 3 and t.top_nodes == {1}


def test_recover(capsys):
    code, out, _ = run(capsys, "recover", "--word", "1 1 2")
    assert code == 0
    assert "NF: D^0 | [1] [1 2]" in out and out.rstrip().endswith("round-trip: OK")
    code, out, _ = run(capsys, "recover", "--word", "1 -2 1")
    assert code == 0 and "D^-1 | [1] [1 2] [2]" in out


def test_error_codes(capsys):
    assert run(capsys, "normalize", "1 x")[0] == 3
    assert run(capsys, "normalize", "3")[0] == 3
    assert run(capsys, "normalize", "--type", "A", "1")[0] == 4
    assert run(capsys, "normalize", "--type", "F4", "1")[0] == 4
    assert run(capsys, "probe", "--word", "1", "--field", "4")[0] == 5
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_env_precedence(capsys, monkeypatch):
    monkeypatch.setenv("SPHERICA_TYPE", "D4")
    assert "type: D4" in run(capsys, "weyl-info")[1]
    assert "type: A3" in run(capsys, "weyl-info", "--type", "A3")[1]
    monkeypatch.setenv("SPHERICA_FIELD", "9")
    assert run(capsys, "probe", "--word", "1")[0] == 5
    assert run(capsys, "probe", "--word", "1", "--field", "3")[0] == 0
    monkeypatch.setenv("SPHERICA_FIELD", "abc")
    assert run(capsys, "probe", "--word", "1")[0] == 5


def test_field_flag_matches_library(capsys):
    out = run(capsys, "probe", "--type", "A3", "--word", "1 2 -3", "--field", "2")[1]
    from spherica.garside import parse_word
    from spherica.recover import action_on_spheres
    d = build("A", 3)
    assert parse_probe_rows(out) == probe(action_on_spheres(parse_word(d, "1 2 -3"), ZigzagAlgebra(d, 2)))


def test_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.count("PASS") >= 8 and "FAIL" not in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "spherica", "equal", "1 2 1", "2 1 2"],
                         capture_output=True, text=True, timeout=120)
    assert res.returncode == 0 and res.stdout == "equal\n"
