import io
import subprocess
import sys

import pytest

from conftest import C
from nearness import (
    GroundSet,
    NotACover,
    ParseError,
    SetMap,
    discrete,
    generate,
    indiscrete,
)
from nearness import cli
from nearness.cli import main, parse_map, parse_structure, serialize_map, serialize_structure

X2, X3 = GroundSet(2), GroundSet(3)
PATH = C(3, [0, 1], [1, 2])


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_parse_structure_examples():
    assert parse_structure("n=3\ncover: 0,1;1,2") == generate(X3, [PATH])
    mu = parse_structure("n=2\ncover: 0;1\ncover: 0,1")
    assert mu == discrete(X2)
    with pytest.raises(NotACover):
        parse_structure("n=2\ncover: 0")


def test_parse_structure_accepts_comments_and_raw_blocks():
    text = "# a path\nn=3\n\ncover: 1,0;2,1;1\n"
    assert parse_structure(text) == generate(X3, [PATH])


@pytest.mark.parametrize(
    "text, line",
    [
        ("cover: 0", 1),
        ("n=3\ncovr: 0,1,2", 2),
        ("n=3\ncover: 0,x", 2),
        ("n=2\ncover: 0,5", 2),
        ("n=zero", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_structure(text)
    assert info.value.line == line


def test_serialize_examples():
    assert serialize_structure(indiscrete(X2)) == "n=2\ncover: 0,1\n"
    assert serialize_structure(discrete(X2)) == "n=2\ncover: 0;1\n"
    assert serialize_structure(generate(X3, [PATH])) == "n=3\ncover: 0,1;1,2\n"


def test_round_trip(all_structures):
    for mu in all_structures:
        assert parse_structure(serialize_structure(mu)) == mu


def test_map_format():
    f = SetMap(X3, X2, (0, 1, 1))
    text = serialize_map(f)
    assert text == "n=3\nm=2\nmap: 0->0,1->1,2->1\n"
    assert parse_map(text) == f
    with pytest.raises(ParseError):
        parse_map("n=3\nm=2\nmap: 0->0,2->1,1->1")
    with pytest.raises(ParseError):
        parse_map("n=2\nm=2\nmap: 0->0,1->2")


def test_check_and_reflect(files):
    path = files("path.txt", "n=3\ncover: 0,1;1,2\n")
    assert run("check", path) == (0, "merotopic\n", "")
    assert run("check", files("ind.txt", "n=3\ncover: 0,1,2\n")) == (0, "nearness\n", "")
    assert run("reflect", path, "--algorithm", "both") == (0, "n=3\ncover: 0,1,2\n", "")


def test_interior_join_initial_uc(files):
    path = files("path.txt", "n=3\ncover: 0,1;1,2\n")
    assert run("interior", path, "--set", "0,1") == (0, "0\n", "")
    assert run("interior", path, "--set", "") == (0, "\n", "")
    a = files("a.txt", "n=3\ncover: 0,1;2\n")
    b = files("b.txt", "n=3\ncover: 0;1,2\n")
    assert run("join", a, b)[1] == "n=3\ncover: 0;1;2\n"
    f = files("f.txt", "n=3\nm=2\nmap: 0->0,1->1,2->1\n")
    d2 = files("d2.txt", "n=2\ncover: 0;1\n")
    assert run("initial", "--map", f, "--codomain", d2)[1] == "n=3\ncover: 0;1,2\n"
    assert run("uc", "--map", f, "--domain", path, "--codomain", d2) == (0, "false\n", "")
    assert run("uc", "--map", f, "--domain", b, "--codomain", d2) == (0, "true\n", "")


def test_enumerate_and_counterexample():
    code, out, _ = run("enumerate", "--n", "3", "--covers")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "9" and len(lines) == 10
    code, out, _ = run("enumerate", "--n", "2", "--structures")
    assert out == "2\n0;1\n0,1\n"
    assert run("counterexample", "--n", "2") == (0, "none\n", "")
    code, out, _ = run("counterexample", "--n", "3")
    assert code == 0 and out.startswith("map: 0->0,1->1,2->2\nnu:\nn=3\n")


def test_verify_exit_codes(monkeypatch):
    code, out, _ = run("verify", "--n", "3")
    assert code == 0
    assert out.splitlines()[-1] == "9 structures, 0 failing"

    real = cli.verify_bireflection

    def broken(mu, bound):
        report = real(mu, bound)
        report.checks.append(("injected", False, None))
        return report

    monkeypatch.setattr(cli, "verify_bireflection", broken)
    assert run("verify", "--n", "2")[0] == 1


def test_error_exit_codes(files):
    code, out, err = run("check", files("bad.txt", "n=2\ncover: 0\n"))
    assert code == 2 and out == "" and "error" in err
    assert run("check", files("bad2.txt", "n=3\ncovr: 0\n"))[0] == 2
    assert run("check", "/nonexistent/file")[0] == 2
    assert run("enumerate", "--n", "7", "--covers")[0] == 2
    assert run("frobnicate")[0] == 2


def test_byte_identical_runs(files):
    path = files("path.txt", "n=3\ncover: 0,1;1,2\n")
    assert run("reflect", path, "--algorithm", "both") == run("reflect", path, "--algorithm", "both")
    assert run("verify", "--n", "3") == run("verify", "--n", "3")


def test_console_module_subprocess(files):
    path = files("path.txt", "n=3\ncover: 0,1;1,2\n")
    cmd = [sys.executable, "-m", "nearness.cli", "reflect", path, "--algorithm", "both"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second == b"n=3\ncover: 0,1,2\n"
