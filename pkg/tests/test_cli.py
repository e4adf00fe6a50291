import json
import os
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from gincurve.cli import run
from gincurve.fixtures import corpus

GOLDEN = Path(__file__).parent / "golden"
DIAGRAMS = [f.name for f in corpus() if f.kind == "diagram"]
CURVES = ["twisted-cubic", "rational-quartic", "ci-2-2", "ci-2-3"]
GOLDEN_COMMANDS = {
    "invariants": ["invariants"],
    "check": ["check"],
    "diagram": ["diagram"],
    "svg": ["diagram", "--format", "svg"],
    "syzygies": ["syzygies"],
    "hilbert": ["hilbert", "--to", "8"],
}


def data(name):
    return str(resources.files("gincurve").joinpath("data", name + ".ideal"))


def schema(name):
    return json.loads(resources.files("gincurve").joinpath("schemas", name + ".json").read_text())


@pytest.fixture
def write(tmp_path):
    def _write(text):
        path = tmp_path / "in.ideal"
        path.write_text(text)
        return str(path)
    return _write


@pytest.mark.parametrize("name", DIAGRAMS)
@pytest.mark.parametrize("kind", sorted(GOLDEN_COMMANDS))
def test_golden(name, kind):
    code, out, err = run(GOLDEN_COMMANDS[kind] + [data(name)])
    assert code in (0, 1), err
    path = GOLDEN / f"{name}.{kind}.txt"
    if os.environ.get("GINCURVE_UPDATE_GOLDEN"):
        path.write_text(out)
    assert out == path.read_text()


def test_invariants_table_text():
    code, out, _ = run(["invariants", data("connected-example")])
    assert code == 0
    assert out.splitlines() == [
        "k=0  s_0 = 4  mu_0(0) = 5  mu_1(0) = 3  mu_2(0) = 2  mu_3(0) = 1",
        "k=1  s_1 = 3  mu_0(1) = 4  mu_1(1) = 3  mu_2(1) = 1",
        "k=2  s_2 = 3  mu_0(2) = 4  mu_1(2) = 3  mu_2(2) = 1",
        "k=3  s_3 = 3  mu_0(3) = 4  mu_1(3) = 2  mu_2(3) = 1",
        "mu_i(k) = mu_i(3) for k >= 3",
        "lambda = (4, 2, 1)",
    ]


@pytest.mark.parametrize("name", DIAGRAMS + CURVES)
@pytest.mark.parametrize("command", ["invariants", "check", "syzygies", "hilbert", "gin"])
def test_json_schemas(name, command):
    argv = [command, data(name), "--json"] + (["--to", "6"] if command == "hilbert" else [])
    code, out, err = run(argv)
    if command == "syzygies" and code == 2:
        assert "Borel" in err
        return
    assert code in (0, 1), err
    jsonschema.validate(json.loads(out), schema(command))


def test_check_exit_codes():
    assert run(["check", data("strano-obstructed")])[0] == 1
    assert run(["check", data("connected-example")])[0] == 0
    assert run(["check", data("twisted-cubic")])[0] == 0
    code, out, _ = run(["check", data("strano-obstructed"), "--json", "--no-tail-rule"])
    failing = [r["rule"] for r in json.loads(out)["rules"] if r["status"] == "fail"]
    assert code == 1 and failing == ["strano"]


def test_input_errors(write):
    code, out, err = run(["check", write("vars: 3\nx1^\n")])
    assert code == 2 and not out and "line 2, column 4" in err
    assert run(["check", "/nonexistent/file"])[0] == 2
    assert run(["invariants", write("vars: x1 x2 x3\nx1^2 + x2\n")])[0] == 2
    assert run(["invariants", write("vars: 5\nx1\n")])[0] == 2
    assert run(["invariants", write("vars: 4\nx1*x4\nx2^2\n")])[0] == 2
    assert run(["gin", data("twisted-cubic"), "--trials", "0"])[0] == 2
    assert run(["gin", data("twisted-cubic"), "--bogus"])[0] == 2
    assert run(["frobnicate", data("twisted-cubic")])[0] == 2
    assert run(["hilbert", data("twisted-cubic")])[0] == 2
    assert run(["diagram", data("twisted-cubic"), "--format", "png"])[0] == 2


def test_gin_determinism():
    a = run(["gin", data("rational-quartic"), "--trials", "3", "--seed", "7"])
    b = run(["gin", data("rational-quartic"), "--trials", "3", "--seed", "7"])
    assert a == b and a[0] == 0
    assert "gin: (x1^2, x1*x2^2, x2^3, x1*x2*x3)" in a[1]


def test_gin_prime_flag():
    code, out, _ = run(["gin", data("twisted-cubic"), "--prime", "101", "--json"])
    assert code == 0 and json.loads(out)["prime"] == 101


def test_polynomial_input_to_analysis_commands():
    code, out, _ = run(["invariants", data("ci-2-3"), "--json"])
    assert code == 0 and json.loads(out)["lambda"] == [4, 2]
    code, out, _ = run(["hilbert", data("twisted-cubic"), "--to", "4"])
    assert out == "0 1\n1 4\n2 7\n3 10\n4 13\n"


def test_diagram_max_degree():
    code, out, _ = run(["diagram", data("connected-example"), "--max-degree", "4"])
    assert out.splitlines()[-1] == "X X X X 1"


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "gincurve.cli", "check", data("strano-obstructed")],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert "strano          fail" in proc.stdout
