import json
import subprocess
import sys

from hypothesis import given, settings

from conftest import walks
from licci.cli import run
from licci.core import Decoration


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def as_args(dec):
    return ["--c", str(dec.c), "--lambda", ",".join(map(str, dec.lam)), "--mu", ",".join(map(str, dec.mu))]


def test_check_brown(capsys):
    code, out, _ = call(capsys, "check", "--lambda", "2,2,1,1,1", "--mu", "2,1")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"]["status"] == "yes"
    assert data["decoration"] == {"c": 3, "lambda": [2, 2, 1, 1, 1], "mu": [2, 1]}


def test_check_rejects(capsys):
    code, out, _ = call(capsys, "check", "--lambda", "3,3,1", "--mu", "2,1")
    assert code == 0
    assert json.loads(out)["verdict"]["reason"] == "squares"


def test_structured_errors(capsys):
    code, out, _ = call(capsys, "check", "--lambda", "2,2", "--mu", "1")
    assert code == 1
    assert json.loads(out)["error"] == "sum_identity_violated"
    code, out, _ = call(capsys, "link", "--lambda", "2,2,1,1,1", "--mu", "2,1", "--choice", "5,0,0")
    assert code == 1
    assert json.loads(out)["error"] == "invalid_choice"


def test_usage_errors(capsys):
    code, _, err = call(capsys, "classes", "--format", "1,2")
    assert code == 2 and "error" in err
    code, _, _ = call(capsys, "check", "--strict", "--lambda", "1,2,1,1", "--mu", "1,1")
    assert code == 2


def test_neighbors_table(capsys):
    code, out, _ = call(capsys, "--format", "table", "neighbors", "--lambda", "1,1,1", "--mu", "1")
    assert code == 0
    assert len(out.strip().splitlines()) == 4


def test_classes(capsys):
    code, out, _ = call(capsys, "classes", "--format", "5,2")
    data = json.loads(out)
    assert code == 0 and data["count"] == 2 and data["format"] == [1, 5, 6, 2]


def test_enumerate_and_filter(capsys):
    code, out, _ = call(capsys, "enumerate", "--max-k", "4")
    assert json.loads(out)["count"] == 15
    code, out, _ = call(capsys, "enumerate", "--c", "4", "--max-k", "3", "--format-filter", "3,1")
    assert [v["lambda"] for v in json.loads(out)["vertices"]] == [[2, 2, 2, 1, 1, 1, 1]]


def test_export_to_out_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("LICCI_OUT_DIR", str(tmp_path))
    code, _, _ = call(capsys, "--out", "g.dot", "enumerate", "--max-k", "2", "--export", "dot")
    assert code == 0
    assert (tmp_path / "g.dot").read_text().startswith("graph licci_c3")


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "licci.cfg"
    cfg.write_text("max_k = 2\n")
    code, out, _ = call(capsys, "--config", str(cfg), "enumerate")
    assert json.loads(out)["max_k"] == 2


def test_family_and_chain(capsys):
    code, out, _ = call(capsys, "family", "closest", "5")
    assert Decoration.from_json(json.loads(out)["decoration"]).k == 5
    code, out, _ = call(capsys, "family", "f1683", "--chain")
    assert json.loads(out)["ok"]
    code, out, _ = call(capsys, "family", "nope")
    assert code == 1 and json.loads(out)["error"] == "unknown_family"


def test_oracle(capsys):
    code, out, _ = call(capsys, "oracle", "verify", "--max-length", "8")
    data = json.loads(out)
    assert code == 0 and data["vertices_agree"] and data["edges_agree"]


def test_pipe_between_processes():
    first = subprocess.run(
        [sys.executable, "-m", "licci", "double", "--lambda", "2,1,1,1", "--mu", "1,1"],
        capture_output=True, text=True, check=True,
    )
    second = subprocess.run(
        [sys.executable, "-m", "licci", "check", "--from-json", "-"],
        input=first.stdout, capture_output=True, text=True, check=True,
    )
    data = json.loads(second.stdout)
    assert data["decoration"]["c"] == 4
    assert data["verdict"]["status"] == "yes"


@settings(max_examples=25, deadline=None)
@given(walks())
def test_json_round_trip_and_determinism(dec):
    import contextlib
    import io

    def capture(argv):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            assert run(argv) == 0
        return buf.getvalue()

    a = capture(["neighbors"] + as_args(dec))
    b = capture(["neighbors"] + as_args(dec))
    assert a == b
    back = Decoration.from_json(json.loads(a)["decoration"])
    assert back == dec
    again = capture(["neighbors", "--from-json", a])
    assert again == a
