import io
import json
import subprocess
import sys

import pytest

from finred.cli import main, parse_stream


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_infinite(capsys):
    code, out, _ = run(capsys, "classify", "--json", "(RB)")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["red_count"] == "infinite"
    assert not any(n["holds"] for n in doc["notions"].values())


def test_classify_witnesses(capsys):
    code, out, _ = run(capsys, "classify", "BRB(B)")
    doc = json.loads(out)
    assert doc["stream"] == "BR(B)"
    assert doc["notions"]["boundedly_red"] == {"holds": True, "witness": 2}
    assert doc["red_count"] == 1


def test_classify_reads_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "classify", stdin="(B)\n", monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["red_count"] == 0


def test_compare(capsys):
    assert run(capsys, "compare", "B(BB)", "(B)")[1].strip() == "bisimilar"
    assert run(capsys, "compare", "BR(B)", "B(RB)")[1].strip() == "distinct at position 3"
    doc = json.loads(run(capsys, "compare", "--json", "B(BR)", "(BR)")[1])
    assert doc == {"schema": 1, "left": "B(BR)", "right": "(BR)", "bisimilar": False, "position": 1}


def test_relation(capsys):
    code, out, _ = run(capsys, "relation", "BRB(B)", "--limit", "3")
    assert out.splitlines() == ["0 -> 2", "1 -> 2", "2 -|"]
    doc = json.loads(run(capsys, "relation", "--json", "(R)", "--limit", "2")[1])
    assert doc["edges"] == [[0, 1], [1, 2]]


@pytest.mark.parametrize(
    "name, src, dst",
    [
        ("first-red-truncate", "BBR(R)", "BBR(B)"),
        ("complement-until-red", "(B)", "(R)"),
        ("pad-double", "BR(B)", "BRR(B)"),
        ("search-tag", "BBR(B)", "BBRR(B)"),
    ],
)
def test_transform(capsys, name, src, dst):
    code, out, _ = run(capsys, "transform", "--name", name, src)
    assert code == 0 and out.strip() == dst


def test_parse_error_exit_2(capsys):
    code, out, err = run(capsys, "classify", "BR()")
    assert code == 2
    assert "offset 3" in err
    assert "     ^" in err


def test_bad_usage_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["transform", "--name", "nope", "(B)"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["relation", "(B)", "--limit", "-1"])
    assert exc.value.code == 2


def test_check_small_family(capsys):
    code, out, _ = run(capsys, "check", "--max-prefix", "2", "--max-cycle", "2", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert doc["streams"] > 0
    assert all(not p["failed"] for p in doc["properties"].values())


def test_check_reports_failures(capsys, monkeypatch):
    from finred import properties

    monkeypatch.setitem(properties.PROPERTIES, "broken", lambda s, cfg: "R" not in str(s))
    code, out, _ = run(capsys, "check", "--max-prefix", "1", "--max-cycle", "1")
    assert code == 1
    assert "FAIL broken" in out
    assert "counterexample" in out


def test_check_output_deterministic(capsys):
    first = run(capsys, "check", "--max-prefix", "2", "--max-cycle", "2")[1]
    second = run(capsys, "check", "--max-prefix", "2", "--max-cycle", "2")[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "finred", "compare", "(RBRB)", "(RB)"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "bisimilar"


def test_parse_stream_reexported():
    assert str(parse_stream("BRB")) == "BR(B)"


def test_json_flag_before_subcommand(capsys):
    doc = json.loads(run(capsys, "--json", "compare", "(B)", "(R)")[1])
    assert doc["position"] == 0


def test_check_default_bounds_exits_zero():
    proc = subprocess.run([sys.executable, "-m", "finred", "check"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout
    assert "FAIL" not in proc.stdout
