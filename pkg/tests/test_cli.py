import csv
import io
import json
import subprocess
import sys

import pytest

from stablepieces.cli import main
from stablepieces.verify import ALIASES

CASES_ALIAS = next(k for k, v in ALIASES.items() if v == "cases")
ADMISSIBILITY_ALIAS = next(k for k, v in ALIASES.items() if v == "admissibility")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pieces(capsys):
    code, out, _ = run(capsys, "pieces", "--type", "A1")
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = run(capsys, "pieces", "--type", "A2", "--with-chain", "--json")
    data = json.loads(out)
    assert code == 0 and len(data) == 13 and all("J_inf" in r for r in data)


def test_bound_refusal(capsys):
    code, _, err = run(capsys, "pieces", "--type", "E8")
    assert code == 1 and "bound" in err
    code, _, _ = run(capsys, "count", "--type", "B3", "--bound", "10")
    assert code == 1


def test_boundary(capsys):
    code, out, _ = run(capsys, "boundary", "--type", "A1", "--count")
    assert code == 0 and out.strip() == "1 + q"
    code, out, _ = run(capsys, "boundary", "--type", "A2")
    assert code == 0 and len(out.splitlines()) == 5
    code, out, _ = run(capsys, "boundary", "--type", "A2", "--count", "--check")
    assert code == 0 and "pass" in out


def test_closure(capsys):
    code, out, _ = run(capsys, "closure", "--type", "A2", "--a", "1|2|-", "--b", "1|1 2|-")
    assert code == 0 and out.split()[0] == "true" and "u=-" in out and "v=-" in out
    code, out, _ = run(capsys, "closure", "--type", "A2", "--a", "-|1|-", "--b", "1|1 2|-")
    assert code == 0 and out.strip() == "false"
    code, out, _ = run(capsys, "closure", "--type", "A2", "--coxeter-piece", "--i", "2", "--w", "1 2")
    assert code == 0 and len(out.splitlines()) == 4


@pytest.mark.parametrize("argv", [
    ["closure", "--type", "A2", "--a", "1|2"],
    ["closure", "--type", "A2", "--a", "1|2 1|-", "--b", "-|1|-"],
    ["closure", "--type", "A2", "--coxeter-piece", "--i", "2", "--w", "1 2 1"],
    ["pieces"],
    ["pieces", "--type", "Z9"],
    ["frobnicate"],
    [],
    ["verify", "--suite", "nonsense"],
    ["pieces", "--type", "A2", "--json", "--csv"],
    ["verify", "--jobs", "0"],
    ["coxeter", "--type", "A2", "--i", "7"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--type", "A1")
    assert code == 0 and "|Gbar| = 1 + q + q^2 + q^3" in out
    code, out, _ = run(capsys, "count", "--type", "A1", "--piece", "1|-")
    assert out.strip() == "-q + q^3"
    code, out, _ = run(capsys, "count", "--type", "A2", "--json")
    rec = json.loads(out)[0]
    assert rec["order"] == 6 and rec["poincare"] == [1, 2, 2, 1]


def test_coxeter(capsys):
    code, out, _ = run(capsys, "coxeter", "--type", "A3")
    assert code == 0 and len(out.splitlines()) == 4
    code, out, _ = run(capsys, "coxeter", "--type", "A2", "--conjugate", "1 2", "2 1", "--i", "1")
    assert code == 0 and set(out.split()) <= {"2"}
    code, out, _ = run(capsys, "coxeter", "--type", "A3", "--i", "2", "--json")
    rec = json.loads(out)[0]
    assert rec["layers"] == [[2], [1, 3]] and rec["closed_forms"] == "pass"
    code, out, _ = run(capsys, "coxeter", "--type", "A3", "--below", "1,3|2 1 3 2")
    assert code == 0 and out.strip() in ("1 3 2", "3 1 2", "1 2 3", "3 2 1", "2 1 3")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", CASES_ALIAS, "--type", "G2")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--suite", "counts", "--type", "F4", "--json")
    data = json.loads(out)
    assert code == 0 and {r["check"] for r in data} >= {"partition", "boundary"}
    code, out, _ = run(capsys, "verify", "--suite", CASES_ALIAS, "--type", "E6")
    assert code == 1 and "FAIL (KI-1)" in out


def test_json_roundtrip(capsys):
    for argv in (["pieces", "--type", "A2", "--with-chain"], ["boundary", "--type", "B2", "--count"],
                 ["verify", "--suite", ADMISSIBILITY_ALIAS, "--type", "A3"]):
        _, out, _ = run(capsys, *argv, "--json")
        data = json.loads(out)
        assert json.dumps(data, indent=2, sort_keys=True) == out.rstrip("\n")


def test_csv(capsys):
    _, out, _ = run(capsys, "pieces", "--type", "A2", "--csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 13 and rows[0] == {"J": "-", "w": "-"}


def test_config(tmp_path, capsys):
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text("bound: 10\n")
    code, _, _ = run(capsys, "count", "--type", "B3", "--config", str(cfg))
    assert code == 1
    code, _, _ = run(capsys, "count", "--type", "B3", "--config", str(cfg), "--bound", "100")
    assert code == 0
    bad = tmp_path / "bad.json"
    bad.write_text('{"colour": 1}')
    code, _, _ = run(capsys, "count", "--type", "A1", "--config", str(bad))
    assert code == 2


def test_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "verify", "--suite", "chains", "--max-rank", "2", "--json")
    _, parallel, _ = run(capsys, "verify", "--suite", "chains", "--max-rank", "2", "--json", "--jobs", "2")
    assert serial == parallel


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stablepieces", "boundary", "--type", "A1", "--count"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1 + q"
