"""Command line behavior: exit codes, both output formats, and stable
structured bytes."""
import json
import subprocess
import sys

import pytest

from quiverhom import cli, verify
from quiverhom.verify import Checks

TWO_WAY_3 = """\
algebra two_way_chain_3
vertices 1 2 3
arrow a1 : 1 -> 2
arrow a2 : 2 -> 3
arrow b1 : 2 -> 1
arrow b2 : 3 -> 2
relations:
    b2*a2
    b1*a1 - a2*b2
    a1*a2
    b2*b1
loewy_cap 4
duality asserted
order 1 2 3
"""


def run_cli(*argv, stdin=None):
    proc = subprocess.run([sys.executable, "-m", "quiverhom", *argv],
                          capture_output=True, input=stdin, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_analyze_structured():
    rc, out, _ = run_cli("analyze", "kupisch:2,2,3", "--format", "structured")
    assert rc == 0
    rep = json.loads(out)
    assert rep["schema_version"] == 1
    assert rep["command"] == "analyze"
    assert rep["bound"] == 64 and rep["seed"] == 0
    assert rep["gldim"] == {"kind": "exact", "n": 3}
    assert rep["domdim"] == {"kind": "exact", "n": 3}
    assert rep["gordim"] == {"kind": "exact", "n": 3}
    assert rep["gorenstein"] is True


def test_structured_output_is_byte_stable():
    args = ("stratify", "kupisch:2,2,3", "--order", "1,2,0",
            "--format", "structured")
    rc1, out1, _ = run_cli(*args)
    rc2, out2, _ = run_cli(*args)
    assert rc1 == rc2 == 0
    assert out1 == out2
    rep = json.loads(out1)
    assert rep["quasi_hereditary"] is True
    assert rep["regular_standard_filtration"]["multiplicities"] == \
        {"0": 2, "1": 1, "2": 2}


def test_stratify_all_orders_table():
    rc, out, _ = run_cli("stratify", "kupisch:4,5,5", "--format",
                         "structured")
    assert rc == 0
    rows = json.loads(out)["orders"]
    assert len(rows) == 6
    assert not any(r["standardly_stratified"] for r in rows)


def test_relar_reports_the_almost_split_sequence():
    rc, out, _ = run_cli("relar", "kupisch:2,3", "--level", "1",
                         "--format", "structured")
    assert rc == 0
    rows = json.loads(out)["modules"]
    seqs = [r for r in rows if r["status"] == "sequence"]
    assert len(seqs) == 1
    assert seqs[0]["translate"] == [1, 1]
    assert seqs[0]["middle"] == [1, 2]
    assert seqs[0]["ext1_dim"] == 1


def test_resolve_certifies_periodicity():
    rc, out, _ = run_cli("resolve", "kupisch:4,5,5")
    assert rc == 0
    assert "infinite (syzygy period 4" in out


def test_stdin_input_with_duality_directive():
    rc, out, _ = run_cli("tilting", "-", "--format", "structured",
                         stdin=TWO_WAY_3)
    assert rc == 0
    rep = json.loads(out)
    assert rep["input"] == "<stdin>"
    assert rep["order"] == [1, 2, 3]
    assert rep["projdim"] == 2
    assert rep["conjecture"]["verdict"] == "conjecture consistent"


def test_verify_paper_single_id_passes():
    rc, out, _ = run_cli("verify-paper", "ex3.1-n3")
    assert rc == 0
    assert "pass: yes" in out


def test_unknown_benchmark_id_is_a_parse_error():
    rc, _, err = run_cli("verify-paper", "nope")
    assert rc == 2
    assert "unknown id" in err


def test_unreadable_input_is_a_parse_error():
    rc, _, err = run_cli("analyze", "no/such/file.alg")
    assert rc == 2
    assert "neither an existing file" in err


def test_computational_failure_exits_one():
    rc, _, err = run_cli("tilting", "kupisch:4,5,5")
    assert rc == 1
    assert err.startswith("error:")


def test_verification_mismatch_exits_three(monkeypatch, capsys):
    def always_fails(bound, seed):
        c = Checks()
        c.expect("forced", 0, 1)
        return c

    monkeypatch.setitem(verify.REGISTRY, "tmp-fail", always_fails)
    rc = cli.main(["verify-paper", "tmp-fail", "--format", "structured"])
    assert rc == 3
    rep = json.loads(capsys.readouterr().out)
    assert rep["pass"] is False
    assert rep["results"][0]["checks"][0]["ok"] is False


def test_dsl_file_input(tmp_path):
    path = tmp_path / "chain.alg"
    path.write_text(TWO_WAY_3)
    rc, out, _ = run_cli("analyze", str(path), "--format", "structured")
    assert rc == 0
    rep = json.loads(out)
    assert rep["input"] == str(path)
    assert rep["dim"] == 9 and rep["gldim"] == {"kind": "exact", "n": 4}
