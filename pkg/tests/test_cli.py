import csv
import io
import json
import subprocess
import sys

import pytest

from hopfcount.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, suite_rows
from hopfcount.families import appp_pair


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,code", [
    (["verify", "appp:p=3,zeta=1,lambda=1"], EXIT_OK),
    (["verify", "h8"], EXIT_OK),
    (["verify", "appp:p=4,zeta=1,lambda=0"], EXIT_USAGE),
    (["verify", "nonsense"], EXIT_USAGE),
    (["h2", "dihedral:8", "--modulus", "2"], EXIT_USAGE),
    (["count-galois", "appp:p=3,zeta=1,lambda=0", "--lift", "0"], EXIT_USAGE),
    (["no-such-command"], EXIT_USAGE),
    ([], EXIT_USAGE),
    (["paper-suite"], EXIT_OK),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_verify_perturbed_cocycles_reports_witness(capsys, tmp_path):
    mp, cp = appp_pair(3, 1, 1)
    sigma = cp.sigma.copy()
    sigma[1, 1, 3] = (sigma[1, 1, 3] + 1) % 3
    f = tmp_path / "cp.json"
    f.write_text(json.dumps({"modulus": 3, "sigma": sigma.tolist(), "tau": cp.tau.tolist()}))
    code, out, _ = run(capsys, "verify", "appp:p=3,zeta=1,lambda=1", "--cocycles", str(f), "--format", "json")
    assert code == EXIT_FAIL
    d = json.loads(out)
    assert not d["ok"]
    bad = [r for r in d["checks"] if not r["ok"]]
    assert bad and all(r["witness"] for r in bad)
    f.write_text(json.dumps({"modulus": 3, "sigma": [[0]], "tau": cp.tau.tolist()}))
    assert run(capsys, "verify", "appp:p=3,zeta=1,lambda=1", "--cocycles", str(f))[0] == EXIT_USAGE


def test_count_galois_formats(capsys):
    code, out, _ = run(capsys, "count-galois", "appp:p=3,zeta=1,lambda=1", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["galois_object_count"] == 2
    code, out, _ = run(capsys, "count-galois", "appp:p=3,zeta=1,lambda=1", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK and len(rows) == 2
    code, out, _ = run(capsys, "count-galois", "appp:p=3,zeta=1,lambda=1")
    assert code == EXIT_OK and "2" in out


def test_count_galois_dual_b(capsys):
    code, out, _ = run(capsys, "count-galois", "bpqq:p=2,q=5,m=4,lam=0,zeta=1", "--dual", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["galois_object_count"] == 3


def test_h2_and_h3_cyclic(capsys):
    code, out, _ = run(capsys, "h2", "product:cyclic:3;cyclic:3", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["order"] == 3
    code, out, _ = run(capsys, "h2", "cyclic:9", "--format", "json")
    assert json.loads(out)["order"] == 1
    for n, want in [(3, 5 % 3), (5, 0), (7, 0)]:
        code, out, _ = run(capsys, "h3-cyclic", str(n), "--xi", "1", "--format", "json")
        assert code == EXIT_OK and json.loads(out)["theta_exponent"] == want


def test_kac_omega_matches_closed_form(capsys):
    code, out, _ = run(capsys, "kac-omega", "appp:p=3,zeta=2,lambda=1", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["matches_closed_form"] is True


def test_enumerate_ff_lists_statuses(capsys):
    code, out, _ = run(capsys, "enumerate-ff", "appp:p=3,zeta=1,lambda=0", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK
    assert {r["status"] for r in rows} >= {"pass", "i"}


def test_morita_csv(capsys):
    code, out, _ = run(capsys, "morita", "--p", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK and len(rows) == 11
    code, out, _ = run(capsys, "morita", "--p", "3")
    assert out.count("not separated here") == 2


def test_output_is_deterministic(capsys, tmp_path):
    outs = []
    for k in range(2):
        f = tmp_path / f"o{k}.json"
        assert run(capsys, "paper-suite", "--p", "3", "--h8", "--format", "json", "--out", str(f))[0] == EXIT_OK
        outs.append(f.read_bytes())
    assert outs[0] == outs[1] and json.loads(outs[0])["summary"] == "7/7 rows match"


def test_suite_lift_not_multiple_is_reported(capsys):
    code, out, _ = run(capsys, "paper-suite", "--p", "3", "--lift", "1")
    assert code == EXIT_FAIL
    assert "not checked" in out and "MISMATCH" not in out


def test_suite_rows_shapes():
    rows = suite_rows([3], [(2, 3), (3, 2)], h8=True)
    specs = [(s, d, e) for s, d, e, _ in rows]
    assert ("appp:p=3,zeta=1,lambda=1", False, 2) in specs
    assert sum(1 for s, d, e in specs if s.startswith("bpqq") and d and e == 2) >= 1
    assert ("h8", False, 1) in specs
    assert suite_rows([], []) == []


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "hopfcount.cli", "h3-cyclic", "3", "--variant", "standard"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip()
