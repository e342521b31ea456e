import io
import json
import subprocess
import sys

import pytest

from slidepoly.cli import run
from slidepoly.polynomial import Expansion, Polynomial


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    rc = run(list(argv), stdout=out, stderr=err)
    return rc, out.getvalue(), err.getvalue()


def test_expand_schubert_fundamental_slides():
    rc, out, _ = call("expand", "schubert", "1,4,6,2,3,5", "--basis", "fslide")
    assert rc == 0
    assert out.strip() == "F(0,2,3,0,0) + F(0,3,2,0,0) + F(1,2,2,0,0) + F(1,3,1,0,0) + F(2,2,1,0,0)"


def test_expand_schubert_json_round_trip():
    rc, out, _ = call("expand", "schubert", "1,4,6,2,3,5", "--basis", "fslide", "--format", "json")
    assert rc == 0
    e = Expansion.from_dict(json.loads(out))
    want = {(0, 2, 3, 0, 0), (0, 3, 2, 0, 0), (1, 2, 2, 0, 0), (1, 3, 1, 0, 0), (2, 2, 1, 0, 0)}
    assert {tuple(k[:5]) + (0,) * (5 - len(k)) for k in e.terms} == want


def test_expand_identity_is_one():
    rc, out, _ = call("expand", "schubert", "1", "--basis", "monomials")
    assert (rc, out.strip()) == (0, "1")
    rc, out, _ = call("expand", "schubert", "1", "--basis", "monomials", "--format", "json")
    assert Polynomial.from_dict(json.loads(out)) == Polynomial.one(1)


def test_stability_commands():
    assert call("stability", "eta", "3,5,4,1,6,2")[:2] == (0, "4\n")
    assert call("stability", "zeta", "2,3", "1,1")[1].strip() == "4"
    assert call("stability", "zeta", "[0,2,0,3]", "[1,0,0,1]")[1].strip() == "1"
    assert call("stability", "zeta", "24153", "21534")[1].strip() == "4"
    assert call("stability", "profile-product", "0,2,0,3", "1,0,0,1", "--max", "2")[1].strip() == "14 21 21"


def test_stanley_both_routes():
    _, words, _ = call("stanley", "24153", "--format", "json")
    _, limit, _ = call("stanley", "24153", "--via", "limit", "--format", "json")
    assert Expansion.from_dict(json.loads(words)) == Expansion.from_dict(json.loads(limit))


def test_schur_and_enumerate():
    rc, out, _ = call("expand", "schur", "3,2", "--n", "2", "--format", "json")
    assert rc == 0
    assert Polynomial.from_dict(json.loads(out)) == Polynomial({(3, 2): 1, (2, 3): 1}, 2)
    rc, out, _ = call("enumerate", "qpd", "24153")
    assert rc == 0 and out.startswith("count: 3")


def test_product_slide():
    rc, out, _ = call("product", "fslide", "0,2,0,3", "1,0,0,1", "--format", "json")
    assert rc == 0
    assert len(Expansion.from_dict(json.loads(out)).terms) == 14


def test_domain_error_exit_1():
    rc, out, err = call("expand", "schur", "2,3", "--n", "3")
    assert rc == 1 and out == "" and "partition" in err


def test_parse_errors_exit_2(capsys):
    assert call("bogus")[0] == 2
    assert call("stability", "eta", "1,1")[0] == 2
    assert call("expand", "schubert", "1,x")[0] == 2
    assert call("stability", "zeta", "12")[0] == 2
    capsys.readouterr()


def test_output_is_deterministic():
    argv = ("product", "schubert", "24153", "21534", "--format", "json")
    first = call(*argv)[1]
    assert first == call(*argv)[1]
    assert first == call(*argv, "--threads", "3")[1]


def test_output_file(tmp_path):
    target = tmp_path / "out.json"
    rc, out, _ = call("stanley", "321", "--format", "json", "--output", str(target))
    assert rc == 0
    data = json.loads(target.read_text())
    assert Expansion.from_dict(data) == Expansion({(1, 2): 1, (2, 1): 1}, "fundamental-qsym")


def test_verify_suite_passes():
    rc, out, _ = call("verify", "all")
    assert rc == 0
    assert "FAIL" not in out


@pytest.mark.parametrize("argv", [["stability", "eta", "3,5,4,1,6,2"]])
def test_module_entry_point(argv):
    proc = subprocess.run([sys.executable, "-m", "slidepoly", *argv], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "4"
