import json
import subprocess
import sys
from pathlib import Path

import pytest

from crossgrade.cli import main

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_ok(capsys):
    for f in ("c2_group_algebra.json", "c2_quaternion_pair.json", "c4c4_alpha.json", "galois_skew_eta1.json"):
        code, out, _ = run(capsys, "verify", FIX / f)
        assert code == 0 and out.startswith("OK")


def test_verify_corrupted(capsys):
    code, out, _ = run(capsys, "verify", FIX / "c2_corrupted_alpha.json")
    assert code == 1
    assert "(g1, g2, g3) = (1, 1, 1)" in out
    code, out, _ = run(capsys, "verify", "--json", FIX / "c2_corrupted_alpha.json")
    assert json.loads(out)["pairs"][0]["twisting"] == [[1, 1, 1]]


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"format": "crossgrade-problem/1", "group": 3}')
    code, _, err = run(capsys, "verify", bad)
    assert code == 2 and "parse error" in err
    code, _, _ = run(capsys, "verify", tmp_path / "missing.json")
    assert code == 2


def test_act_identity_echoes(capsys):
    code, out, _ = run(capsys, "act", FIX / "c4c4_act_identity.json")
    assert code == 0
    assert json.loads(out)["pairs"] == json.loads((FIX / "c4c4_alpha.json").read_text())["pairs"]


def test_act_conj(capsys):
    code, out, _ = run(capsys, "act", FIX / "c4c4_act_conj.json")
    assert json.loads(out)["pairs"][0]["alpha"] == json.loads((FIX / "c4c4_alpha_bar.json").read_text())["pairs"][0]["alpha"]


def test_act_normalize(capsys):
    code, out, _ = run(capsys, "act", FIX / "c2_act_normalize.json")
    alpha = json.loads(out)["pairs"][0]["alpha"]
    assert alpha[0] == [0, 0] and alpha[1][0] == 0
    code2, out2, _ = run(capsys, "act", "--normalize", FIX / "c2_act_normalize.json")
    assert out2 == out


def test_decide_verdicts(capsys):
    a, b = FIX / "c4c4_alpha.json", FIX / "c4c4_alpha_bar.json"
    code, out, _ = run(capsys, "decide", "--relation", "iso", "--restrict-autos", "0", a, b)
    assert code == 0 and json.loads(out)["equivalent"] is False
    code, out, _ = run(capsys, "decide", "--relation", "equivalence", a, b)
    v = json.loads(out)
    assert v["equivalent"] is True and "witness" in v
    code, out, _ = run(capsys, "decide", "--relation", "iso", "--emit-map",
                       FIX / "galois_skew_eta1.json", FIX / "galois_skew_eta2.json")
    v = json.loads(out)
    assert v["equivalent"] and v["witness"]["phi"] == 3 and v["map"]["multiplicative"]
    # query block inside a two-pair file
    code, out, _ = run(capsys, "decide", FIX / "c4c4_conjugate_pairs.json")
    assert json.loads(out)["equivalent"] is False


def test_decide_mismatch(capsys):
    code, _, err = run(capsys, "decide", FIX / "c2_group_algebra.json", FIX / "c4c4_alpha.json")
    assert code == 2 and "context mismatch" in err


def test_cohomology(capsys):
    code, out, _ = run(capsys, "cohomology", "--group", "product:c4,c4", "--coeff", "sign", "--json")
    assert json.loads(out)["invariant_factors"] == [2, 2, 2]
    code, out, _ = run(capsys, "cohomology", "--group", "s3", "--divisible", "--json")
    assert json.loads(out)["invariant_factors"] == []
    code, out, _ = run(capsys, "cohomology", "--group", "cyclic:2", "--coeff", "roots:2", "--json",
                       "--representatives")
    d = json.loads(out)
    assert d["invariant_factors"] == [2] and len(d["representatives"]) == 2
    code, out, _ = run(capsys, "cohomology", "--group", "c4xc4", "--divisible", "--action", "conj:2")
    assert "[2, 2]" in out


def test_cohomology_guard(capsys):
    code, _, err = run(capsys, "cohomology", "--group", "s5")
    assert code == 3 and "guard" in err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--field", "real", "--group", "s3", "--json")
    counts = [s["count"] for s in json.loads(out)["strata"]]
    assert counts == [2, 2, 1, 2]
    code, out, _ = run(capsys, "classify", "--group", "cyclic:2")
    assert code == 0 and "classes" in out


def test_examples_list_and_flip(capsys):
    code, out, _ = run(capsys, "examples", "--filter", "")
    assert code == 0 and "PASS" not in out and "galois-skew-eta1-eta2" in out
    code, out, _ = run(capsys, "examples", "--filter", "galois")
    assert code == 0 and out.count("PASS") == 2
    code, out, _ = run(capsys, "examples", "--filter", "galois", "--flip", "galois-skew-eta1-eta3")
    assert code == 1 and "FAIL galois-skew-eta1-eta3" in out and "PASS galois-skew-eta1-eta2" in out


def test_threads_flag_keeps_output(capsys):
    _, a, _ = run(capsys, "--threads", "1", "classify", "--group", "c2", "--json")
    _, b, _ = run(capsys, "--threads", "4", "classify", "--group", "c2", "--json")
    assert a == b


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "crossgrade", "verify", str(FIX / "c2_group_algebra.json")],
                       capture_output=True, text=True)
    assert r.returncode == 0
