import json
import subprocess
import sys

import pytest

from weakdk.cli import main


def run(*argv):
    return main([str(a) for a in argv])


@pytest.fixture()
def p2(tmp_path):
    path = tmp_path / "p2.json"
    assert run("corpus", "pair-groupoid", 2, "-o", path) == 0
    return path


def _failed(doc):
    return {law["name"]: law for law in doc["laws"] if law["status"] == "fail"}


def test_verify_corpus_file(p2, capsys):
    assert run("verify", "weak-hopf", p2) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "pass"
    assert all(law["status"] == "pass" for law in doc["laws"])


def test_build_then_verify_bialgebroid(p2, tmp_path):
    out = tmp_path / "p2b.json"
    assert run("build", "bialgebroid", p2, "-o", out) == 0
    assert run("verify", "bialgebroid", out) == 0


def test_mutated_antipode_names_law_and_e12(p2, tmp_path, capsys):
    doc = json.loads(p2.read_text())
    doc["antipode"] = [["1" if i == j else "0" for j in range(4)] for i in range(4)]
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(doc))
    assert run("verify", "weak-hopf", broken) == 1
    failed = _failed(json.loads(capsys.readouterr().out))
    assert "antipode_left" in failed
    witness = failed["antipode_left"]["witness"]
    assert witness["basis"] == ["e12"] and witness["indices"] == [1]


def test_exit_two_on_bad_input(tmp_path, p2):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run("verify", "weak-hopf", bad) == 2
    assert run("verify", "bialgebroid", p2) == 2
    assert run("verify", "weak-hopf", tmp_path / "missing.json") == 2
    assert run("frobnicate") == 2
    assert run("corpus", "group", "zero") == 2


def test_reports_are_deterministic(p2, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("verify", "weak-hopf", p2, "--report", a)
    run("verify", "weak-hopf", p2, "--report", b)
    assert a.read_bytes() == b.read_bytes()


def test_corpus_outputs_are_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("corpus", "re", "UT2", "--datum", "HReRe", "-o", a)
    run("corpus", "re", "UT2", "--datum", "HReRe", "-o", b)
    assert a.read_bytes() == b.read_bytes()


def test_datum_pipeline(tmp_path, capsys):
    d = tmp_path / "d.json"
    assert run("corpus", "pair-groupoid", 2, "--datum", "HHH", "-o", d) == 0
    assert run("verify", "dk-datum", d) == 0
    c = tmp_path / "c.json"
    assert run("build", "dk-coring", d, "-o", c) == 0
    assert run("verify", "coring", c) == 0
    capsys.readouterr()
    assert run("check", "induction-sep", d) == 1
    assert _failed(json.loads(capsys.readouterr().out))["certificate_central"]["witness"][
        "indices"] == [1]
    assert run("check", "induction-sep", "--search-certificate", d) == 0
    assert json.loads(capsys.readouterr().out)["solvable"] is True
    assert run("check", "dk-iso", d) == 0


def test_separability_on_trivial_and_group_data(tmp_path, capsys):
    trivial = tmp_path / "hrr.json"
    run("corpus", "pair-groupoid", 2, "--datum", "HRR", "-o", trivial)
    assert run("check", "induction-sep", trivial) == 0
    assert run("check", "forgetful-sep", trivial) == 0
    z2 = tmp_path / "z2.json"
    run("corpus", "group", 2, "--datum", "HHH", "-o", z2)
    capsys.readouterr()
    assert run("check", "forgetful-sep", z2) == 1
    law = _failed(json.loads(capsys.readouterr().out))["gamma_colinear"]
    assert law["witness"]["indices"] == [0, 1]


def test_explicit_certificate_file(tmp_path, capsys):
    d = tmp_path / "d.json"
    run("corpus", "pair-groupoid", 2, "--datum", "HHH", "-o", d)
    capsys.readouterr()
    run("check", "forgetful-sep", "--search-certificate", d)
    cert = tmp_path / "gamma.json"
    cert.write_text(json.dumps({"matrix": json.loads(capsys.readouterr().out)["certificate"]}))
    assert run("check", "forgetful-sep", "--certificate", cert, d) == 0
    cert.write_text(json.dumps({"matrix": [["0"]]}))
    assert run("check", "forgetful-sep", "--certificate", cert, d) == 2


def test_weak_side_commands(tmp_path):
    w = tmp_path / "w.json"
    assert run("corpus", "group", 2, "--datum", "HHH", "--weak", "-o", w) == 0
    assert run("verify", "dk-datum", w) == 0
    assert run("build", "weak-coring-iso", w, "-o", tmp_path / "iso.json") == 0
    iso = json.loads((tmp_path / "iso.json").read_text())
    assert len(iso["theta"]) == 4
    assert run("check", "dk-iso", w) == 0


def test_translations(tmp_path):
    from weakdk import serialize
    from weakdk.corpus import pair_groupoid_algebra, weak_dk_data
    wd = weak_dk_data(pair_groupoid_algebra(2))[0]
    for kind, obj in (("ca", wd.A), ("mc", wd.C)):
        src = tmp_path / ("%s_w.json" % kind)
        serialize.dump(obj, src)
        mid, back = tmp_path / "mid.json", tmp_path / "back.json"
        assert run("build", "translate-" + kind, src, "-o", mid) == 0
        assert run("build", "translate-" + kind, mid, "-o", back) == 0
        assert back.read_bytes() == src.read_bytes()


def test_module_entry_point(p2):
    proc = subprocess.run([sys.executable, "-m", "weakdk", "verify", "weak-hopf", str(p2)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "pass"
