"""Command line behavior: verbs, exit codes, formats, batch determinism."""

import io
import json
import os

import pytest

from orelab import construct, save_ring_file
from orelab.cli import run


def _run(argv):
    buf = io.StringIO()
    code = run(argv, stdout=buf)
    return code, buf.getvalue()


def test_profile_text():
    code, out = _run(["profile", "zmod(6)"])
    assert code == 0
    assert "maximal denominator sets: 2" in out
    assert "left localizable: yes" in out
    assert "route every-nonzero-element-localizable: yes" in out


def test_profile_json():
    code, out = _run(["profile", "zmod(6)", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["target"] == "zmod(6)"
    assert doc["localizable"] == [1, 2, 3, 4, 5]


def test_ore_reference_example():
    code, out = _run(["ore", "zmod(6)", "--set", "1,3"])
    assert code == 0
    assert "left Ore: yes" in out
    assert "left denominator: yes" in out
    assert "ass: {0, 2, 4}" in out
    assert "core: {3}" in out


def test_localize_verb():
    code, out = _run(["localize", "zmod(6)", "--set", "1,3"])
    assert code == 0
    assert "fraction ring order: 2" in out
    assert "quotient model: isomorphic" in out


def test_verify_single_theorem():
    code, out = _run(["verify", "zmod(4)", "--theorems", "29Nov12"])
    assert code == 0
    assert "pass" in out and "FAIL" not in out


def test_verify_all(z6):
    code, out = _run(["verify", "zmod(6)", "--theorems", "all"])
    assert code == 0
    assert "checked 22, passed 22, failed 0" in out


def test_info_verb():
    code, out = _run(["info", "gf(4)"])
    assert code == 0
    assert "units (3): {1, x, x+1}" in out
    assert "canonical hash:" in out


def test_check_axioms_ok():
    code, out = _run(["check-axioms", "upper_triangular(gf(2),2)"])
    assert code == 0
    assert "axioms: ok" in out


def test_file_target(tmp_path, t2f2):
    path = tmp_path / "ring.txt"
    save_ring_file(t2f2, str(path))
    code, out = _run(["info", str(path)])
    assert code == 0
    assert "(order 8)" in out


def test_check_axioms_broken_file(tmp_path, z4):
    path = tmp_path / "broken.ring"
    save_ring_file(z4, str(path))
    lines = path.read_text().splitlines()
    mul_at = lines.index("mul")
    row = lines[mul_at + 3].split()
    row[-1] = "1" if row[-1] != "1" else "2"
    lines[mul_at + 3] = " ".join(row)
    path.write_text("\n".join(lines) + "\n")
    code, out = _run(["check-axioms", str(path)])
    assert code == 1
    assert "mathematical check failed" in out


def test_usage_errors():
    assert _run(["profile", "zmod(nope)"])[0] == 2
    assert _run(["verify", "zmod(6)", "--theorems", "bogus"])[0] == 2
    assert _run(["ore", "zmod(6)", "--set", "2,4"])[0] == 2
    assert _run(["ore", "zmod(6)", "--set", "1,99"])[0] == 2
    assert _run(["localize", "zmod(6)", "--set", ""])[0] == 2
    assert _run(["info", "no/such/file.ring"])[0] == 2


def test_guard_exit_code():
    assert _run(["profile", "matrix(gf(3),3)"])[0] == 3
    assert _run(["profile", "zmod(6)", "--guard-order", "4"])[0] == 3


def test_guard_env_override(monkeypatch):
    monkeypatch.setenv("ORELAB_GUARD_ORDER", "4")
    assert _run(["profile", "zmod(6)"])[0] == 3
    # explicit flag wins over the environment
    assert _run(["profile", "zmod(6)", "--guard-order", "64"])[0] == 0
    monkeypatch.setenv("ORELAB_GUARD_ORDER", "not-a-number")
    assert _run(["profile", "zmod(6)"])[0] == 2


def test_math_failure_exit_code(tmp_path):
    # a denominator-set failure during localize is a math error, not usage
    code, out = _run(["localize", "upper_triangular(gf(2),2)", "--set", "4,5,6,7"])
    assert code == 1
    assert "failed" in out


def test_out_dir(tmp_path):
    out_dir = tmp_path / "reports"
    code, _ = _run(["profile", "zmod(6)", "--out", str(out_dir)])
    assert code == 0
    files = os.listdir(out_dir)
    assert len(files) == 1 and files[0].startswith("profile_")


def test_batch_roundtrip(tmp_path):
    manifest = tmp_path / "m.txt"
    manifest.write_text(
        "ring zmod(6)\nring zmod(4)\nring matrix(gf(3),3)\nanalysis profile\n"
    )
    code1, out1 = _run(["batch", "--manifest", str(manifest), "--jobs", "1"])
    code2, out2 = _run(["batch", "--manifest", str(manifest), "--jobs", "4"])
    assert code1 == code2 == 3  # the guard entry fails, others succeed
    assert out1 == out2
    assert "1 of 3 entries failed" in out1
    assert "|maxDen_l|" in out1


def test_batch_empty(tmp_path):
    manifest = tmp_path / "empty.txt"
    manifest.write_text("# nothing to do\n")
    code, out = _run(["batch", "--manifest", str(manifest)])
    assert code == 0
    assert "summary:" in out


def test_batch_json_and_out(tmp_path):
    manifest = tmp_path / "m.txt"
    manifest.write_text("ring zmod(6)\nring gf(4)\nanalysis profile\nanalysis axioms\n")
    out_dir = tmp_path / "reports"
    code, out = _run(
        ["batch", "--manifest", str(manifest), "--format", "json", "--out", str(out_dir)]
    )
    assert code == 0
    doc = json.loads(out)
    assert [e["target"] for e in doc["entries"]] == ["zmod(6)", "gf(4)"]
    assert doc["summary"][0]["localizable?"] == "yes"
    assert doc["entries"][0]["axioms"] == {"ok": True, "order": 6}
    assert sorted(os.listdir(out_dir)) == ["000_zmod-6.json", "001_gf-4.json", "summary.json"]


def test_batch_missing_manifest():
    assert _run(["batch", "--manifest", "/definitely/missing.txt"])[0] == 2


def test_unknown_verb_and_missing_args():
    assert run(["frobnicate", "zmod(6)"], stdout=io.StringIO()) == 2
    assert run(["ore", "zmod(6)"], stdout=io.StringIO()) == 2  # --set required
