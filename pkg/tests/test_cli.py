import json

import pytest

from gdnbasis.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def circ(data_dir):
    return data_dir / "circ.gdn"


@pytest.fixture
def nov(data_dir):
    return data_dir / "novikov4.gdn"


def test_complete_stage(capsys, circ):
    code, out, _ = run(capsys, "complete", circ, "--stage", 6)
    assert code == 0
    doc = json.loads(out)
    assert [r["poly"] for r in doc["relations"]] == ["a[0]*a[-1]", "a[0]^3"]
    assert doc["status"] == "exact-to-dx-6"


def test_complete_stage_rejects_non_homogeneous(capsys, nov):
    code, _, err = run(capsys, "complete", nov, "--stage", 3)
    assert code == 2 and "homogeneous" in err


def test_complete_cap_and_reload(capsys, nov, tmp_path):
    out_path = tmp_path / "basis.json"
    code, _, _ = run(capsys, "complete", nov, "--cap", 6, "--out", out_path)
    assert code == 0
    doc = json.loads(out_path.read_text())
    polys = {r["poly"] for r in doc["relations"]}
    assert {"e3[-1]*e2[-1]", "e3[-1]^2"} <= polys
    code, out, _ = run(capsys, "gdn-nf", out_path, "--expr", "(e2 o e1) o e1", "--cap", 6)
    assert code == 0 and "normal form: e4[-1]" in out


def test_complete_deterministic(capsys, nov):
    _, a, _ = run(capsys, "complete", nov, "--cap", 5)
    _, b, _ = run(capsys, "complete", nov, "--cap", 5)
    assert a == b


def test_resource_cap(capsys, nov):
    code, _, err = run(capsys, "complete", nov, "--cap", 6, "--max-size", 4)
    assert code == 3


def test_gdn_nf(capsys, nov):
    code, out, _ = run(capsys, "gdn-nf", nov, "--expr", "(e2 o e1) o e1")
    assert code == 0
    assert out.splitlines()[0] == "normal form: e4[-1]"
    assert out.splitlines()[1].startswith("mode: bounded(")


def test_member_with_certificate(capsys, circ):
    code, out, _ = run(capsys, "member", circ, "--expr", "a[0]^3")
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == ["member: true", "mode: exact", "certificate:"]
    assert len(lines) == 5


def test_gdn_member_false(capsys, circ):
    code, out, _ = run(capsys, "gdn-member", circ, "--expr", "a")
    assert code == 0
    assert out.splitlines()[:2] == ["member: false", "mode: exact"]


def test_gdn_member_true(capsys, circ):
    code, out, _ = run(capsys, "gdn-member", circ, "--expr", "a o (a o a)")
    assert code == 0 and out.startswith("member: true")


def test_weight_error(capsys, circ):
    code, _, err = run(capsys, "gdn-member", circ, "--expr", "a[0]")
    assert code == 2 and "weight" in err


def test_nf_needs_cap_for_non_homogeneous(capsys, nov):
    code, _, _ = run(capsys, "nf", nov, "--expr", "e3^2")
    assert code == 2
    code, out, _ = run(capsys, "nf", nov, "--expr", "e3^2", "--cap", 6)
    assert code == 0 and "normal form: 0" in out


def test_parse_error(capsys, circ):
    code, _, err = run(capsys, "nf", circ, "--expr", "a o (a")
    assert code == 1 and "1:7" in err


def test_tableaux(capsys):
    code, out, _ = run(capsys, "tableaux", "--gens", "a", "--degree", 5, "--leading")
    assert code == 0
    assert out.splitlines()[0].startswith("5 tableaux")
    assert len(out.splitlines()) == 6


def test_irr(capsys, nov):
    code, out, _ = run(capsys, "irr", nov, "--max-len", 1, "--weight", -1)
    assert code == 0
    words = [line.split()[0] for line in out.splitlines()[1:-1]]
    assert words == ["e1[-1]", "e2[-1]", "e3[-1]", "e4[-1]"]


def test_demo_nonfree(capsys):
    code, out, _ = run(capsys, "demo", "nonfree")
    assert code == 0 and "difference = 0" in out


def test_demo_identities(capsys):
    code, out, _ = run(capsys, "demo", "identities", "--seed", 7, "--trials", 50)
    assert code == 0 and "0 nonzero defects" in out


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "nf", tmp_path / "nope.gdn", "--expr", "a")
    assert code == 2
