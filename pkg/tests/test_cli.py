import json

import pytest

from fewweight.cli import main
from fewweight.code import stored_distribution, distribution_from_record


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_wdist_both_p3_m4(capsys):
    code, out, _ = run(capsys, "wdist", "--p", "3", "--m", "4", "--method", "both")
    assert code == 0
    assert "enumerator: 1+240z^12+2160z^16+2000z^18+2160z^20" in out
    assert "theorem vs enumeration: match" in out


def test_wdist_theorem_json(capsys):
    code, out, _ = run(capsys, "wdist", "--p", "3", "--m", "3", "--method", "theorem",
                       "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert [(e["weight"], e["count"]) for e in rec["distribution"]] == [(4, 48), (6, 224), (8, 456)]
    assert rec["n"] == 8 and rec["min_distance"] == 4 and rec["codewords"] == 729


def test_wdist_flags_inconsistent_published_distance(capsys):
    code, out, _ = run(capsys, "wdist", "--p", "3", "--m", "5")
    assert code == 0
    assert "min_distance=48" in out
    assert "[inconsistent] published parameters [80, 5, 54] state d=54" in out


@pytest.mark.parametrize("argv", [("wdist", "--p", "4", "--m", "3"),
                                  ("wdist", "--p", "3", "--m", "0"),
                                  ("gauss", "--p", "9", "--m", "1"),
                                  ("wdist", "--p", "3", "--m", "2", "--method", "theorem"),
                                  ("verify", "--p", "3", "--m", "3", "--lemma", "99"),
                                  ("wdist", "--p", "3", "--m", "3", "--budget", "-4")])
def test_invalid_input_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_bad_p_message(capsys):
    _, _, err = run(capsys, "wdist", "--p", "4", "--m", "3")
    assert "p must be an odd prime" in err


def test_budget_flag(capsys):
    code, _, err = run(capsys, "wdist", "--p", "3", "--m", "4", "--budget", "100")
    assert code == 3 and "budget" in err
    # theorem-only runs do no pair enumeration
    code, _, _ = run(capsys, "wdist", "--p", "3", "--m", "4", "--method", "theorem", "--budget", "100")
    assert code == 0


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("FEWWEIGHT_BUDGET", "50")
    assert run(capsys, "verify", "--p", "3", "--m", "3")[0] == 3
    assert run(capsys, "verify", "--p", "3", "--m", "3", "--budget", "1e9")[0] == 0


def test_verify_p3_m4(capsys):
    code, out, _ = run(capsys, "verify", "--p", "3", "--m", "4")
    assert code == 0
    for k in range(1, 18):
        assert f"Lemma {k} " in out
    assert "Lemma 17 even m, α=β=γ=0: vacuous" in out
    assert "mismatch" not in out.replace("0 mismatch", "")


def test_verify_psi4_filter(capsys):
    code, out, _ = run(capsys, "verify", "--p", "3", "--m", "3", "--lemma", "14")
    lines = [ln for ln in out.splitlines() if ln.startswith("Lemma 14 odd m")]
    assert code == 0 and len(lines) == 9
    assert all(": match" in ln and "naive" in ln for ln in lines)


def test_verify_is_deterministic(capsys):
    a = run(capsys, "verify", "--p", "5", "--m", "3", "--seed", "4")[1]
    b = run(capsys, "verify", "--p", "5", "--m", "3", "--seed", "4")[1]
    assert a == b


@pytest.mark.parametrize("pm,text", [((3, 1), "i·√3 ≈ (0.000000, 1.732051)"),
                                     ((3, 4), "-9 ≈ (-9.000000, 0.000000)"),
                                     ((5, 2), "|G|² = 25")])
def test_gauss(capsys, pm, text):
    code, out, _ = run(capsys, "gauss", "--p", str(pm[0]), "--m", str(pm[1]))
    assert code == 0 and text in out


def test_export_roundtrip(capsys, tmp_path):
    path = tmp_path / "c.json"
    code, _, _ = run(capsys, "export", "--p", "3", "--m", "3", "--out", str(path))
    assert code == 0
    rec = json.loads(path.read_text())
    assert rec["n"] == 8 and len(rec["defining_set"]) == 8
    assert distribution_from_record(rec) == stored_distribution(rec)
    first = path.read_bytes()
    run(capsys, "export", "--p", "3", "--m", "3", "--out", str(path))
    assert path.read_bytes() == first


def test_export_p3_m6(capsys, tmp_path):
    path = tmp_path / "big.json"
    assert run(capsys, "export", "--p", "3", "--m", "6", "--out", str(path))[0] == 0
    rec = json.loads(path.read_text())
    assert rec["n"] == 260 and rec["min_distance"] == 162


def test_export_needs_out(capsys):
    assert run(capsys, "export", "--p", "3", "--m", "3")[0] == 2
