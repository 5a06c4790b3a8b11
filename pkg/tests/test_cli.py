import json

import pytest

from hecke_rea import cli, suite
from hecke_rea.hecke import load_R, standard_R
from hecke_rea.hpseries import hp_series
from hecke_rea.hecke import super_flip


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_tableaux(capsys):
    rc, out, _ = run(capsys, "tableaux", "--shape", "2,1")
    assert rc == 0
    assert json.loads(out) == [[[1, 2], [3]], [[1, 3], [2]]]


def test_check_hecke_builtin(capsys):
    rc, out, _ = run(capsys, "check-hecke", "--standard", "2", "--eval", "q=2")
    d = json.loads(out)
    assert rc == 0 and d["yb"] and d["hecke"]
    assert d["nu"]["at"]["value"] == "1/16"


def test_check_hecke_file_negative(tmp_path, capsys):
    # q * identity is not a Hecke symmetry: R^2 = q^2 I differs from I + (q - q^-1) q I
    d = json.loads(suite.canonical_json(standard_R(2)))
    f = tmp_path / "R.json"
    f.write_text(json.dumps(d))
    rc, out, _ = run(capsys, "check-hecke", "--symmetry", str(f))
    assert rc == 0 and json.loads(out)["skew"]
    scaled = {"rows": 4, "cols": 4, "entries": [[i, i, {"num": [[1, "1"]], "den": [[0, "1"]]}] for i in range(4)]}
    g = tmp_path / "bad.json"
    g.write_text(json.dumps(scaled))
    rc, out, err = run(capsys, "check-hecke", "--symmetry", str(g))
    assert rc in (1, 2)


def test_malformed_json_exit_2(tmp_path, capsys):
    f = tmp_path / "broken.json"
    f.write_text("{not json")
    for cmd in ("check-hecke", "hp-series", "verify-all"):
        rc, _, err = run(capsys, cmd, "--symmetry", str(f))
        assert rc == 2 and "error" in err


def test_missing_file_exit_2(capsys):
    rc, _, _ = run(capsys, "hp-series", "--symmetry", "/nonexistent/R.json")
    assert rc == 2


@pytest.mark.parametrize("pts", ["3/2", "1,3/2", "0,2", "3/2,3/2", "a,b"])
def test_bad_sample_points_exit_2(pts, capsys):
    rc, _, _ = run(capsys, "hp-series", "--standard", "2", "--sample-points", pts)
    assert rc == 2


def test_two_symmetries_exit_2(capsys):
    rc, _, _ = run(capsys, "hp-series", "--standard", "2", "--superflip", "1", "1")
    assert rc == 2


def test_hp_series_export(tmp_path, capsys):
    out = tmp_path / "hp.json"
    rc, _, _ = run(capsys, "hp-series", "--superflip", "2", "0", "--json", str(out))
    assert rc == 0
    d = json.loads(out.read_text())
    assert d["numerator"] == [1, 2, 1] and d["denominator"] == [1] and d["birank"] == [2, 0]


def test_export_hpseries_canonical(tmp_path):
    p = tmp_path / "s.json"
    suite.export(hp_series(super_flip(2, 0)), str(p))
    assert p.read_text() == '{"birank":[2,0],"denominator":[1],"numerator":[1,2,1]}\n'


def test_export_load_roundtrip(tmp_path):
    H = standard_R(2)
    p = tmp_path / "R.json"
    suite.export(H, str(p))
    assert load_R(str(p)).R == H.R


def test_report_bytes_stable(tmp_path):
    cfg = suite.Config(("superflip", 2, 1))
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    suite.export(suite.run_suite(cfg, [1, 2, 3]), str(a))
    suite.export(suite.run_suite(cfg, [1, 2, 3]), str(b))
    assert a.read_bytes() == b.read_bytes()


def test_parallel_matches_serial():
    cfg1 = suite.Config(("standard", 2))
    cfg2 = suite.Config(("standard", 2), jobs=2)
    a = suite.canonical_json(suite.run_suite(cfg1, [2, 3, 5]))
    b = suite.canonical_json(suite.run_suite(cfg2, [2, 3, 5]))
    assert a == b


def test_config_validation():
    with pytest.raises(suite.ConfigError):
        suite.Config(("standard", 2), max_dim=0)
    with pytest.raises(suite.ConfigError):
        suite.Config(("moon", 2))


def test_rea_dims(capsys):
    rc, out, _ = run(capsys, "rea-dims", "--standard", "2", "--order", "2")
    assert rc == 0 and json.loads(out) == {"classical_rank": 10, "equal": True, "generic_rank": 10}


def test_rep_verify(capsys):
    rc, out, _ = run(capsys, "rep-verify", "--standard", "2", "--carrier", "V,V", "--shape", "2")
    d = json.loads(out)
    assert rc == 0 and d["relations_ok"] and d["equivariant"] and d["dim"] == 3
    rc, out, _ = run(capsys, "rep-verify", "--standard", "2", "--carrier", "V,V,V", "--shape", "1,1,1")
    assert rc == 0 and json.loads(out)["dim"] == 0
    rc, _, _ = run(capsys, "rep-verify", "--standard", "2", "--carrier", "V,W")
    assert rc == 2


def test_poisson_commands(capsys):
    rc, out, _ = run(capsys, "poisson-check", "--m", "2", "--pencil", "2,3")
    assert rc == 0 and json.loads(out)["jacobi"]
    rc, _, _ = run(capsys, "poisson-cocycle", "--m", "2")
    assert rc == 0


def test_verify_all_superflip11_skips_sl(capsys):
    rc, out, err = run(capsys, "verify-all", "--superflip", "1", "1", "--criteria", "1,2,14")
    assert rc == 0
    checks = json.loads(out)["checks"]
    skips = [c for c in checks if c["status"] == "skip" and c["name"].startswith("[14]")]
    assert skips and "m=n" in json.dumps(skips)
    assert "[14]" in err


def test_verify_all_bad_criterion(capsys):
    rc, _, _ = run(capsys, "verify-all", "--standard", "2", "--criteria", "99")
    assert rc == 2


def test_verify_all_standard2(capsys):
    # expected: every check passes.  Known red: the literal Q_- coefficient check of criterion 9
    # (see README, "Known failures"); this test is left failing rather than relaxed.
    rc, out, _ = run(capsys, "verify-all", "--standard", "2")
    failures = [c["name"] for c in json.loads(out)["checks"] if c["status"] == "fail"]
    assert rc == 0, failures
