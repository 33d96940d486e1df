import json

import pytest

from ambizone import load_set
from ambizone.cli import main
from golden import GOLDEN_P5_ALPHA3, REFERENCE_RHO_ROWS


def run(argv):
    return main(argv)


class TestGen:
    def test_gen_c_golden_vectors(self, tmp_path):
        out = str(tmp_path / "set.json")
        assert run(["gen", "c", "--p", "5", "--alpha", "3", "-o", out]) == 0
        sset = load_set(out)
        assert sset.denom == 5
        for n in range(5):
            assert sset.sequences[n].phases == GOLDEN_P5_ALPHA3[n]

    def test_gen_a_writes_provenance(self, tmp_path):
        out = str(tmp_path / "a.json")
        assert run(["gen", "a", "--M", "1", "--N", "13", "--K", "3", "--sigma-exp", "5", "-o", out]) == 0
        sset = load_set(out)
        assert sset.provenance["family"] == "a"
        assert sset.size == 13 and sset.length == 169

    def test_gen_a_default_exponent(self, tmp_path):
        out = str(tmp_path / "a5.json")
        assert run(["gen", "a", "--M", "1", "--N", "5", "--K", "2", "-o", out]) == 0
        assert load_set(out).size == 5

    def test_gen_b_parameter_violation_exits_2(self, tmp_path, capsys):
        rc = run(["gen", "b", "--K", "2", "--N", "3", "--P", "2", "-o", str(tmp_path / "x.json")])
        assert rc == 2
        assert "P < K" in capsys.readouterr().err

    def test_gen_a_gcd_violation_exits_2(self, tmp_path, capsys):
        rc = run(["gen", "a", "--M", "1", "--N", "4", "--K", "2", "-o", str(tmp_path / "x.json")])
        assert rc == 2

    def test_gen_b_relaxed_flag(self, tmp_path):
        base = ["gen", "b", "--K", "3", "--N", "2", "--P", "2"]
        assert run(base + ["-o", str(tmp_path / "x.json")]) == 2
        assert run(base + ["--relaxed", "-o", str(tmp_path / "y.json")]) == 0

    def test_gen_deterministic(self, tmp_path):
        a, b = str(tmp_path / "1.json"), str(tmp_path / "2.json")
        run(["gen", "b", "--K", "4", "--N", "5", "--P", "1", "-o", a])
        run(["gen", "b", "--K", "4", "--N", "5", "--P", "1", "-o", b])
        assert open(a).read() == open(b).read()


@pytest.fixture()
def set_files(tmp_path):
    paths = {}
    for name, argv in {
        "a": ["gen", "a", "--M", "1", "--N", "13", "--K", "3", "--sigma-exp", "5"],
        "b": ["gen", "b", "--K", "4", "--N", "5", "--P", "1"],
        "c": ["gen", "c", "--p", "5", "--alpha", "3"],
    }.items():
        path = str(tmp_path / f"{name}.json")
        assert run(argv + ["-o", path]) == 0
        paths[name] = path
    return paths


class TestAf:
    def test_auto_surface_csv(self, set_files, tmp_path):
        out = str(tmp_path / "af.csv")
        rc = run(["af", set_files["c"], "--seq", "0",
                  "--tau-range", "-3", "3", "--v-range", "-4", "4", "-o", out])
        assert rc == 0
        lines = open(out).read().strip().splitlines()
        assert lines[0] == "tau,v,re,im,mag"
        assert len(lines) == 1 + 7 * 9
        # Row-major in tau: first data row is the (-3, -4) corner.
        assert lines[1].startswith("-3,-4,")
        origin = [ln for ln in lines[1:] if ln.startswith("0,0,")]
        assert len(origin) == 1
        assert float(origin[0].split(",")[4]) == pytest.approx(20.0)

    def test_cross_surface_zero_zone(self, set_files, tmp_path):
        out = str(tmp_path / "cross.csv")
        rc = run(["af", set_files["b"], "--seq", "0", "--seq2", "1",
                  "--tau-range", "-4", "4", "--v-range", "-3", "3", "-o", out])
        assert rc == 0
        rows = open(out).read().strip().splitlines()[1:]
        assert all(float(r.split(",")[4]) < 1e-6 * 105 for r in rows)

    def test_zero_size_range_exits_2(self, set_files, capsys):
        rc = run(["af", set_files["c"], "--seq", "0",
                  "--tau-range", "3", "-3", "--v-range", "0", "0"])
        assert rc == 2

    def test_bad_index_exits_2(self, set_files):
        rc = run(["af", set_files["c"], "--seq", "9",
                  "--tau-range", "0", "1", "--v-range", "0", "1"])
        assert rc == 2


class TestVerify:
    def test_generated_sets_verify_clean(self, set_files, tmp_path, capsys):
        for name in ("a", "b", "c"):
            rc = run(["verify", set_files[name], "-o", str(tmp_path / f"{name}-cert.json")])
            assert rc == 0, name
            cert = json.load(open(tmp_path / f"{name}-cert.json"))
            assert cert["verdicts"]["claims_hold"]

    def test_tampered_file_exits_1_with_witness(self, set_files, tmp_path):
        doc = json.load(open(set_files["a"]))
        doc["sequences"][0][17] = (doc["sequences"][0][17] + 1) % doc["denom"]
        bad = str(tmp_path / "bad.json")
        json.dump(doc, open(bad, "w"))
        cert_path = str(tmp_path / "cert.json")
        rc = run(["verify", bad, "-o", cert_path])
        assert rc == 1
        cert = json.load(open(cert_path))
        assert not cert["verdicts"]["claims_hold"]
        assert any(w["kind"] == "ambiguity_peak" for w in cert["witnesses"])

    def test_external_without_zone_exits_2(self, tmp_path, capsys):
        doc = {"length": 4, "denom": 4, "sequences": [[0, 1, 2, 3]]}
        path = str(tmp_path / "ext.json")
        json.dump(doc, open(path, "w"))
        assert run(["verify", path]) == 2
        assert "zone" in capsys.readouterr().err

    def test_external_with_zone_measures(self, tmp_path, capsys):
        doc = {"length": 4, "denom": 4, "sequences": [[0, 1, 2, 3]]}
        path = str(tmp_path / "ext.json")
        json.dump(doc, open(path, "w"))
        rc = run(["verify", path, "--zone", "2", "2"])
        assert rc == 0
        cert = json.loads(capsys.readouterr().out)
        assert cert["claims"] == {}

    def test_zcz_flag(self, set_files, capsys):
        assert run(["verify", set_files["b"], "--zcz", "5"]) == 0
        cert = json.loads(capsys.readouterr().out)
        assert cert["verdicts"]["zcz"]

    def test_tolerance_env_override(self, set_files, tmp_path, monkeypatch):
        doc = json.load(open(set_files["a"]))
        doc["sequences"][0][17] = (doc["sequences"][0][17] + 1) % doc["denom"]
        bad = str(tmp_path / "bad.json")
        json.dump(doc, open(bad, "w"))
        monkeypatch.setenv("ZAZ_TOL", "1e9")
        rc = run(["verify", bad, "-o", str(tmp_path / "cert.json")])
        assert rc == 0  # absurd tolerance waives the failure


class TestSpectrum:
    def test_comb_set_has_omega_column(self, set_files, tmp_path):
        out = str(tmp_path / "spectrum.csv")
        assert run(["spectrum", set_files["b"], "-o", out]) == 0
        lines = open(out).read().strip().splitlines()
        assert lines[0] == "seq,i,mag,in_omega"
        assert len(lines) == 1 + 5 * 105
        nulled = [ln for ln in lines[1:] if ln.endswith(",1")]
        assert len(nulled) == 5 * 80
        assert all(float(ln.split(",")[2]) < 1e-9 for ln in nulled)

    def test_family_a_plain_columns(self, set_files, tmp_path):
        out = str(tmp_path / "spectrum.csv")
        assert run(["spectrum", set_files["a"], "-o", out]) == 0
        assert open(out).readline().strip() == "seq,i,mag"


class TestBounds:
    def test_table_reproduction(self, tmp_path):
        out = str(tmp_path / "t2.csv")
        assert run(["bounds", "--table2", "41", "-o", out]) == 0
        lines = open(out).read().strip().splitlines()
        assert lines[0] == "p,L,N,zone,theta_max,rho_laz"
        assert len(lines) == 1 + len(REFERENCE_RHO_ROWS)
        for line, (p, rho) in zip(lines[1:], REFERENCE_RHO_ROWS):
            cells = line.split(",")
            assert int(cells[0]) == p
            assert float(cells[-1]) == pytest.approx(rho, abs=1e-6)

    def test_explicit_flags_laz(self, capsys):
        rc = run(["bounds", "--L", "20", "--N", "5", "--Zx", "4", "--Zy", "5", "--theta", "5"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "1.218349" in out

    def test_explicit_flags_infeasible(self, capsys):
        rc = run(["bounds", "--L", "10", "--N", "2", "--Zx", "3", "--Zy", "2"])
        assert rc == 0
        assert "ZAZ infeasible: NZxZy=12 > L=10" in capsys.readouterr().out

    def test_from_input_file(self, set_files, capsys):
        assert run(["bounds", set_files["c"], "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["factor"] == pytest.approx(1.218349, abs=1e-6)
        assert report["verdict"] == "asymptotic"

    def test_incoherent_flags_exit_2(self, capsys):
        assert run(["bounds", "--L", "10", "--N", "2"]) == 2


class TestRoundTrip:
    @pytest.mark.parametrize(
        "argv",
        [
            ["gen", "a", "--M", "2", "--N", "5", "--K", "2", "--sigma-exp", "3"],
            ["gen", "a", "--M", "1", "--N", "7", "--K", "3"],
            ["gen", "b", "--K", "3", "--N", "2", "--P", "1"],
            ["gen", "c", "--p", "7"],
            ["gen", "c", "--p", "11"],
        ],
    )
    def test_gen_then_verify_holds(self, tmp_path, argv):
        path = str(tmp_path / "set.json")
        assert run(argv + ["-o", path]) == 0
        assert run(["verify", path, "-o", str(tmp_path / "cert.json")]) == 0

    def test_p3_family_fails_distinctness_honestly(self, tmp_path):
        # With only two mapping-domain points the p=3 instance admits a
        # cyclically equivalent pair (s_0 and s_1 at shift 4, constant w_3),
        # so its distinctness claim is genuinely false and verify reports it.
        path = str(tmp_path / "p3.json")
        cert_path = str(tmp_path / "cert.json")
        assert run(["gen", "c", "--p", "3", "-o", path]) == 0
        assert run(["verify", path, "-o", cert_path]) == 1
        cert = json.load(open(cert_path))
        assert cert["verdicts"]["zone_claim"]  # the peak claim still holds
        assert not cert["verdicts"]["cyclically_distinct"]
        assert cert["witnesses"][0]["pair_and_shift"] == [0, 1, 4]
