import json
import math

import numpy as np
import pytest

from ferrojet import cli


def run(argv):
    return cli.main(argv)


def load_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


class TestCurves:
    def test_c1_starts_near_codimension_two(self, tmp_path):
        out = tmp_path / "c1.csv"
        assert run(["curves", "c1", "--samples", "100", "--out", str(out)]) == 0
        cols, meta = cli.read_csv(out)
        assert abs(cols["beta0"][0] - 0.25) < 1e-3
        assert abs(cols["gamma0"][0] - 2.0) < 1e-3
        assert meta["curve"] == "c1"

    def test_c4_constant_gamma(self, tmp_path):
        out = tmp_path / "c4.csv"
        assert run(["curves", "c4", "--samples", "50", "--out", str(out)]) == 0
        cols, _ = cli.read_csv(out)
        assert np.all(cols["gamma0"] == 2.0)
        assert np.all(cols["beta0"] > 0.25)

    def test_single_sample_rejected(self, tmp_path):
        assert run(["curves", "c2", "--samples", "1",
                    "--out", str(tmp_path / "x.csv")]) == 1


class TestClassify:
    @pytest.mark.parametrize("beta0,gamma0,mult", [(0.5, 2.0, 4),
                                                   (0.25, 2.0, 6),
                                                   (0.5, 1.0, 2)])
    def test_multiplicities(self, tmp_path, beta0, gamma0, mult):
        out = tmp_path / "c.json"
        rc = run(["classify", "--beta0", str(beta0), "--gamma0", str(gamma0),
                  "--out", str(out)])
        assert rc == 0
        assert load_json(out)["zero_multiplicity"] == mult

    def test_validation_exit_code(self):
        assert run(["classify", "--beta0", "-1", "--gamma0", "2"]) == 1


class TestCoeffs:
    def test_region_ii_linear(self, tmp_path):
        out = tmp_path / "ii.json"
        assert run(["coeffs", "--region", "ii", "--law", "linear",
                    "--out", str(out)]) == 0
        data = load_json(out)
        want = -240.0 * math.sqrt(6.0)
        assert abs(data["c1"] - want) < 1e-12 * abs(want)
        assert data["wave_type"] == "depression"

    def test_region_i_degenerate_boundary(self, tmp_path):
        out = tmp_path / "i.json"
        assert run(["coeffs", "--region", "i", "--law", "linear", "--beta0",
                    "4", "--out", str(out)]) == 0
        data = load_json(out)
        assert data["c_check"] == 0.0
        assert data["wave_type"] == "degenerate"

    def test_region_iii_exists_flag(self, tmp_path):
        out = tmp_path / "iii.json"
        assert run(["coeffs", "--region", "iii", "--law", "linear", "--s",
                    "1", "--out", str(out)]) == 0
        data = load_json(out)
        assert data["exists"] is True
        assert data["c2_1"] < 0.0
        assert data["d4"] > 0.0

    def test_langevin_needs_lambda(self):
        assert run(["coeffs", "--region", "ii", "--law", "langevin"]) == 1


class TestSolve:
    def test_region_i_depression_profile(self, tmp_path):
        out = tmp_path / "prof.csv"
        rc = run(["solve", "--region", "i", "--law", "linear", "--beta0",
                  "0.5", "--mu", "0.01", "--out", str(out)])
        assert rc == 0
        cols, meta = cli.read_csv(out)
        assert meta["wave_type"] == "depression"
        assert np.min(cols["eta"]) < 0.0
        # amplitude mu * 3/(2 c_check) with c_check = -1.75
        assert abs(np.min(cols["eta"]) - 0.01 * 1.5 / (-1.75)) < 1e-8

    def test_region_ii_depression(self, tmp_path):
        out = tmp_path / "prof2.csv"
        rc = run(["solve", "--region", "ii", "--law", "linear", "--mu", "0.1",
                  "--delta", "0.05", "--out", str(out)])
        assert rc == 0
        _, meta = cli.read_csv(out)
        assert meta["wave_type"] == "depression"

    def test_region_iii_failure_exit_code(self, tmp_path, monkeypatch):
        # force d4 < 0 through a huge curvature of the magnetisation law
        cfg = tmp_path / "law.ini"
        cfg.write_text("[law]\nlaw = custom\nm1p1 = 1.0\nm1pp1 = 1e9\n")
        rc = run(["solve", "--region", "iii", "--s", "1", "--mu", "0.01",
                  "--config", str(cfg), "--out", str(tmp_path / "x.csv")])
        assert rc == 2

    def test_svg_written(self, tmp_path):
        out = tmp_path / "p.csv"
        svg = tmp_path / "p.svg"
        rc = run(["solve", "--region", "iii", "--law", "linear", "--s", "1",
                  "--mu", "0.04", "--out", str(out), "--svg", str(svg)])
        assert rc == 0
        text = svg.read_text()
        assert text.startswith("<svg") and "polyline" in text

    def test_region_ii_oscillatory_side(self, tmp_path):
        out = tmp_path / "osc.csv"
        rc = run(["solve", "--region", "ii", "--law", "linear", "--mu", "0.1",
                  "--delta", "-0.05", "--out", str(out)])
        assert rc == 0
        cols, meta = cli.read_csv(out)
        assert meta["wave_type"] == "depression"
        tail = cols["eta"][cols["z"] > 150.0]
        assert np.any(tail > 0.0) and np.any(tail < 0.0)

    def test_cubic_regions(self, tmp_path):
        rc = run(["solve", "--region", "i-cubic", "--law", "linear",
                  "--beta0", "0.5", "--mu", "0.01", "--kappa", "0.3",
                  "--out", str(tmp_path / "ic.csv")])
        assert rc == 0
        rc = run(["solve", "--region", "ii-cubic", "--law", "linear",
                  "--mu", "0.1", "--delta", "0.05", "--kappa", "0.2",
                  "--theta", str(math.pi), "--out", str(tmp_path / "iic.csv")])
        assert rc == 0
        _, meta = cli.read_csv(tmp_path / "iic.csv")
        assert meta["wave_type"] == "depression"

    def test_theta_selects_depression(self, tmp_path):
        out = tmp_path / "p.csv"
        rc = run(["solve", "--region", "iii", "--law", "linear", "--s", "1",
                  "--mu", "0.04", "--theta", str(math.pi), "--out", str(out)])
        assert rc == 0
        _, meta = cli.read_csv(out)
        assert meta["wave_type"] == "depression"

    def test_missing_mu(self):
        assert run(["solve", "--region", "i", "--law", "linear"]) == 1


class TestVerifyCommand:
    def test_omega_suite_passes(self, tmp_path):
        out = tmp_path / "v.json"
        assert run(["verify", "--suite", "omega", "--out", str(out)]) == 0
        data = load_json(out)
        assert data["all_passed"] is True
        assert data["n_checks"] > 50

    def test_all_suites_pass_with_langevin(self, tmp_path):
        out = tmp_path / "va.json"
        rc = run(["verify", "--suite", "all", "--law", "langevin",
                  "--lambda", "1", "--out", str(out)])
        assert rc == 0
        data = load_json(out)
        assert data["all_passed"] is True
        assert {c["suite"] for c in data["checks"]} == {
            "omega", "chains", "reversibility", "taylor"}


class TestLangevinThreshold:
    def test_valid(self, tmp_path):
        out = tmp_path / "t.json"
        assert run(["langevin-threshold", "8", "--out", str(out)]) == 0
        assert load_json(out)["lambda_star"] > 0.0

    def test_out_of_range(self):
        assert run(["langevin-threshold", "5"]) == 1


class TestRoundTrip:
    def test_csv_bit_identical(self, tmp_path):
        out = tmp_path / "c2.csv"
        run(["curves", "c2", "--samples", "37", "--out", str(out)])
        cols, _ = cli.read_csv(out)
        out2 = tmp_path / "c2_again.csv"
        cli.write_csv(out2, cols, {"command": "roundtrip"})
        cols2, _ = cli.read_csv(out2)
        for name in cols:
            assert np.array_equal(cols[name], cols2[name])

    def test_profile_roundtrip(self, tmp_path):
        out = tmp_path / "p.csv"
        run(["solve", "--region", "i", "--law", "linear", "--beta0", "0.5",
             "--mu", "0.01", "--out", str(out)])
        cols, _ = cli.read_csv(out)
        out2 = tmp_path / "p2.csv"
        cli.write_csv(out2, cols, {})
        cols2, _ = cli.read_csv(out2)
        assert np.array_equal(cols["eta"], cols2["eta"])


class TestOrbitExport:
    def test_fourth_order_columns(self, tmp_path):
        from ferrojet import reduced
        _, orb = reduced.kawahara_exact_seed(2, half_length=10.0, nodes=401)
        out = tmp_path / "orbit.csv"
        cli.write_orbit_csv(out, orb)
        cols, meta = cli.read_csv(out)
        assert list(cols) == ["Z", "u", "u'", "u''", "u'''"]
        assert meta["system"] == "fourth_order"
        assert np.array_equal(cols["u"], orb.u)

    def test_planar_columns(self, tmp_path):
        from ferrojet import reduced
        orb = reduced.planar_exact(2, half_length=10.0, nodes=201)
        out = tmp_path / "orbit.csv"
        cli.write_orbit_csv(out, orb)
        cols, _ = cli.read_csv(out)
        assert list(cols) == ["Z", "u", "u'"]


class TestConfig:
    def test_law_from_config(self, tmp_path):
        cfg = tmp_path / "run.ini"
        cfg.write_text("[law]\nlaw = langevin\nlambda = 2.0\n")
        out = tmp_path / "c.json"
        rc = run(["coeffs", "--region", "ii", "--config", str(cfg),
                  "--out", str(out)])
        assert rc == 0
        data = load_json(out)
        assert data["law"].startswith("langevin")
        assert data["c1"] < 0.0

    def test_run_section_defaults(self, tmp_path):
        cfg = tmp_path / "run.ini"
        cfg.write_text("[law]\nlaw = linear\n\n[run]\ns = 2.0\n")
        out = tmp_path / "c.json"
        rc = run(["coeffs", "--region", "iii", "--config", str(cfg),
                  "--out", str(out)])
        assert rc == 0
        assert load_json(out)["s"] == 2.0

    def test_unknown_key_rejected(self, tmp_path):
        cfg = tmp_path / "bad.ini"
        cfg.write_text("[law]\nlaw = linear\nbogus = 1\n")
        assert run(["coeffs", "--region", "ii", "--config", str(cfg)]) == 1
