"""Unit tests for suite execution, report files, config parsing and the CLI."""

from __future__ import annotations

import csv
import json
import math

import numpy as np
import pytest

from diskcheck import (
    DomainError,
    KNOWN_SUITES,
    SuiteConfig,
    corpus_generate,
    emit_plot_data,
    holo_corpus,
    julia_corpus,
    load_config_file,
    run_suite,
    weierstrass_corpus,
    write_report,
)
from diskcheck.cli import main as cli_main

FAST = dict(samples=8, search_restarts=2)


class TestSuiteConfig:
    def test_defaults_echoed_in_dict(self):
        cfg = SuiteConfig()
        d = cfg.as_dict()
        assert d["suites"] == list(KNOWN_SUITES)
        assert d["dimensions"] == [1, 2, 3]
        assert d["seed"] == 0

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(samples=0),
            dict(suites=()),
            dict(suites=("ball", "bogus")),
            dict(dimensions=()),
            dict(dimensions=(0,)),
            dict(search_restarts=0),
            dict(tolerances={"not_a_check": 1.0}),
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(DomainError):
            SuiteConfig(**kwargs)

    def test_known_tolerance_override_accepted(self):
        cfg = SuiteConfig(tolerances={"growth_margin": 1e-6})
        assert cfg.as_dict()["tolerances"] == {"growth_margin": 1e-6}


class TestRunSuite:
    def test_all_suites_pass_at_small_scale(self):
        report = run_suite(SuiteConfig(seed=3, **FAST))
        assert report.passed
        assert set(report.suites) == set(KNOWN_SUITES)
        for name in KNOWN_SUITES:
            suite = report.suites[name]
            assert suite["failures"] == []
            assert suite["cases"] > 0
            assert suite["checks"]
            assert name in report.wall_times

    def test_report_shape_and_check_slots(self):
        report = run_suite(SuiteConfig(seed=1, suites=("ball",), dimensions=(2,), samples=6))
        suite = report.suites["ball"]
        slot = suite["checks"]["phi_involution"]
        assert set(slot) >= {
            "count", "equality", "worst_margin", "worst_lhs", "worst_rhs",
            "tolerance", "passed", "worst_instance",
        }
        assert slot["count"] == 6
        assert slot["equality"] is True
        assert suite["min_margin"] is not None

    def test_impossible_tolerance_fails_the_run(self):
        cfg = SuiteConfig(seed=1, suites=("ball",), dimensions=(2,), samples=4,
                          tolerances={"phi_involution": 1e-30})
        report = run_suite(cfg)
        assert not report.passed
        names = {f["name"] for f in report.suites["ball"]["failures"]}
        assert names == {"phi_involution"}
        slot = report.suites["ball"]["checks"]["phi_involution"]
        assert slot["tolerance"] == 1e-30
        assert not slot["passed"]

    def test_byte_identical_reports_for_equal_configs(self):
        cfg = SuiteConfig(seed=11, **FAST)
        a = run_suite(cfg).json_text()
        b = run_suite(SuiteConfig(seed=11, **FAST)).json_text()
        assert a == b
        c = run_suite(SuiteConfig(seed=12, **FAST)).json_text()
        assert c != a

    def test_search_suite_exposes_family_reports(self):
        report = run_suite(SuiteConfig(seed=2, suites=("search",), search_restarts=2, samples=8))
        inner = report.suites["search"]["reports"]
        assert set(inner) == {"family_1d", "family_1d_restricted", "family_md"}
        assert inner["family_1d"]["best_margin"] <= 1e-8

    def test_findings_are_reported_not_asserted(self):
        report = run_suite(SuiteConfig(seed=5, suites=("minimal",), samples=8))
        findings = report.suites["minimal"]["findings"]
        assert findings["audited_metric_constant"] == pytest.approx(0.25, rel=1e-10)
        assert findings["claimed_metric_constant"] == 1.0
        assert findings["planar_general_pair_min_margin"] > 0.0
        assert findings["gauss_normal_orthogonality_max_residual"] > 1e-3
        holo = run_suite(SuiteConfig(seed=5, suites=("holo",), samples=8)).suites["holo"]
        assert holo["findings"]["julia_multi_factor_min_margin"] > 1e-10
        ball = run_suite(SuiteConfig(seed=5, suites=("ball",), dimensions=(1,), samples=8)).suites["ball"]
        assert ball["findings"]["opnorm_formula_origin_deviation_m1"] > 0.1


class TestReportFiles:
    def test_write_report_and_margin_table(self, tmp_path):
        out = tmp_path / "run.json"
        cfg = SuiteConfig(seed=4, suites=("ball", "holo"), dimensions=(1, 2), samples=6, out=str(out))
        report = run_suite(cfg)
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["passed"] is True
        assert data["tool"]["name"] == "diskcheck"
        assert data["config"]["seed"] == 4
        assert "wall_times" not in data

        csv_path = tmp_path / "run.margins.csv"
        with open(csv_path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["suite", "check", "instance", "lhs", "rhs", "margin", "tolerance", "passed"]
        body = rows[1:]
        expected = sum(len(report.suites[s]["checks"]) for s in ("ball", "holo"))
        assert len(body) == expected
        assert {r[0] for r in body} == {"ball", "holo"}
        for r in body:
            float(r[3]), float(r[4]), float(r[5]), float(r[6])

    def test_json_is_sorted_and_round_trips(self):
        report = run_suite(SuiteConfig(seed=6, suites=("ball",), dimensions=(1,), samples=4))
        text = report.json_text()
        data = json.loads(text)
        assert json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n" == text
        assert data["suites"]["ball"]["cases"] > 0


class TestConfigFile:
    def test_parse_and_apply(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text(
            "# comment line\n"
            "seed = 9\n"
            "samples= 12\n"
            "suites = ball, holo\n"
            "dimensions = 1,2\n"
            "search_restarts = 3\n"
            "tolerance.growth_margin = 1e-9\n",
            encoding="utf-8",
        )
        values = load_config_file(str(path))
        assert values["seed"] == 9
        assert values["samples"] == 12
        assert values["suites"] == ("ball", "holo")
        assert values["dimensions"] == (1, 2)
        assert values["search_restarts"] == 3
        assert values["tolerances"] == {"growth_margin": 1e-9}

    def test_rejects_unknown_keys_and_bad_lines(self, tmp_path):
        bad1 = tmp_path / "bad1.cfg"
        bad1.write_text("wibble = 3\n", encoding="utf-8")
        with pytest.raises(DomainError):
            load_config_file(str(bad1))
        bad2 = tmp_path / "bad2.cfg"
        bad2.write_text("seed 3\n", encoding="utf-8")
        with pytest.raises(DomainError):
            load_config_file(str(bad2))


class TestCorpus:
    def test_generation_is_deterministic(self):
        a = corpus_generate(seed=3, m=2, count=10)
        b = corpus_generate(seed=3, m=2, count=10)
        assert len(a) == len(b) > 0
        for left, right in zip(a, b):
            assert left.name == right.name

    def test_holo_corpus_has_archetypes_and_stays_in_ball(self):
        members = list(holo_corpus(seed=0, m=2, count=12))
        names = [member.name for member in members]
        assert any("affine" in n for n in names)
        assert any("square" in n for n in names)
        assert any("family" in n for n in names)
        from diskcheck import certify_in_ball

        for member in members:
            assert certify_in_ball(member.disk) <= 1.0 + 1e-9
            assert member.disk.dim == 2

    def test_julia_corpus_members_fix_one(self):
        members = list(julia_corpus(seed=0, count=9))
        assert {member.factors for member in members} >= {1, 2}
        for member in members:
            assert complex(member.disk.eval(1.0)[0]) == pytest.approx(1.0, abs=1e-10)

    def test_surface_corpus_fixed_heads(self):
        members = list(weierstrass_corpus(seed=0, count=10))
        names = [member.name for member in members]
        assert names[0] == "planar"
        assert any("enneper" in n for n in names)
        assert any(n.startswith("surface-") for n in names)
        planar = members[0]
        assert planar.planar_through_origin and planar.full_circle_contact


class TestPlotData:
    def test_emitted_files_and_their_contracts(self, tmp_path):
        report = run_suite(SuiteConfig(seed=2, **FAST)).as_dict()
        paths = emit_plot_data(report, str(tmp_path))
        produced = {p.rsplit("/", 1)[-1] for p in paths}
        assert produced == {
            "extremal_family_margins.csv",
            "planar_distance_grid.csv",
            "enneper_distance_grid.csv",
            "search_traces.csv",
        }
        with open(tmp_path / "extremal_family_margins.csv", newline="") as fh:
            rows = list(csv.DictReader(fh))
        margins = [abs(float(r["margin"])) for r in rows]
        assert len(rows) == 100
        assert [float(r["a"]) for r in rows[:3]] == [0.0, 0.01, 0.02]
        assert max(margins) <= 1e-9
        with open(tmp_path / "planar_distance_grid.csv", newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert max(abs(float(r["margin"])) for r in rows) <= 1e-10
        with open(tmp_path / "enneper_distance_grid.csv", newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert min(float(r["margin"]) for r in rows) >= 0.0
        with open(tmp_path / "search_traces.csv", newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert {r["family"] for r in rows} >= {"family_1d"}


class TestCli:
    def test_verify_pass_and_outputs(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        rc = cli_main([
            "verify", "--seed", "3", "--samples", "8", "--search-restarts", "2",
            "--out", str(out),
        ])
        captured = capsys.readouterr().out
        assert rc == 0
        assert "PASS" in captured
        assert out.exists() and (tmp_path / "report.margins.csv").exists()

    def test_verify_fails_with_impossible_tolerance(self, tmp_path):
        rc = cli_main([
            "verify", "--suites", "ball", "--dimensions", "1", "--samples", "4",
            "--tolerance", "phi_involution=1e-30",
        ])
        assert rc == 1

    def test_verify_rejects_bad_input(self, capsys):
        assert cli_main(["verify", "--suites", "bogus"]) == 2
        assert "unknown suite" in capsys.readouterr().err

    def test_config_file_with_cli_override(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("seed = 3\nsamples = 8\nsuites = ball\ndimensions = 1\n", encoding="utf-8")
        out = tmp_path / "r.json"
        rc = cli_main(["verify", "--config", str(cfg), "--seed", "4", "--out", str(out)])
        assert rc == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["config"]["seed"] == 4          # CLI wins
        assert data["config"]["samples"] == 8       # file value survives
        assert data["config"]["suites"] == ["ball"]

    def test_search_verb(self, tmp_path, capsys):
        out = tmp_path / "search.json"
        rc = cli_main(["search", "--family", "family_1d", "--restarts", "2", "--seed", "1",
                       "--out", str(out)])
        assert rc == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["family"] == "family_1d"
        assert data["best_margin"] <= 1e-6
        assert "best_margin" in capsys.readouterr().out

    def test_corpus_verb(self, tmp_path):
        rc = cli_main(["corpus", "--seed", "2", "--count", "6", "--dimensions", "1,2",
                       "--out", str(tmp_path / "corpus")])
        assert rc == 0
        base = tmp_path / "corpus"
        assert (base / "holo_m1.txt").exists()
        assert (base / "holo_m2.txt").exists()
        assert (base / "julia.txt").exists()
        assert (base / "surfaces.txt").exists()
        lines = (base / "holo_m1.txt").read_text(encoding="utf-8").strip().splitlines()
        assert all("\t" in line for line in lines)
        from diskcheck import parse_disk

        for line in lines:
            parse_disk(line.split("\t", 1)[1])
        wd_files = sorted((base / "surfaces").glob("*.wd"))
        assert wd_files
        from diskcheck import load_weierstrass

        load_weierstrass(wd_files[0])

    def test_plot_data_verb(self, tmp_path):
        report = tmp_path / "report.json"
        rc = cli_main(["verify", "--seed", "1", "--samples", "8", "--search-restarts", "2",
                       "--out", str(report)])
        assert rc == 0
        rc = cli_main(["plot-data", "--report", str(report), "--out", str(tmp_path / "plots")])
        assert rc == 0
        assert (tmp_path / "plots" / "extremal_family_margins.csv").exists()
        assert (tmp_path / "plots" / "search_traces.csv").exists()

    def test_version_and_help(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli_main(["--version"])
        assert exc.value.code == 0
        assert "diskcheck" in capsys.readouterr().out
