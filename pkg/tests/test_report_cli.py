import csv
import json

import pytest

from conftest import busy_wait
from petcarbon import carbon, cli, report
from petcarbon.harness import Overhead, Variant, WorkloadContract, run_pair
from petcarbon.meter import MeterConfig, PowerTrace, open_meter


@pytest.fixture(scope="module")
def pair_result():
    sim_meter = open_meter(MeterConfig(trace=PowerTrace.constant(10.0)))
    private = WorkloadContract(id="toy", variant=Variant.PRIVATE,
                               run_once=lambda: busy_wait(0.01),
                               taxonomy={Overhead.COMPUTATIONAL})
    baseline = WorkloadContract(id="toy", variant=Variant.PLAINTEXT,
                                run_once=lambda: busy_wait(0.005))
    return run_pair(private, baseline, iterations=3, warmup=0,
                    meter=sim_meter, country="FR")


@pytest.fixture(scope="module")
def bench(pair_result):
    b = report.BenchmarkReport.start(report.RunConfig(suite="toy", country="FR"),
                                     "simulated")
    b.results = [pair_result]
    return b.finish()


class TestParseCli:
    def test_run_defaults(self):
        cfg = cli.parse_cli(["run", "--suite", "email"])
        assert cfg.suite == "email"
        assert cfg.iterations == 100
        assert cfg.warmup == 5
        assert cfg.country == "NL"
        assert cfg.meter_backend == "simulated"
        assert cfg.params["cipher"] == "rsa"

    def test_per_suite_iteration_defaults(self):
        assert cli.parse_cli(["run", "--suite", "web"]).iterations == 5
        assert cli.parse_cli(["run", "--suite", "edb"]).iterations == 1000
        assert cli.parse_cli(
            ["run", "--suite", "external", "--command", "true"]).iterations == 10

    def test_country_override(self):
        cfg = cli.parse_cli(["run", "--suite", "web", "--country", "FR",
                             "--iterations", "2"])
        assert cfg.country == "FR" and cfg.iterations == 2

    def test_db_sizes_parsed(self):
        cfg = cli.parse_cli(["run", "--suite", "edb", "--db-sizes", "10,20"])
        assert cfg.params["db_sizes"] == [10, 20]

    def test_bad_suite_exits_2(self, capsys):
        assert cli.main(["run", "--suite", "nope"]) == 2

    def test_external_requires_command(self):
        assert cli.main(["run", "--suite", "external"]) == 2

    def test_missing_subcommand_exits_2(self):
        assert cli.main([]) == 2

    def test_unknown_country_exits_1(self, capsys):
        rc = cli.main(["run", "--suite", "external", "--command", "true",
                       "--iterations", "1", "--warmup", "0", "--country", "ZZ"])
        assert rc == 1
        assert "error" in capsys.readouterr().err

    def test_intensity_list(self, capsys):
        assert cli.main(["intensity", "list"]) == 0
        out = capsys.readouterr().out
        assert "NL,2023,268" in out
        assert "FR,2023,56" in out
        assert "PL,2023,662" in out


class TestJsonReport:
    def test_roundtrip_and_emissions_consistency(self, bench, tmp_path):
        path = report.emit_report(bench, "json", tmp_path / "r.json")
        loaded = json.loads(path.read_text())
        assert loaded["tool_version"] == report.__version__
        assert loaded["config"]["country"] == "FR"
        assert loaded["host"]["meter_backend"] == "simulated"
        (result,) = loaded["results"]
        assert result["workload"] == "toy"
        assert result["country"] == "FR"
        intensity = carbon.lookup_intensity("FR")
        for run in result["runs"]:
            expect = run["energy_kwh"] * intensity.g_per_kwh
            assert run["emissions_g"] == pytest.approx(expect, rel=1e-12)
        for side in ("private", "baseline"):
            expect = result[side]["mean_kwh"] * intensity.g_per_kwh
            assert result[side]["emissions_g"] == pytest.approx(expect, rel=1e-12)

    def test_run_config_roundtrip(self):
        cfg = report.RunConfig(suite="web", params={"requests": 7}, country="PL")
        assert report.RunConfig.from_dict(cfg.to_dict()) == cfg

    def test_unknown_format(self, bench, tmp_path):
        with pytest.raises(ValueError):
            report.emit_report(bench, "xml", tmp_path / "r.xml")


class TestCsvReport:
    def test_row_count_and_values(self, bench, pair_result, tmp_path):
        path = report.emit_report(bench, "csv", tmp_path / "r.csv")
        with open(path, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == len(pair_result.private_runs) + len(pair_result.baseline_runs)
        intensity = carbon.lookup_intensity("FR")
        for row in rows:
            assert row["workload"] == "toy"
            assert row["variant"] in ("private", "plaintext")
            # floats are written with repr(), so the product survives the roundtrip
            energy = float(row["energy_kwh"])
            assert float(row["emissions_g"]) == energy * intensity.g_per_kwh
            assert float(row["runtime_s"]) > 0

    def test_header(self, bench, tmp_path):
        path = report.emit_report(bench, "csv", tmp_path / "r.csv")
        first = path.read_text().splitlines()[0]
        assert first == "workload,variant,run,energy_kwh,emissions_g,runtime_s"


class TestFigures:
    def test_two_files_emitted(self, bench, tmp_path):
        paths = report.emit_figures(bench, tmp_path / "figs")
        assert sorted(p.name for p in paths) == ["emissions.png", "energy.png"]
        for p in paths:
            assert p.stat().st_size > 1000

    def test_empty_report_rejected(self, tmp_path):
        empty = report.BenchmarkReport.start(report.RunConfig(suite="x"), "simulated")
        with pytest.raises(ValueError):
            report.emit_figures(empty.finish(), tmp_path)

    def test_log_scale_rule(self):
        assert not report.use_log_scale([1.0, 2.0, 50.0])
        assert report.use_log_scale([1.0, 500.0])
        assert not report.use_log_scale([])
        assert not report.use_log_scale([0.0, 0.0])


class TestCliEndToEnd:
    def test_web_suite_with_outputs(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        csv_path = tmp_path / "runs.csv"
        figs = tmp_path / "figs"
        rc = cli.main([
            "run", "--suite", "web", "--iterations", "2", "--warmup", "0",
            "--requests", "3", "--country", "PL",
            "--out", str(out), "--csv", str(csv_path), "--figures", str(figs),
        ])
        assert rc == 0
        assert "overhead" in capsys.readouterr().out
        loaded = json.loads(out.read_text())
        assert loaded["results"][0]["country"] == "PL"
        with open(csv_path, newline="") as fh:
            assert len(list(csv.DictReader(fh))) == 4  # 2 runs x 2 variants
        assert (figs / "energy.png").exists() and (figs / "emissions.png").exists()

    def test_external_suite_prints_stats(self, capsys):
        rc = cli.main(["run", "--suite", "external", "--command", "true",
                       "--iterations", "2", "--warmup", "0"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["stats"]["n_runs"] == 2
        assert payload["stats"]["mean_kwh"] > 0
