"""Result persistence (JSON and CSV) and figure emission.

Absolute energy numbers are hardware-dependent, so every report carries a
host descriptor (CPU model, installed RAM, meter backend) and an echo of
the configuration that produced it. Emissions columns are always the
exact product of the energy column and the country's carbon intensity.
"""

from __future__ import annotations

import csv
import datetime
import json
import os
import platform
from dataclasses import dataclass, field, asdict
from pathlib import Path

from . import __version__, carbon
from .harness import PairResult


@dataclass
class RunConfig:
    suite: str
    params: dict = field(default_factory=dict)
    iterations: int = 100
    warmup: int = 5
    country: str = carbon.DEFAULT_COUNTRY
    meter_backend: str = "simulated"
    interval_ms: float = 1.0
    ram_gb: float = 0.0
    seed: int = 0
    out: str | None = None
    figures: str | None = None

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d) -> "RunConfig":
        return cls(**d)


def host_descriptor(meter_backend: str) -> dict:
    cpu_model = platform.processor() or platform.machine()
    try:
        for line in Path("/proc/cpuinfo").read_text().splitlines():
            if line.lower().startswith("model name"):
                cpu_model = line.split(":", 1)[1].strip()
                break
    except OSError:
        pass
    try:
        ram_gb = round(os.sysconf("SC_PAGE_SIZE") * os.sysconf("SC_PHYS_PAGES") / 2**30, 1)
    except (ValueError, OSError):
        ram_gb = 0.0
    return {
        "cpu_model": cpu_model,
        "ram_gb": ram_gb,
        "meter_backend": meter_backend,
        "platform": platform.platform(),
    }


@dataclass
class BenchmarkReport:
    config: dict
    results: list  # of PairResult
    host: dict
    tool_version: str = __version__
    started_at: str = ""
    finished_at: str = ""

    @classmethod
    def start(cls, config: RunConfig, meter_backend: str) -> "BenchmarkReport":
        return cls(
            config=config.to_dict(),
            results=[],
            host=host_descriptor(meter_backend),
            started_at=datetime.datetime.now(datetime.timezone.utc).isoformat(),
        )

    def finish(self):
        self.finished_at = datetime.datetime.now(datetime.timezone.utc).isoformat()
        return self


def _stats_dict(stats, intensity):
    return {
        "n_runs": stats.n_runs,
        "mean_kwh": stats.mean_kwh,
        "std_kwh": stats.std_kwh,
        "min_kwh": stats.min_kwh,
        "max_kwh": stats.max_kwh,
        "mean_runtime_s": stats.mean_runtime_s,
        "emissions_g": carbon.emissions(stats.mean_kwh, intensity),
    }


def pair_result_dict(result: PairResult, intensity_table=None) -> dict:
    intensity = carbon.lookup_intensity(result.country, table=intensity_table)
    runs = []
    for variant, records in (("private", result.private_runs),
                             ("plaintext", result.baseline_runs)):
        for rec in records:
            kwh = rec.breakdown.total_kwh
            runs.append({
                "variant": variant,
                "run": rec.run_index,
                "energy_kwh": kwh,
                "emissions_g": carbon.emissions(kwh, intensity),
                "runtime_s": rec.runtime_s,
            })
    return {
        "workload": result.workload,
        "taxonomy": sorted(t.value for t in result.taxonomy),
        "country": result.country,
        "private": _stats_dict(result.private, intensity),
        "baseline": _stats_dict(result.baseline, intensity),
        "overhead_ratio": result.overhead_ratio,
        "runs": runs,
    }


def report_dict(report: BenchmarkReport, intensity_table=None) -> dict:
    return {
        "tool_version": report.tool_version,
        "config": report.config,
        "host": report.host,
        "started_at": report.started_at,
        "finished_at": report.finished_at,
        "results": [pair_result_dict(r, intensity_table) for r in report.results],
    }


CSV_HEADER = ["workload", "variant", "run", "energy_kwh", "emissions_g", "runtime_s"]


def emit_report(report: BenchmarkReport, fmt: str, path, intensity_table=None) -> Path:
    """Write the report as JSON or as the flat per-run CSV export."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if fmt == "json":
        path.write_text(json.dumps(report_dict(report, intensity_table), indent=2) + "\n")
    elif fmt == "csv":
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_HEADER)
            for result in report.results:
                rd = pair_result_dict(result, intensity_table)
                for run in rd["runs"]:
                    writer.writerow([
                        rd["workload"], run["variant"], run["run"],
                        repr(run["energy_kwh"]), repr(run["emissions_g"]),
                        repr(run["runtime_s"]),
                    ])
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    return path


def use_log_scale(values) -> bool:
    """Log axis whenever the bars span more than two orders of magnitude."""
    positive = [v for v in values if v > 0]
    return bool(positive) and max(positive) / min(positive) > 100


def emit_figures(report: BenchmarkReport, outdir, intensity_table=None):
    """One grouped bar chart for energy and one for emissions.

    The axis switches to log scale whenever bars span more than two
    orders of magnitude, which cross-suite comparisons routinely do.
    """
    if not report.results:
        raise ValueError("cannot plot an empty report")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    dicts = [pair_result_dict(r, intensity_table) for r in report.results]
    labels = [d["workload"] for d in dicts]

    paths = []
    for metric, key, ylabel, fname in (
        ("energy", "mean_kwh", "Energy per run (kWh)", "energy.png"),
        ("emissions", "emissions_g", "Emissions per run (g CO2eq)", "emissions.png"),
    ):
        private_vals = [d["private"][key] for d in dicts]
        baseline_vals = [d["baseline"][key] for d in dicts]
        x = np.arange(len(labels))
        fig, ax = plt.subplots(figsize=(max(6, 1.8 * len(labels)), 4))
        ax.bar(x - 0.2, private_vals, width=0.4, label="private", color="#c44e52")
        ax.bar(x + 0.2, baseline_vals, width=0.4, label="plaintext", color="#4c72b0")
        if use_log_scale(private_vals + baseline_vals):
            ax.set_yscale("log")
        ax.set_xticks(x)
        ax.set_xticklabels(labels, rotation=20, ha="right")
        ax.set_ylabel(ylabel)
        ax.set_title(f"Mean {metric} per run, private vs plaintext ({report.config.get('country', '')})")
        ax.legend()
        fig.tight_layout()
        path = outdir / fname
        fig.savefig(path, dpi=120)
        plt.close(fig)
        paths.append(path)
    return paths
