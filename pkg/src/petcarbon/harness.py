"""Paired benchmark orchestration.

A benchmark is a pair of workloads sharing an id: a PRIVATE variant and
its PLAINTEXT baseline. Each measured run wraps exactly one run_once()
call in its own sampling window (setup and teardown stay outside), runs
alternate A/B/A/B to cancel thermal drift, and warmup runs are discarded.

Both runtime and energy are always recorded: runtime is a poor proxy for
energy once workloads parallelize, so energy is the comparison basis and
runtime is reported alongside it.
"""

from __future__ import annotations

import enum
import statistics
import subprocess
import time
from dataclasses import dataclass, field

from . import carbon
from .meter import (
    EnergyBreakdown,
    MeterError,
    MeterHandle,
    Sampler,
    integrate,
    with_ram_estimate,
)


class HarnessError(Exception):
    pass


class EmptyInput(HarnessError):
    pass


class ZeroBaseline(HarnessError):
    """Baseline has no measurable cost; report absolute energy instead."""


class WorkloadFailure(HarnessError):
    """A run_once raised. Partial results ride along in ``partial``."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial or {}


class SpawnFailure(HarnessError):
    pass


class NonZeroExit(HarnessError):
    def __init__(self, command, returncode):
        super().__init__(f"{command!r} exited with {returncode}")
        self.returncode = returncode


class Variant(enum.Enum):
    PRIVATE = "private"
    PLAINTEXT = "plaintext"


class Overhead(enum.Enum):
    COMPUTATIONAL = "computational"
    COMMUNICATION = "communication"
    INFRASTRUCTURE = "infrastructure"
    HARDWARE = "hardware"


def _noop():
    return None


@dataclass
class WorkloadContract:
    """setup / run_once / teardown lifecycle; run_once is the measured phase."""

    id: str
    variant: Variant
    run_once: callable
    setup: callable = _noop
    teardown: callable = _noop
    taxonomy: frozenset = frozenset()

    def __post_init__(self):
        self.taxonomy = frozenset(self.taxonomy)
        if self.variant is Variant.PRIVATE and not self.taxonomy:
            raise ValueError("PRIVATE workloads must declare overhead taxonomy tags")


@dataclass(frozen=True)
class RunRecord:
    run_index: int
    breakdown: EnergyBreakdown
    runtime_s: float


@dataclass(frozen=True)
class MeasurementStats:
    n_runs: int
    mean_kwh: float
    std_kwh: float
    min_kwh: float
    max_kwh: float
    mean_runtime_s: float


@dataclass(frozen=True)
class PairResult:
    workload: str
    private: MeasurementStats
    baseline: MeasurementStats
    overhead_ratio: float | None  # None when the baseline is cost-free
    taxonomy: frozenset
    country: str
    private_emissions_g: float
    baseline_emissions_g: float
    private_runs: tuple = ()
    baseline_runs: tuple = ()
    run_order: tuple = ()


def aggregate_stats(records) -> MeasurementStats:
    """Mean, sample std (n-1; 0 when n=1), and extrema over run energies."""
    records = list(records)
    if not records:
        raise EmptyInput("no run records")
    energies = [r.breakdown.total_kwh for r in records]
    runtimes = [r.runtime_s for r in records]
    return MeasurementStats(
        n_runs=len(records),
        mean_kwh=statistics.fmean(energies),
        std_kwh=statistics.stdev(energies) if len(energies) > 1 else 0.0,
        min_kwh=min(energies),
        max_kwh=max(energies),
        mean_runtime_s=statistics.fmean(runtimes),
    )


def relative_overhead(private: MeasurementStats, baseline: MeasurementStats) -> float:
    if baseline.mean_kwh <= 0:
        raise ZeroBaseline("baseline mean energy is zero; report absolute cost instead")
    return private.mean_kwh / baseline.mean_kwh


def measure_once(meter: MeterHandle, run_index: int, fn) -> RunRecord:
    """One sampling window around one call of ``fn``."""
    sampler = Sampler(meter)
    sampler.start()
    t0 = time.monotonic_ns()
    try:
        fn()
    finally:
        t1 = time.monotonic_ns()
        samples = sampler.stop()
    breakdown = integrate(samples)
    breakdown = with_ram_estimate(breakdown, meter.config.ram_installed_gb)
    return RunRecord(run_index=run_index, breakdown=breakdown, runtime_s=(t1 - t0) / 1e9)


def run_pair(private: WorkloadContract, baseline: WorkloadContract, *,
             iterations: int, warmup: int = 5, meter: MeterHandle,
             country: str = carbon.DEFAULT_COUNTRY,
             intensity_table=None) -> PairResult:
    """Measure a PRIVATE/PLAINTEXT pair and compute the overhead ratio.

    Warmup runs are executed unmeasured and discarded; the measured
    sequence then alternates private/baseline for ``iterations`` rounds.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if warmup < 0:
        raise ValueError("warmup must be >= 0")
    if private.id != baseline.id:
        raise ValueError("paired workloads must share an id")
    if private.variant is not Variant.PRIVATE or baseline.variant is not Variant.PLAINTEXT:
        raise ValueError("expects a PRIVATE workload and a PLAINTEXT baseline")

    private_runs: list[RunRecord] = []
    baseline_runs: list[RunRecord] = []
    run_order: list[str] = []

    private.setup()
    try:
        baseline.setup()
        try:
            for _ in range(warmup):
                private.run_once()
                baseline.run_once()
            for i in range(iterations):
                for contract, runs in ((private, private_runs), (baseline, baseline_runs)):
                    try:
                        runs.append(measure_once(meter, i, contract.run_once))
                    except MeterError:
                        raise
                    except Exception as exc:
                        raise WorkloadFailure(
                            f"{contract.id} ({contract.variant.value}) run {i} failed: {exc}",
                            partial={"private": tuple(private_runs),
                                     "baseline": tuple(baseline_runs),
                                     "run_order": tuple(run_order)},
                        ) from exc
                    run_order.append(contract.variant.value)
        finally:
            baseline.teardown()
    finally:
        private.teardown()

    private_stats = aggregate_stats(private_runs)
    baseline_stats = aggregate_stats(baseline_runs)
    try:
        ratio = relative_overhead(private_stats, baseline_stats)
    except ZeroBaseline:
        ratio = None

    intensity = carbon.lookup_intensity(country, table=intensity_table)
    return PairResult(
        workload=private.id,
        private=private_stats,
        baseline=baseline_stats,
        overhead_ratio=ratio,
        taxonomy=private.taxonomy,
        country=intensity.country,
        private_emissions_g=carbon.emissions(private_stats.mean_kwh, intensity),
        baseline_emissions_g=carbon.emissions(baseline_stats.mean_kwh, intensity),
        private_runs=tuple(private_runs),
        baseline_runs=tuple(baseline_runs),
        run_order=tuple(run_order),
    )


def run_external(command, *, iterations: int, meter: MeterHandle,
                 warmup: int = 0) -> MeasurementStats:
    """Measure an external command; the window spans child start to exit.

    Lets third-party PET frameworks be benchmarked without reimplementation.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")

    def spawn():
        try:
            proc = subprocess.run(command, capture_output=True)
        except FileNotFoundError as exc:
            raise SpawnFailure(f"cannot spawn {command!r}: {exc}") from exc
        if proc.returncode != 0:
            raise NonZeroExit(command, proc.returncode)

    for _ in range(warmup):
        spawn()
    records = []
    for i in range(iterations):
        try:
            records.append(measure_once(meter, i, spawn))
        except (SpawnFailure, NonZeroExit):
            raise
        except Exception as exc:
            raise WorkloadFailure(f"external run {i} failed: {exc}",
                                  partial={"runs": tuple(records)}) from exc
    return aggregate_stats(records)
