"""Energy meters: cumulative-counter backends, sampling, and integration.

Two backends are provided. The powercap backend reads the Linux RAPL
counters exposed under /sys/class/powercap. The simulated backend drives a
single synthetic package domain from a piecewise-constant power trace, so
every test and every non-Linux host gets deterministic energy numbers.

Counters are cumulative microjoule values that wrap at a per-domain
modulus; ``delta_energy`` and ``integrate`` handle the wraparound.
"""

from __future__ import annotations

import enum
import os
import re
import select
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

UJ_PER_KWH = 3.6e12
DEFAULT_MAX_RANGE_UJ = 2**32
DEFAULT_POWERCAP_ROOT = "/sys/class/powercap"

# Constant RAM power model, watts per installed gigabyte. RAM has no
# hardware counter, so its energy is estimated as power x window duration.
RAM_WATTS_PER_GB = 0.375

ENV_METER = "PETCARBON_METER"
ENV_POWERCAP_ROOT = "PETCARBON_POWERCAP_ROOT"


class MeterError(Exception):
    """Base class for meter failures."""


class BackendUnavailable(MeterError):
    """The requested backend cannot run on this host."""


class ReadFailure(MeterError):
    """A counter could not be read or parsed."""


class InvalidCounter(MeterError):
    """A counter value outside [0, max_range)."""


class EmptyWindow(MeterError):
    """Fewer than two samples for every domain: nothing to integrate."""


class DomainKind(enum.Enum):
    PACKAGE = "package"
    DRAM = "dram"
    SIMULATED = "simulated"


@dataclass(frozen=True)
class PowerDomain:
    id: str
    kind: DomainKind
    max_range_uj: int

    def __post_init__(self):
        if self.max_range_uj <= 0:
            raise ValueError("max_range_uj must be positive")


@dataclass(frozen=True)
class EnergySample:
    t_ns: int
    domain: PowerDomain
    counter_uj: int


@dataclass(frozen=True)
class MeterConfig:
    interval_ms: float = 1.0
    backend: str = "simulated"  # "simulated" | "powercap"
    ram_installed_gb: float = 0.0
    powercap_root: str | None = None
    trace: "PowerTrace | None" = None

    def __post_init__(self):
        if self.interval_ms < 1:
            raise ValueError("interval_ms must be >= 1")
        if self.ram_installed_gb < 0:
            raise ValueError("ram_installed_gb must be >= 0")
        if self.backend not in ("simulated", "powercap"):
            raise ValueError(f"unknown backend: {self.backend!r}")


@dataclass(frozen=True)
class EnergyBreakdown:
    per_domain_kwh: dict
    total_kwh: float
    duration_s: float
    sample_count: int


class PowerTrace:
    """Piecewise-constant synthetic power profile.

    ``segments`` is a sequence of (duration_s, watts) pairs; the last power
    level holds forever. The cumulative energy at any time is the exact
    analytic integral, so the simulated counter carries no sampling error
    of its own.
    """

    def __init__(self, segments):
        segments = [(float(d), float(w)) for d, w in segments]
        if not segments:
            raise ValueError("trace needs at least one segment")
        for d, w in segments:
            if d < 0 or w < 0:
                raise ValueError("segment durations and powers must be >= 0")
        self.segments = segments
        # cumulative (end_time_s, energy_uj_at_end) per segment boundary
        self._bounds = []
        t = 0.0
        e = 0.0
        for d, w in segments:
            t += d
            e += w * d * 1e6
            self._bounds.append((t, e))

    @classmethod
    def constant(cls, watts):
        return cls([(0.0, watts)])

    def watts_at(self, t_s):
        if t_s < 0:
            return self.segments[0][1]
        for (end, _), (_, w) in zip(self._bounds, self.segments):
            if t_s < end:
                return w
        return self.segments[-1][1]

    def cumulative_uj(self, t_s):
        """Exact integral of power over [0, t_s], in microjoules."""
        if t_s <= 0:
            return 0.0
        prev_end = 0.0
        prev_e = 0.0
        for (end, e), (_, w) in zip(self._bounds, self.segments):
            if t_s < end:
                return prev_e + w * (t_s - prev_end) * 1e6
            prev_end, prev_e = end, e
        return prev_e + self.segments[-1][1] * (t_s - prev_end) * 1e6

    def analytic_energy_uj(self, t0_s, t1_s):
        return self.cumulative_uj(t1_s) - self.cumulative_uj(t0_s)

    def max_watts(self):
        return max(w for _, w in self.segments)


def delta_energy(prev_uj, next_uj, max_range_uj):
    """Wraparound-safe counter difference, microjoules."""
    if not (0 <= prev_uj < max_range_uj) or not (0 <= next_uj < max_range_uj):
        raise InvalidCounter(
            f"counter outside [0, {max_range_uj}): prev={prev_uj} next={next_uj}"
        )
    return (next_uj - prev_uj) % max_range_uj


def ram_power_watts(installed_gb, watts_per_gb=RAM_WATTS_PER_GB):
    if installed_gb < 0:
        raise ValueError("installed_gb must be >= 0")
    return installed_gb * watts_per_gb


class _SimulatedBackend:
    def __init__(self, trace):
        self.trace = trace if trace is not None else PowerTrace.constant(10.0)
        self.domain = PowerDomain(
            id="sim:package-0",
            kind=DomainKind.PACKAGE,
            max_range_uj=DEFAULT_MAX_RANGE_UJ,
        )
        self._epoch_ns = time.monotonic_ns()

    @property
    def domains(self):
        return [self.domain]

    def read(self, domain):
        t_ns = time.monotonic_ns()
        elapsed_s = (t_ns - self._epoch_ns) / 1e9
        counter = int(self.trace.cumulative_uj(elapsed_s)) % domain.max_range_uj
        return EnergySample(t_ns=t_ns, domain=domain, counter_uj=counter)


_RAPL_DIR_RE = re.compile(r"^intel-rapl:\d+(:\d+)?$")


class _PowercapBackend:
    def __init__(self, root):
        self.root = Path(root)
        if not self.root.is_dir():
            raise BackendUnavailable(f"no powercap tree at {self.root}")
        self._nodes = {}
        domains = []
        for node in sorted(self.root.iterdir()):
            if not _RAPL_DIR_RE.match(node.name):
                continue
            energy = node / "energy_uj"
            if not energy.is_file():
                continue
            try:
                name = (node / "name").read_text().strip()
            except OSError:
                name = node.name
            try:
                max_range = int((node / "max_energy_range_uj").read_text().strip())
            except (OSError, ValueError):
                max_range = DEFAULT_MAX_RANGE_UJ
            kind = DomainKind.DRAM if name.startswith("dram") else DomainKind.PACKAGE
            dom = PowerDomain(id=f"{node.name}/{name}", kind=kind, max_range_uj=max_range)
            try:
                energy.read_text()
            except OSError as exc:
                raise BackendUnavailable(f"cannot read {energy}: {exc}") from exc
            self._nodes[dom.id] = energy
            domains.append(dom)
        if not domains:
            raise BackendUnavailable(f"no RAPL domains under {self.root}")
        self._domains = domains

    @property
    def domains(self):
        return self._domains

    def read(self, domain):
        path = self._nodes[domain.id]
        t_ns = time.monotonic_ns()
        try:
            raw = path.read_text()
        except OSError as exc:
            raise ReadFailure(f"counter file unreadable: {path}") from exc
        try:
            counter = int(raw.strip())
        except ValueError as exc:
            raise ReadFailure(f"unparseable counter in {path}: {raw!r}") from exc
        return EnergySample(t_ns=t_ns, domain=domain, counter_uj=counter)


class MeterHandle:
    """An open meter: enumerated domains plus counter reads.

    Safe to hand between threads, but only one Sampler may run on a handle
    at a time (enforced with a lock).
    """

    def __init__(self, config, backend):
        self.config = config
        self._backend = backend
        self._sampler_lock = threading.Lock()

    @property
    def domains(self):
        return self._backend.domains

    @property
    def backend_name(self):
        return "simulated" if isinstance(self._backend, _SimulatedBackend) else "powercap"

    @property
    def trace(self):
        return getattr(self._backend, "trace", None)

    def read(self, domain):
        return self._backend.read(domain)


def open_meter(config: MeterConfig) -> MeterHandle:
    """Open the configured backend; never falls back silently.

    ``PETCARBON_METER`` forces the backend and ``PETCARBON_POWERCAP_ROOT``
    overrides the powercap tree root (used by the fake-tree tests).
    """
    backend_name = os.environ.get(ENV_METER, config.backend)
    if backend_name == "simulated":
        backend = _SimulatedBackend(config.trace)
    elif backend_name == "powercap":
        root = (
            os.environ.get(ENV_POWERCAP_ROOT)
            or config.powercap_root
            or DEFAULT_POWERCAP_ROOT
        )
        backend = _PowercapBackend(root)
    else:
        raise BackendUnavailable(f"unknown meter backend {backend_name!r}")
    return MeterHandle(config, backend)


class Sampler:
    """Polls every domain of a handle on a fixed grid.

    Ticks are scheduled from the ideal grid (epoch + k * interval), so
    jitter never accumulates. An initial sample per domain is taken at
    start() and a final one is flushed at stop(), so even a zero-tick
    window yields an integrable pair.
    """

    def __init__(self, handle: MeterHandle, interval_ms: float | None = None):
        self.handle = handle
        self.interval_ms = interval_ms if interval_ms is not None else handle.config.interval_ms
        if self.interval_ms < 1:
            raise ValueError("interval_ms must be >= 1")
        self._samples: list[EnergySample] = []
        self._stop_evt = threading.Event()
        self._thread: threading.Thread | None = None
        self._error: Exception | None = None

    def start(self):
        if not self.handle._sampler_lock.acquire(blocking=False):
            raise MeterError("another sampler is already running on this handle")
        self._samples = []
        self._stop_evt.clear()
        self._wake_pipe = os.pipe()
        self._error = None
        self._thread = threading.Thread(target=self._run, name="petcarbon-sampler", daemon=True)
        self._thread.start()
        # initial samples are taken after the thread spawn so the gap between
        # the window start and the caller's workload is microseconds rather
        # than the spawn latency
        self._samples.extend(self.handle.read(d) for d in self.handle.domains)
        return self

    def _run(self):
        interval_ns = int(self.interval_ms * 1e6)
        domains = self.handle.domains
        read = self.handle.read
        samples = self._samples
        t0 = time.monotonic_ns()
        k = 1
        stop_set = self._stop_evt.is_set
        rfd = self._wake_pipe[0]
        try:
            while True:
                deadline = t0 + k * interval_ns
                now = time.monotonic_ns()
                if now < deadline:
                    # a select on the self-pipe is both cheaper per wakeup
                    # than Event.wait and instantly interruptible by stop()
                    ready, _, _ = select.select([rfd], [], [], (deadline - now) / 1e9)
                    if ready:
                        return
                elif stop_set():
                    return
                for d in domains:
                    samples.append(read(d))
                # late wakeups emit catch-up ticks so the grid count holds;
                # resync only after a pathological stall
                k += 1
                behind = (time.monotonic_ns() - t0) // interval_ns + 1 - k
                if behind > 1000:
                    k += behind
        except Exception as exc:  # surfaced to the caller in stop()
            self._error = exc

    def stop(self) -> list[EnergySample]:
        if self._thread is None:
            raise MeterError("sampler not started")
        self._stop_evt.set()
        os.write(self._wake_pipe[1], b"x")
        # flush samples are taken before the join so the window ends with the
        # workload instead of after the thread's wakeup latency
        flush = [self.handle.read(d) for d in self.handle.domains]
        self._thread.join()
        self._thread = None
        for fd in self._wake_pipe:
            os.close(fd)
        try:
            if self._error is not None:
                raise self._error
            self._samples.extend(flush)
            # a tick racing stop() may land after the flush reads: restore
            # time order and drop same-instant duplicates per domain
            self._samples.sort(key=lambda s: s.t_ns)
            last_t: dict[str, int] = {}
            deduped = []
            for s in self._samples:
                if last_t.get(s.domain.id) != s.t_ns:
                    deduped.append(s)
                    last_t[s.domain.id] = s.t_ns
            self._samples = deduped
        finally:
            self.handle._sampler_lock.release()
        return self._samples

    def __enter__(self):
        return self.start()

    def __exit__(self, *exc):
        if self._thread is not None:
            self.stop()
        return False


def integrate(samples) -> EnergyBreakdown:
    """Sum wraparound-safe deltas over consecutive samples per domain.

    Energy is reported in kWh per domain; duration spans the earliest to
    the latest timestamp across all domains.
    """
    by_domain: dict[str, list[EnergySample]] = {}
    for s in samples:
        by_domain.setdefault(s.domain.id, []).append(s)

    per_domain_uj = {}
    t_min = None
    t_max = None
    n = 0
    for dom_id, dom_samples in by_domain.items():
        if len(dom_samples) < 2:
            continue
        total = 0
        prev = dom_samples[0]
        for cur in dom_samples[1:]:
            if cur.t_ns <= prev.t_ns:
                raise InvalidCounter(
                    f"timestamps not strictly increasing for domain {dom_id}"
                )
            total += delta_energy(prev.counter_uj, cur.counter_uj, cur.domain.max_range_uj)
            prev = cur
        per_domain_uj[dom_id] = total
        n += len(dom_samples)
        lo, hi = dom_samples[0].t_ns, dom_samples[-1].t_ns
        t_min = lo if t_min is None else min(t_min, lo)
        t_max = hi if t_max is None else max(t_max, hi)

    if not per_domain_uj:
        raise EmptyWindow("need at least two samples for at least one domain")

    per_domain_kwh = {d: uj / UJ_PER_KWH for d, uj in per_domain_uj.items()}
    return EnergyBreakdown(
        per_domain_kwh=per_domain_kwh,
        total_kwh=sum(per_domain_kwh.values()),
        duration_s=(t_max - t_min) / 1e9,
        sample_count=n,
    )


def with_ram_estimate(breakdown: EnergyBreakdown, installed_gb: float,
                      domain_id: str = "ram") -> EnergyBreakdown:
    """Add the constant-model RAM energy as its own domain."""
    if installed_gb <= 0:
        return breakdown
    ram_kwh = ram_power_watts(installed_gb) * breakdown.duration_s / 3600.0 / 1000.0
    per_domain = dict(breakdown.per_domain_kwh)
    per_domain[domain_id] = per_domain.get(domain_id, 0.0) + ram_kwh
    return EnergyBreakdown(
        per_domain_kwh=per_domain,
        total_kwh=sum(per_domain.values()),
        duration_s=breakdown.duration_s,
        sample_count=breakdown.sample_count,
    )
