import os
import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from conftest import busy_wait
from petcarbon.meter import (
    DEFAULT_MAX_RANGE_UJ,
    BackendUnavailable,
    DomainKind,
    EmptyWindow,
    EnergySample,
    InvalidCounter,
    MeterConfig,
    PowerDomain,
    PowerTrace,
    ReadFailure,
    Sampler,
    delta_energy,
    integrate,
    open_meter,
    ram_power_watts,
    with_ram_estimate,
)


class TestDeltaEnergy:
    def test_plain_difference(self):
        assert delta_energy(100, 250, 1_000_000) == 150

    def test_identity(self):
        assert delta_energy(12345, 12345, 1_000_000) == 0

    def test_wraparound(self):
        # oracle: step a modular counter one microjoule at a time
        rng = 1_000_000
        counter, steps = 999_950, 0
        while counter != 50:
            counter = (counter + 1) % rng
            steps += 1
        assert delta_energy(999_950, 50, rng) == steps == 100

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidCounter):
            delta_energy(1_000_000, 5, 1_000_000)
        with pytest.raises(InvalidCounter):
            delta_energy(5, -1, 1_000_000)

    @given(
        prev=st.integers(min_value=0, max_value=2**32 - 1),
        nxt=st.integers(min_value=0, max_value=2**32 - 1),
    )
    def test_totality(self, prev, nxt):
        assert 0 <= delta_energy(prev, nxt, 2**32) < 2**32


def _make_samples(domain, deltas, t0=1000):
    """Turn per-step true energy deltas into wrapped counter samples."""
    samples = []
    shadow = 0
    t = t0
    for d in [0] + list(deltas):
        shadow += d
        samples.append(EnergySample(t_ns=t, domain=domain, counter_uj=shadow % domain.max_range_uj))
        t += 1_000_000
    return samples, shadow


class TestIntegrate:
    DOMAIN = PowerDomain(id="pkg", kind=DomainKind.PACKAGE, max_range_uj=10_000)

    def test_single_sample_is_empty_window(self):
        sample = EnergySample(t_ns=0, domain=self.DOMAIN, counter_uj=5)
        with pytest.raises(EmptyWindow):
            integrate([sample])

    def test_matches_shadow_counter_oracle(self):
        rnd = random.Random(7)
        for _ in range(200):
            deltas = [rnd.randrange(0, 7000) for _ in range(rnd.randrange(1, 50))]
            samples, shadow = _make_samples(self.DOMAIN, deltas)
            got_uj = integrate(samples).per_domain_kwh["pkg"] * 3.6e12
            assert round(got_uj) == shadow

    def test_total_is_sum_of_domains(self):
        d2 = PowerDomain(id="dram", kind=DomainKind.DRAM, max_range_uj=10_000)
        s1, _ = _make_samples(self.DOMAIN, [100, 200])
        s2, _ = _make_samples(d2, [50, 75])
        b = integrate(s1 + s2)
        assert b.total_kwh == pytest.approx(sum(b.per_domain_kwh.values()), rel=1e-12)
        assert b.duration_s > 0 and b.sample_count == 6

    def test_non_monotonic_timestamps_rejected(self):
        s = [
            EnergySample(t_ns=10, domain=self.DOMAIN, counter_uj=0),
            EnergySample(t_ns=10, domain=self.DOMAIN, counter_uj=5),
        ]
        with pytest.raises(InvalidCounter):
            integrate(s)

    @given(st.lists(st.integers(min_value=0, max_value=9999), min_size=1, max_size=40))
    @settings(max_examples=50)
    def test_wrap_traces_equal_oracle(self, deltas):
        samples, shadow = _make_samples(self.DOMAIN, deltas)
        assert round(integrate(samples).total_kwh * 3.6e12) == shadow


class TestPowerTrace:
    def test_constant_integral(self):
        tr = PowerTrace.constant(10.0)
        assert tr.cumulative_uj(1.0) == pytest.approx(10_000_000)
        assert tr.analytic_energy_uj(1.0, 3.0) == pytest.approx(20_000_000)

    def test_piecewise_integral(self):
        tr = PowerTrace([(0.02, 5.0), (0.02, 20.0), (0.0, 1.0)])
        assert tr.cumulative_uj(0.01) == pytest.approx(5.0 * 0.01 * 1e6)
        assert tr.cumulative_uj(0.03) == pytest.approx((5.0 * 0.02 + 20.0 * 0.01) * 1e6)
        assert tr.watts_at(0.05) == 1.0
        assert tr.max_watts() == 20.0


class TestSimulatedBackend:
    def test_single_package_domain(self, sim_meter):
        assert len(sim_meter.domains) == 1
        dom = sim_meter.domains[0]
        assert dom.kind is DomainKind.PACKAGE
        assert dom.max_range_uj == 2**32

    def test_constant_power_counter_rate(self, sim_meter):
        dom = sim_meter.domains[0]
        s0 = sim_meter.read(dom)
        busy_wait(0.2)
        s1 = sim_meter.read(dom)
        joules = delta_energy(s0.counter_uj, s1.counter_uj, dom.max_range_uj) / 1e6
        elapsed = (s1.t_ns - s0.t_ns) / 1e9
        assert joules == pytest.approx(10.0 * elapsed, rel=1e-2)

    def test_step_trace_integration_error_bound(self):
        # 5 ms interval over a 50 ms step trace: error within one
        # interval's worth of the max power level
        trace = PowerTrace([(0.02, 4.0), (0.02, 30.0), (0.0, 8.0)])
        meter = open_meter(MeterConfig(interval_ms=5, trace=trace))
        sampler = Sampler(meter)
        sampler.start()
        busy_wait(0.05)
        samples = sampler.stop()
        b = integrate(samples)
        t_first = samples[0].t_ns
        t_last = samples[-1].t_ns
        epoch = meter._backend._epoch_ns
        analytic_uj = trace.analytic_energy_uj((t_first - epoch) / 1e9, (t_last - epoch) / 1e9)
        got_uj = b.total_kwh * 3.6e12
        assert abs(got_uj - analytic_uj) <= trace.max_watts() * 0.005 * 1e6


class TestSampler:
    def test_sample_count_on_grid(self, sim_meter):
        sampler = Sampler(sim_meter)
        sampler.start()
        busy_wait(0.1)
        samples = sampler.stop()
        # initial + final + one per 1 ms grid tick
        assert len(samples) == pytest.approx(102, abs=3)

    def test_stop_before_first_tick(self, sim_meter):
        sampler = Sampler(sim_meter, interval_ms=10_000)
        sampler.start()
        samples = sampler.stop()
        assert len(samples) == 2  # initial and flushed final

    def test_one_sampler_per_handle(self, sim_meter):
        s1 = Sampler(sim_meter).start()
        with pytest.raises(Exception):
            Sampler(sim_meter).start()
        s1.stop()


@pytest.fixture
def fake_powercap(tmp_path):
    pkg = tmp_path / "intel-rapl:0"
    pkg.mkdir()
    (pkg / "name").write_text("package-0\n")
    (pkg / "energy_uj").write_text("12345\n")
    (pkg / "max_energy_range_uj").write_text("262143328850\n")
    dram = tmp_path / "intel-rapl:0:0"
    dram.mkdir()
    (dram / "name").write_text("dram\n")
    (dram / "energy_uj").write_text("999\n")
    (dram / "max_energy_range_uj").write_text("65712999613\n")
    (tmp_path / "not-rapl").mkdir()
    return tmp_path


class TestPowercapBackend:
    def test_enumerates_package_and_dram(self, fake_powercap):
        meter = open_meter(MeterConfig(backend="powercap", powercap_root=str(fake_powercap)))
        kinds = {d.kind for d in meter.domains}
        assert len(meter.domains) == 2
        assert kinds == {DomainKind.PACKAGE, DomainKind.DRAM}
        ranges = {d.id: d.max_range_uj for d in meter.domains}
        assert ranges["intel-rapl:0/package-0"] == 262143328850

    def test_reads_ascii_counter(self, fake_powercap):
        meter = open_meter(MeterConfig(backend="powercap", powercap_root=str(fake_powercap)))
        pkg = next(d for d in meter.domains if d.kind is DomainKind.PACKAGE)
        assert meter.read(pkg).counter_uj == 12345

    def test_unparseable_counter(self, fake_powercap):
        (fake_powercap / "intel-rapl:0" / "energy_uj").write_text("abc\n")
        meter = open_meter(MeterConfig(backend="powercap", powercap_root=str(fake_powercap)))
        pkg = next(d for d in meter.domains if d.kind is DomainKind.PACKAGE)
        with pytest.raises(ReadFailure):
            meter.read(pkg)

    def test_missing_tree_unavailable(self, tmp_path):
        with pytest.raises(BackendUnavailable):
            open_meter(MeterConfig(backend="powercap", powercap_root=str(tmp_path / "nope")))

    def test_env_var_overrides(self, fake_powercap, monkeypatch):
        monkeypatch.setenv("PETCARBON_METER", "powercap")
        monkeypatch.setenv("PETCARBON_POWERCAP_ROOT", str(fake_powercap))
        meter = open_meter(MeterConfig(backend="simulated"))
        assert meter.backend_name == "powercap"


class TestRamModel:
    def test_values(self):
        assert ram_power_watts(0) == 0.0
        assert ram_power_watts(8) == 3.0
        assert ram_power_watts(32) == 12.0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            ram_power_watts(-1)

    def test_breakdown_gets_ram_domain(self):
        dom = PowerDomain(id="pkg", kind=DomainKind.PACKAGE, max_range_uj=10**9)
        samples, _ = _make_samples(dom, [1000] * 5)
        b = with_ram_estimate(integrate(samples), installed_gb=8)
        assert "ram" in b.per_domain_kwh
        expected = 3.0 * b.duration_s / 3.6e6
        assert b.per_domain_kwh["ram"] == pytest.approx(expected, rel=1e-12)


class TestMeterConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            MeterConfig(interval_ms=0)
        with pytest.raises(ValueError):
            MeterConfig(ram_installed_gb=-1)
        with pytest.raises(ValueError):
            MeterConfig(backend="bogus")
