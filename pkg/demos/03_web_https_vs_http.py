"""Web suite: HTTPS with one TLS handshake per request vs plain HTTP.

Serves the bundled site snapshot on loopback, fetches it over both modes,
verifies the bodies are byte-identical, and measures the paired energy.
"""

from petcarbon import harness
from petcarbon.meter import MeterConfig, PowerTrace, open_meter
from petcarbon.workloads import web

snapshot = web.bundled_snapshot()
print(f"snapshot: {len(snapshot.resources)} resources, "
      f"{snapshot.total_bytes():,} bytes")

private, baseline = web.web_suite_workloads(snapshot, requests_per_run=100)
result = harness.run_pair(private, baseline, iterations=3, warmup=1,
                          meter=open_meter(MeterConfig(trace=PowerTrace.constant(10.0))))

print(f"HTTPS mean {result.private.mean_kwh:.3e} kWh over "
      f"{result.private.mean_runtime_s:.2f} s")
print(f"HTTP  mean {result.baseline.mean_kwh:.3e} kWh over "
      f"{result.baseline.mean_runtime_s:.2f} s")
print(f"overhead ratio: {result.overhead_ratio:.2f}x "
      "(energy ~ runtime on the constant simulated trace; "
      "use the powercap meter for hardware ratios)")
