"""Meter basics: sample a synthetic power trace and integrate it.

The simulated backend drives a single package domain from a
piecewise-constant power trace whose counter is the exact analytic
integral, so you can check the sampler against ground truth.
"""

import time

from petcarbon.meter import MeterConfig, PowerTrace, Sampler, integrate, open_meter

# 5 W for 0.2 s, then a 20 W burst, then back to 5 W forever
trace = PowerTrace([(0.2, 5.0), (0.2, 20.0), (0.0, 5.0)])
meter = open_meter(MeterConfig(interval_ms=1.0, trace=trace))

sampler = Sampler(meter)
sampler.start()
time.sleep(0.6)
samples = sampler.stop()

breakdown = integrate(samples)
joules = breakdown.total_kwh * 3.6e6
expected = trace.analytic_energy_uj(0.0, breakdown.duration_s) / 1e6

print(f"samples collected : {breakdown.sample_count}")
print(f"window duration   : {breakdown.duration_s:.4f} s")
print(f"measured energy   : {joules:.4f} J")
print(f"analytic energy   : {expected:.4f} J")
for domain, kwh in breakdown.per_domain_kwh.items():
    print(f"  {domain}: {kwh * 3.6e6:.4f} J")
