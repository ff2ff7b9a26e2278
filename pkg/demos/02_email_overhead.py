"""Email suite: hybrid encrypt+sign vs a plaintext copy of each message.

Runs a short paired measurement for each cipher suite on the simulated
meter and prints energy, emissions, and the overhead ratio. Switch the
meter to powercap on a RAPL-capable host for real numbers.
"""

from petcarbon import carbon, harness
from petcarbon.meter import MeterConfig, PowerTrace, open_meter
from petcarbon.workloads import email_crypto as emc
from petcarbon.workloads.corpus import bundled_corpus

meter = open_meter(MeterConfig(trace=PowerTrace.constant(10.0)))
corpus = bundled_corpus()
print(f"corpus: {len(corpus)} messages\n")

for suite in emc.SuiteName:
    keys = emc.keygen(suite, seed=42)
    private, baseline = emc.crypto_suite_workloads(corpus, keys)
    result = harness.run_pair(private, baseline, iterations=3, warmup=1,
                              meter=meter, country="NL")
    intensity = carbon.lookup_intensity(result.country)
    grams = carbon.emissions(result.private.mean_kwh, intensity)
    print(f"{suite.value:12s} private {result.private.mean_kwh:.3e} kWh "
          f"({grams:.3e} g CO2eq) | baseline {result.baseline.mean_kwh:.3e} kWh "
          f"| overhead {result.overhead_ratio:.1f}x")
