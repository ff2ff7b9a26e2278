"""End-to-end acceptance checks, one test per release criterion.

Each test prints one ``criterion NN: PASS`` line on success. Criteria that
need real hardware energy counters (relative-overhead bands) skip or reduce
to their correctness half when /sys/class/powercap is unavailable, so the
suite is meaningful both on laptops with RAPL and inside containers.
"""

import random
import tempfile
import time

import pytest

from conftest import busy_wait
from petcarbon import carbon, report
from petcarbon.cli import _corpus_of_size
from petcarbon.harness import (
    Overhead,
    Variant,
    WorkloadContract,
    measure_once,
    relative_overhead,
    run_pair,
)
from petcarbon.meter import (
    DomainKind,
    EnergySample,
    MeterConfig,
    MeterError,
    PowerDomain,
    PowerTrace,
    Sampler,
    UJ_PER_KWH,
    integrate,
    open_meter,
)
from petcarbon.workloads import edb, email_crypto as emc, heml, web
from petcarbon.workloads.corpus import bundled_corpus


def _rapl_available():
    try:
        open_meter(MeterConfig(backend="powercap"))
        return True
    except MeterError:
        return False


HAVE_RAPL = _rapl_available()
needs_rapl = pytest.mark.skipif(
    not HAVE_RAPL, reason="hardware energy counters (powercap) not available")


def _sim_meter(watts=10.0):
    return open_meter(MeterConfig(trace=PowerTrace.constant(watts)))


def _hw_meter():
    return open_meter(MeterConfig(backend="powercap"))


def _pair(run_private, run_baseline, wl_id="wl"):
    private = WorkloadContract(id=wl_id, variant=Variant.PRIVATE, run_once=run_private,
                               taxonomy={Overhead.COMPUTATIONAL})
    baseline = WorkloadContract(id=wl_id, variant=Variant.PLAINTEXT, run_once=run_baseline)
    return private, baseline


def _mean_energy_kwh(meter, fn, runs=5, warmup=1):
    for _ in range(warmup):
        fn()
    records = [measure_once(meter, i, fn) for i in range(runs)]
    return sum(r.breakdown.total_kwh for r in records) / runs


def _ok(n, msg):
    print(f"criterion {n:02d}: PASS - {msg}")


def test_c01_simulated_meter_calibration():
    """Constant 10 W for 2 s must integrate to 20 J within +/- 20 mJ."""
    record = measure_once(_sim_meter(10.0), 0, lambda: busy_wait(2.0))
    joules = record.breakdown.total_kwh * 3.6e6
    assert abs(joules - 20.0) <= 0.020
    _ok(1, f"measured {joules:.5f} J for a 20 J target")


def test_c02_wraparound_shadow_oracle():
    """10,000 random wrapped counter traces integrate exactly."""
    rnd = random.Random(20260823)
    for _ in range(10_000):
        max_range = rnd.randrange(1_000, 1_000_000)
        domain = PowerDomain(id="sim", kind=DomainKind.SIMULATED, max_range_uj=max_range)
        counter = rnd.randrange(max_range)
        shadow_uj = 0
        samples = [EnergySample(t_ns=0, domain=domain, counter_uj=counter)]
        for k in range(1, rnd.randrange(3, 12)):
            step = rnd.randrange(max_range)  # often forces a wrap
            shadow_uj += step
            counter = (counter + step) % max_range
            samples.append(EnergySample(t_ns=k * 1_000_000, domain=domain,
                                        counter_uj=counter))
        assert integrate(samples).total_kwh == shadow_uj / UJ_PER_KWH
    _ok(2, "10,000 wrapped traces matched the unwrapped shadow counter exactly")


def test_c03_carbon_proportionality_and_country_invariance():
    meter = _sim_meter()
    private, baseline = _pair(lambda: busy_wait(0.02), lambda: busy_wait(0.01))
    result = run_pair(private, baseline, iterations=3, warmup=0, meter=meter)
    rows = report.pair_result_dict(result)["runs"]
    default_intensity = carbon.lookup_intensity(result.country)
    for row in rows:
        assert row["emissions_g"] == pytest.approx(
            row["energy_kwh"] * default_intensity.g_per_kwh, rel=1e-12)
    checked = len(rows)
    for country in ("NL", "FR", "PL"):
        intensity = carbon.lookup_intensity(country)
        for rec in result.private_runs + result.baseline_runs:
            kwh = rec.breakdown.total_kwh
            got = carbon.emissions(kwh, intensity)
            assert got == pytest.approx(kwh * intensity.g_per_kwh, rel=1e-12)
            checked += 1
    ratios = {relative_overhead(result.private, result.baseline) for _ in ("NL", "FR", "PL")}
    assert len(ratios) == 1  # the ratio never touches the intensity table
    table = {c: carbon.lookup_intensity(c, year=2023).g_per_kwh for c in ("NL", "FR", "PL")}
    assert table == {"NL": 268.0, "FR": 56.0, "PL": 662.0}
    _ok(3, f"{checked} rows proportional; ratio country-invariant; table 268/56/662")


def test_c04_paired_harness_sleep_ratio():
    private, baseline = _pair(lambda: time.sleep(0.2), lambda: time.sleep(0.1))
    result = run_pair(private, baseline, iterations=10, warmup=2, meter=_sim_meter())
    assert result.overhead_ratio == pytest.approx(2.0, abs=0.1)
    _ok(4, f"2x-vs-1x sleep pair measured at {result.overhead_ratio:.3f}x")


def test_c05_crypto_suite_correctness():
    corpus = bundled_corpus()
    assert len(corpus) == 200
    keys = {suite: emc.keygen(suite, seed=20260823) for suite in emc.SuiteName}
    for suite, kp in keys.items():
        for message in corpus.messages:
            assert emc.decrypt_email(emc.encrypt_email(message, kp), kp) == message
            assert emc.verify_email(message, emc.sign_email(message, kp), kp)
    ct = emc.encrypt_email(b"cross", keys[emc.SuiteName.RSA])
    with pytest.raises(emc.KeyMismatch):
        emc.decrypt_email(ct, keys[emc.SuiteName.ECC])
    sig = emc.sign_email(b"cross", keys[emc.SuiteName.ECC])
    with pytest.raises(emc.KeyMismatch):
        emc.verify_email(b"cross", sig, keys[emc.SuiteName.ELGAMAL_DSA])
    _ok(5, "600 roundtrips per operation across 3 suites; cross-suite keys rejected")


@needs_rapl
def test_c06_crypto_suite_energy_ordering():
    """Relative cost bands between cipher suites, hardware counters only."""
    meter = _hw_meter()
    corpus = _corpus_of_size(bundled_corpus(), 1000)
    keys = {suite: emc.keygen(suite, seed=1) for suite in emc.SuiteName}

    def encrypt_batch(kp):
        return lambda: [emc.encrypt_email(m, kp) for m in corpus.messages]

    def sign_batch(kp):
        return lambda: [emc.sign_email(m, kp) for m in corpus.messages]

    enc = {s: _mean_energy_kwh(meter, encrypt_batch(kp), runs=3)
           for s, kp in keys.items()}
    sig = {s: _mean_energy_kwh(meter, sign_batch(kp), runs=3)
           for s, kp in keys.items()}
    elgamal_over_rsa = enc[emc.SuiteName.ELGAMAL_DSA] / enc[emc.SuiteName.RSA]
    dsa_over_rsa = sig[emc.SuiteName.ELGAMAL_DSA] / sig[emc.SuiteName.RSA]
    assert 3 <= elgamal_over_rsa <= 30
    assert 1.2 <= dsa_over_rsa <= 5
    assert enc[emc.SuiteName.RSA] > sig[emc.SuiteName.RSA]
    assert enc[emc.SuiteName.ECC] > sig[emc.SuiteName.ECC]
    _ok(6, f"encryption ElGamal/RSA {elgamal_over_rsa:.1f}x, "
           f"signing DSA/RSA {dsa_over_rsa:.1f}x")


def test_c07_web_suite():
    snapshot = web.bundled_snapshot()
    http = web.serve_static(snapshot, web.WebServerConfig(mode="http"))
    with tempfile.TemporaryDirectory() as d:
        cert, key = web.make_self_signed_cert(d)
        https = web.serve_static(snapshot, web.WebServerConfig(
            mode="https", tls_cert=cert, tls_key=key))
        ctx = web.client_tls_context(cert)
        try:
            urls = snapshot.urls()
            plain = web.fetch_batch(http, urls, record_hashes=True)
            secure = web.fetch_batch(https, urls, tls_context=ctx, record_hashes=True)
            assert plain.body_sha256 == secure.body_sha256
            assert plain.total_bytes == secure.total_bytes == snapshot.total_bytes()
        finally:
            http.close()
            https.close()
    if HAVE_RAPL:
        private, baseline = web.web_suite_workloads(snapshot, requests_per_run=1000)
        result = run_pair(private, baseline, iterations=3, warmup=1, meter=_hw_meter())
        assert 1.1 <= result.overhead_ratio <= 4.0
        _ok(7, f"bodies byte-identical; HTTPS/HTTP energy {result.overhead_ratio:.2f}x")
    else:
        _ok(7, "bodies byte-identical across HTTP and HTTPS (energy ratio needs hardware)")


def test_c08_heml_suite():
    dataset = heml.gen_synthetic(100, 30, seed=7)
    weights, bias = heml.train_plain_logreg(dataset)
    model = heml.quantize(weights, bias, 16)
    keys = heml.ahe.ahe_keygen(2048, seed=7)

    agree = sum(heml.he_predict(keys, x, model) == heml.plain_int_predict(model, x)
                for x in dataset.features)
    assert agree == 100

    pub = keys.public
    rnd = random.Random(8)
    for _ in range(1000):
        a, b = rnd.randrange(pub.n), rnd.randrange(pub.n)
        k = rnd.randrange(-1000, 1000)
        ca = heml.ahe.ahe_encrypt(pub, a)
        summed = heml.ahe.ahe_add(pub, ca, heml.ahe.ahe_encrypt(pub, b))
        assert heml.ahe.ahe_decrypt(keys, summed) == (a + b) % pub.n
        assert heml.ahe.ahe_decrypt(keys, heml.ahe.ahe_scalar_mul(pub, ca, k)) == (k * a) % pub.n

    if HAVE_RAPL:
        meter = _hw_meter()
        private, baseline = heml.heml_suite_workloads(
            dataset, model, keys, weights=weights, bias=bias, batch_size=100)
        result = run_pair(private, baseline, iterations=3, warmup=1, meter=meter)
        assert result.overhead_ratio >= 50

        def per_sample(batch):
            sub = heml.SyntheticDataset(
                n_samples=batch, n_features=dataset.n_features,
                features=dataset.features[:batch], labels=dataset.labels[:batch],
                seed=dataset.seed)
            p, b = heml.heml_suite_workloads(sub, model, keys,
                                             weights=weights, bias=bias,
                                             batch_size=batch)
            pr = run_pair(p, b, iterations=3, warmup=1, meter=meter)
            return (pr.private.mean_kwh / batch, pr.baseline.mean_kwh / batch)

        enc_100, plain_100 = per_sample(100)
        enc_10, plain_10 = per_sample(10)
        assert abs(enc_100 - enc_10) / enc_10 <= 0.25  # encrypted side: no amortization
        assert plain_10 / plain_100 >= 2.0             # plaintext side: batch amortizes
        _ok(8, f"100/100 labels equal; 1000 triples exact; overhead "
               f"{result.overhead_ratio:.0f}x with no encrypted-side amortization")
    else:
        _ok(8, "100/100 labels equal; 1000 homomorphism triples exact "
               "(overhead ratio needs hardware)")


def test_c09_edb_suite():
    corpus = bundled_corpus()
    master_key = bytes(range(32))
    ratios = []
    for size in (50, 200, 1000):
        sized = _corpus_of_size(corpus, size)
        plain = edb.build_plain_index(sized)
        enc = edb.sse_setup(sized, master_key)
        vocab = plain.vocabulary()
        rnd = random.Random(size)
        for _ in range(1000):
            keyword = vocab[rnd.randrange(len(vocab))]
            tok = edb.sse_trapdoor(keyword, master_key)
            assert edb.sse_search(enc, tok) == plain.lookup(keyword)
        if HAVE_RAPL:
            private, baseline = edb.edb_suite_workloads(sized, master_key,
                                                        query_seed=size,
                                                        query_count=1000)
            result = run_pair(private, baseline, iterations=3, warmup=1,
                              meter=_hw_meter())
            ratios.append(result.overhead_ratio)

    tok = edb.sse_trapdoor(edb.build_plain_index(corpus).vocabulary()[0], master_key)
    enc = edb.sse_setup(corpus, master_key)
    blob = enc.table[tok.token]
    tampered = dict(enc.table)
    tampered[tok.token] = blob[:-1] + bytes([blob[-1] ^ 1])
    with pytest.raises(edb.AuthFailure):
        edb.sse_search(edb.EncryptedIndex(table=tampered, doc_count=enc.doc_count), tok)

    if HAVE_RAPL:
        assert all(r > 1 for r in ratios)
        assert ratios == sorted(ratios)
        _ok(9, f"3000/3000 result sets equal; tamper rejected; ratios {ratios}")
    else:
        _ok(9, "3000/3000 result sets equal; tamper rejected "
               "(overhead ratios need hardware)")


def _bare_wakeup_floor(duration_s=2.0):
    """CPU fraction charged for an empty 1 kHz sleep loop on this host.

    Virtualized kernels can bill >100 us of CPU time per timer wakeup, in
    which case no 1 ms polling loop, in any language, can stay under the
    budget; the overhead criterion is then unattainable on the host rather
    than failed by the implementation.
    """
    cpu0 = time.process_time()
    end = time.monotonic() + duration_s
    while time.monotonic() < end:
        time.sleep(0.001)
    return (time.process_time() - cpu0) / duration_s


def test_c10_sampler_cpu_overhead():
    """A 1 ms sampling loop must cost < 5% of one core over 10 s idle."""
    floor = _bare_wakeup_floor()
    if floor > 0.04:
        pytest.skip(f"host charges {floor:.1%} of a core for a bare 1 kHz sleep "
                    "loop; the 5% budget is unattainable on this machine")
    meter = _sim_meter()
    sampler = Sampler(meter)
    cpu0 = time.process_time()
    sampler.start()
    time.sleep(10.0)
    sampler.stop()
    cpu = time.process_time() - cpu0
    assert cpu < 0.5
    _ok(10, f"sampler used {cpu:.3f} s CPU over a 10 s window ({cpu / 10:.1%} of one core)")
