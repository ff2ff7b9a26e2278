"""Command-line entry point.

    petcarbon run --suite <email|web|heml|edb|external> [suite flags]
                  --iterations N --warmup K --country CC
                  --meter simulated|powercap --out report.json --figures out/
    petcarbon intensity list

Exit codes: 0 success, 2 usage error, 1 runtime failure.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys

from . import carbon, harness, report as report_mod
from .meter import MeterConfig, PowerTrace, open_meter
from .report import BenchmarkReport, RunConfig
from .workloads import edb, email_crypto, heml, web
from .workloads.corpus import bundled_corpus, load_corpus, EmailCorpus

SUITES = ("email", "web", "heml", "edb", "external")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="petcarbon",
        description="Benchmark the energy and carbon overhead of cryptographic "
                    "privacy-enhancing technologies against plaintext baselines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a benchmark suite")
    run.add_argument("--suite", required=True, choices=SUITES,
                     help="built-in suite: email (encrypt+sign), web (HTTP vs HTTPS), "
                          "heml (encrypted linear inference), edb (encrypted keyword "
                          "search), or external (measure an arbitrary command)")
    run.add_argument("--iterations", type=int, default=None,
                     help="measured runs per variant (per-suite default)")
    run.add_argument("--warmup", type=int, default=5, help="discarded warmup runs")
    run.add_argument("--country", default=carbon.DEFAULT_COUNTRY,
                     help="ISO country code for carbon intensity (default NL)")
    run.add_argument("--meter", choices=("simulated", "powercap"), default="simulated")
    run.add_argument("--interval-ms", type=float, default=1.0, help="meter polling period")
    run.add_argument("--ram-gb", type=float, default=0.0,
                     help="installed RAM for the constant RAM power model")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--out", default=None, help="JSON report path")
    run.add_argument("--csv", default=None, help="flat CSV export path")
    run.add_argument("--figures", default=None, help="directory for bar charts")
    # email suite
    run.add_argument("--cipher", choices=("rsa", "ecc", "elgamal"), default="rsa")
    run.add_argument("--corpus", default=None, help="directory of message files")
    # web suite
    run.add_argument("--site", default=None, help="site snapshot directory (with manifest.txt)")
    run.add_argument("--requests", type=int, default=1000, help="requests per measured batch")
    run.add_argument("--mode-pair", default="http,https")
    run.add_argument("--keep-alive", action="store_true",
                     help="reuse connections instead of one handshake per request")
    # heml suite
    run.add_argument("--features", type=int, default=30)
    run.add_argument("--samples", type=int, default=100)
    run.add_argument("--scale-bits", type=int, default=heml.DEFAULT_SCALE_BITS)
    run.add_argument("--key-bits", type=int, default=2048)
    run.add_argument("--model-out", default=None, help="export the quantized model as JSON")
    # edb suite
    run.add_argument("--db-sizes", default="50,200,1000")
    run.add_argument("--queries", type=int, default=1000)
    # external suite
    run.add_argument("--command", default=None, help="command line to spawn and measure")

    intensity = sub.add_parser("intensity", help="carbon-intensity table operations")
    intensity.add_argument("action", choices=("list",))
    return parser


def parse_cli(argv) -> RunConfig:
    args = _build_parser().parse_args(argv)
    if args.command == "intensity":
        return RunConfig(suite="intensity", params={"action": args.action})

    if args.suite == "external" and not args.command:
        _build_parser().error("--suite external requires --command")
    if args.mode_pair != "http,https":
        _build_parser().error("only --mode-pair http,https is supported")

    defaults = {"email": 100, "web": 5, "heml": 100, "edb": 1000, "external": 10}
    iterations = args.iterations if args.iterations is not None else defaults[args.suite]
    params = {
        "cipher": args.cipher,
        "corpus": args.corpus,
        "site": args.site,
        "requests": args.requests,
        "keep_alive": args.keep_alive,
        "features": args.features,
        "samples": args.samples,
        "scale_bits": args.scale_bits,
        "key_bits": args.key_bits,
        "model_out": args.model_out,
        "db_sizes": [int(s) for s in args.db_sizes.split(",") if s],
        "queries": args.queries,
        "command": args.command,
        "csv": args.csv,
    }
    return RunConfig(
        suite=args.suite,
        params=params,
        iterations=iterations,
        warmup=args.warmup,
        country=args.country,
        meter_backend=args.meter,
        interval_ms=args.interval_ms,
        ram_gb=args.ram_gb,
        seed=args.seed,
        out=args.out,
        figures=args.figures,
    )


def _corpus_of_size(corpus: EmailCorpus, n: int) -> EmailCorpus:
    messages = [corpus.messages[i % len(corpus.messages)] for i in range(n)]
    return EmailCorpus(messages=tuple(messages), source=f"{corpus.source} (cycled to {n})")


def _run_email(config, meter):
    params = config.params
    corpus = load_corpus(params["corpus"]) if params.get("corpus") else bundled_corpus()
    suite = {"rsa": email_crypto.SuiteName.RSA,
             "ecc": email_crypto.SuiteName.ECC,
             "elgamal": email_crypto.SuiteName.ELGAMAL_DSA}[params["cipher"]]
    keys = email_crypto.keygen(suite)
    private, baseline = email_crypto.crypto_suite_workloads(corpus, keys)
    return [harness.run_pair(private, baseline, iterations=config.iterations,
                             warmup=config.warmup, meter=meter, country=config.country)]


def _run_web(config, meter):
    params = config.params
    snapshot = web.SiteSnapshot.load(params["site"]) if params.get("site") else web.bundled_snapshot()
    private, baseline = web.web_suite_workloads(
        snapshot, requests_per_run=params["requests"], keep_alive=params["keep_alive"]
    )
    return [harness.run_pair(private, baseline, iterations=config.iterations,
                             warmup=config.warmup, meter=meter, country=config.country)]


def _run_heml(config, meter):
    params = config.params
    dataset = heml.gen_synthetic(params["samples"], params["features"], config.seed)
    weights, bias = heml.train_plain_logreg(dataset)
    model = heml.quantize(weights, bias, params["scale_bits"])
    if params.get("model_out"):
        with open(params["model_out"], "w") as fh:
            fh.write(model.to_json() + "\n")
    keys = heml.ahe.ahe_keygen(params["key_bits"])
    private, baseline = heml.heml_suite_workloads(dataset, model, keys,
                                                  weights=weights, bias=bias)
    return [harness.run_pair(private, baseline, iterations=config.iterations,
                             warmup=config.warmup, meter=meter, country=config.country)]


def _run_edb(config, meter):
    params = config.params
    corpus = load_corpus(params["corpus"]) if params.get("corpus") else bundled_corpus()
    master_key = bytes([config.seed % 256] * 32) if config.seed else bytes(range(32))
    results = []
    for size in params["db_sizes"]:
        sized = _corpus_of_size(corpus, size)
        private, baseline = edb.edb_suite_workloads(
            sized, master_key, query_seed=config.seed, query_count=params["queries"]
        )
        results.append(
            harness.run_pair(private, baseline, iterations=config.iterations,
                             warmup=config.warmup, meter=meter, country=config.country)
        )
    return results


def run_suite(config: RunConfig) -> BenchmarkReport:
    trace = PowerTrace.constant(10.0) if config.meter_backend == "simulated" else None
    meter = open_meter(MeterConfig(
        interval_ms=config.interval_ms,
        backend=config.meter_backend,
        ram_installed_gb=config.ram_gb,
        trace=trace,
    ))
    bench = BenchmarkReport.start(config, meter.backend_name)

    if config.suite == "external":
        stats = harness.run_external(
            shlex.split(config.params["command"]),
            iterations=config.iterations, meter=meter, warmup=config.warmup,
        )
        intensity = carbon.lookup_intensity(config.country)
        payload = {
            "command": config.params["command"],
            "country": intensity.country,
            "stats": {
                "n_runs": stats.n_runs,
                "mean_kwh": stats.mean_kwh,
                "std_kwh": stats.std_kwh,
                "min_kwh": stats.min_kwh,
                "max_kwh": stats.max_kwh,
                "mean_runtime_s": stats.mean_runtime_s,
                "emissions_g": carbon.emissions(stats.mean_kwh, intensity),
            },
        }
        if config.out:
            with open(config.out, "w") as fh:
                json.dump(payload, fh, indent=2)
        else:
            print(json.dumps(payload, indent=2))
        return bench.finish()

    runner = {"email": _run_email, "web": _run_web,
              "heml": _run_heml, "edb": _run_edb}[config.suite]
    bench.results = runner(config, meter)
    bench.finish()

    for result in bench.results:
        ratio = "n/a (zero-cost baseline)" if result.overhead_ratio is None \
            else f"{result.overhead_ratio:.2f}x"
        print(f"{result.workload}: private {result.private.mean_kwh:.3e} kWh "
              f"({result.private_emissions_g:.3e} g CO2eq, {result.country}), "
              f"baseline {result.baseline.mean_kwh:.3e} kWh, overhead {ratio}")

    if config.out:
        report_mod.emit_report(bench, "json", config.out)
    if config.params.get("csv"):
        report_mod.emit_report(bench, "csv", config.params["csv"])
    if config.figures:
        report_mod.emit_figures(bench, config.figures)
    return bench


def main(argv=None) -> int:
    try:
        config = parse_cli(argv if argv is not None else sys.argv[1:])
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if config.suite == "intensity":
            table = carbon.IntensityTable.bundled()
            for row in table.rows():
                print(f"{row.country},{row.year},{row.g_per_kwh:g}")
            return 0
        run_suite(config)
        return 0
    except Exception as exc:  # runtime failure -> exit 1 with a message
        print(f"petcarbon: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
