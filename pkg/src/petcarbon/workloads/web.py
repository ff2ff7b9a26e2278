"""HTTP vs HTTPS suite: serve a static site snapshot over loopback and
fetch request batches in both transports.

The HTTPS server pins TLS 1.3 and uses a self-signed certificate
generated during setup; the client trusts exactly that certificate. By
default every request opens a fresh connection so the TLS handshake sits
inside every measured request; ``keep_alive=True`` gives the amortized
variant.
"""

from __future__ import annotations

import datetime
import hashlib
import http.client
import http.server
import ipaddress
import ssl
import threading
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from importlib import resources

from cryptography import x509
from cryptography.hazmat.primitives import hashes, serialization
from cryptography.hazmat.primitives.asymmetric import ec
from cryptography.x509.oid import NameOID

from ..harness import Overhead, Variant, WorkloadContract

MANIFEST_NAME = "manifest.txt"


class WebError(Exception):
    pass


class BindFailure(WebError):
    pass


class TlsConfigError(WebError):
    pass


class ConnectFailure(WebError):
    pass


class TlsHandshakeFailure(WebError):
    pass


@dataclass(frozen=True)
class SiteSnapshot:
    root: Path
    resources: tuple  # (relative url path, byte size) pairs

    @classmethod
    def load(cls, root) -> "SiteSnapshot":
        """Read manifest.txt (one relative path per line) under ``root``."""
        root = Path(root)
        manifest = root / MANIFEST_NAME
        if not manifest.is_file():
            raise WebError(f"missing {MANIFEST_NAME} in {root}")
        entries = []
        for line in manifest.read_text().splitlines():
            rel = line.strip()
            if not rel:
                continue
            f = root / rel
            if not f.is_file():
                raise WebError(f"manifest entry not readable: {rel}")
            entries.append((rel, f.stat().st_size))
        if not entries:
            raise WebError(f"empty manifest in {root}")
        return cls(root=root, resources=tuple(entries))

    def urls(self):
        return ["/" + rel for rel, _ in self.resources]

    def total_bytes(self):
        return sum(size for _, size in self.resources)


def bundled_snapshot() -> SiteSnapshot:
    ref = resources.files("petcarbon").joinpath("data/site")
    with resources.as_file(ref) as path:
        return SiteSnapshot.load(path)


@dataclass(frozen=True)
class WebServerConfig:
    mode: str  # "http" | "https"
    port: int = 0  # 0 = pick a free port
    tls_cert: Path | None = None
    tls_key: Path | None = None

    def __post_init__(self):
        if self.mode not in ("http", "https"):
            raise ValueError(f"unknown mode {self.mode!r}")


def make_self_signed_cert(directory, hostname="localhost"):
    """ECDSA P-256 self-signed cert for loopback; returns (cert, key) paths."""
    key = ec.generate_private_key(ec.SECP256R1())
    name = x509.Name([x509.NameAttribute(NameOID.COMMON_NAME, hostname)])
    now = datetime.datetime.now(datetime.timezone.utc)
    cert = (
        x509.CertificateBuilder()
        .subject_name(name)
        .issuer_name(name)
        .public_key(key.public_key())
        .serial_number(x509.random_serial_number())
        .not_valid_before(now - datetime.timedelta(minutes=5))
        .not_valid_after(now + datetime.timedelta(days=7))
        .add_extension(
            x509.SubjectAlternativeName(
                [x509.DNSName(hostname), x509.IPAddress(ipaddress.ip_address("127.0.0.1"))]
            ),
            critical=False,
        )
        .sign(key, hashes.SHA256())
    )
    directory = Path(directory)
    cert_path = directory / "server.crt"
    key_path = directory / "server.key"
    cert_path.write_bytes(cert.public_bytes(serialization.Encoding.PEM))
    key_path.write_bytes(
        key.private_bytes(
            serialization.Encoding.PEM,
            serialization.PrivateFormat.PKCS8,
            serialization.NoEncryption(),
        )
    )
    return cert_path, key_path


class _QuietHandler(http.server.SimpleHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    # Nagle + delayed ACK stalls small TLS records by ~40 ms per response
    disable_nagle_algorithm = True

    def log_message(self, fmt, *args):
        pass


class _CountingHTTPServer(http.server.ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.connection_count = 0
        self._count_lock = threading.Lock()

    def get_request(self):
        request = super().get_request()
        with self._count_lock:
            self.connection_count += 1
        return request


class ServerHandle:
    def __init__(self, server, thread, config, snapshot):
        self._server = server
        self._thread = thread
        self.config = config
        self.snapshot = snapshot
        self.host = "localhost"
        self.port = server.server_address[1]

    @property
    def connection_count(self):
        return self._server.connection_count

    def reset_connection_count(self):
        self._server.connection_count = 0

    def close(self):
        self._server.shutdown()
        self._thread.join()
        self._server.server_close()


def serve_static(snapshot: SiteSnapshot, config: WebServerConfig) -> ServerHandle:
    """Start serving the snapshot; returns once the socket is bound."""
    handler = partial(_QuietHandler, directory=str(snapshot.root))
    try:
        server = _CountingHTTPServer(("127.0.0.1", config.port), handler)
    except OSError as exc:
        raise BindFailure(f"cannot bind port {config.port}: {exc}") from exc

    if config.mode == "https":
        if config.tls_cert is None or config.tls_key is None:
            raise TlsConfigError("https mode requires tls_cert and tls_key")
        try:
            ctx = ssl.SSLContext(ssl.PROTOCOL_TLS_SERVER)
            ctx.minimum_version = ssl.TLSVersion.TLSv1_3
            ctx.maximum_version = ssl.TLSVersion.TLSv1_3
            ctx.load_cert_chain(certfile=str(config.tls_cert), keyfile=str(config.tls_key))
        except (ssl.SSLError, OSError) as exc:
            server.server_close()
            raise TlsConfigError(f"TLS setup failed: {exc}") from exc
        server.socket = ctx.wrap_socket(server.socket, server_side=True)

    thread = threading.Thread(target=server.serve_forever, name="petcarbon-web", daemon=True)
    thread.start()
    return ServerHandle(server, thread, config, snapshot)


def client_tls_context(cert_path) -> ssl.SSLContext:
    """Client context pinned to the server's self-signed certificate."""
    ctx = ssl.create_default_context(cafile=str(cert_path))
    ctx.minimum_version = ssl.TLSVersion.TLSv1_3
    return ctx


@dataclass
class FetchStats:
    requests: int = 0
    total_bytes: int = 0
    statuses: list = field(default_factory=list)
    body_sha256: list = field(default_factory=list)


def fetch_batch(server: ServerHandle, urls, *, tls_context=None,
                keep_alive: bool = False, record_hashes: bool = False) -> FetchStats:
    """Sequential GETs; a fresh connection (and TLS handshake) per request
    unless keep_alive is set."""
    if not urls:
        raise ValueError("need at least one url")
    https = server.config.mode == "https"
    if https and tls_context is None:
        raise TlsConfigError("https fetch needs a pinned client TLS context")

    def connect():
        try:
            if https:
                conn = http.client.HTTPSConnection(server.host, server.port, context=tls_context)
            else:
                conn = http.client.HTTPConnection(server.host, server.port)
            conn.connect()
            return conn
        except ssl.SSLError as exc:
            raise TlsHandshakeFailure(str(exc)) from exc
        except OSError as exc:
            raise ConnectFailure(str(exc)) from exc

    stats = FetchStats()
    conn = connect() if keep_alive else None
    try:
        for url in urls:
            if conn is None:
                c = connect()
            else:
                c = conn
            try:
                c.request("GET", url)
                resp = c.getresponse()
                body = resp.read()
            except ssl.SSLError as exc:
                raise TlsHandshakeFailure(str(exc)) from exc
            stats.requests += 1
            stats.total_bytes += len(body)
            stats.statuses.append(resp.status)
            if record_hashes:
                stats.body_sha256.append(hashlib.sha256(body).hexdigest())
            if conn is None:
                c.close()
    finally:
        if conn is not None:
            conn.close()
    return stats


def round_robin_urls(snapshot: SiteSnapshot, count: int):
    urls = snapshot.urls()
    return [urls[i % len(urls)] for i in range(count)]


def web_suite_workloads(snapshot: SiteSnapshot, *, requests_per_run: int = 1000,
                        keep_alive: bool = False, cert_dir=None):
    """PRIVATE: an HTTPS batch. PLAINTEXT: the identical HTTP batch.

    Client and server run in one process, so both ends of every request
    land inside the same measurement window.
    """
    if requests_per_run < 1:
        raise ValueError("requests_per_run must be >= 1")
    state: dict = {}

    def setup_http():
        state["http_server"] = serve_static(snapshot, WebServerConfig(mode="http"))
        state["urls"] = round_robin_urls(snapshot, requests_per_run)

    def teardown_http():
        state.pop("http_server").close()

    def setup_https():
        import tempfile

        state["cert_tmp"] = tempfile.TemporaryDirectory()
        cert, key = make_self_signed_cert(cert_dir or state["cert_tmp"].name)
        state["https_server"] = serve_static(
            snapshot, WebServerConfig(mode="https", tls_cert=cert, tls_key=key)
        )
        state["tls_ctx"] = client_tls_context(cert)
        state["urls"] = round_robin_urls(snapshot, requests_per_run)

    def teardown_https():
        state.pop("https_server").close()
        state.pop("cert_tmp").cleanup()

    def private_run():
        fetch_batch(state["https_server"], state["urls"],
                    tls_context=state["tls_ctx"], keep_alive=keep_alive)

    def plaintext_run():
        fetch_batch(state["http_server"], state["urls"], keep_alive=keep_alive)

    wl_id = f"web-{requests_per_run}req"
    private = WorkloadContract(
        id=wl_id, variant=Variant.PRIVATE, run_once=private_run,
        setup=setup_https, teardown=teardown_https,
        taxonomy={Overhead.COMPUTATIONAL},
    )
    baseline = WorkloadContract(
        id=wl_id, variant=Variant.PLAINTEXT, run_once=plaintext_run,
        setup=setup_http, teardown=teardown_http,
    )
    return private, baseline
