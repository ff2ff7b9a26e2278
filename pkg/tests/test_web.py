import tempfile
from pathlib import Path

import pytest

from petcarbon.workloads import web


@pytest.fixture(scope="module")
def snapshot():
    return web.bundled_snapshot()


@pytest.fixture(scope="module")
def http_server(snapshot):
    srv = web.serve_static(snapshot, web.WebServerConfig(mode="http"))
    yield srv
    srv.close()


@pytest.fixture(scope="module")
def https_server(snapshot):
    with tempfile.TemporaryDirectory() as d:
        cert, key = web.make_self_signed_cert(d)
        srv = web.serve_static(snapshot, web.WebServerConfig(mode="https",
                                                             tls_cert=cert, tls_key=key))
        ctx = web.client_tls_context(cert)
        yield srv, ctx
        srv.close()


class TestSnapshot:
    def test_bundled_loads(self, snapshot):
        assert len(snapshot.resources) >= 1
        assert snapshot.total_bytes() > 0

    def test_missing_manifest(self, tmp_path):
        with pytest.raises(web.WebError):
            web.SiteSnapshot.load(tmp_path)

    def test_manifest_entry_missing_file(self, tmp_path):
        (tmp_path / "manifest.txt").write_text("nope.html\n")
        with pytest.raises(web.WebError):
            web.SiteSnapshot.load(tmp_path)


class TestServer:
    def test_get_existing_resource(self, snapshot, http_server):
        rel, size = snapshot.resources[0]
        stats = web.fetch_batch(http_server, ["/" + rel], record_hashes=True)
        assert stats.statuses == [200]
        assert stats.total_bytes == size

    def test_get_missing_path(self, http_server):
        stats = web.fetch_batch(http_server, ["/definitely-not-here.html"])
        assert stats.statuses == [404]

    def test_https_requires_cert(self, snapshot):
        with pytest.raises(web.TlsConfigError):
            web.serve_static(snapshot, web.WebServerConfig(mode="https"))

    def test_https_body_equals_http_body(self, snapshot, http_server, https_server):
        https, ctx = https_server
        urls = snapshot.urls()
        plain = web.fetch_batch(http_server, urls, record_hashes=True)
        secure = web.fetch_batch(https, urls, tls_context=ctx, record_hashes=True)
        assert plain.body_sha256 == secure.body_sha256
        assert plain.total_bytes == secure.total_bytes == snapshot.total_bytes()


class TestFetchBatch:
    def test_empty_urls_rejected(self, http_server):
        with pytest.raises(ValueError):
            web.fetch_batch(http_server, [])

    def test_fresh_connection_per_request(self, snapshot, http_server):
        http_server.reset_connection_count()
        urls = web.round_robin_urls(snapshot, 10)
        stats = web.fetch_batch(http_server, urls)
        assert stats.requests == 10
        assert http_server.connection_count == 10

    def test_keep_alive_single_connection(self, snapshot, http_server):
        http_server.reset_connection_count()
        urls = web.round_robin_urls(snapshot, 10)
        web.fetch_batch(http_server, urls, keep_alive=True)
        assert http_server.connection_count == 1

    def test_round_robin_total_bytes(self, snapshot, http_server):
        reps = 2
        urls = snapshot.urls() * reps
        stats = web.fetch_batch(http_server, urls)
        assert stats.total_bytes == snapshot.total_bytes() * reps
        assert set(stats.statuses) == {200}

    def test_https_without_context_rejected(self, https_server):
        https, _ = https_server
        with pytest.raises(web.TlsConfigError):
            web.fetch_batch(https, ["/page00.html"])

    def test_untrusted_context_handshake_fails(self, https_server, tmp_path):
        https, _ = https_server
        other_cert, _ = web.make_self_signed_cert(tmp_path)
        bad_ctx = web.client_tls_context(other_cert)
        with pytest.raises((web.TlsHandshakeFailure, web.ConnectFailure)):
            web.fetch_batch(https, ["/page00.html"], tls_context=bad_ctx)


class TestWorkloads:
    def test_pair_runs_and_counts(self, snapshot):
        private, baseline = web.web_suite_workloads(snapshot, requests_per_run=5)
        private.setup()
        baseline.setup()
        try:
            private.run_once()
            baseline.run_once()
        finally:
            private.teardown()
            baseline.teardown()

    def test_requests_validated(self, snapshot):
        with pytest.raises(ValueError):
            web.web_suite_workloads(snapshot, requests_per_run=0)
