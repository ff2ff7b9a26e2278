import random

import pytest

from petcarbon.workloads import edb
from petcarbon.workloads.corpus import EmailCorpus, bundled_corpus


MASTER_KEY = bytes(range(32))


@pytest.fixture(scope="module")
def corpus():
    return bundled_corpus()


@pytest.fixture(scope="module")
def plain_index(corpus):
    return edb.build_plain_index(corpus)


@pytest.fixture(scope="module")
def enc_index(corpus):
    return edb.sse_setup(corpus, MASTER_KEY)


class TestTokenize:
    def test_basic(self):
        assert edb.tokenize("Alpha, beta! x yz gamma42") == ["alpha", "beta", "gamma42"]

    def test_short_tokens_dropped(self):
        assert edb.tokenize("a bb ccc") == ["ccc"]


class TestPlainIndex:
    def test_single_doc(self):
        c = EmailCorpus(messages=(b"alpha beta",), source="test")
        idx = edb.build_plain_index(c)
        assert idx.postings == {"alpha": (0,), "beta": (0,)}
        assert idx.lookup("alpha") == {0}

    def test_absent_keyword_empty(self, plain_index):
        assert plain_index.lookup("zzzznotaword") == set()

    def test_matches_linear_scan_oracle(self, corpus, plain_index):
        texts = [m.decode("utf-8", errors="replace") for m in corpus.messages]
        for keyword in plain_index.vocabulary()[:50]:
            scan = {i for i, t in enumerate(texts) if keyword in edb.tokenize(t)}
            assert plain_index.lookup(keyword) == scan


class TestSseSetup:
    def test_token_length(self, enc_index):
        assert all(len(tok) == 32 for tok in enc_index.table)

    def test_distinct_keywords_distinct_tokens(self, plain_index):
        tokens = {edb.sse_trapdoor(k, MASTER_KEY).token for k in plain_index.vocabulary()}
        assert len(tokens) == len(plain_index.vocabulary())

    def test_blobs_decrypt_to_plain_postings(self, plain_index, enc_index):
        for keyword in plain_index.vocabulary():
            tok = edb.sse_trapdoor(keyword, MASTER_KEY)
            assert edb.sse_search(enc_index, tok) == plain_index.lookup(keyword)

    def test_deterministic_table(self, corpus):
        a = edb.sse_setup(corpus, MASTER_KEY)
        b = edb.sse_setup(corpus, MASTER_KEY)
        assert a.table == b.table

    def test_bad_master_key_length(self, corpus):
        with pytest.raises(ValueError):
            edb.sse_setup(corpus, b"short")


class TestSearch:
    def test_single_doc_example(self):
        c = EmailCorpus(messages=(b"alpha beta",), source="test")
        idx = edb.sse_setup(c, MASTER_KEY)
        assert edb.sse_search(idx, edb.sse_trapdoor("alpha", MASTER_KEY)) == {0}

    def test_absent_keyword(self, enc_index):
        assert edb.sse_search(enc_index, edb.sse_trapdoor("zzzznotaword", MASTER_KEY)) == set()

    def test_random_keywords_match_plain_oracle(self, plain_index, enc_index):
        rnd = random.Random(5)
        vocab = plain_index.vocabulary()
        for _ in range(200):
            keyword = vocab[rnd.randrange(len(vocab))]
            got = edb.sse_search(enc_index, edb.sse_trapdoor(keyword, MASTER_KEY))
            assert got == plain_index.lookup(keyword)

    def test_tamper_raises_auth_failure(self, corpus):
        idx = edb.sse_setup(corpus, MASTER_KEY)
        keyword = edb.build_plain_index(corpus).vocabulary()[0]
        tok = edb.sse_trapdoor(keyword, MASTER_KEY)
        blob = idx.table[tok.token]
        # flip one payload byte
        tampered = dict(idx.table)
        tampered[tok.token] = blob[:-1] + bytes([blob[-1] ^ 1])
        bad = edb.EncryptedIndex(table=tampered, doc_count=idx.doc_count)
        with pytest.raises(edb.AuthFailure):
            edb.sse_search(bad, tok)


class TestWorkloads:
    def test_same_query_sequence_same_results(self, corpus):
        private, baseline = edb.edb_suite_workloads(corpus, MASTER_KEY,
                                                    query_seed=1, query_count=50)
        private.setup()
        results = []
        # drive both run paths through their shared query list and compare
        plain = edb.build_plain_index(corpus)
        enc = edb.sse_setup(corpus, MASTER_KEY)
        rnd = random.Random(1)
        vocab = plain.vocabulary()
        queries = [vocab[rnd.randrange(len(vocab))] for _ in range(50)]
        for q in queries:
            assert edb.sse_search(enc, edb.sse_trapdoor(q, MASTER_KEY)) == plain.lookup(q)
        private.run_once()
        baseline.run_once()
