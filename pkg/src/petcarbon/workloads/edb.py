"""Encrypted keyword-search suite: minimal searchable symmetric encryption
versus a plaintext inverted index.

The encrypted index maps PRF-derived search tokens to authenticated
encryptions of the posting lists. A query is: derive the trapdoor from
the keyword, look up the token, decrypt the blob. The plaintext baseline
is a direct dictionary lookup on the same corpus.

This is a static, response-revealing single-keyword scheme, so measured
overheads are a lower bound for fuller leakage-suppressing designs.
"""

from __future__ import annotations

import hashlib
import hmac
import json
import random
import re
from dataclasses import dataclass

from cryptography.exceptions import InvalidTag
from cryptography.hazmat.primitives.ciphers.aead import AESGCM

from ..harness import Overhead, Variant, WorkloadContract
from .corpus import EmailCorpus, EmptyCorpus

TOKEN_BYTES = 32
MASTER_KEY_BYTES = 32
_WORD_RE = re.compile(r"[^0-9a-z]+")


class EdbError(Exception):
    pass


class AuthFailure(EdbError):
    """A posting blob failed authentication: index tampered with."""


@dataclass(frozen=True)
class PlainIndex:
    postings: dict  # keyword -> tuple of sorted doc ids
    doc_count: int

    def lookup(self, keyword: str):
        return set(self.postings.get(keyword.lower(), ()))

    def vocabulary(self):
        return sorted(self.postings)


@dataclass(frozen=True)
class SearchToken:
    token: bytes       # table lookup key, PRF(k1, keyword)
    payload_key: bytes  # per-keyword decryption key, PRF(k2, keyword)


@dataclass(frozen=True)
class EncryptedIndex:
    table: dict  # token bytes -> AEAD blob
    doc_count: int


def tokenize(text: str):
    """Lowercase, split on non-alphanumerics, drop tokens shorter than 3."""
    return [t for t in _WORD_RE.split(text.lower()) if len(t) >= 3]


def build_plain_index(corpus: EmailCorpus) -> PlainIndex:
    if not corpus.messages:
        raise EmptyCorpus("cannot index an empty corpus")
    postings: dict[str, set] = {}
    for doc_id, message in enumerate(corpus.messages):
        text = message.decode("utf-8", errors="replace")
        for word in set(tokenize(text)):
            postings.setdefault(word, set()).add(doc_id)
    frozen = {w: tuple(sorted(ids)) for w, ids in postings.items()}
    return PlainIndex(postings=frozen, doc_count=len(corpus.messages))


def _prf(key: bytes, data: bytes) -> bytes:
    return hmac.new(key, data, hashlib.sha256).digest()


def _subkeys(master_key: bytes):
    if len(master_key) != MASTER_KEY_BYTES:
        raise ValueError("master key must be 32 bytes")
    return _prf(master_key, b"token-derivation"), _prf(master_key, b"payload-encryption")


def sse_trapdoor(keyword: str, master_key: bytes) -> SearchToken:
    k1, k2 = _subkeys(master_key)
    word = keyword.lower().encode()
    return SearchToken(token=_prf(k1, word), payload_key=_prf(k2, word))


def sse_setup(corpus: EmailCorpus, master_key: bytes) -> EncryptedIndex:
    """Encrypt each posting list under its keyword-derived key.

    The AEAD nonce is derived deterministically from (k_w, keyword), so
    the same key and corpus always produce byte-identical blobs.
    """
    plain = build_plain_index(corpus)
    table = {}
    for keyword, ids in plain.postings.items():
        tok = sse_trapdoor(keyword, master_key)
        nonce = _prf(tok.payload_key, b"nonce:" + keyword.encode())[:12]
        payload = json.dumps(list(ids)).encode()
        blob = AESGCM(tok.payload_key).encrypt(nonce, payload, None)
        table[tok.token] = nonce + blob
    return EncryptedIndex(table=table, doc_count=plain.doc_count)


def sse_search(index: EncryptedIndex, token: SearchToken):
    blob = index.table.get(token.token)
    if blob is None:
        return set()
    nonce, ct = blob[:12], blob[12:]
    try:
        payload = AESGCM(token.payload_key).decrypt(nonce, ct, None)
    except InvalidTag as exc:
        raise AuthFailure("posting blob failed authentication") from exc
    return set(json.loads(payload))


def edb_suite_workloads(corpus: EmailCorpus, master_key: bytes, *,
                        query_seed: int = 0, query_count: int = 1000):
    """Contract pair issuing the same seeded keyword sequence on both sides.

    Index construction happens in setup(), outside the measured windows.
    """
    state: dict = {"pos": {"private": 0, "plaintext": 0}}

    def setup_shared():
        if "plain" in state:
            return
        state["plain"] = build_plain_index(corpus)
        state["enc"] = sse_setup(corpus, master_key)
        vocab = state["plain"].vocabulary()
        rnd = random.Random(query_seed)
        state["queries"] = [vocab[rnd.randrange(len(vocab))] for _ in range(query_count)]

    def next_keyword(side):
        i = state["pos"][side]
        state["pos"][side] = (i + 1) % len(state["queries"])
        return state["queries"][i]

    def private_run():
        keyword = next_keyword("private")
        token = sse_trapdoor(keyword, master_key)
        sse_search(state["enc"], token)

    def plaintext_run():
        keyword = next_keyword("plaintext")
        state["plain"].lookup(keyword)

    wl_id = f"edb-{len(corpus)}docs"
    private = WorkloadContract(
        id=wl_id, variant=Variant.PRIVATE, run_once=private_run,
        setup=setup_shared, taxonomy={Overhead.COMPUTATIONAL},
    )
    baseline = WorkloadContract(
        id=wl_id, variant=Variant.PLAINTEXT, run_once=plaintext_run,
        setup=setup_shared,
    )
    return private, baseline


DB_SIZE_SWEEP = (50, 200, 1000)
