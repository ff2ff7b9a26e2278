"""Encrypted search: keyword queries over an encrypted inverted index.

Builds a searchable-symmetric-encryption index over the bundled corpus.
The server stores only PRF tokens and AES-GCM blobs; a query reveals the
matching document ids but never the keyword itself.
"""

from petcarbon.workloads import edb
from petcarbon.workloads.corpus import bundled_corpus

corpus = bundled_corpus()
master_key = bytes(range(32))

plain = edb.build_plain_index(corpus)
enc = edb.sse_setup(corpus, master_key)
print(f"{len(corpus)} documents, {len(plain.vocabulary())} distinct keywords")

for keyword in plain.vocabulary()[:5]:
    token = edb.sse_trapdoor(keyword, master_key)
    result = edb.sse_search(enc, token)
    assert result == plain.lookup(keyword)
    print(f"  {keyword!r:14s} token {token.token.hex()[:16]}… -> {len(result)} documents")

# tampering with a stored blob is detected, not silently returned
token = edb.sse_trapdoor(plain.vocabulary()[0], master_key)
blob = enc.table[token.token]
tampered = dict(enc.table)
tampered[token.token] = blob[:-1] + bytes([blob[-1] ^ 1])
try:
    edb.sse_search(edb.EncryptedIndex(table=tampered, doc_count=enc.doc_count), token)
except edb.AuthFailure as exc:
    print(f"tampered blob rejected: {exc}")
