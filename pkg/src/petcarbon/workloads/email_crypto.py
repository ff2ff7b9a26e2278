"""Email encryption/signing suite: hybrid encryption plus signatures under
three cipher suites at the 128-bit security level.

Every suite uses the same hybrid construction: a fresh 256-bit session key
encrypts the message body with AES-GCM, and the asymmetric primitive only
wraps the session key. RSA wraps with OAEP, ECC with an ephemeral-key
integrated-encryption construction (ECDH + HKDF + AES-GCM), and ElGamal
encrypts the session key directly in a 3072-bit multiplicative group.
ElGamal provides no signatures, so that suite signs with DSA (3072, 256).

Key generation accepts a seed for reproducible tests only; measured runs
use fresh system randomness.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpz, powmod
from cryptography.exceptions import InvalidSignature
from cryptography.hazmat.primitives import hashes, serialization
from cryptography.hazmat.primitives.asymmetric import dsa, ec, padding, rsa
from cryptography.hazmat.primitives.ciphers.aead import AESGCM
from cryptography.hazmat.primitives.kdf.hkdf import HKDF

from ..harness import Overhead, Variant, WorkloadContract
from .corpus import EmailCorpus

SESSION_KEY_BYTES = 32
GCM_NONCE_BYTES = 12
GCM_TAG_BYTES = 16

# RFC 3526 MODP group 15 (3072-bit safe prime), generator 2. Used for the
# ElGamal suite; 3072-bit group ~ 128-bit security.
MODP_3072_P = int(
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74"
    "020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F1437"
    "4FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF05"
    "98DA48361C55D39A69163FA8FD24CF5F83655D23DCA3AD961C62F356208552BB"
    "9ED529077096966D670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF695581718"
    "3995497CEA956AE515D2261898FA051015728E5A8AAAC42DAD33170D04507A33"
    "A85521ABDF1CBA64ECFB850458DBEF0A8AEA71575D060C7DB3970F85A6E1E4C7"
    "ABF5AE8CDB0933D71E8C94E04A25619DCEE3D2261AD2EE6BF12FFA06D98A0864"
    "D87602733EC86A64521F2B18177B200CBBE117577A615D6C770988C0BAD946E2"
    "08E24FA074E5AB3143DB5BFCE0FD108E4B82D120A93AD2CAFFFFFFFFFFFFFFFF",
    16,
)
MODP_3072_G = 2
# GnuPG-style short exponents: secret and ephemeral ElGamal exponents of
# 400 bits are ample margin over the 128-bit level for a 3072-bit group.
ELGAMAL_EXP_BITS = 400

# Fixed DSA (3072, 256) domain parameters so seeded key generation is
# fully deterministic. Generated once with the standard FIPS procedure.
DSA_P = int(
    "b1bf2283adb94ed3c7ca2fbce2c6ec338331cc57c6b5175265f3de8c7dc3c659"
    "daa34464881e87ddbdf9d10b694a997f91882d8c7809b499beb437468c171e84"
    "dd841fe6db8134eda4cd134590e4cf31f6aa92acc1c63105786121275fa682b0"
    "7b75c054e99be8a0b2494a215ff2db17598aa3fa9eb5d40a1991b49b1ef4e494"
    "5914ecae346fdb26f9e9c921d4a21dab2f4894504323148d87a6460aa10c65cf"
    "962b8bcf5ca9a25cef5c4e82e497a07acaaf2b7b0cc97054585b7a56b6b35832"
    "ff0a36a7e78002b5d2ee492062ef3d533a4ae1eef3ca1eb00032e6cd1c558a87"
    "dc932b51b723c70679d896070391f4cfdc887b827c4c680ac7803f7ebeb6ed24"
    "96e84c9e9be7fd8671e45b70de85618ed6ece6c92a4758c916622a5ed56bb102"
    "6f168d02d7124b91c819fa9d25483a935ba98bb1b3848df82f39f09f6ede72f0"
    "1046cbca65d4fe6206fc573571d0d8092bb616a5cfe6a5df9d8fa651d729434d"
    "adfabe07794b1848e7b47f62aeffd99e8a7f5150ccb6eb6d931e16b6b2caae91",
    16,
)
DSA_Q = int("fce7abf7b916fc843231ab891bb37035c60ace26ec85acbc02c9332557064aad", 16)
DSA_G = int(
    "43a95b7765d6472f7bdc7f1c7d60e7796738de07d467548253894083346ac0f8"
    "a4e978a77fd5d1a36206915f61365c2b6098c55f74d3881bd4968d4c8a299bba"
    "d567ef07bfe59d332fc9c84c49b981d935ea3e96d5ed704e12bc04d00631b386"
    "c5827d35f99e9bdeea737a151e7682f5e5ae6a02922742d7f2845bfe27354fc2"
    "61f388d2e1e0d42903c3a756b5064f6f2f4d52e1ca982a0d5dd901fcb4810347"
    "46040071568e09dad8e8ffbc20bf00cb6427b93405b91fa659866d25aec9a125"
    "afd6f4300c90572de4e7914b02a72faaed82a14734f5bc86d123bb1218a39e29"
    "31ffed61f6c60254e35d34458212b365cd2eefb5cef450cdf047830db3f284ed"
    "35079cb1c897e4e34f4cd65c16672ea60f70588d77cdb62ac8cf334e12436b3d"
    "c5c223abfb70ab4eea8b927f7fb369dccb056d322cde83ff565b421d7addabfe"
    "8763e499b3bdc8b75368dbd9866f9516787796f0ad70f342d7977a7a3cf4fa70"
    "36a87dd7d2ffd1f72d05c7f0b2726b1c4001fdb4144b1d78309757ce247d0c6e",
    16,
)

P256_ORDER = int(
    "ffffffff00000000ffffffffffffffffbce6faada7179e84f3b9cac2fc632551", 16
)


class CryptoError(Exception):
    pass


class InvalidMessage(CryptoError):
    """Empty messages are not valid corpus content."""


class KeyMismatch(CryptoError):
    """Ciphertext/signature and key belong to different suites."""


class SuiteName(enum.Enum):
    RSA = "rsa"
    ECC = "ecc"
    ELGAMAL_DSA = "elgamal"


@dataclass(frozen=True)
class CipherSuite:
    name: SuiteName
    enc_params: str
    sig_params: str


SUITES = {
    SuiteName.RSA: CipherSuite(SuiteName.RSA, "RSA-3072 OAEP-SHA256", "RSA-3072 PSS-SHA256"),
    SuiteName.ECC: CipherSuite(SuiteName.ECC, "ECIES secp256r1 AES-256-GCM", "ECDSA secp256r1 SHA256"),
    SuiteName.ELGAMAL_DSA: CipherSuite(
        SuiteName.ELGAMAL_DSA, "ElGamal MODP-3072", "DSA-3072/256 SHA256"
    ),
}


@dataclass(frozen=True)
class ElGamalPublicKey:
    p: int
    g: int
    y: int


@dataclass(frozen=True)
class ElGamalPrivateKey:
    public: ElGamalPublicKey
    x: int


@dataclass
class KeyPairSet:
    suite: SuiteName
    enc_private: object
    enc_public: object
    sig_private: object
    sig_public: object


@dataclass(frozen=True)
class HybridCiphertext:
    suite: SuiteName
    wrapped_key: bytes
    nonce: bytes
    body: bytes  # AES-GCM ciphertext + tag

    def serialized_size(self) -> int:
        return len(self.wrapped_key) + len(self.nonce) + len(self.body)


@dataclass(frozen=True)
class Signature:
    suite: SuiteName
    data: bytes


def _rand(seed):
    return random.Random(seed) if seed is not None else random.SystemRandom()


def _rsa_keypair_from_rnd(rnd, bits=3072):
    e = 65537
    half = bits // 2
    while True:
        p = int(gmpy2.next_prime(rnd.getrandbits(half) | (1 << (half - 1)) | 1))
        q = int(gmpy2.next_prime(rnd.getrandbits(half) | (1 << (half - 1)) | 1))
        if p == q:
            continue
        n = p * q
        if n.bit_length() != bits:
            continue
        phi = (p - 1) * (q - 1)
        if gmpy2.gcd(e, phi) != 1:
            continue
        break
    if p < q:
        p, q = q, p
    d = int(gmpy2.invert(e, phi))
    numbers = rsa.RSAPrivateNumbers(
        p=p,
        q=q,
        d=d,
        dmp1=d % (p - 1),
        dmq1=d % (q - 1),
        iqmp=int(gmpy2.invert(q, p)),
        public_numbers=rsa.RSAPublicNumbers(e=e, n=n),
    )
    return numbers.private_key()


def _ec_key_from_rnd(rnd):
    scalar = rnd.randrange(1, P256_ORDER)
    return ec.derive_private_key(scalar, ec.SECP256R1())


def _dsa_key_from_rnd(rnd):
    x = rnd.randrange(1, DSA_Q)
    y = int(powmod(DSA_G, x, DSA_P))
    params = dsa.DSAParameterNumbers(p=DSA_P, q=DSA_Q, g=DSA_G)
    pub = dsa.DSAPublicNumbers(y=y, parameter_numbers=params)
    return dsa.DSAPrivateNumbers(x=x, public_numbers=pub).private_key()


def _elgamal_key_from_rnd(rnd):
    x = rnd.getrandbits(ELGAMAL_EXP_BITS) | (1 << (ELGAMAL_EXP_BITS - 1))
    pub = ElGamalPublicKey(p=MODP_3072_P, g=MODP_3072_G, y=int(powmod(MODP_3072_G, x, MODP_3072_P)))
    return ElGamalPrivateKey(public=pub, x=x)


def keygen(suite: SuiteName, seed=None) -> KeyPairSet:
    """Encryption pair plus signing pair at the mandated 128-bit sizes."""
    rnd = _rand(seed)
    if suite is SuiteName.RSA:
        enc = _rsa_keypair_from_rnd(rnd)
        sig = _rsa_keypair_from_rnd(rnd)
        return KeyPairSet(suite, enc, enc.public_key(), sig, sig.public_key())
    if suite is SuiteName.ECC:
        enc = _ec_key_from_rnd(rnd)
        sig = _ec_key_from_rnd(rnd)
        return KeyPairSet(suite, enc, enc.public_key(), sig, sig.public_key())
    if suite is SuiteName.ELGAMAL_DSA:
        enc = _elgamal_key_from_rnd(rnd)
        sig = _dsa_key_from_rnd(rnd)
        return KeyPairSet(suite, enc, enc.public, sig, sig.public_key())
    raise ValueError(f"unknown suite {suite!r}")


def _wrap_rsa(pub, session_key):
    return pub.encrypt(
        session_key,
        padding.OAEP(mgf=padding.MGF1(hashes.SHA256()), algorithm=hashes.SHA256(), label=None),
    )


def _unwrap_rsa(priv, wrapped):
    return priv.decrypt(
        wrapped,
        padding.OAEP(mgf=padding.MGF1(hashes.SHA256()), algorithm=hashes.SHA256(), label=None),
    )


_ECIES_INFO = b"petcarbon ecies v1"


def _ecies_kdf(shared):
    return HKDF(algorithm=hashes.SHA256(), length=32, salt=None, info=_ECIES_INFO).derive(shared)


def _wrap_ecies(pub, session_key, rng):
    ephemeral = ec.generate_private_key(ec.SECP256R1())
    shared = ephemeral.exchange(ec.ECDH(), pub)
    wrap_key = _ecies_kdf(shared)
    nonce = rng_bytes(rng, GCM_NONCE_BYTES)
    ct = AESGCM(wrap_key).encrypt(nonce, session_key, None)
    eph_bytes = ephemeral.public_key().public_bytes(
        encoding=serialization.Encoding.X962,
        format=serialization.PublicFormat.UncompressedPoint,
    )
    return eph_bytes + nonce + ct


def _unwrap_ecies(priv, wrapped):
    eph_bytes, nonce, ct = wrapped[:65], wrapped[65:77], wrapped[77:]
    eph_pub = ec.EllipticCurvePublicKey.from_encoded_point(ec.SECP256R1(), eph_bytes)
    shared = priv.exchange(ec.ECDH(), eph_pub)
    wrap_key = _ecies_kdf(shared)
    return AESGCM(wrap_key).decrypt(nonce, ct, None)


_ELGAMAL_INT_BYTES = 384  # 3072 bits


def _wrap_elgamal(pub: ElGamalPublicKey, session_key, rng):
    m = int.from_bytes(session_key, "big")
    k = rng.getrandbits(ELGAMAL_EXP_BITS) | (1 << (ELGAMAL_EXP_BITS - 1))
    c1 = int(powmod(pub.g, k, pub.p))
    c2 = int(mpz(m) * powmod(pub.y, k, pub.p) % pub.p)
    return c1.to_bytes(_ELGAMAL_INT_BYTES, "big") + c2.to_bytes(_ELGAMAL_INT_BYTES, "big")


def _unwrap_elgamal(priv: ElGamalPrivateKey, wrapped):
    c1 = int.from_bytes(wrapped[:_ELGAMAL_INT_BYTES], "big")
    c2 = int.from_bytes(wrapped[_ELGAMAL_INT_BYTES:], "big")
    p = priv.public.p
    s = powmod(c1, priv.x, p)
    m = int(mpz(c2) * gmpy2.invert(s, p) % p)
    return m.to_bytes(SESSION_KEY_BYTES, "big")


def rng_bytes(rng, n):
    return bytes(rng.getrandbits(8) for _ in range(n))


def encrypt_email(message: bytes, keys: KeyPairSet, rng=None) -> HybridCiphertext:
    """Hybrid encryption: fresh session key, AES-GCM body, asymmetric wrap."""
    if not message:
        raise InvalidMessage("cannot encrypt an empty message")
    if rng is None:
        rng = random.SystemRandom()
    session_key = rng_bytes(rng, SESSION_KEY_BYTES)
    nonce = rng_bytes(rng, GCM_NONCE_BYTES)
    body = AESGCM(session_key).encrypt(nonce, message, None)
    if keys.suite is SuiteName.RSA:
        wrapped = _wrap_rsa(keys.enc_public, session_key)
    elif keys.suite is SuiteName.ECC:
        wrapped = _wrap_ecies(keys.enc_public, session_key, rng)
    elif keys.suite is SuiteName.ELGAMAL_DSA:
        wrapped = _wrap_elgamal(keys.enc_public, session_key, rng)
    else:
        raise ValueError(f"unknown suite {keys.suite!r}")
    return HybridCiphertext(suite=keys.suite, wrapped_key=wrapped, nonce=nonce, body=body)


def decrypt_email(ciphertext: HybridCiphertext, keys: KeyPairSet) -> bytes:
    if ciphertext.suite is not keys.suite:
        raise KeyMismatch(
            f"ciphertext is {ciphertext.suite.value}, key is {keys.suite.value}"
        )
    if keys.suite is SuiteName.RSA:
        session_key = _unwrap_rsa(keys.enc_private, ciphertext.wrapped_key)
    elif keys.suite is SuiteName.ECC:
        session_key = _unwrap_ecies(keys.enc_private, ciphertext.wrapped_key)
    else:
        session_key = _unwrap_elgamal(keys.enc_private, ciphertext.wrapped_key)
    return AESGCM(session_key).decrypt(ciphertext.nonce, ciphertext.body, None)


def sign_email(message: bytes, keys: KeyPairSet) -> Signature:
    if not message:
        raise InvalidMessage("cannot sign an empty message")
    if keys.suite is SuiteName.RSA:
        data = keys.sig_private.sign(
            message,
            padding.PSS(mgf=padding.MGF1(hashes.SHA256()), salt_length=padding.PSS.DIGEST_LENGTH),
            hashes.SHA256(),
        )
    elif keys.suite is SuiteName.ECC:
        data = keys.sig_private.sign(message, ec.ECDSA(hashes.SHA256()))
    elif keys.suite is SuiteName.ELGAMAL_DSA:
        data = keys.sig_private.sign(message, hashes.SHA256())
    else:
        raise ValueError(f"unknown suite {keys.suite!r}")
    return Signature(suite=keys.suite, data=data)


def verify_email(message: bytes, signature: Signature, keys: KeyPairSet) -> bool:
    if signature.suite is not keys.suite:
        raise KeyMismatch(
            f"signature is {signature.suite.value}, key is {keys.suite.value}"
        )
    try:
        if keys.suite is SuiteName.RSA:
            keys.sig_public.verify(
                signature.data,
                message,
                padding.PSS(mgf=padding.MGF1(hashes.SHA256()), salt_length=padding.PSS.DIGEST_LENGTH),
                hashes.SHA256(),
            )
        elif keys.suite is SuiteName.ECC:
            keys.sig_public.verify(signature.data, message, ec.ECDSA(hashes.SHA256()))
        else:
            keys.sig_public.verify(signature.data, message, hashes.SHA256())
        return True
    except InvalidSignature:
        return False


def crypto_suite_workloads(corpus: EmailCorpus, keys: KeyPairSet):
    """PRIVATE: encrypt+sign one message round-robin. PLAINTEXT: byte copy.

    The non-private equivalent of email encryption is no encryption, so
    the baseline is a near-zero-cost copy and the harness falls back to
    absolute-cost reporting when the ratio is undefined.
    """
    state = {"private_pos": 0, "plain_pos": 0}
    messages = corpus.messages

    def private_run():
        i = state["private_pos"]
        state["private_pos"] = (i + 1) % len(messages)
        message = messages[i]
        encrypt_email(message, keys)
        sign_email(message, keys)

    def plaintext_run():
        i = state["plain_pos"]
        state["plain_pos"] = (i + 1) % len(messages)
        bytes(messages[i])

    wl_id = f"email-{keys.suite.value}"
    private = WorkloadContract(
        id=wl_id, variant=Variant.PRIVATE, run_once=private_run,
        taxonomy={Overhead.COMPUTATIONAL},
    )
    baseline = WorkloadContract(id=wl_id, variant=Variant.PLAINTEXT, run_once=plaintext_run)
    return private, baseline
