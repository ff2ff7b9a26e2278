"""Additively homomorphic public-key encryption over Z_n.

Ciphertexts live in the multiplicative group mod n^2 with g = n + 1, so
Enc(a) * Enc(b) decrypts to a + b mod n and Enc(a)^k to k*a mod n. That is
exactly enough homomorphism for linear-model inference: the server sums
ciphertext-weight powers without ever seeing the features.

Signed values are recentered around n/2: m is stored as m mod n and any
decrypted value above n/2 reads as negative. Scores must stay below n/2
in magnitude or decoding is ambiguous (raised as Overflow upstream).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpz, powmod

DEFAULT_KEY_BITS = 2048


class AheError(Exception):
    pass


class InvalidCiphertext(AheError):
    """Value outside the ciphertext group mod n^2."""


@dataclass(frozen=True)
class AhePublicKey:
    n: int

    @property
    def n_sq(self):
        return self.n * self.n

    @property
    def bits(self):
        return int(self.n).bit_length()


@dataclass(frozen=True)
class AhePrivateKey:
    p: int
    q: int


@dataclass(frozen=True)
class AheKeyPair:
    public: AhePublicKey
    private: AhePrivateKey


def _random_prime(bits, rnd):
    while True:
        candidate = rnd.getrandbits(bits) | (1 << (bits - 1)) | 1
        p = int(gmpy2.next_prime(candidate))
        if p.bit_length() == bits:
            return p


def ahe_keygen(bits: int = DEFAULT_KEY_BITS, seed=None) -> AheKeyPair:
    """n = p*q with equal-size primes; seeded generation is test-only."""
    if bits < 16:
        raise ValueError("modulus too small")
    rnd = random.Random(seed) if seed is not None else random.SystemRandom()
    half = bits // 2
    while True:
        p = _random_prime(half, rnd)
        q = _random_prime(half, rnd)
        if p != q and (p * q).bit_length() == bits:
            return AheKeyPair(public=AhePublicKey(n=p * q), private=AhePrivateKey(p=p, q=q))


def _check_ciphertext(pub, c):
    if not (0 < c < pub.n_sq) or gmpy2.gcd(mpz(c), mpz(pub.n)) != 1:
        raise InvalidCiphertext("ciphertext not in the group mod n^2")


def ahe_encrypt(pub: AhePublicKey, m: int, rng=None) -> int:
    """Enc(m) = (1 + m*n) * r^n mod n^2 with r uniform in Z_n*."""
    n = mpz(pub.n)
    if not (0 <= m < n):
        raise ValueError("plaintext must be in [0, n)")
    if rng is None:
        rng = random.SystemRandom()
    n_sq = n * n
    while True:
        r = mpz(rng.randrange(1, int(n)))
        if gmpy2.gcd(r, n) == 1:
            break
    return int((1 + mpz(m) * n) * powmod(r, n, n_sq) % n_sq)


def ahe_decrypt(keys: AheKeyPair, c: int) -> int:
    """CRT decryption: L(c^lambda mod n^2) * lambda^-1 mod n with L(u)=(u-1)/n."""
    pub = keys.public
    _check_ciphertext(pub, c)
    n = mpz(pub.n)
    p, q = mpz(keys.private.p), mpz(keys.private.q)
    lam = gmpy2.lcm(p - 1, q - 1)
    u = powmod(mpz(c), lam, n * n)
    l_val = (u - 1) // n
    return int(l_val * gmpy2.invert(lam, n) % n)


def ahe_add(pub: AhePublicKey, c1: int, c2: int) -> int:
    _check_ciphertext(pub, c1)
    _check_ciphertext(pub, c2)
    return int(mpz(c1) * mpz(c2) % pub.n_sq)


def ahe_add_plain(pub: AhePublicKey, c: int, k: int) -> int:
    """Homomorphic addition of a plaintext constant: c * g^k = c * (1 + k*n)."""
    _check_ciphertext(pub, c)
    n = mpz(pub.n)
    return int(mpz(c) * (1 + (mpz(k) % n) * n) % (n * n))


def ahe_scalar_mul(pub: AhePublicKey, c: int, k: int) -> int:
    """Dec(c^k) = k * m mod n; negative k goes through the group inverse."""
    _check_ciphertext(pub, c)
    return int(powmod(mpz(c), mpz(k), pub.n_sq))


def encode_signed(pub: AhePublicKey, x: int) -> int:
    """Two's-complement-style recentering of a signed integer into Z_n."""
    if abs(x) >= pub.n // 2:
        raise ValueError("magnitude too large for unambiguous signed encoding")
    return x % pub.n


def decode_signed(pub: AhePublicKey, v: int) -> int:
    if not (0 <= v < pub.n):
        raise ValueError("value not in Z_n")
    return v - pub.n if v > pub.n // 2 else v
