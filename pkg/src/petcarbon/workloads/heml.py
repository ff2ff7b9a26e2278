"""Encrypted linear-model inference suite.

A logistic regression is trained in the clear on synthetic data, its
weights are quantized to fixed-point integers, and then one inference is
benchmarked two ways: the client encrypts the feature vector and the
server evaluates the dot product homomorphically (PRIVATE), or the score
is a plain float dot product (PLAINTEXT baseline).

Because the homomorphism is additive and exact, the encrypted pipeline
reproduces the quantized plaintext label on every sample.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

import numpy as np

from ..harness import Overhead, Variant, WorkloadContract
from . import ahe


class HemlError(Exception):
    pass


class Overflow(HemlError):
    """Fixed-point value too large for the integer pipeline."""


class DivergenceDetected(HemlError):
    """Training loss increased for 10 consecutive epochs."""


INT_LIMIT = 2**31
DEFAULT_SCALE_BITS = 16


@dataclass(frozen=True)
class SyntheticDataset:
    n_samples: int
    n_features: int
    features: np.ndarray  # (n_samples, n_features), standardized
    labels: np.ndarray    # +/-1 per sample
    seed: int


@dataclass(frozen=True)
class QuantizedLinearModel:
    int_weights: tuple
    int_bias: int
    scale_bits: int

    def to_json(self) -> str:
        return json.dumps(
            {"int_weights": list(self.int_weights),
             "int_bias": self.int_bias,
             "scale_bits": self.scale_bits},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text) -> "QuantizedLinearModel":
        obj = json.loads(text)
        return cls(int_weights=tuple(obj["int_weights"]),
                   int_bias=int(obj["int_bias"]),
                   scale_bits=int(obj["scale_bits"]))


def gen_synthetic(n_samples: int, n_features: int, seed: int) -> SyntheticDataset:
    """Gaussian class-conditional data with a planted separating direction."""
    if n_samples < 1 or n_features < 1:
        raise ValueError("need n_samples >= 1 and n_features >= 1")
    rng = np.random.default_rng(seed)
    direction = rng.normal(size=n_features)
    direction /= np.linalg.norm(direction)
    labels = rng.choice([-1.0, 1.0], size=n_samples)
    margin = 2.0
    features = rng.normal(size=(n_samples, n_features))
    features += np.outer(labels * margin, direction)
    # standardize columns; guard against zero variance on tiny datasets
    std = features.std(axis=0)
    std[std == 0] = 1.0
    features = (features - features.mean(axis=0)) / std
    return SyntheticDataset(
        n_samples=n_samples,
        n_features=n_features,
        features=features,
        labels=labels,
        seed=seed,
    )


def train_plain_logreg(dataset: SyntheticDataset, epochs: int = 300,
                       learning_rate: float = 0.5):
    """Full-batch gradient descent; returns (weights, bias)."""
    x = dataset.features
    y = dataset.labels
    n, d = x.shape
    w = np.zeros(d)
    b = 0.0
    prev_loss = np.inf
    rising = 0
    for _ in range(epochs):
        z = y * (x @ w + b)
        loss = np.mean(np.logaddexp(0.0, -z))
        if loss > prev_loss:
            rising += 1
            if rising >= 10:
                raise DivergenceDetected("loss increased 10 consecutive epochs")
        else:
            rising = 0
        prev_loss = loss
        s = 1.0 / (1.0 + np.exp(z))  # sigmoid(-z)
        grad_w = -(x.T @ (y * s)) / n
        grad_b = -np.mean(y * s)
        w -= learning_rate * grad_w
        b -= learning_rate * grad_b
    return w, b


def accuracy(dataset: SyntheticDataset, w, b) -> float:
    pred = np.sign(dataset.features @ w + b)
    pred[pred == 0] = 1.0
    return float(np.mean(pred == dataset.labels))


def quantize(weights, bias, scale_bits: int = DEFAULT_SCALE_BITS) -> QuantizedLinearModel:
    if not (4 <= scale_bits <= 24):
        raise ValueError("scale_bits must be in [4, 24]")
    scale = 1 << scale_bits
    int_w = [int(round(float(v) * scale)) for v in weights]
    int_b = int(round(float(bias) * scale))
    for v in int_w + [int_b]:
        if abs(v) >= INT_LIMIT:
            raise Overflow(f"quantized value {v} exceeds 2^31")
    return QuantizedLinearModel(int_weights=tuple(int_w), int_bias=int_b,
                                scale_bits=scale_bits)


def dequantize(model: QuantizedLinearModel):
    scale = float(1 << model.scale_bits)
    return np.array(model.int_weights) / scale, model.int_bias / scale


def quantize_features(x, scale_bits: int):
    scale = 1 << scale_bits
    return [int(round(float(v) * scale)) for v in x]


def plain_int_score(model: QuantizedLinearModel, int_x) -> int:
    """Exact integer score: sum(w_i * x_i) + bias * 2^scale_bits."""
    if len(int_x) != len(model.int_weights):
        raise ValueError("feature length mismatch")
    score = sum(w * v for w, v in zip(model.int_weights, int_x))
    return score + model.int_bias * (1 << model.scale_bits)


def encrypt_features(keys: ahe.AheKeyPair, int_x, rng=None):
    pub = keys.public
    return [ahe.ahe_encrypt(pub, ahe.encode_signed(pub, v), rng=rng) for v in int_x]


def he_inference(pub: ahe.AhePublicKey, enc_x, model: QuantizedLinearModel) -> int:
    """Homomorphic dot product plus bias; returns the encrypted score."""
    if len(enc_x) != len(model.int_weights):
        raise ValueError("feature length mismatch")
    acc = None
    for c, w in zip(enc_x, model.int_weights):
        if w == 0:
            continue
        term = ahe.ahe_scalar_mul(pub, c, w)
        acc = term if acc is None else ahe.ahe_add(pub, acc, term)
    bias_term = model.int_bias * (1 << model.scale_bits)
    if acc is None:
        acc = ahe.ahe_encrypt(pub, ahe.encode_signed(pub, 0))
    return ahe.ahe_add_plain(pub, acc, bias_term)


def decrypt_score(keys: ahe.AheKeyPair, enc_score: int) -> int:
    raw = ahe.ahe_decrypt(keys, enc_score)
    return ahe.decode_signed(keys.public, raw)


def he_predict(keys: ahe.AheKeyPair, x, model: QuantizedLinearModel, rng=None) -> int:
    """Full round-trip for one sample: encrypt, evaluate, decrypt, sign."""
    int_x = quantize_features(x, model.scale_bits)
    enc_x = encrypt_features(keys, int_x, rng=rng)
    enc_score = he_inference(keys.public, enc_x, model)
    score = decrypt_score(keys, enc_score)
    if abs(score) >= keys.public.n // 2:
        raise Overflow("score magnitude exceeds n/2")
    return 1 if score >= 0 else -1


def plain_predict(x, weights, bias) -> int:
    score = float(np.dot(x, weights) + bias)
    return 1 if score >= 0 else -1


def plain_int_predict(model: QuantizedLinearModel, x) -> int:
    score = plain_int_score(model, quantize_features(x, model.scale_bits))
    return 1 if score >= 0 else -1


def heml_suite_workloads(dataset: SyntheticDataset, model: QuantizedLinearModel,
                         keys: ahe.AheKeyPair, weights=None, bias=0.0,
                         batch_size: int = 1):
    """PRIVATE / PLAINTEXT contract pair over one dataset.

    Each run processes ``batch_size`` samples round-robin. The plaintext
    side evaluates the whole batch as one vectorized dot product (so its
    per-sample cost amortizes); the encrypted side has to loop sample by
    sample, which is exactly the missing amortization the suite exposes.
    """
    if batch_size < 1:
        raise ValueError("batch_size must be >= 1")
    if weights is None:
        weights, bias = dequantize(model)
    weights = np.asarray(weights, dtype=float)
    x = dataset.features
    n = dataset.n_samples
    rng = random.Random(dataset.seed)
    state = {"private_pos": 0, "plain_pos": 0}

    def private_run():
        start = state["private_pos"]
        for j in range(batch_size):
            he_predict(keys, x[(start + j) % n], model, rng=rng)
        state["private_pos"] = (start + batch_size) % n

    def plaintext_run():
        start = state["plain_pos"]
        idx = [(start + j) % n for j in range(batch_size)]
        scores = x[idx] @ weights + bias
        np.sign(scores)
        state["plain_pos"] = (start + batch_size) % n

    wl_id = f"heml-d{dataset.n_features}"
    private = WorkloadContract(
        id=wl_id, variant=Variant.PRIVATE, run_once=private_run,
        taxonomy={Overhead.COMPUTATIONAL},
    )
    baseline = WorkloadContract(
        id=wl_id, variant=Variant.PLAINTEXT, run_once=plaintext_run,
    )
    return private, baseline


FEATURE_SWEEP = (10, 30, 100, 200)
