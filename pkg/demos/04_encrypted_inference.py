"""Encrypted inference: a quantized linear model scored on encrypted features.

Trains a logistic-regression model on synthetic data, quantizes it to
fixed-point integers, and evaluates it homomorphically: the server computes
the dot product on ciphertexts without ever seeing the features. Labels
must match the quantized plaintext model exactly.
"""

from petcarbon.workloads import ahe, heml

dataset = heml.gen_synthetic(n_samples=20, n_features=10, seed=7)
weights, bias = heml.train_plain_logreg(dataset)
model = heml.quantize(weights, bias, scale_bits=16)
print(f"trained accuracy: {heml.accuracy(dataset, weights, bias):.2f}")

# 512-bit keys keep the demo fast; the benchmark default is 2048
keys = ahe.ahe_keygen(bits=512, seed=7)

matches = 0
for x in dataset.features:
    enc_label = heml.he_predict(keys, x, model)
    plain_label = heml.plain_int_predict(model, x)
    matches += enc_label == plain_label
print(f"encrypted vs plaintext label agreement: {matches}/{len(dataset.features)}")

# the underlying homomorphism: Enc(a) + Enc(b) decrypts to a + b
pub = keys.public
c = ahe.ahe_add(pub, ahe.ahe_encrypt(pub, 20260000), ahe.ahe_encrypt(pub, 823))
print(f"Enc(20260000) + Enc(823) decrypts to {ahe.ahe_decrypt(keys, c)}")
