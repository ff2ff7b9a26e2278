import random

import numpy as np
import pytest

from petcarbon.workloads import ahe, heml


@pytest.fixture(scope="module")
def small_keys():
    # small modulus keeps the unit tests fast; production default is 2048
    return ahe.ahe_keygen(512, seed=77)


class TestSyntheticData:
    def test_shape(self):
        ds = heml.gen_synthetic(100, 30, seed=0)
        assert ds.features.shape == (100, 30)
        assert set(np.unique(ds.labels)) <= {-1.0, 1.0}

    def test_determinism(self):
        a = heml.gen_synthetic(50, 10, seed=3)
        b = heml.gen_synthetic(50, 10, seed=3)
        assert np.array_equal(a.features, b.features)
        assert np.array_equal(a.labels, b.labels)

    def test_label_balance_over_seeds(self):
        # aggregate balance over 50 seeds stays within 60/40
        fractions = []
        for seed in range(50):
            ds = heml.gen_synthetic(100, 5, seed=seed)
            fractions.append(np.mean(ds.labels == 1.0))
        assert 0.4 <= np.mean(fractions) <= 0.6

    def test_invalid_sizes(self):
        with pytest.raises(ValueError):
            heml.gen_synthetic(0, 5, seed=0)


class TestTraining:
    def test_separable_accuracy(self):
        train = heml.gen_synthetic(200, 30, seed=1)
        holdout = heml.gen_synthetic(100, 30, seed=2)
        w, b = heml.train_plain_logreg(train)
        assert heml.accuracy(train, w, b) >= 0.9

    def test_zero_epochs(self):
        ds = heml.gen_synthetic(100, 10, seed=4)
        w, b = heml.train_plain_logreg(ds, epochs=0)
        assert np.all(w == 0) and b == 0
        assert 0.3 <= heml.accuracy(ds, w, b) <= 0.7

    def test_deterministic(self):
        ds = heml.gen_synthetic(100, 10, seed=4)
        w1, b1 = heml.train_plain_logreg(ds)
        w2, b2 = heml.train_plain_logreg(ds)
        assert np.array_equal(w1, w2) and b1 == b2


class TestQuantization:
    def test_zero_weight(self):
        m = heml.quantize([0.0], 0.0, 8)
        assert m.int_weights == (0,) and m.int_bias == 0

    def test_arithmetic(self):
        m = heml.quantize([1.5], 0.0, 4)
        assert m.int_weights == (24,)

    def test_scale_bounds(self):
        with pytest.raises(ValueError):
            heml.quantize([1.0], 0.0, 3)
        with pytest.raises(ValueError):
            heml.quantize([1.0], 0.0, 25)

    def test_overflow(self):
        with pytest.raises(heml.Overflow):
            heml.quantize([1e6], 0.0, 24)

    def test_label_agreement_with_real_model(self):
        ds = heml.gen_synthetic(1000, 20, seed=9)
        w, b = heml.train_plain_logreg(ds)
        model = heml.quantize(w, b, 16)
        agree = sum(
            heml.plain_int_predict(model, x) == heml.plain_predict(x, w, b)
            for x in ds.features
        )
        assert agree / len(ds.features) >= 0.99

    def test_json_roundtrip(self):
        m = heml.quantize([0.25, -1.0], 0.5, 8)
        assert heml.QuantizedLinearModel.from_json(m.to_json()) == m


class TestAhe:
    def test_identity(self, small_keys):
        assert ahe.ahe_decrypt(small_keys, ahe.ahe_encrypt(small_keys.public, 0)) == 0

    def test_homomorphic_add(self, small_keys):
        pub = small_keys.public
        c = ahe.ahe_add(pub, ahe.ahe_encrypt(pub, 2), ahe.ahe_encrypt(pub, 3))
        assert ahe.ahe_decrypt(small_keys, c) == 5

    def test_random_triples_match_modular_oracle(self, small_keys):
        pub = small_keys.public
        n = pub.n
        rnd = random.Random(123)
        for _ in range(100):
            a, b = rnd.randrange(n), rnd.randrange(n)
            k = rnd.randrange(-1000, 1000)
            ca, cb = ahe.ahe_encrypt(pub, a), ahe.ahe_encrypt(pub, b)
            assert ahe.ahe_decrypt(small_keys, ahe.ahe_add(pub, ca, cb)) == (a + b) % n
            assert ahe.ahe_decrypt(small_keys, ahe.ahe_scalar_mul(pub, ca, k)) == (k * a) % n

    def test_plaintext_addition(self, small_keys):
        pub = small_keys.public
        c = ahe.ahe_add_plain(pub, ahe.ahe_encrypt(pub, 10), -3)
        assert ahe.ahe_decrypt(small_keys, c) == 7

    def test_invalid_ciphertext(self, small_keys):
        with pytest.raises(ahe.InvalidCiphertext):
            ahe.ahe_decrypt(small_keys, 0)
        with pytest.raises(ahe.InvalidCiphertext):
            ahe.ahe_decrypt(small_keys, small_keys.public.n_sq)

    def test_keygen_determinism(self):
        assert ahe.ahe_keygen(256, seed=5) == ahe.ahe_keygen(256, seed=5)

    def test_signed_encoding(self, small_keys):
        pub = small_keys.public
        for x in (-1000, -1, 0, 1, 1000):
            assert ahe.decode_signed(pub, ahe.encode_signed(pub, x)) == x


class TestHeInference:
    def test_zero_weights_score_zero(self, small_keys):
        model = heml.QuantizedLinearModel(int_weights=(0, 0), int_bias=0, scale_bits=4)
        enc_x = heml.encrypt_features(small_keys, [3, 7])
        score = heml.decrypt_score(small_keys, heml.he_inference(small_keys.public, enc_x, model))
        assert score == 0

    def test_toy_dot_product(self, small_keys):
        # w=(1,-2), x=(3,1), bias 0 -> score 1*3 + (-2)*1 = 1
        model = heml.QuantizedLinearModel(int_weights=(1, -2), int_bias=0, scale_bits=4)
        enc_x = heml.encrypt_features(small_keys, [3, 1])
        score = heml.decrypt_score(small_keys, heml.he_inference(small_keys.public, enc_x, model))
        assert score == 1

    def test_matches_integer_oracle(self, small_keys):
        rnd = random.Random(6)
        for _ in range(20):
            d = rnd.randrange(1, 6)
            w = [rnd.randrange(-500, 500) for _ in range(d)]
            x = [rnd.randrange(-500, 500) for _ in range(d)]
            bias = rnd.randrange(-50, 50)
            model = heml.QuantizedLinearModel(int_weights=tuple(w), int_bias=bias, scale_bits=4)
            enc_x = heml.encrypt_features(small_keys, x)
            score = heml.decrypt_score(
                small_keys, heml.he_inference(small_keys.public, enc_x, model))
            assert score == heml.plain_int_score(model, x)

    def test_end_to_end_label_equivalence_sample(self, small_keys):
        ds = heml.gen_synthetic(20, 8, seed=11)
        w, b = heml.train_plain_logreg(ds)
        model = heml.quantize(w, b, 16)
        for x in ds.features:
            assert heml.he_predict(small_keys, x, model) == heml.plain_int_predict(model, x)

    def test_feature_length_mismatch(self, small_keys):
        model = heml.QuantizedLinearModel(int_weights=(1, 2), int_bias=0, scale_bits=4)
        with pytest.raises(ValueError):
            heml.he_inference(small_keys.public, [1], model)


class TestWorkloads:
    def test_contract_pair_runs(self, small_keys):
        ds = heml.gen_synthetic(10, 4, seed=12)
        w, b = heml.train_plain_logreg(ds)
        model = heml.quantize(w, b, 8)
        private, baseline = heml.heml_suite_workloads(ds, model, small_keys,
                                                      weights=w, bias=b)
        private.run_once()
        baseline.run_once()
        assert private.id == baseline.id == "heml-d4"

    def test_batch_size_validated(self, small_keys):
        ds = heml.gen_synthetic(10, 4, seed=12)
        model = heml.quantize([0.1] * 4, 0.0, 8)
        with pytest.raises(ValueError):
            heml.heml_suite_workloads(ds, model, small_keys, batch_size=0)
