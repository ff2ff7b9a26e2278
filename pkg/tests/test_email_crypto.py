import pytest
from cryptography.hazmat.primitives.asymmetric import ec

from petcarbon.workloads import email_crypto as emc
from petcarbon.workloads.corpus import EmptyCorpus, bundled_corpus, load_corpus


@pytest.fixture(scope="module")
def all_keys():
    return {suite: emc.keygen(suite, seed=1234) for suite in emc.SuiteName}


@pytest.fixture(scope="module")
def corpus():
    return bundled_corpus()


class TestKeygen:
    def test_rsa_modulus_3072(self, all_keys):
        keys = all_keys[emc.SuiteName.RSA]
        assert keys.enc_public.key_size == 3072
        assert keys.sig_public.key_size == 3072

    def test_ecc_256_bit_curve(self, all_keys):
        keys = all_keys[emc.SuiteName.ECC]
        assert isinstance(keys.enc_private.curve, ec.SECP256R1)
        assert keys.enc_public.key_size == 256

    def test_elgamal_dsa_sizes(self, all_keys):
        keys = all_keys[emc.SuiteName.ELGAMAL_DSA]
        assert keys.enc_public.p.bit_length() == 3072
        assert keys.sig_public.key_size == 3072
        params = keys.sig_public.public_numbers().parameter_numbers
        assert params.q.bit_length() == 256

    @pytest.mark.parametrize("suite", list(emc.SuiteName))
    def test_seed_determinism(self, suite):
        a = emc.keygen(suite, seed=99)
        b = emc.keygen(suite, seed=99)
        ct = emc.encrypt_email(b"hello world", a)
        assert emc.decrypt_email(ct, b) == b"hello world"
        sig = emc.sign_email(b"hello world", a)
        assert emc.verify_email(b"hello world", sig, b)


class TestEncryption:
    @pytest.mark.parametrize("suite", list(emc.SuiteName))
    def test_roundtrip(self, all_keys, corpus, suite):
        keys = all_keys[suite]
        for message in corpus.messages[:10]:
            assert emc.decrypt_email(emc.encrypt_email(message, keys), keys) == message

    def test_empty_message_rejected(self, all_keys):
        with pytest.raises(emc.InvalidMessage):
            emc.encrypt_email(b"", all_keys[emc.SuiteName.RSA])

    @pytest.mark.parametrize("suite", list(emc.SuiteName))
    def test_constant_envelope_overhead(self, all_keys, suite):
        keys = all_keys[suite]
        overheads = set()
        for message in (b"a", b"b" * 100, b"c" * 5000):
            ct = emc.encrypt_email(message, keys)
            overheads.add(ct.serialized_size() - len(message))
        assert len(overheads) == 1

    def test_cross_suite_decrypt_rejected(self, all_keys):
        ct = emc.encrypt_email(b"msg", all_keys[emc.SuiteName.RSA])
        with pytest.raises(emc.KeyMismatch):
            emc.decrypt_email(ct, all_keys[emc.SuiteName.ECC])


class TestSignatures:
    @pytest.mark.parametrize("suite", list(emc.SuiteName))
    def test_sign_verify(self, all_keys, corpus, suite):
        keys = all_keys[suite]
        for message in corpus.messages[:10]:
            sig = emc.sign_email(message, keys)
            assert emc.verify_email(message, sig, keys)

    @pytest.mark.parametrize("suite", list(emc.SuiteName))
    def test_bitflip_rejected(self, all_keys, suite):
        keys = all_keys[suite]
        message = b"an important message"
        sig = emc.sign_email(message, keys)
        flipped = bytes([message[0] ^ 1]) + message[1:]
        assert not emc.verify_email(flipped, sig, keys)
        bad_sig = emc.Signature(suite=sig.suite, data=bytes([sig.data[0] ^ 1]) + sig.data[1:])
        assert not emc.verify_email(message, bad_sig, keys)

    def test_cross_suite_verify_rejected(self, all_keys):
        sig = emc.sign_email(b"msg", all_keys[emc.SuiteName.RSA])
        with pytest.raises(emc.KeyMismatch):
            emc.verify_email(b"msg", sig, all_keys[emc.SuiteName.ECC])


class TestCorpus:
    def test_bundled_size(self, corpus):
        assert len(corpus) == 200
        assert all(corpus.messages)

    def test_empty_directory(self, tmp_path):
        with pytest.raises(EmptyCorpus):
            load_corpus(tmp_path)

    def test_loads_files(self, tmp_path):
        (tmp_path / "a.txt").write_text("alpha beta")
        (tmp_path / "b.txt").write_text("gamma")
        c = load_corpus(tmp_path)
        assert c.messages == (b"alpha beta", b"gamma")


class TestWorkloads:
    def test_contract_pair(self, corpus):
        keys = emc.keygen(emc.SuiteName.ECC, seed=5)
        private, baseline = emc.crypto_suite_workloads(corpus, keys)
        assert private.id == baseline.id == "email-ecc"
        private.run_once()
        baseline.run_once()
