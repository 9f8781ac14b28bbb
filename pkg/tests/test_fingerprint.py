import random

import pytest
from hypothesis import given, settings, strategies as st

from lzmatch.fingerprint import (
    Channel,
    Fingerprint,
    Fingerprinter,
    MERSENNE61,
    SymbolRangeError,
    build_fp_index,
    fingerprint_of,
    init_fingerprinter,
    iter_window_keys,
    lookup_fp,
    prefix_table,
    roll_window,
    substring_fp,
)


def tiny_channel(p=101, x=3):
    """Single deliberately tiny channel used by the worked examples."""
    return Fingerprinter([Channel(p, x, pow(x, -1, p))], sigma=257, seed=0,
                         production=False)


def test_init_production_two_channels():
    fpr = init_fingerprinter(seed=7, sigma=256)
    assert len(fpr.channels) == 2
    assert fpr.production
    for p, x, xinv in fpr.channels:
        assert p == MERSENNE61
        assert 1 <= x <= p - 1
        assert x * xinv % p == 1


def test_init_deterministic():
    a = init_fingerprinter(seed=42)
    b = init_fingerprinter(seed=42)
    assert a.channels == b.channels
    c = init_fingerprinter(seed=43)
    assert a.channels != c.channels


def test_init_sigma_too_large_rejected():
    with pytest.raises(ValueError):
        init_fingerprinter(seed=1, sigma=1 << 62)


def test_init_test_prime_must_be_prime():
    with pytest.raises(ValueError):
        init_fingerprinter(test_prime=9)


def test_fingerprint_single_symbol():
    fpr = tiny_channel()
    assert fpr.fingerprint_of(b"a") == Fingerprint((97,), 1)


def test_fingerprint_polynomial_example():
    # (97 + 98*3 + 97*9) mod 101 == 52
    fpr = tiny_channel()
    assert fpr.fingerprint_of(b"aba") == Fingerprint((52,), 3)


def test_fingerprint_empty():
    fpr = tiny_channel()
    assert fpr.fingerprint_of(b"") == Fingerprint((0,), 0)


def test_fingerprint_symbol_out_of_range():
    fpr = init_fingerprinter(sigma=4)
    with pytest.raises(SymbolRangeError):
        fpr.fingerprint_of([0, 5, 1])


def _direct_fp(fpr, w, lo, hi):
    res = tuple(
        sum(w[k] * pow(x, k - lo, p) for k in range(lo, hi)) % p
        for p, x, _ in fpr.channels
    )
    return Fingerprint(res, hi - lo)


def test_prefix_table_basics():
    fpr = init_fingerprinter(seed=3)
    t = prefix_table(fpr, b"ab")
    assert t.substring_fp(1, 1) == fpr.fingerprint_of(b"a")
    assert t.substring_fp(1, 2) == fpr.fingerprint_of(b"ab")
    assert t.whole() == fpr.fingerprint_of(b"ab")


def test_substring_fp_equal_subwords():
    fpr = init_fingerprinter(seed=3)
    t = prefix_table(fpr, b"abab")
    assert substring_fp(t, 1, 2) == substring_fp(t, 3, 4)
    assert substring_fp(t, 2, 2) != substring_fp(t, 1, 1)


def test_substring_fp_out_of_range():
    fpr = init_fingerprinter(seed=3)
    t = prefix_table(fpr, b"abc")
    for i, j in [(0, 1), (1, 4), (3, 2)]:
        with pytest.raises(IndexError):
            t.substring_fp(i, j)


def test_substring_fp_exhaustive_small():
    fpr = init_fingerprinter(seed=11)
    rng = random.Random(5)
    for n in (1, 2, 7, 31, 64):
        w = bytes(rng.randrange(256) for _ in range(n))
        t = prefix_table(fpr, w)
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                assert t.substring_fp(i, j) == _direct_fp(fpr, w, i - 1, j)


@settings(max_examples=60, deadline=None)
@given(st.binary(min_size=1, max_size=120), st.data())
def test_substring_fp_matches_direct(w, data):
    fpr = init_fingerprinter(seed=9)
    t = prefix_table(fpr, w)
    i = data.draw(st.integers(1, len(w)))
    j = data.draw(st.integers(i, len(w)))
    assert t.substring_fp(i, j) == _direct_fp(fpr, w, i - 1, j)


def test_roll_window_example():
    fpr = init_fingerprinter(seed=1)
    w = b"aba"
    fp = fpr.fingerprint_of(b"ab")
    rolled = roll_window(fpr, fp, out_sym=w[0], in_sym=w[2], window_len=2)
    assert rolled == fpr.fingerprint_of(b"ba")


def test_roll_window_constant_on_uniform_text():
    fpr = init_fingerprinter(seed=1)
    w = b"aaaaaa"
    fp = fpr.fingerprint_of(w[:3])
    for i in range(3, len(w)):
        fp = roll_window(fpr, fp, w[i - 3], w[i], 3)
        assert fp == fpr.fingerprint_of(w[:3])


@pytest.mark.parametrize("ell", [1, 2, 5, 17])
def test_roll_window_sweep_matches_direct(ell):
    fpr = init_fingerprinter(seed=77)
    rng = random.Random(ell)
    w = bytes(rng.randrange(4) for _ in range(400))
    fp = fpr.fingerprint_of(w[:ell])
    for i in range(1, len(w) - ell + 1):
        fp = roll_window(fpr, fp, w[i - 1], w[i + ell - 1], ell)
        assert fp == _direct_fp(fpr, w, i, i + ell)


@pytest.mark.parametrize("channels", ["production", "test"])
def test_iter_window_keys_equals_roll_window_chain(channels):
    if channels == "production":
        fpr = init_fingerprinter(seed=5)
    else:
        fpr = init_fingerprinter(seed=5, test_prime=101)
    rng = random.Random(8)
    w = bytes(rng.randrange(256) for _ in range(300))
    ell = 7
    fp = fpr.fingerprint_of(w[:ell])
    expect = [(1, fpr.combined_key(fp))]
    for i in range(1, len(w) - ell + 1):
        fp = roll_window(fpr, fp, w[i - 1], w[i + ell - 1], ell)
        expect.append((i + 1, fpr.combined_key(fp)))
    assert list(iter_window_keys(fpr, w, ell)) == expect


def test_iter_window_keys_degenerate():
    fpr = init_fingerprinter(seed=5)
    assert list(iter_window_keys(fpr, b"abc", 4)) == []
    assert len(list(iter_window_keys(fpr, b"abc", 3))) == 1


def test_fp_index_empty():
    idx = build_fp_index([])
    assert len(idx) == 0
    assert lookup_fp(idx, Fingerprint((1, 2), 3)) == []


def test_fp_index_duplicates_share_entry():
    fpr = init_fingerprinter(seed=2)
    fp = fpr.fingerprint_of(b"xy")
    idx = build_fp_index([(fp, 0), (fp, 1)])
    assert len(idx) == 1
    assert sorted(lookup_fp(idx, fp)) == [0, 1]


def test_fp_index_membership_random():
    fpr = init_fingerprinter(seed=4)
    rng = random.Random(10)
    words = [bytes(rng.randrange(256) for _ in range(6)) for _ in range(1000)]
    entries = [(fpr.fingerprint_of(w), i) for i, w in enumerate(words)]
    idx = build_fp_index(entries)
    assert idx.keys == sorted(idx.keys)
    assert all(idx.keys[i] < idx.keys[i + 1] for i in range(len(idx.keys) - 1))
    for fp, i in entries:
        assert i in lookup_fp(idx, fp)
    absent = fpr.fingerprint_of(bytes(7))
    assert lookup_fp(idx, absent) == []


def test_tiny_prime_collides_production_does_not():
    rng = random.Random(0)
    words = [bytes(rng.randrange(2) for _ in range(8)) for _ in range(200)]
    tiny = init_fingerprinter(seed=1, test_prime=5)
    prod = init_fingerprinter(seed=1)
    tiny_groups = {}
    prod_groups = {}
    for w in words:
        tiny_groups.setdefault(tiny.fingerprint_of(w), set()).add(w)
        prod_groups.setdefault(prod.fingerprint_of(w), set()).add(w)
    assert any(len(g) > 1 for g in tiny_groups.values())
    assert all(len(g) == 1 for g in prod_groups.values())


def test_determinism_of_values():
    a = init_fingerprinter(seed=99)
    b = init_fingerprinter(seed=99)
    w = bytes(range(50))
    assert a.fingerprint_of(w) == b.fingerprint_of(w)
    assert fingerprint_of(a, w) == a.fingerprint_of(w)
