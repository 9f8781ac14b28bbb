"""Karp-Rabin fingerprint arithmetic.

A fingerprint of a word w is the polynomial residue
w[1] + w[2]*x + ... + w[k]*x^(k-1) mod p, evaluated per channel.
Equal words always produce equal fingerprints; distinct words collide
with probability that depends on the channel primes.
"""

from __future__ import annotations

import random
from bisect import bisect_left
from typing import NamedTuple, Optional, Sequence

MERSENNE61 = (1 << 61) - 1

#: Reserved symbol code used for padding and suffix-tree terminators.
SENTINEL = 256

#: Default alphabet: bytes 0..255 plus the sentinel.
DEFAULT_SIGMA = 257

DEFAULT_SEED = 0x5EED


class SymbolRangeError(ValueError):
    """A symbol code is outside the configured alphabet."""


class Channel(NamedTuple):
    prime: int
    base: int
    base_inv: int


class Fingerprint(NamedTuple):
    residues: tuple[int, ...]
    length: int


class Fingerprinter:
    """Shared modular-hash context: primes, bases and power caches.

    Immutable after construction; safe to share between concurrent
    readers.  `production` is False for deliberately weak test channels.
    """

    __slots__ = ("channels", "sigma", "seed", "production", "_len_pows")

    def __init__(self, channels: Sequence[Channel], sigma: int, seed: int,
                 production: bool):
        self.channels = tuple(channels)
        self.sigma = sigma
        self.seed = seed
        self.production = production
        self._len_pows: dict[int, tuple[int, ...]] = {}

    def fingerprint_of(self, w: Sequence[int]) -> Fingerprint:
        return self.fingerprint_of_range(w, 0, len(w))

    def fingerprint_of_range(self, w: Sequence[int], lo: int, hi: int) -> Fingerprint:
        """Fingerprint of w[lo:hi] (half-open, 0-based) without copying."""
        sigma = self.sigma
        res = []
        for p, x, _ in self.channels:
            h = 0
            xp = 1
            for k in range(lo, hi):
                sym = w[k]
                if not 0 <= sym < sigma:
                    raise SymbolRangeError(f"symbol {sym} out of range [0, {sigma})")
                h = (h + sym * xp) % p
                xp = xp * x % p
            res.append(h)
        return Fingerprint(tuple(res), hi - lo)

    def window_powers(self, window_len: int) -> tuple[int, ...]:
        """x^(window_len-1) mod p per channel, memoized."""
        pows = self._len_pows.get(window_len)
        if pows is None:
            pows = tuple(pow(x, window_len - 1, p) for p, x, _ in self.channels)
            self._len_pows[window_len] = pows
        return pows

    def combined_key(self, fp: Fingerprint) -> int:
        """Pack per-channel residues into one integer (injective per length)."""
        key = fp.residues[0]
        for ch, r in zip(self.channels[1:], fp.residues[1:]):
            key = key * ch.prime + r
        return key


def init_fingerprinter(seed: int = DEFAULT_SEED, sigma: int = DEFAULT_SIGMA,
                       test_prime: Optional[int] = None) -> Fingerprinter:
    """Create the hash context.

    Production mode (default) uses two channels over the Mersenne prime
    2^61 - 1 with bases drawn deterministically from `seed`.  Passing
    `test_prime` selects a single weak channel instead; it is meant to
    provoke fingerprint collisions in verification tests and skips the
    prime > sigma requirement.
    """
    if sigma < 1:
        raise ValueError("sigma must be >= 1")
    rng = random.Random(seed)
    if test_prime is not None:
        if test_prime < 2 or any(test_prime % d == 0 for d in range(2, int(test_prime ** 0.5) + 1)):
            raise ValueError(f"test prime {test_prime} is not prime")
        base = rng.randrange(1, test_prime) if test_prime > 2 else 1
        chan = Channel(test_prime, base, pow(base, -1, test_prime))
        return Fingerprinter([chan], sigma, seed, production=False)
    p = MERSENNE61
    if sigma >= p:
        raise ValueError(f"sigma {sigma} too large for channel prime {p}")
    channels = []
    for _ in range(2):
        x = rng.randrange(1, p)
        channels.append(Channel(p, x, pow(x, -1, p)))
    return Fingerprinter(channels, sigma, seed, production=True)


def fingerprint_of(fpr: Fingerprinter, w: Sequence[int]) -> Fingerprint:
    return fpr.fingerprint_of(w)


def roll_window(fpr: Fingerprinter, fp: Fingerprint, out_sym: int, in_sym: int,
                window_len: int) -> Fingerprint:
    """Slide a length-`window_len` window one step right in O(1).

    `fp` must be the fingerprint of w[i..i+L-1]; `out_sym` = w[i],
    `in_sym` = w[i+L].  Returns the fingerprint of w[i+1..i+L].
    """
    pows = fpr.window_powers(window_len)
    res = tuple(
        ((r - out_sym) * inv + in_sym * xp) % p
        for (p, _, inv), xp, r in zip(fpr.channels, pows, fp.residues)
    )
    return Fingerprint(res, window_len)


def iter_window_keys(fpr: Fingerprinter, text: Sequence[int], ell: int,
                     start: int = 1):
    """Yield (position, combined key) for every length-`ell` window.

    Positions are 1-based; windows are rolled with the same recurrence as
    roll_window (one text pass, O(1) update per step).  The combined key
    packs all channel residues like Fingerprinter.combined_key.
    """
    n = len(text)
    if ell < 1 or ell > n:
        return
    chans = fpr.channels
    pows = fpr.window_powers(ell)
    if len(chans) == 2:
        (p1, x1, i1), (p2, x2, i2) = chans
        xp1, xp2 = pows
        h1 = h2 = 0
        c1 = c2 = 1
        base0 = start - 1
        for k in range(base0, base0 + ell):
            sym = text[k]
            h1 = (h1 + sym * c1) % p1
            c1 = c1 * x1 % p1
            h2 = (h2 + sym * c2) % p2
            c2 = c2 * x2 % p2
        i = start
        last = n - ell + 1
        while True:
            yield i, h1 * p2 + h2
            if i == last:
                return
            out = text[i - 1]
            new = text[i + ell - 1]
            h1 = ((h1 - out) * i1 + new * xp1) % p1
            h2 = ((h2 - out) * i2 + new * xp2) % p2
            i += 1
    else:
        fp = fpr.fingerprint_of_range(text, start - 1, start - 1 + ell)
        i = start
        last = n - ell + 1
        while True:
            yield i, fpr.combined_key(fp)
            if i == last:
                return
            fp = roll_window(fpr, fp, text[i - 1], text[i + ell - 1], ell)
            i += 1


class PrefixFingerprints:
    """Per-prefix fingerprints of one word with O(1) substring queries."""

    __slots__ = ("fpr", "length", "_pref", "_ipow")

    def __init__(self, fpr: Fingerprinter, w: Sequence[int]):
        self.fpr = fpr
        n = len(w)
        self.length = n
        self._pref = []
        self._ipow = []
        sigma = fpr.sigma
        for p, x, xinv in fpr.channels:
            pref = [0] * (n + 1)
            ipow = [1] * (n + 1)
            h = 0
            xp = 1
            ip = 1
            for k, sym in enumerate(w):
                if not 0 <= sym < sigma:
                    raise SymbolRangeError(f"symbol {sym} out of range [0, {sigma})")
                h = (h + sym * xp) % p
                xp = xp * x % p
                ip = ip * xinv % p
                pref[k + 1] = h
                ipow[k + 1] = ip
            self._pref.append(pref)
            self._ipow.append(ipow)

    def substring_fp(self, i: int, j: int) -> Fingerprint:
        """Fingerprint of w[i..j], 1-based inclusive."""
        if not 1 <= i <= j <= self.length:
            raise IndexError(f"substring range [{i}, {j}] out of bounds (n={self.length})")
        res = tuple(
            (pref[j] - pref[i - 1]) * ipow[i - 1] % p
            for (p, _, _), pref, ipow in zip(self.fpr.channels, self._pref, self._ipow)
        )
        return Fingerprint(res, j - i + 1)

    def whole(self) -> Fingerprint:
        if self.length == 0:
            return Fingerprint(tuple(0 for _ in self.fpr.channels), 0)
        return self.substring_fp(1, self.length)


def prefix_table(fpr: Fingerprinter, w: Sequence[int]) -> PrefixFingerprints:
    return PrefixFingerprints(fpr, w)


def substring_fp(table: PrefixFingerprints, i: int, j: int) -> Fingerprint:
    return table.substring_fp(i, j)


class FpIndex:
    """Sorted fingerprint-to-pattern-ids index.

    Keys are strictly sorted and deduplicated: identical patterns share
    one entry and every lookup returns all ids attached to the key.
    Build O(s log s), lookup O(log s) comparisons.
    """

    __slots__ = ("keys", "buckets")

    def __init__(self, keys: list[Fingerprint], buckets: list[list[int]]):
        self.keys = keys
        self.buckets = buckets

    def lookup(self, key: Fingerprint) -> list[int]:
        i = bisect_left(self.keys, key)
        if i < len(self.keys) and self.keys[i] == key:
            return self.buckets[i]
        return []

    def __len__(self) -> int:
        return len(self.keys)


def build_fp_index(entries: Sequence[tuple[Fingerprint, int]]) -> FpIndex:
    ordered = sorted(entries)
    keys: list[Fingerprint] = []
    buckets: list[list[int]] = []
    for fp, pid in ordered:
        if keys and keys[-1] == fp:
            buckets[-1].append(pid)
        else:
            keys.append(fp)
            buckets.append([pid])
    return FpIndex(keys, buckets)


def lookup_fp(index: FpIndex, key: Fingerprint) -> list[int]:
    return index.lookup(key)
