"""Brute-force reference implementations for tests and cross-checks.

Everything here is deliberately simple and independent of the production
code paths (quadratic scans, or CPython's own bytes.find).  The only
shared code is the greedy exact parser re-exported from the lz77 module,
which is itself a reference oracle.
"""

from __future__ import annotations

from typing import Optional, Sequence


def _occurs_at(text: Sequence[int], pattern: Sequence[int], pos0: int) -> bool:
    if pos0 + len(pattern) > len(text):
        return False
    for k in range(len(pattern)):
        if text[pos0 + k] != pattern[k]:
            return False
    return True


def scan_multi_match(text: Sequence[int], patterns: Sequence[Sequence[int]]):
    """Nested-loop matcher: per pattern (leftmost, rightmost, all positions).

    Second, fully independent implementation used to cross-check
    naive_multi_match.  Positions 1-based.
    """
    out = []
    n = len(text)
    for pat in patterns:
        hits = [i + 1 for i in range(n - len(pat) + 1) if _occurs_at(text, pat, i)]
        out.append((hits[0] if hits else None, hits[-1] if hits else None, hits))
    return out


def naive_multi_match(text: Sequence[int], patterns: Sequence[Sequence[int]]):
    """Direct multi-pattern scan; exact by construction.

    Uses bytes.find / bytes.rfind (C-level, independent of the library's
    own matchers) when both sides are bytes-like, falling back to the
    nested-loop scan otherwise.  Returns per pattern a tuple
    (leftmost, rightmost, all positions), 1-based.
    """
    if not isinstance(text, (bytes, bytearray)):
        return scan_multi_match(text, patterns)
    text = bytes(text)
    out = []
    for pat in patterns:
        if not isinstance(pat, (bytes, bytearray, memoryview)):
            out.append(scan_multi_match(text, [pat])[0])
            continue
        pat = bytes(pat)
        left = text.find(pat)
        if left < 0:
            out.append((None, None, []))
            continue
        hits = []
        at = left
        while at >= 0:
            hits.append(at + 1)
            at = text.find(pat, at + 1)
        out.append((left + 1, hits[-1], hits))
    return out


def naive_leftmost(text: Sequence[int], patterns: Sequence[Sequence[int]]):
    return [left for left, _, _ in naive_multi_match(text, patterns)]


def brute_longest_prefix(text: Sequence[int], pattern: Sequence[int],
                         r: Optional[int] = None) -> tuple[int, Optional[int]]:
    """Longest prefix of `pattern` occurring in `text` at a start <= r.

    Tries every admissible start and extends it; returns (length, witness)
    with a 1-based witness position, or (0, None).  O(n * |pattern|).
    """
    n = len(text)
    if r is None or r > n:
        r = n
    best_len = 0
    best_pos = None
    for o in range(min(r, n)):
        k = 0
        limit = min(len(pattern), n - o)
        while k < limit and text[o + k] == pattern[k]:
            k += 1
        if k > best_len:
            best_len = k
            best_pos = o + 1
    return best_len, best_pos


def find_longest_prefix(text: bytes, pattern: bytes,
                        r: Optional[int] = None) -> tuple[int, Optional[int]]:
    """Fast independent longest-prefix oracle for bytes inputs.

    Binary-searches the prefix length; "prefix of length L occurs at a
    start <= r" is monotone in L and each probe is a single bytes.find.
    """
    n = len(text)
    if r is None or r > n:
        r = n
    if r < 1 or not pattern:
        return 0, None

    def occ(length: int) -> int:
        # leftmost start of pattern[:length] with start <= r, else -1
        at = text.find(pattern[:length], 0, r - 1 + length)
        return at

    lo, hi = 0, len(pattern)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if occ(mid) >= 0:
            lo = mid
        else:
            hi = mid - 1
    if lo == 0:
        return 0, None
    return lo, occ(lo) + 1


def brute_period(w: Sequence[int]) -> int:
    """Minimal period of w by direct definition testing."""
    n = len(w)
    for p in range(1, n + 1):
        if all(w[i] == w[i + p] for i in range(n - p)):
            return p
    raise AssertionError("unreachable: |w| is always a period")


def all_periods(w: Sequence[int]) -> list[int]:
    n = len(w)
    return [p for p in range(1, n + 1)
            if all(w[i] == w[i + p] for i in range(n - p))]
