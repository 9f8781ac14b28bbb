"""Constant-space stringology primitives.

Positions are 1-based in the public API.  A word w is periodic when
per(w) <= |w|/2 and highly periodic when per(w) <= |w|/3; all such
fraction comparisons are done with integer cross-multiplication.
Internally everything runs on (sequence, lo, hi) ranges so that no
scratch space proportional to the inputs is ever allocated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence


@dataclass(frozen=True)
class PeriodInfo:
    periodic: bool
    period: Optional[int] = None


def _max_suffix(w: Sequence[int], lo: int, hi: int, rev: bool) -> tuple[int, int]:
    """Maximal-suffix scan of w[lo:hi] under normal or inverted order.

    Returns (ms, per): the maximal suffix starts at range offset ms + 1
    and has period per.  Offsets are 0-based within the range.
    """
    n = hi - lo
    ms, j, k, p = -1, 0, 1, 1
    while j + k < n:
        a = w[lo + j + k]
        b = w[lo + ms + k]
        if a == b:
            if k == p:
                j += p
                k = 1
            else:
                k += 1
        elif (a < b) != rev:
            j += k
            k = 1
            p = j - ms
        else:
            ms = j
            j = ms + 1
            k = 1
            p = 1
    return ms, p


def _find_two_way(pat: Sequence[int], plo: int, phi: int,
                  txt: Sequence[int], tlo: int, thi: int,
                  from_off: int = 0) -> Optional[int]:
    """Leftmost occurrence offset of pat[plo:phi] in txt[tlo:thi].

    `from_off` is the smallest admissible 0-based offset within the text
    range.  Crochemore-Perrin two-way scheme: linear time, O(1) space.
    """
    m = phi - plo
    n = thi - tlo
    if m < 1:
        raise ValueError("empty pattern")
    if from_off < 0:
        from_off = 0
    if m > n - from_off:
        return None
    if m == 1:
        c = pat[plo]
        for j in range(tlo + from_off, thi):
            if txt[j] == c:
                return j - tlo
        return None

    ms1, p1 = _max_suffix(pat, plo, phi, rev=False)
    ms2, p2 = _max_suffix(pat, plo, phi, rev=True)
    if ms1 >= ms2:
        cut, per = ms1 + 1, p1
    else:
        cut, per = ms2 + 1, p2

    periodic = True
    for k in range(cut):
        if pat[plo + k] != pat[plo + per + k]:
            periodic = False
            break

    if periodic:
        j = from_off
        mem = 0
        while j <= n - m:
            i = cut if cut > mem else mem
            while i < m and pat[plo + i] == txt[tlo + j + i]:
                i += 1
            if i < m:
                j += i - cut + 1
                mem = 0
            else:
                i = cut - 1
                while i >= mem and pat[plo + i] == txt[tlo + j + i]:
                    i -= 1
                if i < mem:
                    return j
                j += per
                mem = m - per
    else:
        shift = max(cut, m - cut) + 1
        j = from_off
        while j <= n - m:
            i = cut
            while i < m and pat[plo + i] == txt[tlo + j + i]:
                i += 1
            if i < m:
                j += i - cut + 1
            else:
                i = cut - 1
                while i >= 0 and pat[plo + i] == txt[tlo + j + i]:
                    i -= 1
                if i < 0:
                    return j
                j += shift
    return None


def find_first_occurrence(pattern: Sequence[int], text: Sequence[int],
                          start: int = 1) -> Optional[int]:
    """Smallest 1-based occurrence position >= start, or None."""
    if start < 1:
        start = 1
    off = _find_two_way(pattern, 0, len(pattern), text, 0, len(text), start - 1)
    return None if off is None else off + 1


def _period_of_range(w: Sequence[int], lo: int, hi: int) -> Optional[int]:
    """per(w[lo:hi]) if the range is periodic (per <= len/2), else None.

    Finds the second occurrence of the half-length prefix, then verifies
    the candidate period letter by letter.
    """
    n = hi - lo
    if n < 1:
        raise ValueError("empty word")
    half = (n + 1) // 2
    off = _find_two_way(w, lo, lo + half, w, lo, hi, from_off=1)
    if off is None:
        return None
    cand = off
    for t in range(lo + cand, hi):
        if w[t] != w[t - cand]:
            return None
    return cand


def shortest_period(w: Sequence[int]) -> PeriodInfo:
    """Period report for w; single letters count as non-periodic."""
    p = _period_of_range(w, 0, len(w))
    if p is None:
        return PeriodInfo(False)
    return PeriodInfo(True, p)


def _is_highly_periodic_range(w: Sequence[int], lo: int, hi: int) -> bool:
    p = _period_of_range(w, lo, hi)
    return p is not None and 3 * p <= hi - lo


def is_highly_periodic(w: Sequence[int]) -> bool:
    return _is_highly_periodic_range(w, 0, len(w))


def find_nonperiodic_window(w: Sequence[int], ell: int) -> int:
    """Leftmost break position i such that w[i..i+ell-1] is not highly
    periodic while w[1..i+ell-2] is (or i == 1).

    Requires ell >= 3, |w| >= ell and w itself not highly periodic.
    """
    n = len(w)
    if ell < 3:
        raise ValueError("window length must be >= 3")
    if n < ell:
        raise ValueError("word shorter than window")
    p = _period_of_range(w, 0, ell)
    if p is None or 3 * p > ell:
        return 1
    # Extend the prefix period as far as it persists; w is not highly
    # periodic, so the extension stops before the end of the word.
    j = ell
    while j < n and w[j] == w[j - p]:
        j += 1
    if j >= n:
        raise ValueError("word is highly periodic")
    return j + 2 - ell


def period_transfer_check(x_len: int, y_len: int, w_len: int, p: int) -> bool:
    """Whether a period p shared by a prefix of length x_len and a suffix
    of length y_len is forced to extend to the whole length-w_len word."""
    return x_len + y_len >= w_len + p
