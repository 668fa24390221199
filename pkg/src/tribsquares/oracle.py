"""Brute-force enumeration of distinct squares and cubes in T[1,n].

This module deliberately knows nothing about kernels, length classes or the
closed forms in :mod:`tribsquares.counts`; it only reads ``prefix(n)``.

Substring equality is screened with a polynomial fingerprint table (numpy,
vectorised per root length) and every fingerprint hit is confirmed by a direct
comparison of the letters before it is accepted.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ResourceError
from .words import prefix

DEFAULT_CAP = 20_000

_MOD = (1 << 31) - 1  # products of two residues stay below 2**62
_BASE = 911_382_323 % _MOD


@dataclass(frozen=True, order=True)
class RepetitionRecord:
    """First occurrence of root_word**power, ending at end_position (1-based)."""

    end_position: int
    root_length: int
    root_word: str


class Fingerprints:
    """Prefix fingerprints of a text; ``window(l)[s]`` fingerprints text[s:s+l]."""

    def __init__(self, text: str):
        self.text = text
        n = len(text)
        codes = np.frombuffer(text.encode("ascii"), dtype=np.uint8).astype(np.int64)
        h = np.zeros(n + 1, dtype=np.int64)
        p = np.ones(n + 1, dtype=np.int64)
        acc, pw = 0, 1
        for i in range(n):
            acc = (acc * _BASE + int(codes[i])) % _MOD
            pw = pw * _BASE % _MOD
            h[i + 1] = acc
            p[i + 1] = pw
        self._h = h
        self._p = p

    def window(self, length: int) -> np.ndarray:
        h = self._h
        return (h[length:] - h[: len(h) - length] * self._p[length] % _MOD) % _MOD


def _check(n: int, cap: int) -> None:
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if n > cap:
        raise ResourceError(f"oracle capped at n={cap}, got {n}; pass cap= to override")


def repetitions(text: str, power: int) -> list[RepetitionRecord]:
    """One record per distinct word w with w**power a factor of ``text``.

    Records carry the end of the first occurrence and are sorted by end
    position, then root length. All root lengths are scanned.
    """
    if power < 2:
        raise DomainError(f"power must be >= 2, got {power}")
    n = len(text)
    fp = Fingerprints(text)
    records = []
    for length in range(1, n // power + 1):
        win = fp.window(length)
        span = n - power * length + 1
        hit = np.ones(span, dtype=bool)
        for r in range(1, power):
            hit &= win[:span] == win[r * length: r * length + span]
        seen = set()
        for s in np.flatnonzero(hit).tolist():
            root = text[s:s + length]
            if root in seen:
                continue
            if all(text[s + r * length: s + (r + 1) * length] == root for r in range(1, power)):
                seen.add(root)
                records.append(RepetitionRecord(s + power * length, length, root))
    records.sort()
    return records


def brute_distinct_squares(n: int, cap: int = DEFAULT_CAP) -> list[RepetitionRecord]:
    _check(n, cap)
    return repetitions(prefix(n), 2)


def brute_distinct_cubes(n: int, cap: int = DEFAULT_CAP) -> list[RepetitionRecord]:
    _check(n, cap)
    return repetitions(prefix(n), 3)


def new_repetition_positions(n: int, kind: str, cap: int = DEFAULT_CAP) -> set[int]:
    """End positions at which a new distinct square (or cube) first appears."""
    if kind == "square":
        records = brute_distinct_squares(n, cap)
    elif kind == "cube":
        records = brute_distinct_cubes(n, cap)
    else:
        raise DomainError(f"kind must be 'square' or 'cube', got {kind!r}")
    return {r.end_position for r in records}


def counts_by_prefix(records: list[RepetitionRecord], n: int) -> list[int]:
    """Number of records with end_position <= i, for every 0 <= i <= n.

    A word occurs in T[1,i] iff its first occurrence ends at or before i, so
    enumerating T[1,n] once yields the count for every shorter prefix.
    """
    bumps = np.zeros(n + 1, dtype=np.int64)
    for r in records:
        bumps[r.end_position] += 1
    return np.cumsum(bumps).tolist()


def assert_no_fourth_power(n: int, cap: int = DEFAULT_CAP) -> bool:
    """True iff T[1,n] contains no factor wwww."""
    _check(n, cap)
    return not repetitions(prefix(n), 4)
