"""Tribonacci word, its finite approximants T_m, and the integer tables.

Words are plain ASCII ``str`` over ``abc``. Public positions are 1-based:
``factor(w, i, j)`` is ``w[i..j]`` inclusive and ``factor(w, i, i - 1)`` is the
empty word.
"""
from __future__ import annotations

import threading
from typing import Literal

from .errors import DomainError, ResourceError

Letter = Literal["a", "b", "c"]
ALPHABET: tuple[Letter, ...] = ("a", "b", "c")

SUBSTITUTION = {"a": "ab", "b": "ac", "c": "a"}
_SIGMA = str.maketrans(SUBSTITUTION)

# Longest word the generator will materialise.
MAX_WORD_LENGTH = 1 << 31


def substitute(word: str) -> str:
    """Apply a->ab, b->ac, c->a letterwise."""
    return word.translate(_SIGMA)


def factor(word: str, i: int, j: int) -> str:
    """Return ``word[i..j]`` with 1-based inclusive bounds."""
    if i < 1 or j < i - 1 or j > len(word):
        raise DomainError(f"factor [{i},{j}] out of range for length {len(word)}")
    return word[i - 1:j]


class TribTables:
    """Memoised t_m (m >= -2), k_m (m >= 0) and a growing prefix of T.

    Lists only ever grow, under a lock; a reader indexing below the current
    length sees a completed write.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._t = [0, 1, 1]  # t_{-2}, t_{-1}, t_0
        self._k = [0, 1, 1]  # k_0, k_1, k_2
        self._text = "a"

    def t(self, m: int) -> int:
        idx = m + 2
        if idx >= len(self._t):
            with self._lock:
                t = self._t
                while len(t) <= idx:
                    t.append(t[-1] + t[-2] + t[-3])
        return self._t[idx]

    def k(self, m: int) -> int:
        if m >= len(self._k):
            with self._lock:
                k = self._k
                while len(k) <= m:
                    k.append(k[-1] + k[-2] + k[-3] - 1)
        return self._k[m]

    def text(self, n: int) -> str:
        """A prefix of T of length at least ``n``."""
        if len(self._text) < n:
            with self._lock:
                s = self._text
                while len(s) < n:
                    s = substitute(s)
                self._text = s
        return self._text


TABLES = TribTables()


def tribonacci_number(m: int) -> int:
    """t_m = |T_m|: t_{-2}=0, t_{-1}=t_0=1, t_m=t_{m-1}+t_{m-2}+t_{m-3}."""
    if m < -2:
        raise DomainError(f"t_m is defined for m >= -2, got {m}")
    return TABLES.t(m)


def kernel_number(m: int) -> int:
    """k_m: k_0=0, k_1=k_2=1, k_m=k_{m-1}+k_{m-2}+k_{m-3}-1."""
    if m < 0:
        raise DomainError(f"k_m is defined for m >= 0, got {m}")
    return TABLES.k(m)


def last_letter(m: int) -> Letter:
    """delta_m, the last letter of T_m, for m >= -1."""
    if m < -1:
        raise DomainError(f"delta_m is defined for m >= -1, got {m}")
    return ALPHABET[m % 3]


def _check_length(n: int) -> None:
    if n > MAX_WORD_LENGTH:
        raise ResourceError(f"refusing to build a word of length {n} (cap {MAX_WORD_LENGTH})")


def prefix(n: int) -> str:
    """T[1,n], the first ``n`` letters of the Tribonacci word."""
    if n < 0:
        raise DomainError(f"prefix length must be >= 0, got {n}")
    _check_length(n)
    try:
        return TABLES.text(n)[:n]
    except MemoryError as exc:
        raise ResourceError(f"out of memory building prefix({n})") from exc


def word_tm(m: int) -> str:
    """T_m = sigma^m(a), with T_{-2} empty and T_{-1} = 'c'."""
    if m < -2:
        raise DomainError(f"T_m is defined for m >= -2, got {m}")
    if m == -2:
        return ""
    if m == -1:
        return "c"
    # T_m is a prefix of every T_{m'} with m' >= m.
    return prefix(tribonacci_number(m))
