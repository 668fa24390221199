"""Kernel words K_m and the kernel decomposition of factors of T."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, NotAFactorError
from .words import ALPHABET, factor, kernel_number, last_letter, prefix, tribonacci_number, word_tm


@dataclass(frozen=True)
class KernelDescriptor:
    """K_m together with where it first ends in T.

    ``offset`` is the 1-based start of the kernel inside the word handed to
    :func:`ker`; it is ``None`` for descriptors built from an order alone.
    """

    order: int
    word: str
    end_position_first: int
    offset: int | None = None


@dataclass(frozen=True)
class Decomposition:
    """w = T_{m-1}[i, t_{m-1}-1] + K_m + T_m[k_m, k_m+j-1]."""

    kernel_order: int
    i: int
    j: int

    def reassemble(self) -> str:
        return reassemble(self.kernel_order, self.i, self.j)


@lru_cache(maxsize=None)
def kernel_word(m: int) -> str:
    """K_1=a, K_2=b, K_3=c and K_m = delta_{m-1} T_{m-3}[1, k_m-1] for m >= 4."""
    if m < 1:
        raise DomainError(f"K_m is defined for m >= 1, got {m}")
    if m <= 3:
        return ALPHABET[m - 1]
    return last_letter(m - 1) + factor(word_tm(m - 3), 1, kernel_number(m) - 1)


def first_end_position(m: int) -> int:
    """P(K_m, 1): 1-based end of the first occurrence of K_m in T."""
    if m < 1:
        raise DomainError(f"K_m is defined for m >= 1, got {m}")
    pos = tribonacci_number(m - 1) + kernel_number(m) - 1
    assert pos == kernel_number(m + 3) - 1
    return pos


def kernel_descriptor(m: int) -> KernelDescriptor:
    return KernelDescriptor(m, kernel_word(m), first_end_position(m))


def default_horizon(length: int) -> int:
    return max(1024, 64 * length)


def check_factor(w: str, horizon: int | None = None) -> None:
    """Raise unless ``w`` is a nonempty factor of T found within ``horizon``."""
    if not w:
        raise DomainError("the empty word has no kernel")
    if not set(w) <= set(ALPHABET):
        raise NotAFactorError(f"{w!r} uses letters outside {''.join(ALPHABET)}")
    if horizon is None:
        horizon = default_horizon(len(w))
    if w not in prefix(horizon):
        raise NotAFactorError(f"{w!r} not found within the first {horizon} letters of T", horizon)


def ker(w: str, horizon: int | None = None) -> KernelDescriptor:
    """The maximal-order kernel word occurring in the factor ``w``."""
    check_factor(w, horizon)
    m = 1
    while kernel_number(m + 1) <= len(w):
        m += 1
    for order in range(m, 0, -1):
        pos = w.find(kernel_word(order))
        if pos >= 0:
            return KernelDescriptor(order, kernel_word(order), first_end_position(order), pos + 1)
    raise AssertionError("unreachable: every letter is a kernel word")


def decompose(w: str, horizon: int | None = None) -> Decomposition:
    kd = ker(w, horizon)
    m = kd.order
    i = tribonacci_number(m - 1) - kd.offset + 1
    j = len(w) - (kd.offset - 1) - kernel_number(m)
    return Decomposition(m, i, j)


def reassemble(m: int, i: int, j: int) -> str:
    t_prev = tribonacci_number(m - 1)
    if not (1 <= i <= t_prev and 0 <= j <= t_prev - 1):
        raise DomainError(f"(m={m}, i={i}, j={j}) outside 1<=i<={t_prev}, 0<=j<={t_prev - 1}")
    k_m = kernel_number(m)
    return (
        factor(word_tm(m - 1), i, t_prev - 1)
        + kernel_word(m)
        + factor(word_tm(m), k_m, k_m + j - 1)
    )


def find_occurrences(w: str, n: int) -> list[int]:
    """1-based start positions of ``w`` in T[1,n], overlaps included."""
    if not w:
        raise DomainError("cannot search for the empty word")
    text = prefix(n)
    hits = []
    pos = text.find(w)
    while pos >= 0:
        hits.append(pos + 1)
        pos = text.find(w, pos + 1)
    return hits
