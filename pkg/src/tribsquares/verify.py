"""Formula-versus-oracle checks and the word/integer identity suite."""
from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .counts import a_indicator, count_cubes, count_squares
from .kernel import first_end_position, kernel_word
from .words import factor, kernel_number as k, prefix, substitute, tribonacci_number as t, word_tm


@dataclass(frozen=True)
class Mismatch:
    check: str
    n: int
    formula: object
    oracle: object

    def __str__(self):
        return f"{self.check}: n={self.n} formula={self.formula} oracle={self.oracle}"


def verify_squares(max_n: int, cap: int = oracle.DEFAULT_CAP) -> Mismatch | None:
    """Compare A(n) and a(n) with the brute-force enumeration for all n <= max_n."""
    records = oracle.brute_distinct_squares(max_n, cap)
    brute = oracle.counts_by_prefix(records, max_n)
    for n in range(max_n + 1):
        value = count_squares(n).value
        if value != brute[n]:
            return Mismatch("A", n, value, brute[n])
    ends = {r.end_position for r in records}
    for n in range(1, max_n + 1):
        if a_indicator(n) != (n in ends):
            return Mismatch("a", n, a_indicator(n), int(n in ends))
    return None


def verify_cubes(max_n: int, cap: int = oracle.DEFAULT_CAP) -> Mismatch | None:
    records = oracle.brute_distinct_cubes(max_n, cap)
    brute = oracle.counts_by_prefix(records, max_n)
    for n in range(max_n + 1):
        value = count_cubes(n).value
        if value != brute[n]:
            return Mismatch("B", n, value, brute[n])
    return None


def _integer_identities(m_max: int):
    for m in range(1, m_max + 1):
        yield f"t recurrence m={m}", t(m) == t(m - 1) + t(m - 2) + t(m - 3)
    for m in range(3, m_max + 1):
        yield f"k recurrence m={m}", k(m) == k(m - 1) + k(m - 2) + k(m - 3) - 1
        yield f"k_m = k_(m-3) + t_(m-4) m={m}", k(m) == k(m - 3) + t(m - 4)
        yield f"2k_m = t_(m-3) + t_(m-5) + 1 m={m}", 2 * k(m) == t(m - 3) + t(m - 5) + 1
    for m in range(0, m_max + 1):
        yield f"sum t_i m={m}", 2 * sum(t(i) for i in range(m + 1)) == t(m) + t(m + 2) - 3
    for m in range(1, m_max + 1):
        total = 2 * sum(k(i) for i in range(1, m + 1))
        yield f"sum k_i m={m}", total == t(m - 2) + t(m - 3) + m
        yield f"sum k_i via k m={m}", total == k(m) + k(m + 2) + m - 1


def _word_identities(m_max: int):
    for m in range(2, m_max + 1):
        yield f"T_m = T_(m-1)T_(m-2)T_(m-3) m={m}", word_tm(m) == word_tm(m - 1) + word_tm(m - 2) + word_tm(m - 3)
    for m in range(0, m_max + 1):
        yield f"sigma(T_m) = T_(m+1) m={m}", substitute(word_tm(m)) == word_tm(m + 1)
        yield f"|T_m| = t_m m={m}", len(word_tm(m)) == t(m)
    for m in range(0, m_max + 1):
        lhs = word_tm(m) + factor(word_tm(m + 1), 1, k(m + 4) - 2)
        yield f"prefix identity (1) m={m}", lhs == factor(word_tm(m + 2), 1, k(m + 5) - 2)
        rhs = word_tm(m + 1) + word_tm(m) + factor(word_tm(m + 1), 1, k(m + 4) - 2)
        yield f"prefix identity (2) m={m}", factor(word_tm(m + 3), 1, k(m + 6) - 2) == rhs
    for m in range(1, m_max + 1):
        km = kernel_word(m)
        yield f"|K_m| = k_m m={m}", len(km) == k(m)
        yield f"K_m palindrome m={m}", km == km[::-1]
    for m in range(5, m_max + 1):
        left = kernel_word(m)[0] + word_tm(m - 4)
        yield f"K_m via K_(m-3) m={m}", kernel_word(m) == left + factor(kernel_word(m - 3), 2, k(m - 3))
        yield f"K_m via T_(m-5) m={m}", kernel_word(m) == left + factor(word_tm(m - 5), 1, k(m - 3) - 1)
    for m in range(1, min(m_max, 12) + 1):
        end = first_end_position(m)
        text = prefix(end)
        first = text.find(kernel_word(m))
        yield f"P(K_m,1) by scan m={m}", first >= 0 and first + k(m) == end


def identity_failures(m_words: int = 15, m_ints: int = 60) -> list[str]:
    """Names of every identity in the suite that does not hold."""
    checks = list(_integer_identities(m_ints)) + list(_word_identities(m_words))
    return [name for name, ok in checks if not ok]
