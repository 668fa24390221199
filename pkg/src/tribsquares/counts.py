"""Closed-form census of distinct squares A(n) and cubes B(n) in T[1,n].

Every quantity here is an exact integer built from t_m and k_m. Nothing in
this module looks at the letters of T.
"""
from __future__ import annotations

import bisect
import threading
from dataclasses import dataclass

from .errors import DomainError
from .words import kernel_number as k
from .words import tribonacci_number as t


def _half(numerator: int) -> int:
    q, r = divmod(numerator, 2)
    assert r == 0, f"odd numerator {numerator}"
    return q


@dataclass(frozen=True)
class SquareCase:
    """One of the three ways a square ww can straddle a kernel K_m."""

    case_id: int
    min_order: int

    def gap_length(self, m: int) -> int:
        if self.case_id == 1:
            return t(m) - k(m)
        if self.case_id == 2:
            return t(m - 2) + t(m - 1) - k(m)
        return t(m - 1) - k(m)

    def root_length(self, m: int) -> int:
        if m < self.min_order:
            raise DomainError(f"case {self.case_id} needs m >= {self.min_order}, got {m}")
        if self.case_id == 1:
            return t(m)
        if self.case_id == 2:
            return t(m - 2) + t(m - 1)
        return t(m - 1)


SQUARE_CASES = {1: SquareCase(1, 3), 2: SquareCase(2, 2), 3: SquareCase(3, 1)}


@dataclass(frozen=True)
class PositionRange:
    """End positions P(ww,1) of first occurrences of case-``case_id`` squares with kernel K_m."""

    case_id: int
    kernel_order: int
    lo: int
    hi: int

    @property
    def count(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi


def position_range(case_id: int, m: int) -> PositionRange:
    if m < 4:
        raise DomainError(f"position sets are defined for m >= 4, got {m}")
    if case_id == 1:
        lo, hi = 2 * t(m - 1), k(m + 4) - 2
    elif case_id == 2:
        lo, hi = 2 * t(m - 1) - t(m - 2), t(m - 1) + k(m + 2) - 2
    elif case_id == 3:
        lo, hi = k(m + 3) - 1, t(m - 1) + 2 * t(m - 4) - 1
    else:
        raise DomainError(f"case_id must be 1, 2 or 3, got {case_id}")
    return PositionRange(case_id, m, lo, hi)


def expected_range_count(case_id: int, m: int) -> int:
    """Cardinality of a position set as stated independently of its bounds."""
    if case_id in (1, 2):
        return k(m) - 1
    return t(m - 4) - k(m - 3) + 1


def delta_cum(m: int) -> int:
    """Sum of |<1,K_i>| for 4 <= i <= m."""
    if m < 3:
        raise DomainError(f"delta_cum is defined for m >= 3, got {m}")
    if m == 3:
        return 0
    return _half(t(m - 2) + t(m - 3) - m)


def theta_cum(m: int) -> int:
    """Sum of |<3,K_i>| for 4 <= i <= m."""
    if m < 3:
        raise DomainError(f"theta_cum is defined for m >= 3, got {m}")
    if m == 3:
        return 0
    return _half(t(m - 2) - t(m - 3) + 2 * t(m - 4) + m - 6)


@dataclass(frozen=True)
class Breakpoints:
    m: int
    alpha: int
    beta: int
    gamma: int
    theta: int


def breakpoints(m: int) -> Breakpoints:
    if m < 4:
        raise DomainError(f"breakpoints are defined for m >= 4, got {m}")
    theta = t(m) + k(m + 3) - 2
    assert 2 * theta == 3 * t(m) + t(m - 2) - 3
    return Breakpoints(m, 2 * t(m - 1), t(m) + 2 * t(m - 3) - 1, 2 * t(m) - t(m - 1), theta)


class _Starts:
    """Growing ascending table of f(m0), f(m0+1), ... for bisection."""

    def __init__(self, fn, m0):
        self._fn = fn
        self._m0 = m0
        self._values = []
        self._lock = threading.Lock()

    def locate(self, n: int) -> int:
        """Largest m >= m0 with fn(m) <= n (caller ensures fn(m0) <= n)."""
        values = self._values
        if not values or values[-1] <= n:
            with self._lock:
                while not values or values[-1] <= n:
                    values.append(self._fn(self._m0 + len(values)))
        return self._m0 + bisect.bisect_right(values, n) - 1


_square_bands = _Starts(lambda m: 2 * t(m - 1), 4)
_cube_bands = _Starts(lambda m: t(m - 1) + 2 * t(m - 4), 7)


def a_indicator(n: int) -> int:
    """1 iff the first occurrence of some new distinct square ends at position n."""
    if n < 1:
        raise DomainError(f"a(n) is defined for n >= 1, got {n}")
    if n < 14:
        return int(n in (8, 10))
    m = _square_bands.locate(n)
    first = 2 * t(m - 1) <= n <= t(m) + 2 * t(m - 3) - 1
    second = 2 * t(m) - t(m - 1) <= n <= t(m) + k(m + 3) - 2
    return int(first or second)


@dataclass(frozen=True)
class CountResult:
    """An exact count plus which branch of the piecewise formula produced it.

    ``m`` is the band index the query fell in (``None`` for literal cases).
    """

    n: int
    value: int
    regime: str
    m: int | None = None


def count_squares(n: int) -> CountResult:
    """A(n), the number of distinct squares ww occurring in T[1,n]."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if n < 14:
        value = 0 if n <= 7 else 1 if n <= 9 else 2
        return CountResult(n, value, "literal")
    m = _square_bands.locate(n)
    bp = breakpoints(m)
    if n < bp.beta:
        value, regime = n - _half(t(m) + t(m - 3) + m + 3), "alpha..beta"
    elif n < bp.gamma:
        value, regime = _half(t(m - 1) + t(m - 2) + 4 * t(m - 3) - m - 5), "beta..gamma"
    elif n < bp.theta:
        value, regime = n - _half(t(m - 1) + 3 * t(m - 2) + m + 3), "gamma..theta"
    else:
        value, regime = _half(2 * t(m - 1) + t(m - 2) + 3 * t(m - 3) - m - 6), "theta..alpha"
    return CountResult(n, value, regime, m)


def count_squares_at_tm(m: int) -> int:
    """A(t_m) = number of distinct squares in T_m."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    if m <= 2:
        return 0
    return _half(2 * t(m - 2) + t(m - 3) + 3 * t(m - 4) - m - 5)


def _glen_d(m: int) -> int:
    # (t_{m+1}+t_{m-1}-3)/2, continued backwards: d_{-3} = d_{-2} = d_{-1} = -1.
    if m < 0:
        return -1
    return _half(t(m + 1) + t(m - 1) - 3)


def glen_expression(m: int) -> int:
    """sum_{i=0}^{m-2} (d_i + 1) + d_{m-4} + d_{m-5} + 1, evaluated verbatim.

    Under the t_m indexing used here this equals A(t_{m+1}); Glen numbers
    the Tribonacci words one step later.
    """
    if m < 2:
        raise DomainError(f"glen_expression is defined for m >= 2, got {m}")
    return sum(_glen_d(i) + 1 for i in range(m - 1)) + _glen_d(m - 4) + _glen_d(m - 5) + 1


def count_squares_at_tm_glen(m: int) -> int:
    """A(t_m) via Glen's summation, shifted to this module's word indexing."""
    if m < 3:
        raise DomainError(f"count_squares_at_tm_glen is defined for m >= 3, got {m}")
    return glen_expression(m - 1)


def count_cubes(n: int) -> CountResult:
    """B(n), the number of distinct cubes www occurring in T[1,n]."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if n <= 57:
        return CountResult(n, 0, "literal")
    m = _cube_bands.locate(n)
    if 2 * n <= 3 * t(m - 1) - t(m - 3) - 3:
        value = n - _half(4 * t(m - 1) - t(m - 2) - 3 * t(m - 3) + m - 6)
        return CountResult(n, value, "rising", m)
    return CountResult(n, _half(t(m - 5) + t(m - 6) - m + 3), "flat", m)


def count_cubes_at_tm(m: int) -> int:
    """B(t_m) = number of distinct cubes in T_m."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    if m <= 6:
        return 0
    return _half(t(m - 5) + t(m - 6) - m + 3)


def square_length_classes(n_max: int) -> set[int]:
    """Total lengths 2t_m and 2t_m + 2t_{m-1} (m >= 0) not exceeding n_max."""
    out = set()
    m = 0
    while 2 * t(m) <= n_max:
        out.add(2 * t(m))
        if 2 * t(m) + 2 * t(m - 1) <= n_max:
            out.add(2 * t(m) + 2 * t(m - 1))
        m += 1
    return out


def cube_length_classes(n_max: int) -> set[int]:
    """Total lengths 3t_m (m >= 3) not exceeding n_max."""
    out = set()
    m = 3
    while 3 * t(m) <= n_max:
        out.add(3 * t(m))
        m += 1
    return out
