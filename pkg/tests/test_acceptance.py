"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary under "acceptance criteria".
"""
import time

import pytest

from tribsquares import oracle
from tribsquares.counts import (
    a_indicator,
    breakpoints,
    count_cubes,
    count_cubes_at_tm,
    count_squares,
    count_squares_at_tm,
    count_squares_at_tm_glen,
    cube_length_classes,
    delta_cum,
    expected_range_count,
    position_range,
    square_length_classes,
    theta_cum,
)
from tribsquares.verify import identity_failures
from tribsquares.words import tribonacci_number as t

N_ORACLE = 5000


@pytest.fixture(scope="module")
def census():
    start = time.perf_counter()
    squares = oracle.brute_distinct_squares(N_ORACLE)
    cubes = oracle.brute_distinct_cubes(N_ORACLE)
    return {
        "squares": squares,
        "cubes": cubes,
        "A": oracle.counts_by_prefix(squares, N_ORACLE),
        "B": oracle.counts_by_prefix(cubes, N_ORACLE),
        "seconds": time.perf_counter() - start,
    }


def best_time(fn, arg, repeats=20):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(arg)
        best = min(best, time.perf_counter() - start)
    return best


def test_1_worked_examples(record_acceptance):
    a, b = count_squares(355).value, count_cubes(365).value
    slowest = max(best_time(count_squares, 355), best_time(count_cubes, 365))
    ok = a == 190 and b == 11 and slowest < 1e-3
    assert record_acceptance("1 worked examples A(355)=190, B(365)=11, <1 ms", ok,
                             f"A={a} B={b} worst={slowest * 1e6:.1f}us")


def test_2_small_n_literals(record_acceptance):
    expected_a = [0] * 8 + [1, 1] + [2] * 4
    got_a = [count_squares(n).value for n in range(14)]
    got_b = [count_cubes(n).value for n in range(58)]
    ok = got_a == expected_a and got_b == [0] * 58
    assert record_acceptance("2 small-n literals A(0..13), B(0..57)", ok)


def test_3_oracle_equivalence(record_acceptance, census):
    bad_a = [n for n in range(N_ORACLE + 1) if census["A"][n] != count_squares(n).value]
    bad_b = [n for n in range(N_ORACLE + 1) if census["B"][n] != count_cubes(n).value]
    # direct per-n enumeration at every boundary below 400 as a check on the one-pass shortcut
    direct_ns = sorted({n for m in range(4, 9) for n in vars(breakpoints(m)).values() if n > 4}
                       | set(range(0, 120)) | {355, 365, 369, 370})
    bad_direct = [n for n in direct_ns
                  if len(oracle.brute_distinct_squares(n)) != count_squares(n).value
                  or len(oracle.brute_distinct_cubes(n)) != count_cubes(n).value]
    ok = not bad_a and not bad_b and not bad_direct and census["seconds"] <= 600
    assert record_acceptance(f"3 oracle equivalence 0<=n<={N_ORACLE}", ok,
                             f"A mismatches={bad_a[:3]} B mismatches={bad_b[:3]} direct={bad_direct[:3]} "
                             f"oracle {census['seconds']:.1f}s")


def test_4_indicator_equivalence(record_acceptance, census):
    ends = {r.end_position for r in census["squares"]}
    formula = {n for n in range(1, N_ORACLE + 1) if a_indicator(n)}
    ok = formula == ends and {n for n in formula if n < 14} == {8, 10}
    assert record_acceptance("4 indicator a(n) equals oracle new-square ends", ok,
                             f"symmetric difference {sorted(formula ^ ends)[:5]}")


def test_5_identity_suite(record_acceptance):
    failures = identity_failures(m_words=15, m_ints=60)
    assert record_acceptance("5 identity suite (recurrences, sums, prefix identities, kernels, P(K_m,1))",
                             not failures, ", ".join(failures[:3]))


def test_6_structural_suite(record_acceptance):
    problems = []
    chain = []
    for m in range(4, 31):
        for c in (1, 2, 3):
            r = position_range(c, m)
            if r.count != expected_range_count(c, m):
                problems.append(f"count c={c} m={m}")
        chain += [position_range(3, m), position_range(2, m), position_range(1, m)]
        if position_range(1, m).hi + 1 != position_range(3, m + 1).lo:
            problems.append(f"adjacency m={m}")
        bp, nxt = breakpoints(m), breakpoints(m + 1)
        A = lambda n: count_squares(n).value
        if A(bp.alpha) != delta_cum(m - 1) + delta_cum(m) + theta_cum(m) + 1:
            problems.append(f"A(alpha) m={m}")
        if A(bp.beta) != 2 * delta_cum(m) + theta_cum(m + 1):
            problems.append(f"A(beta) m={m}")
        if A(bp.gamma) != A(bp.beta) + 1:
            problems.append(f"A(gamma) m={m}")
        if A(bp.theta) != delta_cum(m) + delta_cum(m + 1) + theta_cum(m + 1) or A(bp.theta) != A(nxt.alpha) - 1:
            problems.append(f"A(theta) m={m}")
    problems += [f"overlap at {x.hi}" for x, y in zip(chain, chain[1:]) if not x.hi < y.lo]
    assert record_acceptance("6 structural suite 4<=m<=30", not problems, ", ".join(problems[:3]))


def test_7_closed_form_cross_checks(record_acceptance, census):
    bad = [m for m in range(3, 41)
           if not count_squares_at_tm(m) == count_squares(t(m)).value == count_squares_at_tm_glen(m)]
    bad += [m for m in range(0, 41) if count_cubes_at_tm(m) != count_cubes(t(m)).value]
    oracle_ms = [m for m in range(0, 41) if t(m) <= N_ORACLE]
    bad += [m for m in oracle_ms
            if census["A"][t(m)] != count_squares_at_tm(m) or census["B"][t(m)] != count_cubes_at_tm(m)]
    assert record_acceptance("7 A(t_m), Glen, B(t_m) cross-checks", not bad,
                             f"oracle-confirmed m<={max(oracle_ms)}; bad m={bad[:3]}")


def test_8_length_classes(record_acceptance, census):
    sq = square_length_classes(N_ORACLE)
    cu = cube_length_classes(N_ORACLE)
    bad_sq = [r for r in census["squares"] if 2 * r.root_length not in sq]
    bad_cu = [r for r in census["cubes"] if 3 * r.root_length not in cu]
    no_fourth = oracle.assert_no_fourth_power(N_ORACLE)
    ok = not bad_sq and not bad_cu and no_fourth
    assert record_acceptance("8 length classes and no fourth powers up to 5000", ok,
                             f"{len(bad_sq)} bad squares, {len(bad_cu)} bad cubes, no_fourth={no_fourth}")


def test_9_big_integer_soundness(record_acceptance):
    n, prev = t(100), t(99)
    a, b = count_squares(n).value, count_cubes(n).value
    ok = (isinstance(a, int) and isinstance(b, int)
          and a >= count_squares(prev).value and b >= count_cubes(prev).value and a > 2**63)
    assert record_acceptance("9 big-integer soundness at n=t_100", ok, f"A has {len(str(a))} digits")
