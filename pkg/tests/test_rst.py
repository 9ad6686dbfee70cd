"""R/S/T system tests: the three mutually-referencing tables, the cached
accessors, and the two interleaving-pattern checkers built on them."""

from __future__ import annotations

import functools

import pytest

from qlab import (
    InitialCondition,
    ValidationError,
    evaluate,
    qc_pattern_check,
    qt_pattern_check,
    rst_compute,
)
from qlab.rst import R, S, T


def test_small_tables():
    # hand-unrolled: R uses S(n-1), S uses R(n) of the same row, T uses both
    state = rst_compute(4)
    assert state.r == (1, 2, 3, 3)
    assert state.s == (1, 1, 2, 2, 2)
    assert state.t == (1, 2, 2, 3, 4)
    assert state.status.is_alive
    assert state.n == 4
    print("✓ R/S/T rows 0..4 match hand computation")


def test_out_of_range_reads_are_zero():
    state = rst_compute(4)
    assert state.R(0) == 0 and state.R(-3) == 0
    assert state.S(-1) == 0
    assert state.T(-1) == 0
    assert S(-2) == 0 and T(-5) == 0 and R(0) == 0


def test_cached_accessors_match_bulk_compute():
    state = rst_compute(300)
    assert state.status.is_alive
    for i in range(1, 301):
        assert R(i) == state.R(i)
        assert S(i) == state.S(i)
        assert T(i) == state.T(i)


def test_rst_compute_validation():
    with pytest.raises(ValidationError):
        rst_compute(1)


def test_tables_match_independent_recursion():
    # direct memoized transcription of the three rules, no shared code
    @functools.lru_cache(maxsize=None)
    def rr(n: int) -> int:
        if n <= 0:
            return 0
        if n <= 2:
            return n
        return rr(n - rr(n - 1)) + ss(n - 1)

    @functools.lru_cache(maxsize=None)
    def ss(n: int) -> int:
        if n < 0:
            return 0
        if n <= 1:
            return 1
        return ss(n - rr(n)) + ss(n - rr(n - 1))

    @functools.lru_cache(maxsize=None)
    def tt(n: int) -> int:
        if n < 0:
            return 0
        if n == 0:
            return 1
        return tt(n - rr(n)) + tt(n - ss(n))

    for i in range(201):  # ascending warm-up keeps recursion shallow
        rr(i), ss(i), tt(i)
    state = rst_compute(200)
    assert all(state.R(i) == rr(i) for i in range(1, 201))
    assert all(state.S(i) == ss(i) for i in range(201))
    assert all(state.T(i) == tt(i) for i in range(201))
    print("✓ R/S/T through 200 match an independent recursion")


def test_t_starts_slow():
    # T lags n early (T(10)=6) and only overtakes around 60 (T(60)=73);
    # that dip is what lets the qt side condition lam*T(k) >= K+5k+4 fail
    # at small k for short lam
    state = rst_compute(60)
    assert state.T(10) == 6
    assert state.T(60) == 73


def test_qt_first_block_values():
    # block 1 of <0;5,9,4,7>: (5R(1), 5S(1), 9T(1), 4, 5R(1)) = 5,5,18,4,5
    seq = evaluate(InitialCondition((5, 9, 4, 7), zero_extended=True), 9)
    assert [seq.term(i) for i in range(5, 10)] == [5, 5, 18, 4, 5]
    report = qt_pattern_check((), 9, 7, 1)
    assert report.ok
    assert report.holds_through_k == 1
    assert report.holds_through_index == 9
    print("✓ qt block 1 equals (5,5,18,4,5)")


def test_qt_holds_for_sixty_blocks():
    report = qt_pattern_check((), 9, 7, 60)
    assert report.ok
    assert report.holds_through_k == 60
    assert report.holds_through_index == 304
    assert report.side_condition_first_failure is None
    assert report.sequence_end is None


def test_qt_with_nonempty_prefix():
    # lam=9 is too short for K=3: 9*T(10) = 54 < 3+50+4, and the pattern
    # really breaks in block 10 at the "4" slot (index 3+5*10+3 = 56)
    report = qt_pattern_check((2, 2, 2), 9, 9, 40)
    assert not report.ok
    assert report.side_condition_first_failure == 10
    assert report.first_violation == (56, 4, 6)
    # a longer lam clears the side condition for every k <= 40
    report = qt_pattern_check((2, 2, 2), 15, 9, 40)
    assert report.ok
    assert report.holds_through_index == 3 + 5 * 40 + 4
    print("✓ qt prefix (2,2,2): lam=9 truncates in block 10, lam=15 holds")


def test_qt_lambda_8_breaks_quickly():
    report = qt_pattern_check((), 8, 7, 12)
    assert not report.ok
    index, want, got = report.first_violation
    assert index <= 60
    assert (index, want, got) == (53, 4, 9)
    assert report.holds_through_k == 9
    print(f"✓ lam=8 first violation at index {index} (want {want}, got {got})")


def test_qt_validation():
    with pytest.raises(ValidationError):
        qt_pattern_check((), 9, 7, 0)


def test_qc_long_prefix_sizes():
    report = qc_pattern_check(tuple(range(1, 41)), 60, 100)
    assert report.ok
    assert report.holds_through_index == 103  # lam + nu with nu = 3
    assert report.holds_through_k == 11
    assert report.post_pattern_divergence is not None
    assert report.post_pattern_divergence[0] == 104
    print("✓ qc K=40, lam=100, mu=60 holds through 103 and diverges at 104")


def test_qc_pattern_values_match_engine():
    prefix = tuple(range(1, 41))
    seq = evaluate(InitialCondition((*prefix, 60, 5, 100, 3), zero_extended=True), 103)
    for n in range(41, 104):
        k, r = divmod(n - 40, 5)
        assert seq.term(n) == (5, 100 * k + 60, 5, 100, 3)[r]


def test_qc_arbitrary_prefix_values():
    # the guaranteed range never references into the prefix, so junk is fine
    report = qc_pattern_check((-7, 0, 900, 3), 30, 40)
    assert report.ok


def test_qc_k_max_caps_the_range():
    report = qc_pattern_check(tuple(range(1, 41)), 60, 100, k_max=2)
    assert report.ok
    assert report.holds_through_index == 54
    assert report.holds_through_k == 2
    assert report.post_pattern_divergence is None  # capped before the boundary


def test_qc_preconditions():
    with pytest.raises(ValidationError):
        qc_pattern_check((), 10, 5)  # lam <= K+5
    with pytest.raises(ValidationError):
        qc_pattern_check(tuple(range(1, 11)), -10, 16)  # lam+mu <= K+6
    with pytest.raises(ValidationError):
        qc_pattern_check((), 10, 7, k_max=0)


def test_qc_boundary_pair_reported_honestly():
    # lam+mu = K+7 passes the declared preconditions, but the mod-3 slot of
    # block 1 then reads index K+8-(lam+mu) = 1 instead of falling off the
    # left edge: Q(8) = Q(3)+Q(1) = 6+1 = 7, not lam = 6 (hand-checked)
    report = qc_pattern_check((), 1, 6)
    assert not report.ok
    assert report.first_violation == (8, 6, 7)
    assert report.holds_through_index == 7
    print("✓ qc boundary pair (mu=1, lam=6) breaks at index 8 as computed")


def test_qc_minimal_passing_pair():
    # lam+mu = K+8 is the least sum whose block-1 references all clear the
    # left edge; the pattern then holds through lam+nu exactly
    report = qc_pattern_check((), 2, 6)
    assert report.ok
    assert report.holds_through_index == 6 + max(0, ((4 - 6) % 5) - 1)
