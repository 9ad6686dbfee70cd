"""Engine tests: generation under both conventions, integer modes, the
initial-condition grammar, quasilinear detection, and the output writers."""

from __future__ import annotations

import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlab import (
    ArithmeticOverflowError,
    InitialCondition,
    ValidationError,
    detect_quasilinear,
    evaluate,
    evaluate_auto,
    format_ic,
    parse_ic,
    resolve_int_mode,
    write_bfile,
    write_csv,
)
from qlab import _backend, _fallback

# Q(1)=Q(2)=1: hand-unrolled prefix of the classic sequence
CLASSIC_17 = [1, 1, 2, 3, 3, 4, 5, 5, 6, 6, 6, 8, 8, 8, 10, 9, 10]


def test_classic_two_term_prefix():
    seq = evaluate(InitialCondition((1, 1)), 17)
    assert [seq.term(i) for i in range(1, 18)] == CLASSIC_17
    assert seq.status.is_alive
    assert len(seq) == 17
    print("✓ classic prefix 1..17 exact")


def test_plain_death():
    # Q(3) reads Q(3-0)=Q(3), outside 1..2
    seq = evaluate(InitialCondition((2, 0)), 10)
    assert seq.status.kind == "died" and seq.status.at_index == 3
    assert len(seq) == 2


def test_zero_extended_ending():
    # Q(3) = Q(3-3) + Q(3-(-5)) = Q(0) + Q(8): the forward read ends it
    seq = evaluate(InitialCondition((-5, 3), zero_extended=True), 10)
    assert seq.status.kind == "ended" and seq.status.at_index == 3
    assert len(seq) == 2


def test_negative_reference_reads_zero_when_extended():
    # same condition, but plain: the non-positive reference kills it instead
    seq = evaluate(InitialCondition((-5, 3)), 10)
    assert seq.status.kind == "died" and seq.status.at_index == 3


def test_fibonacci_interleave():
    seq = evaluate(parse_ic("0;3,6,5,3,6,8"), 60)
    assert seq.status.is_alive
    # indices 3k carry Fibonacci values, the others stay constant
    assert seq.term(9) == 13 and seq.term(12) == 21
    for k in range(2, 20):
        assert seq.term(3 * k + 1) == 3
        assert seq.term(3 * k + 2) == 6
    for k in range(3, 19):
        assert seq.term(3 * (k + 1)) == seq.term(3 * k) + seq.term(3 * (k - 1))
    print("✓ <0-bar;3,6,5,3,6,8> interleaves Fibonacci with constants")


def test_identity_conditions_known_open_cases_stay_alive():
    for n in (4, 5, 6):
        seq = evaluate(InitialCondition.identity(n), 5000)
        assert seq.status.is_alive, f"identity({n}) unexpectedly stopped"


def test_evaluate_validation():
    with pytest.raises(ValidationError):
        evaluate(InitialCondition((1,)), 10)
    with pytest.raises(ValidationError):
        evaluate(InitialCondition((1, 1)), 1)
    with pytest.raises(ValidationError):
        evaluate(InitialCondition((1, 1)), 10, mode="decimal")
    with pytest.raises(ValidationError):
        InitialCondition(())


def test_resolve_int_mode(monkeypatch):
    monkeypatch.delenv("QLAB_INT_MODE", raising=False)
    assert resolve_int_mode() == "fast64"
    assert resolve_int_mode("exact") == "exact"
    monkeypatch.setenv("QLAB_INT_MODE", "exact")
    assert resolve_int_mode() == "exact"
    assert resolve_int_mode("fast64") == "fast64"
    monkeypatch.setenv("QLAB_INT_MODE", "nonsense")
    with pytest.raises(ValidationError):
        resolve_int_mode()


BIG = InitialCondition((2**62, 2**62, 3, 4), zero_extended=True)


def test_overflow_in_fast64():
    # Q(5) = Q(1) + Q(2) = 2^63, one past int64
    with pytest.raises(ArithmeticOverflowError) as exc:
        evaluate(BIG, 10, mode="fast64")
    assert exc.value.index == 5


def test_exact_mode_crosses_int64():
    seq = evaluate(BIG, 10, mode="exact")
    assert seq.term(5) == 2**63
    assert seq.term(6) == 2**62
    assert seq.status.kind == "ended"
    print(f"✓ exact mode reaches {seq.term(5)} without overflow")


def test_evaluate_auto_retries_in_exact():
    seq = evaluate_auto(BIG, 10)
    assert seq.term(5) == 2**63


def test_oversized_initial_term_rejected_up_front():
    with pytest.raises(ArithmeticOverflowError) as exc:
        evaluate(InitialCondition((1, 2**70)), 10, mode="fast64")
    assert exc.value.index == 2


small_ics = st.tuples(
    st.lists(st.integers(min_value=-6, max_value=12), min_size=2, max_size=6),
    st.booleans(),
)


@given(small_ics)
@settings(max_examples=150, deadline=None)
def test_modes_agree_without_overflow(params):
    terms, zero = params
    ic = InitialCondition(tuple(terms), zero)
    fast = evaluate(ic, 120, mode="fast64")
    exact = evaluate(ic, 120, mode="exact")
    assert [int(v) for v in fast.terms] == list(exact.terms)
    assert fast.status == exact.status


@given(small_ics)
@settings(max_examples=150, deadline=None)
def test_compiled_and_fallback_kernels_agree(params):
    if _backend.BACKEND != "compiled":
        pytest.skip("compiled kernel not built")
    import numpy as np

    from qlab import _kernel

    terms, zero = params
    ct, cc, ca = _kernel.q_generate(np.asarray(terms, dtype=np.int64), zero, 120)
    pt, pc, pa = _fallback.q_generate(list(terms), zero, 120)
    assert list(ct) == pt
    assert (cc, ca) == (pc, pa)


@given(small_ics, st.integers(min_value=6, max_value=60), st.integers(min_value=0, max_value=60))
@settings(max_examples=100, deadline=None)
def test_prefix_stability(params, m, extra):
    terms, zero = params
    ic = InitialCondition(tuple(terms), zero)
    short = evaluate_auto(ic, m)
    long = evaluate_auto(ic, m + extra)
    head = [int(v) for v in long.terms[: len(short)]]
    assert [int(v) for v in short.terms] == head
    if not short.status.is_alive:
        assert short.status == long.status


def test_parse_ic_grammar():
    assert parse_ic("1,1").terms == (1, 1)
    assert not parse_ic("1,1").zero_extended
    ic = parse_ic("0;1..4,9")
    assert ic.terms == (1, 2, 3, 4, 9)
    assert ic.zero_extended
    assert parse_ic(" 2 , 0 ").terms == (2, 0)
    assert parse_ic("-5,3").terms == (-5, 3)
    assert parse_ic("0;1..200").terms == tuple(range(1, 201))


@pytest.mark.parametrize("bad", ["", "0;", "1,", ",1", "a", "1..2..3", "1.5", "5..3", "0;x"])
def test_parse_ic_rejects(bad):
    with pytest.raises(ValidationError):
        parse_ic(bad)


def test_format_ic_compresses_runs():
    assert format_ic(InitialCondition.identity(50, zero_extended=True)) == "0;1..50"
    assert format_ic(InitialCondition((4, 4, 9))) == "4,4,9"
    assert format_ic(InitialCondition((1, 2))) == "1,2"  # run of two stays literal
    assert str(InitialCondition((3, 2, 1))) == "3,2,1"


@given(st.lists(st.integers(min_value=-50, max_value=50), min_size=1, max_size=12), st.booleans())
@settings(max_examples=200, deadline=None)
def test_parse_format_roundtrip(terms, zero):
    ic = InitialCondition(tuple(terms), zero)
    assert parse_ic(format_ic(ic)) == ic


def test_term_accessor_bounds():
    seq = evaluate(InitialCondition((1, 1)), 10)
    with pytest.raises(IndexError):
        seq.term(0)
    with pytest.raises(IndexError):
        seq.term(11)


def test_quasilinear_three_interleaved_lines():
    seq = evaluate(InitialCondition((3, 2, 1)), 100)
    segs = detect_quasilinear(seq, 3)
    assert [(s.start, s.end) for s in segs] == [(1, 100)]
    assert segs[0].residues == ((3, -2), (0, 3), (3, 2))
    for n in (1, 2, 3, 50, 99, 100):
        assert segs[0].value_at(n) == seq.term(n)
    print("✓ <3,2,1> is quasilinear(3) across all 100 terms")


def test_quasilinear_degenerate_windows_may_overlap():
    # no two consecutive first differences agree, so every 2-term window is
    # maximal on its own
    segs = detect_quasilinear([0, 5, 6, 9, 14, 21], 1)
    assert [(s.start, s.end) for s in segs] == [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]


def test_quasilinear_classic_prefix_has_no_full_cover():
    seq = evaluate(InitialCondition((1, 1)), 10)
    segs = detect_quasilinear(seq, 1)
    assert all(not (s.start == 1 and s.end == 10) for s in segs)


def test_quasilinear_identity_42():
    seq = evaluate(InitialCondition.identity(42, zero_extended=True), 200)
    segs = detect_quasilinear(seq, 5, from_index=77)
    assert (segs[0].start, segs[0].end) == (77, 89)
    assert (segs[-1].start, segs[-1].end) == (95, 200)
    for seg in segs:
        for n in range(seg.start, seg.end + 1):
            assert seg.value_at(n) == seq.term(n)
    print(f"✓ identity(42) period-5 segments: first ends 89, last spans 95..200")


def test_quasilinear_validation():
    seq = evaluate(InitialCondition((1, 1)), 10)
    with pytest.raises(ValidationError):
        detect_quasilinear(seq, 0)
    with pytest.raises(ValidationError):
        detect_quasilinear(seq, 1, from_index=0)
    with pytest.raises(ValidationError):
        detect_quasilinear(seq, 1, from_index=11)


def test_write_bfile():
    seq = evaluate(InitialCondition((2, 0)), 10)
    out = io.StringIO()
    write_bfile(seq, out)
    assert out.getvalue() == "1 2\n2 0\n# died at 3\n"


def test_write_csv_plain_and_loglog():
    seq = evaluate(InitialCondition((2, 0)), 10)
    out = io.StringIO()
    write_csv(seq, out)
    assert out.getvalue() == "n,value\n1,2\n2,0\n"
    out = io.StringIO()
    write_csv(seq, out, loglog=True)
    lines = out.getvalue().splitlines()
    # the zero term cannot be plotted on a log axis and is dropped
    assert lines[0] == "log10_n,log10_value"
    assert len(lines) == 2 and lines[1].startswith("0.000000,")
