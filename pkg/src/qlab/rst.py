"""The coupled R/S/T meta-sequences and the sequence families they govern.

The three sequences are defined jointly, with R(n) = 0 for n <= 0, R(1) = 1,
R(2) = 2, S(n) = 0 for n < 0, S(0) = S(1) = 1, T(n) = 0 for n < 0, T(0) = 1,
and for larger n (computing R, then S, then T at each step):

    R(n) = R(n - R(n-1)) + S(n-1)
    S(n) = S(n - R(n))   + S(n - R(n-1))
    T(n) = T(n - R(n))   + T(n - S(n))

They appear as the block structure of two families of unbounded
zero-extended sequences: one whose five-term blocks read
(5R(k), 5S(k), lambda*T(k), 4, 5R(k)), and a quasilinear-start family whose
pattern is checked by :func:`qc_pattern_check`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import (
    GeneratedSequence,
    InitialCondition,
    SequenceStatus,
    evaluate,
    evaluate_auto,
)
from .errors import QlabError, ValidationError

__all__ = [
    "PatternReport",
    "R",
    "RSTState",
    "RSTStatus",
    "S",
    "T",
    "qc_pattern_check",
    "qt_pattern_check",
    "rst_compute",
]


def _advance(r: list[int], s: list[int], t: list[int]) -> str | None:
    """Append row m = len(r) to tables holding R/S/T(0..m-1).

    Returns None on success, or which sequence needed a not-yet-computed
    value (the system then ends at m).  Negative arguments read as 0.
    """
    m = len(r)
    if m == 1:
        rv = 1
    elif m == 2:
        rv = 2
    else:
        i = m - r[m - 1]
        if i >= m:
            return "r"
        rv = (r[i] if i >= 0 else 0) + s[m - 1]
    r.append(rv)
    if m >= 2:
        i1, i2 = m - rv, m - r[m - 1]
        if i1 >= m or i2 >= m:
            r.pop()
            return "s"
        sv = (s[i1] if i1 >= 0 else 0) + (s[i2] if i2 >= 0 else 0)
    else:
        sv = 1
    s.append(sv)
    i1, i2 = m - rv, m - sv
    if i1 >= m or i2 >= m:
        r.pop()
        s.pop()
        return "t"
    t.append((t[i1] if i1 >= 0 else 0) + (t[i2] if i2 >= 0 else 0))
    return None


@dataclass(frozen=True)
class RSTStatus:
    """Alive, or ended because ``which`` of r/s/t needed a future value."""

    kind: str
    which: str | None = None
    at_index: int | None = None

    @classmethod
    def alive(cls) -> "RSTStatus":
        return cls("alive")

    @classmethod
    def ended(cls, which: str, at_index: int) -> "RSTStatus":
        return cls("ended", which, at_index)

    @property
    def is_alive(self) -> bool:
        return self.kind == "alive"


@dataclass(frozen=True)
class RSTState:
    """Computed tables: r = R(1..n), s = S(0..n), t = T(0..n)."""

    r: tuple[int, ...]
    s: tuple[int, ...]
    t: tuple[int, ...]
    status: RSTStatus

    @property
    def n(self) -> int:
        return len(self.s) - 1

    def R(self, i: int) -> int:
        return self.r[i - 1] if i >= 1 else 0

    def S(self, i: int) -> int:
        return self.s[i] if i >= 0 else 0

    def T(self, i: int) -> int:
        return self.t[i] if i >= 0 else 0


def rst_compute(n_max: int) -> RSTState:
    """Compute the three tables through n_max (>= 2), or to where they end.

    If one of the sequences ever needs a not-yet-computed value, the state
    stops at the previous index with an ended status; the partial row is
    dropped so all three tables cover the same range.
    """
    if n_max < 2:
        raise ValidationError("rst_compute needs n_max >= 2")
    r, s, t = [0], [1], [1]
    status = RSTStatus.alive()
    while len(r) <= n_max:
        at = len(r)
        which = _advance(r, s, t)
        if which is not None:
            status = RSTStatus.ended(which, at)
            break
    return RSTState(tuple(r[1:]), tuple(s), tuple(t), status)


_R: list[int] = [0]
_S: list[int] = [1]
_T: list[int] = [1]


def _ensure(n: int) -> None:
    while len(_R) <= n:
        which = _advance(_R, _S, _T)
        if which is not None:
            raise QlabError(f"the r/s/t system ended ({which} at {len(_R)})")


def R(n: int) -> int:
    """R(n); 0 for n <= 0."""
    if n <= 0:
        return 0
    _ensure(n)
    return _R[n]


def S(n: int) -> int:
    """S(n); 0 for n < 0."""
    if n < 0:
        return 0
    _ensure(n)
    return _S[n]


def T(n: int) -> int:
    """T(n); 0 for n < 0."""
    if n < 0:
        return 0
    _ensure(n)
    return _T[n]


@dataclass(frozen=True)
class PatternReport:
    """Outcome of a block-pattern check against brute force.

    holds_through_k counts complete five-term blocks verified;
    holds_through_index is the last matching index.  first_violation is
    (index, expected, actual), with actual None when the brute-forced
    sequence stopped before that index.  side_condition_first_failure and
    post_pattern_divergence are informational: the first block whose growth
    condition failed, and the first index past the guaranteed range where
    the pattern stops matching (None if it happened to continue).
    """

    holds_through_k: int
    first_violation: tuple[int, int, int | None] | None
    holds_through_index: int | None = None
    side_condition_first_failure: int | None = None
    sequence_end: SequenceStatus | None = None
    post_pattern_divergence: tuple[int, int, int | None] | None = None

    @property
    def ok(self) -> bool:
        return self.first_violation is None


def _run(ic: InitialCondition, max_terms: int, mode: str | None) -> GeneratedSequence:
    if mode is None:
        return evaluate_auto(ic, max_terms)
    return evaluate(ic, max_terms, mode)


def qt_pattern_check(prefix, lam: int, mu: int, k_max: int, mode: str | None = None) -> PatternReport:
    """Check <0;a_1..a_K,5,lam,4,mu> against its R/S/T block pattern.

    Block k >= 1 should occupy indices K+5k..K+5k+4 with the values
    (5R(k), 5S(k), lam*T(k), 4, 5R(k)).  The pattern is guaranteed for
    lam >= 9 and mu >= K+6, but those are deliberately not enforced so a
    caller can probe how violations look; k_max >= 1 is.  Each block also
    carries the growth condition lam*T(k) >= K+5k+4, whose first failure is
    reported, not asserted.
    """
    if k_max < 1:
        raise ValidationError("k_max must be >= 1")
    big_k = len(prefix)
    ic = InitialCondition((*prefix, 5, lam, 4, mu), zero_extended=True)
    seq = _run(ic, big_k + 5 * k_max + 4, mode)
    total = len(seq)

    holds_through = 0
    first_violation = None
    side_fail = None
    for k in range(1, k_max + 1):
        base = big_k + 5 * k
        if side_fail is None and lam * T(k) < base + 4:
            side_fail = k
        expected = (5 * R(k), 5 * S(k), lam * T(k), 4, 5 * R(k))
        for off, want in enumerate(expected):
            idx = base + off
            if idx > total:
                first_violation = (idx, want, None)
                break
            got = seq.term(idx)
            if got != want:
                first_violation = (idx, want, got)
                break
        if first_violation:
            break
        holds_through = k

    return PatternReport(
        holds_through_k=holds_through,
        first_violation=first_violation,
        holds_through_index=big_k + 5 * holds_through + 4 if holds_through else None,
        side_condition_first_failure=side_fail,
        sequence_end=None if seq.status.is_alive else seq.status,
    )


def qc_pattern_check(prefix, mu: int, lam: int, k_max: int | None = None, mode: str | None = None) -> PatternReport:
    """Check <0;a_1..a_K,mu,5,lam,3> against its quasilinear-start pattern.

    Requires lam > K+5 and lam + mu > K+6.  With o = n - K, k = o // 5 and
    r = o % 5, the term at n should be (5, lam*k+mu, 5, lam, 3)[r] for every
    K+1 <= n <= lam + nu, where nu = max(0, ((K+4-lam) mod 5) - 1) measures
    how far past lam the references stay clear of the prefix.  k_max, if
    given, caps the check at the end of block k_max.
    """
    big_k = len(prefix)
    if lam <= big_k + 5:
        raise ValidationError(f"lam must exceed K+5 = {big_k + 5}")
    if lam + mu <= big_k + 6:
        raise ValidationError(f"lam + mu must exceed K+6 = {big_k + 6}")
    if k_max is not None and k_max < 1:
        raise ValidationError("k_max must be >= 1 when given")

    nu = max(0, ((big_k + 4 - lam) % 5) - 1)
    last = lam + nu
    if k_max is not None:
        last = min(last, big_k + 5 * k_max + 4)

    def pattern(n: int) -> int:
        k, r = divmod(n - big_k, 5)
        return (5, lam * k + mu, 5, lam, 3)[r]

    ic = InitialCondition((*prefix, mu, 5, lam, 3), zero_extended=True)
    seq = _run(ic, last + 1, mode)  # one spare index to probe the boundary
    total = len(seq)

    first_violation = None
    matched = big_k
    for n in range(big_k + 1, last + 1):
        want = pattern(n)
        if n > total:
            first_violation = (n, want, None)
            break
        got = seq.term(n)
        if got != want:
            first_violation = (n, want, got)
            break
        matched = n

    divergence = None
    if first_violation is None and last < lam + nu:
        pass  # capped run; the boundary was not reached
    elif first_violation is None:
        want = pattern(last + 1)
        if last + 1 > total:
            divergence = (last + 1, want, None)
        elif seq.term(last + 1) != want:
            divergence = (last + 1, want, seq.term(last + 1))

    return PatternReport(
        holds_through_k=max(0, (matched - 4 - big_k) // 5),
        first_violation=first_violation,
        holds_through_index=matched if matched > big_k else None,
        sequence_end=None if seq.status.is_alive else seq.status,
        post_pattern_divergence=divergence,
    )
