"""Brute-force engine for the Hofstadter Q-recurrence.

The recurrence Q(n) = Q(n - Q(n-1)) + Q(n - Q(n-2)) is iterated from an
initial condition supplying Q(1), ..., Q(K).  Out-of-range references are
settled by one of two conventions:

* plain: a reference to any index outside 1..n-1 kills the sequence, which
  is said to die at n;
* zero-extended: Q(m) reads as 0 for m <= 0, while a reference to an index
  >= n ends the sequence at n.

Initial conditions have a small text grammar, accepted by :func:`parse_ic`
and emitted by :func:`format_ic`::

    ic    :=  ["0;"] item ("," item)*
    item  :=  INT | INT ".." INT        (inclusive ascending run, step 1)

so ``"0;1..4,9"`` is the zero-extended condition (1, 2, 3, 4, 9) and
``"2,0"`` is a plain two-term condition.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import IO, Sequence

from . import _backend
from ._backend import BACKEND, INT64_MAX, INT64_MIN
from .errors import ArithmeticOverflowError, ValidationError

__all__ = [
    "BACKEND",
    "GeneratedSequence",
    "InitialCondition",
    "QuasilinearSegment",
    "SequenceStatus",
    "detect_quasilinear",
    "evaluate",
    "evaluate_auto",
    "format_ic",
    "parse_ic",
    "resolve_int_mode",
    "write_bfile",
    "write_csv",
]

_MODES = ("fast64", "exact")


def resolve_int_mode(mode: str | None = None) -> str:
    """Return the effective integer mode.

    Explicit argument first, then the QLAB_INT_MODE environment variable,
    then "fast64".  "fast64" uses 64-bit arithmetic and raises
    ArithmeticOverflowError when a term leaves that range; "exact" uses
    unbounded Python integers.
    """
    if mode is None:
        mode = os.environ.get("QLAB_INT_MODE") or "fast64"
    if mode not in _MODES:
        raise ValidationError(f"unknown integer mode {mode!r}; expected one of {_MODES}")
    return mode


@dataclass(frozen=True)
class InitialCondition:
    """Terms Q(1..K) together with the out-of-range convention."""

    terms: tuple[int, ...]
    zero_extended: bool = False

    def __post_init__(self):
        terms = tuple(int(v) for v in self.terms)
        if not terms:
            raise ValidationError("initial condition needs at least one term")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "zero_extended", bool(self.zero_extended))

    @classmethod
    def identity(cls, k: int, zero_extended: bool = False) -> "InitialCondition":
        """The condition Q(i) = i for 1 <= i <= k."""
        if k < 1:
            raise ValidationError("identity condition needs k >= 1")
        return cls(tuple(range(1, k + 1)), zero_extended)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return format_ic(self)


@dataclass(frozen=True)
class SequenceStatus:
    """How a run stopped: still alive, or died/ended at a 1-based index."""

    kind: str
    at_index: int | None = None

    def __post_init__(self):
        if self.kind not in ("alive", "died", "ended"):
            raise ValidationError(f"unknown status kind {self.kind!r}")
        if (self.at_index is None) != (self.kind == "alive"):
            raise ValidationError("at_index is required exactly for died/ended")

    @classmethod
    def alive(cls) -> "SequenceStatus":
        return cls("alive")

    @classmethod
    def died(cls, at_index: int) -> "SequenceStatus":
        return cls("died", at_index)

    @classmethod
    def ended(cls, at_index: int) -> "SequenceStatus":
        return cls("ended", at_index)

    @property
    def is_alive(self) -> bool:
        return self.kind == "alive"

    def __str__(self) -> str:
        return "alive" if self.is_alive else f"{self.kind} at {self.at_index}"


@dataclass(frozen=True, eq=False)
class GeneratedSequence:
    """A finite run: the condition, every produced term, and the stop state.

    ``terms`` is 1-indexed by convention (terms[0] is Q(1)); it is a list of
    ints on the pure-Python path and an int64 array on the compiled path.
    """

    ic: InitialCondition
    terms: Sequence[int]
    status: SequenceStatus

    def __len__(self) -> int:
        return len(self.terms)

    def term(self, n: int) -> int:
        """Q(n) for 1 <= n <= len(self)."""
        if not 1 <= n <= len(self.terms):
            raise IndexError(f"term index {n} outside 1..{len(self.terms)}")
        return int(self.terms[n - 1])


def evaluate(ic: InitialCondition, max_terms: int, mode: str | None = None) -> GeneratedSequence:
    """Run the recurrence from ``ic`` for up to ``max_terms`` total terms.

    The condition must supply at least two terms (the recurrence looks back
    at Q(n-1) and Q(n-2)) and ``max_terms`` must cover it.  The result is
    alive when ``max_terms`` was reached, otherwise died/ended at the first
    index the convention could not supply.  In fast64 mode a term outside
    the 64-bit range raises ArithmeticOverflowError carrying its index.
    """
    k = len(ic.terms)
    if k < 2:
        raise ValidationError("evaluate needs an initial condition with at least two terms")
    if max_terms < k:
        raise ValidationError(
            f"max_terms ({max_terms}) must cover the initial condition ({k} terms)"
        )
    mode = resolve_int_mode(mode)
    if mode == "fast64":
        for i, v in enumerate(ic.terms, start=1):
            if not INT64_MIN <= v <= INT64_MAX:
                raise ArithmeticOverflowError(i)
    terms, code, at = _backend.q_generate(ic.terms, ic.zero_extended, max_terms, mode)
    if code == _backend.STATUS_OVERFLOW:
        raise ArithmeticOverflowError(at)
    if code == _backend.STATUS_DIED:
        status = SequenceStatus.died(at)
    elif code == _backend.STATUS_ENDED:
        status = SequenceStatus.ended(at)
    else:
        status = SequenceStatus.alive()
    return GeneratedSequence(ic, terms, status)


def evaluate_auto(ic: InitialCondition, max_terms: int) -> GeneratedSequence:
    """Evaluate in fast64 mode, retrying in exact mode on overflow."""
    try:
        return evaluate(ic, max_terms, "fast64")
    except ArithmeticOverflowError:
        return evaluate(ic, max_terms, "exact")


@dataclass(frozen=True)
class QuasilinearSegment:
    """Maximal index range [start, end] on which the terms are quasilinear.

    Within the range, the term at n equals c*k + d where k = n // period
    and (c, d) = residues[n % period].
    """

    start: int
    end: int
    period: int
    residues: tuple[tuple[int, int], ...]

    def value_at(self, n: int) -> int:
        if not self.start <= n <= self.end:
            raise IndexError(f"index {n} outside segment [{self.start}, {self.end}]")
        c, d = self.residues[n % self.period]
        return c * (n // self.period) + d


def detect_quasilinear(seq, period: int, from_index: int = 1) -> list[QuasilinearSegment]:
    """Find every maximal quasilinear segment of the given period.

    ``seq`` is a GeneratedSequence or a plain sequence of terms (1-indexed
    by convention).  A segment [s, e] qualifies when e - s + 1 >= 2*period
    and every residue class mod period is affine in n // period across it;
    maximality is judged within [from_index, len(seq)].  Any 2*period
    consecutive terms are vacuously quasilinear, so maximal segments of
    exactly that length can overlap each other.
    """
    if period < 1:
        raise ValidationError("period must be >= 1")
    if from_index < 1:
        raise ValidationError("from_index must be >= 1")
    t = seq.terms if isinstance(seq, GeneratedSequence) else seq
    total = len(t)
    if from_index > total:
        raise ValidationError(f"from_index {from_index} is past the last term ({total})")
    m = period

    def val(n: int) -> int:
        return int(t[n - 1])

    def flat(n: int) -> bool:
        # the first difference at n matches the one a full period later
        return val(n + m) - val(n) == val(n + 2 * m) - val(n + m)

    hi = total - 2 * m  # last index with a testable window
    found: list[tuple[int, int]] = []
    n = from_index
    while n <= hi:
        if flat(n):
            start = n
            while n + 1 <= hi and flat(n + 1):
                n += 1
            found.append((start, n + 2 * m))
        n += 1
    # Length-2m segments carry no interior window; they are maximal exactly
    # when both extensions are blocked by a failing window or the boundary.
    for x in range(from_index, total - 2 * m + 2):
        left_blocked = x == from_index or not flat(x - 1)
        right_blocked = x > hi or not flat(x)
        if left_blocked and right_blocked:
            found.append((x, x + 2 * m - 1))
    found.sort()

    segments = []
    for s, e in found:
        residues = []
        for r in range(m):
            n0 = s + (r - s) % m
            k0, v0 = n0 // m, val(n0)
            c = val(n0 + m) - v0
            residues.append((c, v0 - c * k0))
        segments.append(QuasilinearSegment(s, e, m, tuple(residues)))
    return segments


def parse_ic(text: str) -> InitialCondition:
    """Parse the initial-condition grammar documented at module level."""
    s = text.strip()
    zero = False
    if s.startswith("0;"):
        zero = True
        s = s[2:]
    if not s:
        raise ValidationError(f"malformed initial condition {text!r}")
    terms: list[int] = []
    for item in s.split(","):
        item = item.strip()
        lo, sep, hi = item.partition("..")
        try:
            if sep:
                a, b = int(lo), int(hi)
                if b < a:
                    raise ValidationError(f"descending run {item!r} in {text!r}")
                terms.extend(range(a, b + 1))
            else:
                terms.append(int(item))
        except ValueError:
            raise ValidationError(f"malformed initial condition {text!r}") from None
    return InitialCondition(tuple(terms), zero)


def format_ic(ic: InitialCondition) -> str:
    """Render ``ic`` in the parse_ic grammar, compressing ascending runs."""
    parts: list[str] = []
    terms = ic.terms
    i = 0
    while i < len(terms):
        j = i
        while j + 1 < len(terms) and terms[j + 1] == terms[j] + 1:
            j += 1
        if j - i >= 2:
            parts.append(f"{terms[i]}..{terms[j]}")
        else:
            parts.extend(str(v) for v in terms[i : j + 1])
        i = j + 1
    body = ",".join(parts)
    return f"0;{body}" if ic.zero_extended else body


def write_bfile(seq: GeneratedSequence, out: IO[str]) -> None:
    """Write "n value" lines; a died/ended run gains a trailing comment."""
    for i, v in enumerate(seq.terms, start=1):
        out.write(f"{i} {int(v)}\n")
    if not seq.status.is_alive:
        out.write(f"# {seq.status.kind} at {seq.status.at_index}\n")


def write_csv(seq: GeneratedSequence, out: IO[str], loglog: bool = False) -> None:
    """Write "n,value" rows; with ``loglog``, log10 pairs skipping values <= 0."""
    if loglog:
        out.write("log10_n,log10_value\n")
        for i, v in enumerate(seq.terms, start=1):
            v = int(v)
            if v > 0:
                out.write(f"{math.log10(i):.6f},{math.log10(v):.6f}\n")
    else:
        out.write("n,value\n")
        for i, v in enumerate(seq.terms, start=1):
            out.write(f"{i},{int(v)}\n")
