"""Structure prediction for zero-extended identity initial conditions.

For most N >= 35 the sequence generated from <0-bar; 1, 2, ..., N> follows a
rigid layout: the identity prefix, 28 affine terms, six sporadic values, then
a chain of period-5 quasilinear chunks whose extents are governed by nested
markers A_1 < A_2 < ... computed by a base-5 descent on N.  Each level i of
the descent carries a residue C_i; the first level j with C_j != 1 decides
how the run closes (C_j in {0, 3, 4}: the sequence ends at a predictable
index) or keeps growing forever (C_j == 2, with block values driven by the
R/S/T system).  The descent depends on N only through its base-5 digits, so
the classification of every N can be arranged into a five-way branching tree.

`abc_profile` runs the descent, `predict_sequence` emits the predicted terms,
`verify_against_bruteforce` compares them with the actual recurrence, and
`behavior_tree` / `tree_locate` expose the digit tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice
from typing import Iterator

from .engine import GeneratedSequence, InitialCondition, SequenceStatus, evaluate_auto
from .errors import DivisibilityError, QlabError, ValidationError
from .rst import R, S, T
from .tails import AFFINE_PREFIX_28, CLOSING_TAIL_0, SPORADIC_29_34

__all__ = [
    "BehaviorTreeNode",
    "PredictionReport",
    "StructureProfile",
    "abc_profile",
    "behavior_tree",
    "congruence_check",
    "is_exceptional",
    "predict_sequence",
    "tree_locate",
    "verify_against_bruteforce",
]

# N < 118 with classification 0 never follow the predicted layout, and a few
# N that classify only at depth >= 2 fail it as well.
_EXTRA_EXCEPTIONS = frozenset({57, 67, 82, 107, 117})


def _exact5(value: int) -> int:
    quot, rem = divmod(value, 5)
    if rem:
        raise DivisibilityError(f"{value} is not divisible by 5")
    return quot


def _base5(value: int) -> str:
    if value == 0:
        return "0"
    digits = []
    while value:
        value, rem = divmod(value, 5)
        digits.append(str(rem))
    return "".join(reversed(digits))


@dataclass(frozen=True)
class StructureProfile:
    """Descent data for one N.

    a[i] is A_i (a[0] = N - 2, a[1] = 2N + 4), b[i-1] is B_i = A_i - A_{i-1}
    with B_1 = -11N - 22, c[i-1] is the residue C_i, and c_prime[i-1] tells
    how far past A_i the level-i chunk reaches.  The descent stops at the
    first C_i != 1; that i is j and C_j is the classification.  If every
    computed residue is 1 the profile is truncated: j and classification are
    None.
    """

    n_value: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    c_prime: tuple[int, ...]
    j: int | None
    classification: int | None


def abc_profile(n_value: int, max_depth: int = 16) -> StructureProfile:
    if n_value < 0:
        raise ValidationError("n_value must be nonnegative")
    if max_depth < 1:
        raise ValidationError("max_depth must be at least 1")
    a = [n_value - 2, 2 * n_value + 4]
    b = [-11 * n_value - 22]
    c = [(n_value - 1) % 5]
    while c[-1] == 1 and len(c) < max_depth:
        i = len(c)
        nxt = a[i] * _exact5(a[i] - a[i - 1] + 2) + b[i - 1]
        a.append(nxt)
        b.append(nxt - a[i])
        c.append((nxt + 2 * (i + 1) + 1) % 5)
    c_prime = tuple(max(0, ((3 - ci) % 5) - 1) for ci in c)
    if c[-1] != 1:
        j, classification = len(c), c[-1]
    else:
        j, classification = None, None
    return StructureProfile(
        n_value, tuple(a), tuple(b), tuple(c), c_prime, j, classification
    )


def is_exceptional(n_value: int) -> bool:
    """True when the predicted layout is known not to hold for N."""
    if n_value < 0:
        raise ValidationError("n_value must be nonnegative")
    if 2 <= n_value <= 34:
        return True
    if n_value % 5 == 1 and n_value < 118:
        return True
    return n_value in _EXTRA_EXCEPTIONS


def _end_index(profile: StructureProfile) -> int | None:
    """Index at which the predicted sequence ends, None if it never does."""
    if profile.j is None:
        return None
    a_j = profile.a[-1]
    return {0: a_j + 161, 2: None, 3: a_j + 5, 4: a_j + 15}[profile.classification]


def _predicted_stream(profile: StructureProfile) -> Iterator[int]:
    """Yield predicted terms from index 1 on.

    The stream is infinite for classification 2 unless a block fails its side
    condition, finite (ending one short of the end index) for 0, 3 and 4, and
    stops after the last computed chunk when the profile is truncated.
    """
    n = profile.n_value
    a, b, cp = profile.a, profile.b, profile.c_prime
    for v in range(1, n + 1):
        yield v
    for alpha, beta in AFFINE_PREFIX_28:
        yield alpha * n + beta
    for alpha, beta in SPORADIC_29_34:
        yield alpha * n + beta
    # first chunk: indices N+35 .. A_1 + C'_1, period 5 in o = index - N
    for o in range(35, a[1] + cp[0] - n + 1):
        k, r = divmod(o, 5)
        yield (a[1] * k + b[0], 5, a[1], 3, 5)[r]
    levels = profile.j if profile.j is not None else len(profile.c)
    for m in range(1, levels):
        # bridge at A_m+2 .. A_m+6, then chunk m+1 through A_{m+1} + C'_{m+1}
        for v in (5, 8, a[m + 1], 3, 8):
            yield v
        for o in range(7, a[m + 1] + cp[m] - a[m] + 1):
            k, r = divmod(o, 5)
            yield (3, 5, a[m + 1] * k + b[m], 5, a[m + 1])[r]
    if profile.j is None:
        return
    a_j, a_prev, b_j = a[-1], a[-2], b[-1]
    cls = profile.classification
    if cls == 0:
        step = _exact5(a_j - a_prev - 2)
        for _, cc, dd, ee, ff in CLOSING_TAIL_0:
            yield cc * (a_j * step) + dd * a_j + ee * b_j + ff
    elif cls == 2:
        yield 4
        yield a_j * _exact5(a_j - a_prev - 4) + b_j + 2
        yield 5 * R(1)
        yield 5 * S(1)
        k = 1
        while True:
            # block k occupies offsets 5k .. 5k+4 past A_j and is only valid
            # while A_j * (T(k) - 1) >= 5k + 2
            if a_j * (T(k) - 1) < 5 * k + 2:
                return
            yield a_j * T(k)
            yield 4
            yield 5 * R(k)
            yield 5 * R(k + 1)
            yield 5 * S(k + 1)
            k += 1
    elif cls == 3:
        yield 6
        yield a_j + 5
        yield a_j * _exact5(a_j - a_prev - 5) + b_j
        yield 0
    elif cls == 4:
        x = a_j * _exact5(a_j - a_prev - 6) + b_j + 7
        for v in (7, a_j + 5, 4, a_j + 2, 13, x, 5, 4, a_j + 15, x, 0):
            yield v


def predict_sequence(
    n_value: int, max_terms: int, max_depth: int = 16
) -> GeneratedSequence:
    """Emit the predicted sequence for <0-bar; 1..N> without running Q.

    Mirrors evaluate(): at most max_terms terms, status ended(E) only once
    max_terms reaches the end index E.  A classification-2 block that fails
    its side condition truncates the stream and leaves the status alive.
    A depth-capped unresolved profile still predicts through its last
    resolved chunk; asking for terms past that raises QlabError.
    """
    if n_value < 35 or is_exceptional(n_value):
        raise ValidationError(
            f"prediction covers non-exceptional N >= 35 only, got {n_value};"
            " use the engine (or the scan command) to observe this N"
        )
    profile = abc_profile(n_value, max_depth=max_depth)
    if max_terms < n_value:
        raise ValidationError("max_terms must cover the identity prefix")
    terms = list(islice(_predicted_stream(profile), max_terms))
    end_at = _end_index(profile)
    if len(terms) == max_terms:
        status = SequenceStatus.alive()
    elif end_at is not None and len(terms) == end_at - 1:
        status = SequenceStatus.ended(end_at)
    elif profile.classification == 2:
        status = SequenceStatus.alive()
    else:
        raise QlabError(
            f"classification of {n_value} unresolved at depth {max_depth}"
        )
    ic = InitialCondition.identity(n_value, zero_extended=True)
    return GeneratedSequence(ic, terms, status)


@dataclass(frozen=True)
class PredictionReport:
    """Outcome of comparing a prediction against the actual recurrence."""

    matched_through: int
    first_mismatch: tuple[int, int | None, int | None] | None
    predicted_status: SequenceStatus
    actual_status: SequenceStatus
    terminal_agreement: bool

    def to_json(self) -> dict:
        mismatch = None
        if self.first_mismatch is not None:
            index, predicted, actual = self.first_mismatch
            mismatch = {"index": index, "predicted": predicted, "actual": actual}
        return {
            "matched_through": self.matched_through,
            "first_mismatch": mismatch,
            "predicted_status": str(self.predicted_status),
            "actual_status": str(self.actual_status),
            "terminal_agreement": self.terminal_agreement,
        }


def _first_difference(
    p_terms: list[int], a_terms: list[int]
) -> tuple[int, int | None, int | None] | None:
    """(index, predicted, actual) at the first disagreement, None if equal.

    A stream that stops early shows up as None on its side of the tuple.
    """
    if p_terms == a_terms:
        return None
    common = min(len(p_terms), len(a_terms))
    for i in range(common):
        if p_terms[i] != a_terms[i]:
            return (i + 1, p_terms[i], a_terms[i])
    if len(p_terms) > common:
        return (common + 1, p_terms[common], None)
    return (common + 1, None, a_terms[common])


def verify_against_bruteforce(
    n_value: int, max_terms: int, max_depth: int = 16
) -> PredictionReport:
    predicted = predict_sequence(n_value, max_terms, max_depth=max_depth)
    actual = evaluate_auto(
        InitialCondition.identity(n_value, zero_extended=True), max_terms
    )
    p_terms = predicted.terms
    a_raw = actual.terms
    a_terms = a_raw.tolist() if hasattr(a_raw, "tolist") else list(a_raw)
    first = _first_difference(p_terms, a_terms)
    matched = first[0] - 1 if first is not None else len(p_terms)
    terminal = predicted.status == actual.status and len(p_terms) == len(a_terms)
    return PredictionReport(matched, first, predicted.status, actual.status, terminal)


@dataclass
class BehaviorTreeNode:
    """Node of the base-5 classification tree.

    digits is the node's base-5 string; prepending a digit refines N modulo
    the next power of five.  kind is "internal" (residue 1, children present),
    "leaf" (classification known) or "truncated" (residue 1 at the depth cap).
    """

    digits: str
    kind: str
    leaf_type: int | None = None
    children: dict[int, BehaviorTreeNode] = field(default_factory=dict)


def behavior_tree(max_level: int) -> BehaviorTreeNode:
    if max_level < 1:
        raise ValidationError("max_level must be at least 1")
    root = BehaviorTreeNode(digits="", kind="internal")
    _grow(root, 1, max_level)
    return root


def _grow(node: BehaviorTreeNode, level: int, max_level: int) -> None:
    for digit in range(5):
        digits = str(digit) + node.digits
        profile = abc_profile(int(digits, 5), max_depth=level)
        if profile.j is not None:
            child = BehaviorTreeNode(digits, "leaf", profile.classification)
        elif level == max_level:
            child = BehaviorTreeNode(digits, "truncated")
        else:
            child = BehaviorTreeNode(digits, "internal")
            _grow(child, level + 1, max_level)
        node.children[digit] = child


def tree_locate(n_value: int, max_depth: int = 16) -> tuple[str, int]:
    """Return (digits, classification) of the leaf containing N."""
    profile = abc_profile(n_value, max_depth=max_depth)
    if profile.j is None:
        raise QlabError(
            f"classification of {n_value} unresolved at depth {max_depth}"
        )
    digits = _base5(n_value % 5**profile.j).rjust(profile.j, "0")
    return digits, profile.classification


def congruence_check(n_value: int, multiplier: int, max_depth: int = 16) -> bool:
    """Check that N + multiplier * 5^j reproduces the descent of N.

    The shifted value must keep every residue C_i, the depth j, and satisfy
    A_i(shifted) == A_i(N) modulo 5^(j - i + 1) for i = 1..j.
    """
    if multiplier < 1:
        raise ValidationError("multiplier must be at least 1")
    base = abc_profile(n_value, max_depth=max_depth)
    if base.j is None:
        raise QlabError(
            f"classification of {n_value} unresolved at depth {max_depth}"
        )
    j = base.j
    shifted = abc_profile(n_value + multiplier * 5**j, max_depth=max_depth)
    if shifted.j != j:
        return False
    for i in range(1, j + 1):
        if base.c[i - 1] != shifted.c[i - 1]:
            return False
        if (base.a[i] - shifted.a[i]) % 5 ** (j - i + 1):
            return False
    return True
