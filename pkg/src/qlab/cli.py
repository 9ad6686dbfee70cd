"""Command-line front end.

Subcommands:
  gen      run the recurrence from an initial condition
  sym      derive symbolic prefix terms for identity conditions
  rst      tabulate the R/S/T system
  predict  emit the predicted sequence for a zero-extended identity condition
  verify   compare predictions against the actual recurrence
  tree     print or query the base-5 classification tree
  scan     tabulate classification and observed length over a range of N

Exit codes: 0 on success, 1 for usage and runtime problems (bad arguments,
64-bit overflow, I/O failures), 2 for a broken internal invariant.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass

from . import __version__
from .engine import (
    GeneratedSequence,
    InitialCondition,
    evaluate,
    evaluate_auto,
    parse_ic,
    write_bfile,
    write_csv,
)
from .errors import DivisibilityError, QlabError
from .errors import ValidationError
from .predictor import (
    abc_profile,
    behavior_tree,
    is_exceptional,
    predict_sequence,
    tree_locate,
    verify_against_bruteforce,
)
from .rst import rst_compute
from .symbolic import CONVENTIONS, NConstraint, specialize, symbolic_extend

__all__ = ["RunConfig", "main", "run"]


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; remap to 1 (2 means a broken
    invariant here).  Subparsers inherit this class."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    """Flat bag of options; each subcommand reads the fields it declares."""

    command: str
    ic: str | None = None
    max_terms: int | None = None
    mode: str | None = None
    format: str = "text"
    out: str | None = None
    loglog: bool = False
    convention: str = "plain"
    nmin: int | None = None
    nmax: int | None = None
    offsets: int = 28
    at: int | None = None
    which: str = "all"
    n: int | None = None
    to: int | None = None
    workers: int = 1
    levels: int = 3
    locate: int | None = None
    start: int | None = None
    stop: int | None = None


@contextmanager
def _open_out(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        fh = open(path, "w", encoding="utf-8")
        try:
            yield fh
        finally:
            fh.close()


def _check_loglog(config: RunConfig) -> None:
    if config.loglog and config.format != "csv":
        raise ValidationError("--loglog only applies to --format csv")


def _emit_sequence(seq: GeneratedSequence, config: RunConfig) -> None:
    with _open_out(config.out) as out:
        if config.format == "bfile":
            write_bfile(seq, out)
        elif config.format == "csv":
            write_csv(seq, out, loglog=config.loglog)
        elif config.format == "json":
            payload = {
                "ic": str(seq.ic),
                "status": str(seq.status),
                "terms": [int(v) for v in seq.terms],
            }
            json.dump(payload, out)
            out.write("\n")
        else:
            out.write(f"# <{seq.ic}>: {len(seq)} terms, {seq.status}\n")
            for i in range(0, len(seq), 10):
                block = seq.terms[i : i + 10]
                out.write(" ".join(str(int(v)) for v in block) + "\n")


def _run_gen(config: RunConfig) -> int:
    _check_loglog(config)
    ic = parse_ic(config.ic)
    seq = evaluate(ic, config.max_terms, mode=config.mode)
    _emit_sequence(seq, config)
    return 0


def _run_sym(config: RunConfig) -> int:
    constraint = NConstraint(config.nmin, config.nmax)
    prefix = symbolic_extend(config.convention, constraint, config.offsets)
    if config.at is not None:
        _check_loglog(config)
        _emit_sequence(specialize(prefix, config.at), config)
        return 0
    if config.format in ("bfile", "csv"):
        raise ValidationError(f"--format {config.format} needs --at to pick a concrete N")
    with _open_out(config.out) as out:
        if config.format == "json":
            json.dump(prefix.to_json(), out)
            out.write("\n")
        else:
            out.write(prefix.to_text() + "\n")
    return 0


def _run_rst(config: RunConfig) -> int:
    state = rst_compute(config.max_terms)
    which = config.which
    ended = None
    if not state.status.is_alive:
        ended = f"# ended ({state.status.which}) at {state.status.at_index}"
    with _open_out(config.out) as out:
        if config.format == "bfile":
            if which == "all":
                raise ValidationError("--format bfile needs --which r, s or t")
            table = getattr(state, which.upper())
            for i in range(1 if which == "r" else 0, state.n + 1):
                out.write(f"{i} {table(i)}\n")
            if ended:
                out.write(ended + "\n")
        elif config.format == "json":
            payload: dict = {"n_max": state.n}
            if which in ("r", "all"):
                payload["r"] = list(state.r)
            if which in ("s", "all"):
                payload["s"] = list(state.s)
            if which in ("t", "all"):
                payload["t"] = list(state.t)
            if state.status.is_alive:
                payload["status"] = "alive"
            else:
                payload["status"] = {
                    "which": state.status.which,
                    "at_index": state.status.at_index,
                }
            json.dump(payload, out)
            out.write("\n")
        else:
            cols = ["r", "s", "t"] if which == "all" else [which]
            sep = "," if config.format == "csv" else "\t"
            out.write(sep.join(["n"] + cols) + "\n")
            for i in range(state.n + 1):
                cells = [str(getattr(state, c.upper())(i)) for c in cols]
                out.write(sep.join([str(i)] + cells) + "\n")
            if ended:
                out.write(ended + "\n")
    return 0


def _run_predict(config: RunConfig) -> int:
    _check_loglog(config)
    seq = predict_sequence(config.n, config.max_terms)
    _emit_sequence(seq, config)
    return 0


def _verify_worker(task: tuple[int, int]):
    n, max_terms = task
    return n, verify_against_bruteforce(n, max_terms)


def _scan_worker(task: tuple[int, int]):
    n, max_terms = task
    profile = abc_profile(n)
    seq = evaluate_auto(InitialCondition.identity(n, zero_extended=True), max_terms)
    length = None if seq.status.is_alive else len(seq)
    return n, profile.j, profile.classification, length


def _map_tasks(worker, tasks, workers: int):
    if workers <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker, tasks, chunksize=4))


def _verify_line(n: int, report) -> str:
    if report.terminal_agreement and report.first_mismatch is None:
        return f"n={n} ok ({report.matched_through} terms, {report.actual_status})"
    if report.first_mismatch is not None:
        index, predicted, actual = report.first_mismatch
        return f"n={n} MISMATCH at {index}: predicted {predicted}, actual {actual}"
    return (
        f"n={n} TERMINAL DISAGREEMENT: predicted {report.predicted_status},"
        f" actual {report.actual_status}"
    )


def _run_verify(config: RunConfig) -> int:
    if config.to is None:
        pairs = [(config.n, verify_against_bruteforce(config.n, config.max_terms))]
    else:
        if config.to < config.n:
            raise ValidationError("--to must be >= --n")
        if config.max_terms < config.to:
            raise ValidationError("--max must cover the identity prefix of every N")
        tasks = [
            (n, config.max_terms)
            for n in range(config.n, config.to + 1)
            if not is_exceptional(n)
        ]
        pairs = _map_tasks(_verify_worker, tasks, config.workers)
    with _open_out(config.out) as out:
        for n, report in pairs:
            if config.format == "json":
                json.dump({"n": n, **report.to_json()}, out)
                out.write("\n")
            else:
                out.write(_verify_line(n, report) + "\n")
    return 0


def _run_scan(config: RunConfig) -> int:
    if config.start < 2:
        raise ValidationError("scan starts at N >= 2")
    if config.stop < config.start:
        raise ValidationError("--to must be >= --from")
    if config.max_terms < config.stop:
        raise ValidationError("--max must cover the identity prefix of every N")
    tasks = [(n, config.max_terms) for n in range(config.start, config.stop + 1)]
    rows = _map_tasks(_scan_worker, tasks, config.workers)
    with _open_out(config.out) as out:
        out.write("n,j,classification,length\n")
        for n, j, classification, length in rows:
            out.write(
                f"{n},{'' if j is None else j},"
                f"{'' if classification is None else classification},"
                f"{'alive' if length is None else length}\n"
            )
    return 0


def _tree_lines(node, depth: int):
    pad = "  " * depth
    if node.kind == "leaf":
        yield f"{pad}{node.digits}:{node.leaf_type}"
    elif node.kind == "truncated":
        yield f"{pad}{node.digits} (unresolved)"
    else:
        yield f"{pad}{node.digits or 'root'}"
        for digit in sorted(node.children):
            yield from _tree_lines(node.children[digit], depth + 1)


def _tree_json(node) -> dict:
    payload: dict = {"digits": node.digits, "kind": node.kind}
    if node.kind == "leaf":
        payload["leaf_type"] = node.leaf_type
    if node.children:
        payload["children"] = {
            str(d): _tree_json(node.children[d]) for d in sorted(node.children)
        }
    return payload


def _run_tree(config: RunConfig) -> int:
    with _open_out(config.out) as out:
        if config.locate is not None:
            digits, classification = tree_locate(config.locate)
            if config.format == "json":
                json.dump(
                    {"n": config.locate, "digits": digits, "classification": classification},
                    out,
                )
                out.write("\n")
            else:
                out.write(f"{digits}:{classification}\n")
        else:
            root = behavior_tree(config.levels)
            if config.format == "json":
                json.dump(_tree_json(root), out)
                out.write("\n")
            else:
                for line in _tree_lines(root, 0):
                    out.write(line + "\n")
    return 0


_HANDLERS = {
    "gen": _run_gen,
    "sym": _run_sym,
    "rst": _run_rst,
    "predict": _run_predict,
    "verify": _run_verify,
    "tree": _run_tree,
    "scan": _run_scan,
}


def _output_args(parser, choices, loglog=False):
    parser.add_argument("--format", choices=choices, default=choices[0], help="output format")
    parser.add_argument("--out", "-o", help="output path (default: stdout)")
    if loglog:
        parser.add_argument(
            "--loglog", action="store_true", help="write csv as log10(n),log10(value)"
        )


def _build_parser() -> _Parser:
    parser = _Parser(prog="qlab", description="Hofstadter Q-recurrence laboratory")
    parser.add_argument("--version", action="version", version=f"qlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("gen", help="run the recurrence from an initial condition")
    p.add_argument("--ic", required=True, help="initial condition, e.g. '1,1' or '0;1..50'")
    p.add_argument("--max", dest="max_terms", type=int, required=True,
                   help="total terms to attempt")
    p.add_argument("--mode", choices=("fast64", "exact"),
                   help="integer mode (default: QLAB_INT_MODE or fast64)")
    _output_args(p, ("text", "bfile", "csv", "json"), loglog=True)

    p = sub.add_parser("sym", help="derive symbolic prefix terms Q(N+k)")
    p.add_argument("--convention", choices=CONVENTIONS, default="plain")
    p.add_argument("--nmin", type=int, required=True, help="lower bound of the N range")
    p.add_argument("--nmax", type=int, help="optional upper bound of the N range")
    p.add_argument("--offsets", type=int, default=28, help="how many offsets to attempt")
    p.add_argument("--at", type=int, help="specialize the derivation at this N")
    _output_args(p, ("text", "json", "bfile", "csv"), loglog=True)

    p = sub.add_parser("rst", help="tabulate the R/S/T system")
    p.add_argument("--max", dest="max_terms", type=int, required=True,
                   help="largest n to compute")
    p.add_argument("--which", choices=("r", "s", "t", "all"), default="all")
    _output_args(p, ("text", "csv", "json", "bfile"))

    p = sub.add_parser("predict", help="emit the predicted sequence for <0-bar; 1..N>")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max", dest="max_terms", type=int, required=True,
                   help="total terms to attempt")
    _output_args(p, ("text", "bfile", "csv", "json"), loglog=True)

    p = sub.add_parser("verify", help="compare predictions against the recurrence")
    p.add_argument("--n", type=int, required=True, help="first (or only) N")
    p.add_argument("--to", type=int, help="verify the range --n..--to, skipping exceptions")
    p.add_argument("--max", dest="max_terms", type=int, required=True,
                   help="terms to compare per N")
    p.add_argument("--workers", type=int, default=1, help="parallel processes")
    _output_args(p, ("text", "json"))

    p = sub.add_parser("tree", help="print or query the classification tree")
    p.add_argument("--levels", type=int, default=3, help="depth to expand")
    p.add_argument("--locate", type=int, help="report the leaf containing this N")
    _output_args(p, ("text", "json"))

    p = sub.add_parser("scan", help="classification and observed length for a range of N")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--max", dest="max_terms", type=int, required=True,
                   help="terms to attempt per N")
    p.add_argument("--workers", type=int, default=1, help="parallel processes")
    p.add_argument("--out", "-o", help="output path (default: stdout)")

    return parser


def run(config: RunConfig) -> int:
    return _HANDLERS[config.command](config)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 1
    config = RunConfig(**vars(args))
    try:
        return run(config)
    except (DivisibilityError, AssertionError) as exc:
        print(f"qlab: internal error: {exc}", file=sys.stderr)
        return 2
    except (QlabError, OSError) as exc:
        print(f"qlab: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
