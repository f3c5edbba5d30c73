"""Command-line front end.

Exit status: 0 on success, 1 for bad input or an exceeded budget, 2 when a
verification flag comes back false.  Data goes to stdout (or ``--output``),
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from treespectrum.arithmetic import FactorizationFailed
from treespectrum.constructions import (
    ConstructionError,
    ConstructionParams,
    build_multigraph,
    build_simple_graph,
    pad_graph,
)
from treespectrum.continuants import (
    InvalidWord,
    NotAContinuantPair,
    continuant_pair,
    minus_cf,
    reconstruct_word,
)
from treespectrum.graph_model import GraphError, decode_graph, encode_graph, to_dot
from treespectrum.selftest import run_selftest
from treespectrum.spectrum_lab import (
    BudgetExceeded,
    FiberBoundViolation,
    records_to_csv,
    report_to_json_text,
    run_spectrum,
    verify_word,
)
from treespectrum.tree_count import (
    DEFAULT_ENUMERATION_BUDGET,
    EnumerationBudgetExceeded,
    tau_enumerate,
    tau_kirchhoff,
)

THREADS_ENV = "TREESPECTRUM_THREADS"

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which here means "identity failed"
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _pair(text: str) -> tuple[int, int]:
    values = _int_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected HI,LO, got {text!r}")
    return values


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 1/10, got {text!r}")


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="treespectrum", description="Continuants, spanning-tree counts and word-family spectra.")
    p.add_argument("--output", "-o", help="write data here instead of stdout")
    p.add_argument("--threads", type=int, default=_default_threads(),
                   help=f"worker processes (default ${THREADS_ENV} or 1)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    cont = sub.add_parser("continuant", help="evaluate or invert continuants")
    csub = cont.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ev = csub.add_parser("eval", help="continuant pair and minus continued fraction of a word")
    ev.add_argument("--word", type=_int_list, required=True)
    ev.add_argument("--format", choices=("plain", "json"), default="plain")
    rec = csub.add_parser("reconstruct", help="recover the word from a continuant pair")
    rec.add_argument("--pair", type=_pair, required=True)
    rec.add_argument("--format", choices=("plain", "json"), default="plain")

    b = sub.add_parser("build", help="build a graph from a word")
    b.add_argument("--kind", choices=("multigraph", "simple"), required=True)
    b.add_argument("--word", type=_int_list, required=True)
    b.add_argument("--q", type=int, help="anchor count (simple graphs; default max(word) - 1)")
    b.add_argument("--pad-to", type=int, help="pad a simple graph to this many vertices")
    b.add_argument("--format", choices=("json", "dot"), default="json")

    t = sub.add_parser("tau", help="count spanning trees of a graph document")
    t.add_argument("--input", required=True, help="canonical graph JSON file")
    t.add_argument("--method", choices=("kirchhoff", "enumerate"), default="kirchhoff")
    t.add_argument("--budget", type=int, default=DEFAULT_ENUMERATION_BUDGET)
    t.add_argument("--format", choices=("plain", "json"), default="plain")

    v = sub.add_parser("verify", help="check every identity for one word")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--q", type=int, required=True)
    v.add_argument("--word", type=_int_list, required=True)
    v.add_argument("--pad", type=int, help="pendant vertices for the padding check")
    v.add_argument("--budget", type=int, default=DEFAULT_ENUMERATION_BUDGET,
                   help="enumeration cross-check budget (0 disables)")

    s = sub.add_parser("spectrum", help="verify a whole word family and summarise it")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--eta", type=_fraction, default=Fraction(1, 10))
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--budget", type=int, default=10**6, help="maximum number of words")
    s.add_argument("--pad", type=int, help="pendant vertices for the padding check")

    st = sub.add_parser("selftest", help="run quick randomized invariant checks")
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--rounds", type=int, default=50)
    return p


def _continuant_eval(args) -> tuple[str, int]:
    hi, lo = continuant_pair(args.word)
    value = minus_cf(args.word)
    if args.format == "json":
        return json.dumps({"word": list(args.word), "pair": [str(hi), str(lo)],
                           "value": str(value)}) + "\n", EXIT_OK
    return f"pair {hi},{lo}\nvalue {value}\n", EXIT_OK


def _continuant_reconstruct(args) -> tuple[str, int]:
    word = reconstruct_word(args.pair)
    if args.format == "json":
        return json.dumps({"pair": [str(x) for x in args.pair], "word": list(word)}) + "\n", EXIT_OK
    return ",".join(map(str, word)) + "\n", EXIT_OK


def _build(args) -> tuple[str, int]:
    if args.kind == "multigraph":
        if args.pad_to is not None:
            raise ConstructionError("--pad-to applies to simple graphs only")
        graph = build_multigraph(args.word)
    else:
        q = args.q if args.q is not None else max(args.word) - 1
        graph = build_simple_graph(ConstructionParams(len(args.word), q, args.word))
        if args.pad_to is not None:
            graph = pad_graph(graph, args.pad_to)
    if args.format == "dot":
        return to_dot(graph), EXIT_OK
    return encode_graph(graph) + "\n", EXIT_OK


def _tau(args) -> tuple[str, int]:
    try:
        with open(args.input) as fh:
            graph = decode_graph(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}")
    if args.method == "kirchhoff":
        count = tau_kirchhoff(graph)
    else:
        count = tau_enumerate(graph, budget=args.budget)
    if args.format == "json":
        return json.dumps({"tau": str(count.value), "method": count.method}) + "\n", EXIT_OK
    return f"{count.value}\n", EXIT_OK


def _verify(args) -> tuple[str, int]:
    record = verify_word(ConstructionParams(args.m, args.q, args.word),
                         pad=args.pad, enumeration_budget=args.budget)
    text = json.dumps(record.to_json(), indent=2) + "\n"
    return text, EXIT_OK if record.ok else EXIT_VERIFY


def _spectrum(args) -> tuple[str, int]:
    report = run_spectrum(args.m, args.q, eta=args.eta, word_budget=args.budget,
                          pad=args.pad, workers=args.threads)
    text = records_to_csv(report.records) if args.format == "csv" else report_to_json_text(report)
    ok = report.all_verified and report.count_chaining_satisfied is not False
    return text, EXIT_OK if ok else EXIT_VERIFY


def _selftest(args) -> tuple[str, int]:
    results = run_selftest(seed=args.seed, rounds=args.rounds)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}" for r in results]
    return "\n".join(lines) + "\n", EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def dispatch(args) -> tuple[str, int]:
    """Run a parsed command; returns the output document and the exit status."""
    if args.command == "continuant":
        return (_continuant_eval if args.action == "eval" else _continuant_reconstruct)(args)
    handlers = {"build": _build, "tau": _tau, "verify": _verify,
                "spectrum": _spectrum, "selftest": _selftest}
    return handlers[args.command](args)


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        text, status = dispatch(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except NotAContinuantPair as exc:
        print(f"NotAContinuantPair: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InvalidWord, ConstructionError, GraphError, BudgetExceeded,
            EnumerationBudgetExceeded, FactorizationFailed, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FiberBoundViolation as exc:
        print(f"FiberBoundViolation: {exc}", file=sys.stderr)
        return EXIT_VERIFY

    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if status == EXIT_VERIFY:
        print("verification failed", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
