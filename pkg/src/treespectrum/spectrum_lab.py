"""Word-family experiments: per-word identity checks and spectrum statistics.

For every word ``w`` in ``{2, ..., q+1}^m`` the lab computes the continuant
product ``D_w = K_m * K_{m-1}``, the tree count of the simple graph, and
checks the identities that tie them together.  ``run_spectrum`` aggregates
these into distinct-value counts and divisor-fiber statistics.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from gmpy2 import iroot

from treespectrum.arithmetic import FactorizationFailed, sigma0
from treespectrum.constructions import (
    ConstructionParams,
    InconsistentBlocks,
    build_multigraph,
    build_simple_graph,
    extract_blocks,
    pad_graph,
)
from treespectrum.continuants import Word, as_word, continuant_pair, reconstruct_word
from treespectrum.exact_linalg import det
from treespectrum.tree_count import enumeration_cost, tau_enumerate, tau_kirchhoff

log = logging.getLogger(__name__)

DEFAULT_WORD_BUDGET = 10**6
DEFAULT_ETA = Fraction(1, 10)
FLAG_NAMES = (
    "multigraph_identity",
    "divisibility",
    "factorization",
    "padding",
    "block_zero_pattern",
    "enumeration",
)


class BudgetExceeded(RuntimeError):
    pass


class FiberBoundViolation(RuntimeError):
    """More words share a divisor value than that value has divisors."""


def enumerate_words(m: int, q: int) -> Iterator[Word]:
    """All of ``{2, ..., q+1}^m`` in lexicographic order."""
    if m < 3 or q < 1:
        raise ValueError(f"need m >= 3 and q >= 1, got m={m}, q={q}")
    return itertools.product(range(2, q + 2), repeat=m)


def compute_divisor(word) -> int:
    word = as_word(word)
    if len(word) < 2:
        raise ValueError("D_w needs a word of length >= 2")
    hi, lo = continuant_pair(word)
    return hi * lo


@dataclass
class VerificationRecord:
    word: Word
    m: int
    q: int
    n_vertices: int
    K_m: int
    K_m_minus_1: int
    D_w: int
    tau_multigraph: int
    tau_simple: int
    det_R: Optional[int]
    pad: Optional[int] = None
    tau_padded: Optional[int] = None
    tau_enumerated: Optional[int] = None
    # None means "not run"; False is a failed identity
    flags: dict[str, Optional[bool]] = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.flags.values())

    def to_json(self) -> dict:
        big = lambda x: None if x is None else str(x)  # noqa: E731
        return {
            "word": list(self.word),
            "m": self.m,
            "q": self.q,
            "n_vertices": self.n_vertices,
            "K_m": big(self.K_m),
            "K_m_minus_1": big(self.K_m_minus_1),
            "D_w": big(self.D_w),
            "tau_multigraph": big(self.tau_multigraph),
            "tau_simple": big(self.tau_simple),
            "det_R": big(self.det_R),
            "pad": self.pad,
            "tau_padded": big(self.tau_padded),
            "tau_enumerated": big(self.tau_enumerated),
            "flags": {k: self.flags.get(k) for k in FLAG_NAMES},
            "errors": list(self.errors),
            "ok": self.ok,
        }


def verify_word(
    params: ConstructionParams,
    pad: int | None = None,
    enumeration_budget: int = 0,
) -> VerificationRecord:
    """Check every identity for one word and report each outcome separately.

    ``pad`` is the number of pendant vertices to add for the padding check
    (``None`` skips it).  The enumeration cross-check runs only when the
    simple graph fits in ``enumeration_budget``.
    """
    word = params.word
    K_m, K_m1 = continuant_pair(word)
    D = K_m * K_m1
    flags: dict[str, Optional[bool]] = dict.fromkeys(FLAG_NAMES)
    errors: list[str] = []

    tau_h = tau_kirchhoff(build_multigraph(word)).value
    flags["multigraph_identity"] = tau_h == D
    if not flags["multigraph_identity"]:
        errors.append(f"tau(H_w) = {tau_h} != D_w = {D}")

    graph = build_simple_graph(params)
    tau_g = tau_kirchhoff(graph).value
    flags["divisibility"] = tau_g > 0 and tau_g % D == 0
    if not flags["divisibility"]:
        errors.append(f"D_w = {D} does not divide tau(G_w) = {tau_g}")

    det_R = None
    try:
        blocks = extract_blocks(params)
        flags["block_zero_pattern"] = True
    except InconsistentBlocks as exc:
        flags["block_zero_pattern"] = False
        flags["factorization"] = False
        errors.append(f"block structure: {exc}")
    else:
        det_A, det_B, det_R = det(blocks.A), det(blocks.B), det(blocks.R)
        det_M = det(blocks.M)
        flags["factorization"] = (
            det_M == det_A * det_B * det_R and det_M == tau_g
            and det_A == K_m and det_B == K_m1
        )
        if not flags["factorization"]:
            errors.append(
                f"det M = {det_M}, det A * det B * det R = {det_A}*{det_B}*{det_R}, "
                f"tau = {tau_g}"
            )

    tau_pad = None
    if pad is not None:
        tau_pad = tau_kirchhoff(pad_graph(graph, graph.n + pad)).value
        flags["padding"] = tau_pad == tau_g
        if not flags["padding"]:
            errors.append(f"padded tau {tau_pad} != tau {tau_g}")

    tau_enum = None
    if enumeration_budget and enumeration_cost(graph) <= enumeration_budget:
        tau_enum = tau_enumerate(graph, budget=enumeration_budget).value
        flags["enumeration"] = tau_enum == tau_g
        if not flags["enumeration"]:
            errors.append(f"enumeration gives {tau_enum}, Kirchhoff {tau_g}")

    return VerificationRecord(
        word=word, m=params.m, q=params.q, n_vertices=graph.n,
        K_m=K_m, K_m_minus_1=K_m1, D_w=D,
        tau_multigraph=tau_h, tau_simple=tau_g, det_R=det_R,
        pad=pad, tau_padded=tau_pad, tau_enumerated=tau_enum,
        flags=flags, errors=errors,
    )


def lower_bound_estimate(m: int, q: int, eta: Fraction | int | str, precision_bits: int = 64) -> Fraction:
    """Certified rational lower bound on ``q^m / ((q+1)^(2 eta m) * N^(eta N))``.

    With ``eta = a/b`` the denominator is ``X^(a/b)`` for the integer
    ``X = (q+1)^(2m) * N^N``; its ``b``-th root is rounded up at
    ``precision_bits`` of fractional precision, so the quotient is rounded
    down.
    """
    if m < 3 or q < 1:
        raise ValueError(f"need m >= 3 and q >= 1, got m={m}, q={q}")
    eta = Fraction(eta)
    if eta <= 0:
        raise ValueError(f"eta must be positive, got {eta}")
    N = 4 * m + q - 1
    a, b = eta.numerator, eta.denominator
    X = (q + 1) ** (2 * m) * N ** N
    scale = 1 << precision_bits
    root, exact = iroot(X ** a * scale ** b, b)
    upper = Fraction(int(root) + (0 if exact else 1), scale)
    return Fraction(q ** m) / upper


@dataclass
class SpectrumReport:
    m: int
    q: int
    eta: Fraction
    total_words: int
    distinct_pairs: int
    distinct_divisors: int
    distinct_tree_counts: int
    max_divisor_fiber: int
    divisor_fiber_histogram: dict[int, int]
    sigma0_bound_satisfied: bool
    informational_lower_bound: Fraction
    divisors: list[int]
    tree_counts: list[int]
    reconstruction_ok: bool
    all_verified: bool
    max_sigma0_tau: Optional[int]
    count_chaining_satisfied: Optional[bool]
    records: list[VerificationRecord] = field(repr=False, default_factory=list)

    def to_json(self, include_records: bool = True) -> dict:
        doc = {
            "m": self.m,
            "q": self.q,
            "n_vertices": 4 * self.m + self.q - 1,
            "eta": str(self.eta),
            "total_words": self.total_words,
            "distinct_pairs": self.distinct_pairs,
            "distinct_divisors": self.distinct_divisors,
            "distinct_tree_counts": self.distinct_tree_counts,
            "max_divisor_fiber": self.max_divisor_fiber,
            "divisor_fiber_histogram": {str(k): v for k, v in sorted(self.divisor_fiber_histogram.items())},
            "sigma0_bound_satisfied": self.sigma0_bound_satisfied,
            "informational_lower_bound": {
                "value": str(self.informational_lower_bound),
                "status": "asymptotic, not asserted",
            },
            "divisors": [str(d) for d in self.divisors],
            "tree_counts": [str(t) for t in self.tree_counts],
            "reconstruction_ok": self.reconstruction_ok,
            "all_verified": self.all_verified,
            "max_sigma0_tau": self.max_sigma0_tau,
            "count_chaining_satisfied": self.count_chaining_satisfied,
        }
        if include_records:
            doc["records"] = [r.to_json() for r in self.records]
        return doc


def _verify_chunk(args: tuple[int, int, list[Word], int | None]) -> list[VerificationRecord]:
    m, q, words, pad = args
    return [verify_word(ConstructionParams(m, q, w), pad=pad) for w in words]


def run_spectrum(
    m: int,
    q: int,
    eta: Fraction | int | str = DEFAULT_ETA,
    word_budget: int = DEFAULT_WORD_BUDGET,
    pad: int | None = None,
    workers: int = 1,
) -> SpectrumReport:
    """Verify every word of ``{2..q+1}^m`` and summarise the value spectrum.

    Raises :class:`FiberBoundViolation` if some divisor value is hit by more
    words than it has divisors, which injectivity of the continuant pair
    rules out.
    """
    if m < 3 or q < 1:
        raise ValueError(f"need m >= 3 and q >= 1, got m={m}, q={q}")
    total = q ** m
    if total > word_budget:
        raise BudgetExceeded(f"{total} words exceeds the budget of {word_budget}")

    words = list(enumerate_words(m, q))
    if workers > 1:
        size = max(1, len(words) // (4 * workers))
        chunks = [(m, q, words[i:i + size], pad) for i in range(0, len(words), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = [r for part in pool.map(_verify_chunk, chunks) for r in part]
    else:
        records = _verify_chunk((m, q, words, pad))

    pairs = set()
    reconstruction_ok = True
    fibers: Counter[int] = Counter()
    for rec in records:
        pair = (rec.K_m, rec.K_m_minus_1)
        pairs.add(pair)
        if reconstruct_word(pair) != rec.word:
            reconstruction_ok = False
            log.error("reconstruction failed for %s", rec.word)
        fibers[rec.D_w] += 1

    for D, size in fibers.items():
        if size > 1 and size > sigma0(D):
            raise FiberBoundViolation(f"{size} words share D = {D}, but sigma0(D) = {sigma0(D)}")
    histogram = Counter(fibers.values())

    divisors = sorted(fibers)
    tree_counts = sorted({rec.tau_simple for rec in records})

    # every tree count T absorbs at most sigma0(T) distinct divisor values
    try:
        max_s0 = max(sigma0(t) for t in tree_counts)
    except FactorizationFailed as exc:
        log.warning("count chaining skipped: %s", exc)
        max_s0, chaining = None, None
    else:
        chaining = len(tree_counts) * max_s0 >= len(divisors)

    return SpectrumReport(
        m=m, q=q, eta=Fraction(eta),
        total_words=total,
        distinct_pairs=len(pairs),
        distinct_divisors=len(divisors),
        distinct_tree_counts=len(tree_counts),
        max_divisor_fiber=max(fibers.values()),
        divisor_fiber_histogram=dict(sorted(histogram.items())),
        sigma0_bound_satisfied=True,
        informational_lower_bound=lower_bound_estimate(m, q, eta),
        divisors=divisors,
        tree_counts=tree_counts,
        reconstruction_ok=reconstruction_ok,
        all_verified=all(r.ok for r in records) and reconstruction_ok and len(pairs) == total,
        max_sigma0_tau=max_s0,
        count_chaining_satisfied=chaining,
        records=records,
    )


def records_to_csv(records: list[VerificationRecord]) -> str:
    """One row per word: ``word;K_m;K_m-1;D_w;tau;flags``.

    The word is comma-separated, flags are ``name=1|0|-`` joined by ``|``
    (``-`` for a check that did not run).
    """
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=";", lineterminator="\n")
    writer.writerow(["word", "K_m", "K_m-1", "D_w", "tau", "flags"])
    code = {True: "1", False: "0", None: "-"}
    for r in records:
        writer.writerow([
            ",".join(map(str, r.word)), r.K_m, r.K_m_minus_1, r.D_w, r.tau_simple,
            "|".join(f"{k}={code[r.flags.get(k)]}" for k in FLAG_NAMES),
        ])
    return buf.getvalue()


def report_to_json_text(report: SpectrumReport) -> str:
    return json.dumps(report.to_json(), indent=2) + "\n"


def load_schema(name: str) -> dict:
    """The published JSON schema ``"verify"`` or ``"spectrum"``."""
    from importlib.resources import files

    return json.loads(files("treespectrum").joinpath("schemas", f"{name}.schema.json").read_text())
