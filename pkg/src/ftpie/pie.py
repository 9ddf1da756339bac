"""Top-event probability by inclusion-exclusion over minimal cut sets.

Valid only when the basic events are mutually independent; nothing here
checks that.
"""
from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import _kernels
from .cutsets import mcs as minimal_cut_sets
from .distributions import assign_probabilities
from .errors import MissingEventError, NumericalError, TooManyCutSetsError
from .oracle import _run, _split, enum_prob, mc_prob

DEFAULT_MAX_PIE_CUT_SETS = 25
EPS = 1e-9
INDEPENDENCE_NOTE = "valid only if basic events are mutually independent"


@dataclass(frozen=True)
class PieTerm:
    subset: frozenset[int]
    sign: int
    merged_events: frozenset[str]
    value: float


def _prob(assignment, event):
    try:
        return float(assignment[event])
    except KeyError:
        raise MissingEventError(f"no probability for event {event!r}", node=event) from None


def intersection_prob(cut_sets: Iterable[Iterable[str]], assignment: Mapping[str, float]) -> float:
    """P(all cut sets occur): product over the distinct events of their union."""
    merged = set().union(*map(set, cut_sets))
    return math.prod(_prob(assignment, e) for e in merged)


def pie_term_count(q: int) -> int:
    if q < 1:
        raise ValueError("need at least one cut set")
    return 2 ** q - 1


def pie_terms(mcs: Sequence[Iterable[str]], assignment: Mapping[str, float]) -> Iterator[PieTerm]:
    """Every signed term, in bitmask order. Slow; meant for inspection and tests."""
    sets = [frozenset(c) for c in mcs]
    for mask in range(1, 1 << len(sets)):
        subset = frozenset(i for i in range(len(sets)) if mask >> i & 1)
        merged = frozenset().union(*(sets[i] for i in subset))
        yield PieTerm(subset, (-1) ** (len(subset) + 1), merged, intersection_prob([merged], assignment))


def pie_sum(mcs: Sequence[Iterable[str]], assignment: Mapping[str, float], *,
            max_cut_sets: int = DEFAULT_MAX_PIE_CUT_SETS, workers: int = 1) -> tuple[float, int]:
    """Unclamped inclusion-exclusion sum and the number of terms evaluated."""
    sets = [sorted(c) for c in mcs]
    q = len(sets)
    if q == 0:
        raise ValueError("empty cut-set list")
    if q > max_cut_sets:
        raise TooManyCutSetsError(f"{q} cut sets exceeds the inclusion-exclusion limit of {max_cut_sets} "
                                  f"({pie_term_count(q)} terms)")
    names = sorted({e for c in sets for e in c})
    index = {e: i for i, e in enumerate(names)}
    p = np.array([_prob(assignment, e) for e in names], dtype=np.float64)
    members = np.array([index[e] for c in sets for e in c], dtype=np.int64)
    offsets = np.cumsum([0] + [len(c) for c in sets]).astype(np.int64)
    k = _kernels.active()

    def part(lo, hi):
        return k.pie_sum(members, offsets, p, lo, hi)

    # mask 0 (empty subset) is not a term
    ranges = [(lo + 1, hi + 1) for lo, hi in _split((1 << q) - 1, workers)]
    results = _run(part, ranges, workers)
    return math.fsum(r[0] for r in results), sum(r[1] for r in results)


def pie_probability(mcs: Sequence[Iterable[str]], assignment: Mapping[str, float], *,
                    max_cut_sets: int = DEFAULT_MAX_PIE_CUT_SETS, workers: int = 1) -> float:
    total, _ = pie_sum(mcs, assignment, max_cut_sets=max_cut_sets, workers=workers)
    return _clamp(total)


def _clamp(x):
    if not -EPS <= x <= 1.0 + EPS:
        raise NumericalError(f"inclusion-exclusion sum {x!r} is outside [0, 1] beyond tolerance {EPS}")
    return min(1.0, max(0.0, x))


@dataclass(frozen=True)
class AnalysisReport:
    method: str
    time: float
    probability: float
    terms: int | None = None
    samples: int | None = None
    std_error: float | None = None
    seed: int | None = None
    elapsed: float = 0.0
    note: str = INDEPENDENCE_NOTE

    def to_json_dict(self) -> dict:
        """Flat dict for ``--json`` output; unset optional fields are omitted."""
        d = {"method": self.method, "time": self.time, "probability": self.probability}
        for key in ("terms", "samples", "std_error"):
            if getattr(self, key) is not None:
                d[key] = getattr(self, key)
        return d

    def as_dict(self) -> dict:
        return asdict(self)


def top_probability(tree, t: float, method: str = "pie", *, samples: int = 1_000_000, seed: int = 42,
                    workers: int = 1, max_cut_sets: int = DEFAULT_MAX_PIE_CUT_SETS) -> AnalysisReport:
    """Assign probabilities at mission time ``t`` and evaluate the top event."""
    started = time.perf_counter()
    assignment = assign_probabilities(tree, t)
    if method == "pie":
        cs = minimal_cut_sets(tree)
        total, terms = pie_sum(cs, assignment, max_cut_sets=max_cut_sets, workers=workers)
        report = dict(probability=_clamp(total), terms=terms)
    elif method == "enum":
        report = dict(probability=enum_prob(tree, assignment, workers=workers), terms=1 << len(tree.events))
    elif method == "mc":
        est = mc_prob(tree, assignment, samples, seed, workers=workers)
        report = dict(probability=est.estimate, samples=est.samples, std_error=est.std_error, seed=seed)
    else:
        raise ValueError(f"unknown method {method!r} (expected pie, enum or mc)")
    return AnalysisReport(method=method, time=float(t), elapsed=time.perf_counter() - started, **report)
