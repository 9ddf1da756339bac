"""Ground-truth evaluators: exhaustive state enumeration and seeded Monte Carlo.

Monte Carlo draws come from a counter-based generator. The uniform variate for
basic event ``e`` (index in tree order) in sample ``i`` is the SplitMix64
output at stream position ``c = i * n_events + e``::

    z = seed + (c + 1) * 0x9E3779B97F4A7C15          (mod 2**64)
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)
    u = (z >> 11) * 2**-53

and the event occurs when ``u < p_e``. Every draw is a pure function of
(seed, sample, event), so splitting the sample range across workers does not
change the result. This mapping is part of the stable interface.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from . import _kernels
from .errors import EnumTooLargeError, MissingEventError, OutOfRangeError
from .model import FaultTree

MAX_ENUM_EVENTS = 24


@dataclass(frozen=True)
class McEstimate:
    estimate: float
    std_error: float
    samples: int
    seed: int


def probability_vector(tree: FaultTree, assignment: Mapping[str, float]) -> np.ndarray:
    """Assignment as a float array in tree event order."""
    out = np.empty(len(tree.events), dtype=np.float64)
    for i, name in enumerate(tree.events):
        try:
            p = float(assignment[name])
        except KeyError:
            raise MissingEventError(f"no probability for event {name!r}", node=name) from None
        if not 0.0 <= p <= 1.0:
            raise OutOfRangeError(f"probability of {name!r} is {p!r}, outside [0, 1]", node=name)
        out[i] = p
    return out


def _split(total, parts):
    parts = max(1, min(parts, total))
    bounds = [total * k // parts for k in range(parts + 1)]
    return list(zip(bounds[:-1], bounds[1:]))


def _run(fn, ranges, workers):
    if workers <= 1 or len(ranges) == 1:
        return [fn(lo, hi) for lo, hi in ranges]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda r: fn(*r), ranges))


def enum_prob(tree: FaultTree, assignment: Mapping[str, float], *, workers: int = 1) -> float:
    """Exact P(top) by summing the weight of every state in which the top event occurs."""
    n = len(tree.events)
    if n > MAX_ENUM_EVENTS:
        raise EnumTooLargeError(f"{n} basic events exceeds the enumeration limit of {MAX_ENUM_EVENTS}")
    p = probability_vector(tree, assignment)
    prog = tree.program
    k = _kernels.active()

    def part(lo, hi):
        return k.enum_sum(prog.kind, prog.start, prog.inputs, prog.negate, prog.top, n, p, lo, hi)

    return math.fsum(_run(part, _split(1 << n, workers), workers))


def mc_prob(tree: FaultTree, assignment: Mapping[str, float], samples: int, seed: int, *,
            workers: int = 1) -> McEstimate:
    """Monte Carlo estimate of P(top) from ``samples`` independent system draws."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not 0 <= seed < 2 ** 64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    p = probability_vector(tree, assignment)
    prog = tree.program
    n = prog.n_events
    k = _kernels.active()
    useed = np.uint64(seed)

    def part(lo, hi):
        return k.mc_count(prog.kind, prog.start, prog.inputs, prog.negate, prog.top, n, p, useed, lo, hi)

    hits = sum(_run(part, _split(samples, workers), workers))
    est = hits / samples
    return McEstimate(est, math.sqrt(est * (1.0 - est) / samples), samples, seed)
