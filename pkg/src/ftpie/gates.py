"""Closed-form failure probabilities of single gates with independent inputs."""
from __future__ import annotations

import math
from typing import Sequence

from .errors import OutOfRangeError
from .model import And, Nand, Nor, Not, Or, Xor


def _checked(ps: Sequence[float]) -> list[float]:
    ps = [float(p) for p in ps]
    for p in ps:
        if not 0.0 <= p <= 1.0:
            raise OutOfRangeError(f"probability {p!r} outside [0, 1]")
    return ps


def and_prob(ps: Sequence[float]) -> float:
    """Product of input probabilities (1 for no inputs)."""
    return math.prod(_checked(ps))


def or_prob(ps: Sequence[float]) -> float:
    """1 - prod(1 - p_i) (0 for no inputs)."""
    return 1.0 - math.prod(1.0 - p for p in _checked(ps))


def nor_prob(ps: Sequence[float]) -> float:
    return math.prod(1.0 - p for p in _checked(ps))


def nand_prob(neg: Sequence[float], pos: Sequence[float]) -> float:
    """prod(1 - p) over the complemented inputs times prod(p) over the normal ones."""
    return math.prod(1.0 - p for p in _checked(neg)) * math.prod(_checked(pos))


def xor_prob(a: float, b: float) -> float:
    a, b = _checked([a, b])
    return (1.0 - a) * b + a * (1.0 - b)


def not_prob(a: float) -> float:
    (a,) = _checked([a])
    return 1.0 - a


def gate_prob(gate, probs) -> float:
    """Closed form for ``gate`` whose operands have the probabilities in ``probs``."""
    if isinstance(gate, And):
        return and_prob([probs[i] for i in gate.inputs])
    if isinstance(gate, Or):
        return or_prob([probs[i] for i in gate.inputs])
    if isinstance(gate, Nor):
        return nor_prob([probs[i] for i in gate.inputs])
    if isinstance(gate, Nand):
        return nand_prob([probs[i] for i in gate.negated], [probs[i] for i in gate.normal])
    if isinstance(gate, Xor):
        return xor_prob(probs[gate.a], probs[gate.b])
    if isinstance(gate, Not):
        return not_prob(probs[gate.a])
    raise TypeError(f"not a gate: {gate!r}")
