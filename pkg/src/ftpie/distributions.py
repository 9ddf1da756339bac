"""Lifetime models and their failure distribution F(t) = P(X <= t)."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union


def _check(cond, msg):
    if not cond:
        raise ValueError(msg)


@dataclass(frozen=True)
class Exponential:
    """Constant failure rate ``rate`` (per hour). ``rate == 0`` never fails."""

    rate: float

    def __post_init__(self):
        _check(math.isfinite(self.rate) and self.rate >= 0, f"exponential rate must be finite and >= 0, got {self.rate!r}")

    def unreliability(self, t: float) -> float:
        if t < 0:
            return 0.0
        return -math.expm1(-self.rate * t)


@dataclass(frozen=True)
class Weibull:
    """Scale-shape form: F(t) = 1 - exp(-(t/scale)**shape)."""

    shape: float
    scale: float

    def __post_init__(self):
        _check(math.isfinite(self.shape) and self.shape > 0, f"weibull shape must be finite and > 0, got {self.shape!r}")
        _check(math.isfinite(self.scale) and self.scale > 0, f"weibull scale must be finite and > 0, got {self.scale!r}")

    def unreliability(self, t: float) -> float:
        if t < 0:
            return 0.0
        return -math.expm1(-((t / self.scale) ** self.shape))


@dataclass(frozen=True)
class FixedProb:
    """Time-independent failure probability."""

    p: float

    def __post_init__(self):
        _check(0.0 <= self.p <= 1.0, f"probability must lie in [0, 1], got {self.p!r}")

    def unreliability(self, t: float) -> float:
        return self.p


LifetimeModel = Union[Exponential, Weibull, FixedProb]


def unreliability(model: LifetimeModel, t: float) -> float:
    if not math.isfinite(t):
        raise ValueError(f"mission time must be finite, got {t!r}")
    return model.unreliability(t)


def assign_probabilities(tree, t: float) -> dict[str, float]:
    """Failure probability of every basic event of ``tree`` at mission time ``t``."""
    return {name: unreliability(model, t) for name, model in tree.events.items()}
