"""Solar-array fault tree of the DFH-3 satellite and its closed-form failure probability."""
from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

from .cutsets import canonical_order, mcs
from .distributions import Exponential, assign_probabilities
from .model import And, FaultTree, Or, build_tree
from .oracle import enum_prob
from .pie import pie_sum

EVENTS = tuple(f"x{i}" for i in range(1, 15))

# top-level branches, in wiring order
BRANCH_LABELS = {
    "unlock": "A: unlock mechanism",
    "deployment": "B: deployment process",
    "locking": "C: locking process",
    "orientation": "D: orientation process",
    "mechanical": "E: mechanical parts",
}

# the 13 minimal cut sets, canonical order
LEMMA_MCS = canonical_order(
    [frozenset([e]) for e in ("x1", "x2", "x3", "x4")] + [frozenset(["x5", "x6"])]
    + [frozenset([f"x{i}"]) for i in range(7, 15)]
)


def check_rates(rates: Sequence[float]) -> tuple[float, ...]:
    rates = tuple(float(c) for c in rates)
    if len(rates) != 14:
        raise ValueError(f"need 14 failure rates, got {len(rates)}")
    for i, c in enumerate(rates, 1):
        if not (math.isfinite(c) and c >= 0):
            raise ValueError(f"rate c{i} must be finite and >= 0, got {c!r}")
    return rates


def solar_tree(rates: Sequence[float]) -> FaultTree:
    """The redundant (pre-minimisation) tree: x3 sits under four different OR gates."""
    rates = check_rates(rates)
    events = [(name, Exponential(c)) for name, c in zip(EVENTS, rates)]
    gates = [
        ("top", Or(("unlock", "deployment", "locking", "orientation", "mechanical"))),
        ("unlock", Or(("x1", "x2"))),
        ("deployment", Or(("d_or34", "d_and56", "d_or378"))),
        ("d_or34", Or(("x3", "x4"))),
        ("d_and56", And(("x5", "x6"))),
        ("d_or378", Or(("x3", "x7", "x8"))),
        ("locking", Or(("x3", "x9"))),
        ("orientation", Or(("x10", "x11"))),
        ("mechanical", Or(("x12", "x13", "m_or314"))),
        ("m_or314", Or(("x3", "x14"))),
    ]
    return build_tree(events, gates, "top", labels=BRANCH_LABELS)


def solar_ft_text() -> str:
    return resources.files("ftpie").joinpath("data/solar.ft").read_text(encoding="utf-8")


def _f(c, t):
    return -math.expm1(-c * t)


def _one_minus_exp_prod(groups, t):
    # [1 - prod(1 - exp(-c t)) over each group]
    return [1.0 - math.prod(_f(c, t) for c in g) for g in groups]


def eq5_eval(rates: Sequence[float], t: float) -> float:
    """The published closed form, evaluated term by term as printed.

    The cross terms treat the overlapping compound events as independent, so
    this differs from the exact probability whenever c5 and c6 are both
    non-zero. Use :func:`compare_solar` to see by how much.
    """
    c = (0.0,) + check_rates(rates)  # 1-based
    if t < 0:
        raise ValueError("mission time must be >= 0")
    group_a = [1, 2, 3, 4]
    group_c = list(range(7, 15))
    f_a = _f(sum(c[i] for i in group_a), t)
    f_b = _f(c[5], t) * _f(c[6], t)
    f_c = _f(sum(c[i] for i in group_c), t)
    ab = 1.0 - math.prod(_one_minus_exp_prod([[c[i], c[5], c[6]] for i in group_a], t))
    bc = 1.0 - math.prod(_one_minus_exp_prod([[c[5], c[6], c[i]] for i in group_c], t))
    return f_a + f_b + f_c - ab - f_a * f_c - bc + ab * f_c


@dataclass(frozen=True)
class SolarComparison:
    time: float
    pie: float
    enum: float
    eq5: float
    terms: int
    delta_pie_enum: float
    delta_eq5_enum: float


def compare_solar(rates: Sequence[float], t: float) -> SolarComparison:
    """Evaluate the solar array three ways: PIE over the minimal cut sets, full enumeration, closed form."""
    tree = solar_tree(rates)
    assignment = assign_probabilities(tree, t)
    cs = mcs(tree)
    pie, terms = pie_sum(cs, assignment)
    pie = min(1.0, max(0.0, pie))
    exact = enum_prob(tree, assignment)
    eq5 = eq5_eval(rates, t)
    return SolarComparison(float(t), pie, exact, eq5, terms, abs(pie - exact), abs(eq5 - exact))
