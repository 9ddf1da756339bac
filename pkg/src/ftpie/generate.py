"""Random fault trees for property tests and benchmarks."""
from __future__ import annotations

import numpy as np

from .cutsets import mcs
from .distributions import FixedProb
from .model import And, FaultTree, Nand, Nor, Not, Or, Xor, build_tree


def random_tree(rng: np.random.Generator, n_events: int = 8, max_depth: int = 4, max_fanin: int = 4,
                coherent: bool = True, leaf_bias: float = 0.3, or_weight: float = 0.6) -> FaultTree:
    """Random tree over ``n_events`` FixedProb events; events may be shared between gates.

    ``or_weight`` is the chance that a coherent gate is an Or; it is ignored
    for non-coherent trees, which draw all six kinds uniformly.
    """
    names = [f"e{i}" for i in range(n_events)]
    events = [(name, FixedProb(float(rng.random()))) for name in names]
    gates = []
    kinds = ["and", "or", "nor", "nand", "xor", "not"]

    def node(depth):
        if depth > 0 and (depth == max_depth or rng.random() < leaf_bias):
            return names[rng.integers(n_events)]
        if coherent:
            kind = "or" if rng.random() < or_weight else "and"
        else:
            kind = kinds[rng.integers(len(kinds))]
        gid = f"g{len(gates)}"
        gates.append(None)
        slot = len(gates) - 1
        if kind == "not":
            gate = Not(node(depth + 1))
        elif kind == "xor":
            a = node(depth + 1)
            b = node(depth + 1)
            gate = Xor(a, b) if a != b else Or((a, b))
        else:
            ins = tuple(node(depth + 1) for _ in range(rng.integers(2, max_fanin + 1)))
            if kind == "nand":
                split = int(rng.integers(1, len(ins)))
                gate = Nand(ins[:split], ins[split:])
            else:
                gate = {"and": And, "or": Or, "nor": Nor}[kind](ins)
        gates[slot] = (gid, gate)
        return gid

    top = node(0)
    return build_tree(events, gates, top)


def random_coherent_tree(rng: np.random.Generator, n_events: int = 8, max_depth: int = 4, max_fanin: int = 4,
                         max_mcs: int = 16) -> FaultTree:
    """Coherent random tree with at most ``max_mcs`` minimal cut sets (redrawn until it fits)."""
    while True:
        tree = random_tree(rng, n_events, max_depth, max_fanin, coherent=True)
        if len(mcs(tree)) <= max_mcs:
            return tree
