"""Fault tree data structure, validation and the boolean structure function."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from .distributions import LifetimeModel
from .errors import (
    BadArityError,
    CycleError,
    DuplicateIdError,
    IncompleteStateError,
    UnknownReferenceError,
    ValidationError,
)

ID_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class And:
    inputs: tuple[str, ...]
    kind = "and"

    def operands(self):
        return self.inputs


@dataclass(frozen=True)
class Or:
    inputs: tuple[str, ...]
    kind = "or"

    def operands(self):
        return self.inputs


@dataclass(frozen=True)
class Nor:
    inputs: tuple[str, ...]
    kind = "nor"

    def operands(self):
        return self.inputs


@dataclass(frozen=True)
class Nand:
    """Occurs when every ``negated`` input has NOT occurred and every ``normal`` input has.

    This is not the complement of And.
    """

    negated: tuple[str, ...]
    normal: tuple[str, ...]
    kind = "nand"

    def operands(self):
        return self.negated + self.normal


@dataclass(frozen=True)
class Xor:
    a: str
    b: str
    kind = "xor"

    def operands(self):
        return (self.a, self.b)


@dataclass(frozen=True)
class Not:
    a: str
    kind = "not"

    def operands(self):
        return (self.a,)


GATE_TYPES = (And, Or, Nor, Nand, Xor, Not)
COHERENT_KINDS = ("and", "or")


def natural_key(name: str):
    """Sort key putting ``x2`` before ``x10``."""
    return tuple((0, int(tok), "") if tok.isdigit() else (1, 0, tok) for tok in re.findall(r"\d+|\D+", name))


def check_arity(gid: str, gate) -> None:
    if isinstance(gate, (And, Or, Nor)):
        if len(gate.inputs) < 2:
            raise BadArityError(f"gate {gid!r}: {gate.kind} needs at least 2 inputs, got {len(gate.inputs)}", node=gid)
    elif isinstance(gate, Nand):
        if not gate.negated or not gate.normal:
            raise BadArityError(f"gate {gid!r}: nand needs at least one negated and one normal input", node=gid)
    elif isinstance(gate, Xor):
        if gate.a == gate.b:
            raise BadArityError(f"gate {gid!r}: xor needs 2 distinct inputs", node=gid)
    elif not isinstance(gate, GATE_TYPES):
        raise ValidationError(f"gate {gid!r}: unknown gate type {type(gate).__name__}", node=gid)


@dataclass(frozen=True, eq=False)
class FaultTree:
    """Validated, immutable fault tree. Construct with :func:`build_tree`."""

    events: Mapping[str, LifetimeModel]
    gates: Mapping[str, object]
    top: str
    labels: Mapping[str, str] = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, FaultTree):
            return NotImplemented
        return (dict(self.events), dict(self.gates), self.top) == (dict(other.events), dict(other.gates), other.top)

    def __hash__(self):
        return hash((self.top, frozenset(self.events), frozenset(self.gates)))

    @property
    def event_names(self) -> list[str]:
        return list(self.events)

    @cached_property
    def gate_order(self) -> tuple[str, ...]:
        """Gates in topological order (inputs before users), deterministic."""
        order = []
        seen = set()
        for root in sorted(self.gates, key=natural_key):
            _topo_visit(root, self.gates, seen, set(), order)
        return tuple(order)

    @property
    def is_coherent(self) -> bool:
        return all(g.kind in COHERENT_KINDS for g in self.gates.values())

    @cached_property
    def program(self) -> "Program":
        return compile_program(self)


def _topo_visit(gid, gates, done, stack, order):
    # iterative post-order DFS; raises CycleError on back edges
    if gid in done:
        return
    work = [(gid, iter(gates[gid].operands()))]
    stack.add(gid)
    while work:
        node, it = work[-1]
        for child in it:
            if child not in gates or child in done:
                continue
            if child in stack:
                raise CycleError(f"cycle through gate {child!r} (reached again from {node!r})", node=child)
            stack.add(child)
            work.append((child, iter(gates[child].operands())))
            break
        else:
            work.pop()
            stack.discard(node)
            done.add(node)
            order.append(node)


def build_tree(events: Iterable[tuple[str, LifetimeModel]], gates: Iterable[tuple[str, object]], top: str,
               labels: Mapping[str, str] | None = None) -> FaultTree:
    """Validate and assemble a :class:`FaultTree`."""
    ev: dict[str, LifetimeModel] = {}
    gt: dict[str, object] = {}
    for name, model in events:
        _check_id(name)
        if name in ev:
            raise DuplicateIdError(f"duplicate event id {name!r}", node=name)
        if model is None or not hasattr(model, "unreliability"):
            raise ValidationError(f"event {name!r} has no lifetime model", node=name)
        ev[name] = model
    for name, gate in gates:
        _check_id(name)
        if name in ev or name in gt:
            raise DuplicateIdError(f"duplicate id {name!r}", node=name)
        gt[name] = _normalize_gate(gate)
    for name, gate in gt.items():
        check_arity(name, gate)
        for ref in gate.operands():
            if ref not in ev and ref not in gt:
                raise UnknownReferenceError(f"gate {name!r} references unknown id {ref!r}", node=name)
    if top not in ev and top not in gt:
        raise UnknownReferenceError(f"top event {top!r} is not defined", node=top)
    tree = FaultTree(ev, gt, top, dict(labels or {}))
    tree.gate_order  # cycle check
    return tree


def _check_id(name):
    if not isinstance(name, str) or not ID_RE.match(name):
        raise ValidationError(f"invalid id {name!r}", node=name)


def _normalize_gate(gate):
    # accept lists from callers, store tuples
    if isinstance(gate, (And, Or, Nor)):
        return type(gate)(tuple(gate.inputs))
    if isinstance(gate, Nand):
        return Nand(tuple(gate.negated), tuple(gate.normal))
    return gate


# -- boolean semantics ---------------------------------------------------------

def gate_value(gate, values: Mapping[str, bool]) -> bool:
    """Boolean value of one gate given the values of its operands.

    Empty And is true and empty Or is false, so the conventions also hold for
    gates that bypass arity validation.
    """
    if isinstance(gate, And):
        return all(values[i] for i in gate.inputs)
    if isinstance(gate, Or):
        return any(values[i] for i in gate.inputs)
    if isinstance(gate, Nor):
        return not any(values[i] for i in gate.inputs)
    if isinstance(gate, Nand):
        return all(not values[i] for i in gate.negated) and all(values[i] for i in gate.normal)
    if isinstance(gate, Xor):
        return values[gate.a] != values[gate.b]
    if isinstance(gate, Not):
        return not values[gate.a]
    raise TypeError(f"not a gate: {gate!r}")


def structure_eval(tree: FaultTree, state: Mapping[str, bool]) -> bool:
    """Evaluate the top event for a truth assignment of the basic events."""
    values = {}
    for name in tree.events:
        try:
            values[name] = bool(state[name])
        except KeyError:
            raise IncompleteStateError(f"state has no value for event {name!r}", node=name) from None
    for gid in tree.gate_order:
        values[gid] = gate_value(tree.gates[gid], values)
    return values[tree.top]


# -- flat program for the numeric kernels --------------------------------------

KIND_CODES = {"and": 0, "or": 1, "nor": 2, "xor": 3, "not": 4}


@dataclass(frozen=True)
class Program:
    """Array form of a tree.

    Node ``i < n_events`` is basic event ``i``; node ``n_events + j`` is gate
    ``j`` in topological order. Nand is lowered to And with per-input negation.
    """

    n_events: int
    kind: np.ndarray      # int8[g]
    start: np.ndarray     # int64[g + 1]
    inputs: np.ndarray    # int64[sum of arities]
    negate: np.ndarray    # bool[sum of arities]
    top: int


def compile_program(tree: FaultTree) -> Program:
    index = {name: i for i, name in enumerate(tree.events)}
    n = len(index)
    for j, gid in enumerate(tree.gate_order):
        index[gid] = n + j
    kinds, start, inputs, negate = [], [0], [], []
    for gid in tree.gate_order:
        gate = tree.gates[gid]
        if isinstance(gate, Nand):
            kinds.append(KIND_CODES["and"])
            ops = [(x, True) for x in gate.negated] + [(x, False) for x in gate.normal]
        else:
            kinds.append(KIND_CODES[gate.kind])
            ops = [(x, False) for x in gate.operands()]
        for name, neg in ops:
            inputs.append(index[name])
            negate.append(neg)
        start.append(len(inputs))
    return Program(
        n_events=n,
        kind=np.asarray(kinds, dtype=np.int8),
        start=np.asarray(start, dtype=np.int64),
        inputs=np.asarray(inputs, dtype=np.int64),
        negate=np.asarray(negate, dtype=np.bool_),
        top=index[tree.top],
    )
