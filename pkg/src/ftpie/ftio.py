"""Line-oriented ``.ft`` text format.

::

    event A exp rate=0.001
    event B weibull shape=1.5 scale=2000
    event C prob p=0.25
    gate G nand ~A B        # ~ marks a complemented (non-occurring) input
    gate T or G C
    toplevel T
"""
from __future__ import annotations

import math
import re

from .distributions import Exponential, FixedProb, Weibull
from .errors import (
    BadArityError,
    FaultTreeError,
    NandMissingTildeError,
    NandTildeOutsideNandError,
    ParseError,
)
from .model import ID_RE, And, FaultTree, Nand, Nor, Not, Or, Xor, build_tree, check_arity, natural_key

_TOKEN = re.compile(r"\S+")
_GATE_KINDS = ("and", "or", "nor", "nand", "xor", "not")
_DIST_PARAMS = {"exp": ("rate",), "weibull": ("shape", "scale"), "prob": ("p",)}


def _tokens(line):
    body = line.split("#", 1)[0]
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(body)]


def _ident(tok, col, lineno):
    if not ID_RE.match(tok):
        raise ParseError(f"invalid identifier {tok!r}", line=lineno, column=col)
    return tok


def _param(tok, col, lineno, name):
    key, sep, value = tok.partition("=")
    if not sep or key != name:
        raise ParseError(f"expected {name}=<number>, got {tok!r}", line=lineno, column=col)
    try:
        x = float(value)
    except ValueError:
        raise ParseError(f"invalid number {value!r}", line=lineno, column=col + len(key) + 1) from None
    if not math.isfinite(x):
        raise ParseError(f"non-finite number {value!r}", line=lineno, column=col + len(key) + 1)
    return x


def _parse_event(toks, lineno):
    if len(toks) < 3:
        raise ParseError("expected: event ID exp|weibull|prob PARAMS", line=lineno, column=1)
    name = _ident(*toks[1], lineno)
    dist, dcol = toks[2]
    if dist not in _DIST_PARAMS:
        raise ParseError(f"unknown distribution {dist!r} (expected exp, weibull or prob)", line=lineno, column=dcol)
    names = _DIST_PARAMS[dist]
    params = toks[3:]
    if len(params) != len(names):
        col = params[len(names)][1] if len(params) > len(names) else dcol
        raise ParseError(f"{dist} takes exactly: {' '.join(n + '=' for n in names)}", line=lineno, column=col)
    values = [_param(tok, col, lineno, key) for (tok, col), key in zip(params, names)]
    try:
        model = {"exp": Exponential, "weibull": Weibull, "prob": FixedProb}[dist](*values)
    except ValueError as exc:
        raise ParseError(str(exc), line=lineno, column=dcol) from None
    return name, model


def _parse_gate(toks, lineno):
    if len(toks) < 3:
        raise ParseError("expected: gate ID KIND OPERAND...", line=lineno, column=1)
    name = _ident(*toks[1], lineno)
    kind, kcol = toks[2]
    if kind not in _GATE_KINDS:
        raise ParseError(f"unknown gate kind {kind!r}", line=lineno, column=kcol)
    operands = []  # (id, negated)
    rest = toks[3:]
    i = 0
    while i < len(rest):
        tok, col = rest[i]
        negated = tok.startswith("~")
        if negated:
            if kind != "nand":
                raise NandTildeOutsideNandError("'~' is only allowed in nand gates", line=lineno, column=col)
            tok = tok[1:]
            if not tok:
                i += 1
                if i == len(rest):
                    raise ParseError("'~' must be followed by an identifier", line=lineno, column=col)
                tok = rest[i][0]
        operands.append((_ident(tok, col, lineno), negated))
        i += 1
    ids = tuple(x for x, _ in operands)
    if kind == "nand":
        neg = tuple(x for x, n in operands if n)
        pos = tuple(x for x, n in operands if not n)
        if not neg or not pos:
            raise NandMissingTildeError("nand needs at least one '~' operand and one plain operand",
                                        line=lineno, column=kcol)
        gate = Nand(neg, pos)
    elif kind in ("xor", "not"):
        want = 2 if kind == "xor" else 1
        if len(ids) != want:
            raise BadArityError(f"{kind} takes exactly {want} input(s), got {len(ids)}", node=name,
                                line=lineno, column=kcol)
        gate = Xor(*ids) if kind == "xor" else Not(*ids)
    else:
        gate = {"and": And, "or": Or, "nor": Nor}[kind](ids)
    try:
        check_arity(name, gate)
    except FaultTreeError as exc:
        exc.line, exc.column = lineno, kcol
        raise
    return name, gate


def parse_ft(text: str) -> FaultTree:
    events, gates, tops = [], [], []
    where: dict[str, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = _tokens(line)
        if not toks:
            continue
        keyword, col = toks[0]
        if keyword == "event":
            name, model = _parse_event(toks, lineno)
            events.append((name, model))
        elif keyword == "gate":
            name, gate = _parse_gate(toks, lineno)
            gates.append((name, gate))
        elif keyword == "toplevel":
            if len(toks) != 2:
                raise ParseError("expected: toplevel ID", line=lineno, column=col)
            name = _ident(*toks[1], lineno)
            tops.append((name, lineno))
            continue
        else:
            raise ParseError(f"unknown declaration {keyword!r}", line=lineno, column=col)
        where[name] = lineno  # duplicates report the later line
    if len(tops) != 1:
        line = tops[1][1] if len(tops) > 1 else None
        raise ParseError("exactly one toplevel declaration is required", line=line)
    top, top_line = tops[0]
    where.setdefault(top, top_line)
    try:
        return build_tree(events, gates, top)
    except FaultTreeError as exc:
        if exc.line is None and exc.node in where:
            exc.line = where[exc.node]
        raise


def _fmt_number(x: float) -> str:
    return repr(float(x))


def _fmt_model(model) -> str:
    if isinstance(model, Exponential):
        return f"exp rate={_fmt_number(model.rate)}"
    if isinstance(model, Weibull):
        return f"weibull shape={_fmt_number(model.shape)} scale={_fmt_number(model.scale)}"
    return f"prob p={_fmt_number(model.p)}"


def _fmt_gate(gate) -> str:
    if isinstance(gate, Nand):
        ops = [f"~{x}" for x in gate.negated] + list(gate.normal)
    else:
        ops = list(gate.operands())
    return f"{gate.kind} {' '.join(ops)}"


def print_ft(tree: FaultTree) -> str:
    """Canonical text: events sorted by id, gates in topological order."""
    lines = [f"event {name} {_fmt_model(tree.events[name])}" for name in sorted(tree.events, key=natural_key)]
    lines += [f"gate {gid} {_fmt_gate(tree.gates[gid])}" for gid in tree.gate_order]
    lines.append(f"toplevel {tree.top}")
    return "\n".join(lines) + "\n"
