"""Cut-set expansion of coherent trees and reduction to minimal cut sets."""
from __future__ import annotations

from typing import Iterable

from .errors import CutSetExplosionError, NonCoherentError
from .model import And, FaultTree, natural_key

DEFAULT_MAX_CUT_SETS = 100_000

CutSet = frozenset


def _absorb(sets: Iterable[frozenset]) -> list[frozenset]:
    # drop duplicates and supersets; smallest sets first so each kept set is minimal
    kept: list[frozenset] = []
    for s in sorted(set(sets), key=len):
        if not any(k <= s for k in kept):
            kept.append(s)
    return kept


def canonical_order(sets: Iterable[frozenset]) -> list[frozenset]:
    """Sort by size, then lexicographically by naturally-ordered member ids."""
    return sorted(sets, key=lambda s: (len(s), [natural_key(e) for e in sorted(s, key=natural_key)]))


def minimize(cs: Iterable[Iterable[str]]) -> list[frozenset]:
    """Apply idempotence and absorption; return the canonical minimal list."""
    return canonical_order(_absorb(frozenset(c) for c in cs))


def cut_sets(tree: FaultTree, *, max_cut_sets: int = DEFAULT_MAX_CUT_SETS,
             absorb: bool = True) -> list[frozenset]:
    """Expand a coherent tree into a DNF over basic events.

    Expansion runs bottom-up. With ``absorb`` (the default) intermediate lists
    are absorbed after every distribution step, so the result is already free
    of supersets; ``absorb=False`` keeps the raw, redundant expansion.
    """
    reduce = _absorb if absorb else list
    if not tree.is_coherent:
        bad = sorted({g.kind for g in tree.gates.values() if g.kind not in ("and", "or")})
        raise NonCoherentError(f"cut sets need an and/or tree; found {', '.join(bad)} gates "
                               "(use the enumeration or Monte Carlo method instead)")
    dnf: dict[str, list[frozenset]] = {e: [frozenset([e])] for e in tree.events}
    for gid in tree.gate_order:
        gate = tree.gates[gid]
        if isinstance(gate, And):
            acc = [frozenset()]
            for child in gate.inputs:
                acc = reduce(a | b for a in acc for b in dnf[child])
                _check_cap(gid, len(acc), max_cut_sets)
        else:
            acc = reduce(c for child in gate.inputs for c in dnf[child])
            _check_cap(gid, len(acc), max_cut_sets)
        dnf[gid] = acc
    return list(dnf[tree.top])


def _check_cap(gid, count, cap):
    if count > cap:
        raise CutSetExplosionError(f"gate {gid!r} expands to {count} cut sets (cap {cap})", node=gid)


def mcs(tree: FaultTree, *, max_cut_sets: int = DEFAULT_MAX_CUT_SETS) -> list[frozenset]:
    return minimize(cut_sets(tree, max_cut_sets=max_cut_sets))
