"""Pure-numpy kernels. Same signatures and results as the numba versions."""
import math

import numpy as np

CHUNK = 1 << 15

GAMMA = np.uint64(0x9E3779B97F4A7C15)
MIX1 = np.uint64(0xBF58476D1CE4E5B9)
MIX2 = np.uint64(0x94D049BB133111EB)


def uniform01(seed, counters):
    """SplitMix64 output at stream positions ``counters`` (uint64 array), mapped to [0, 1)."""
    z = np.uint64(seed) + (counters + np.uint64(1)) * GAMMA
    z = (z ^ (z >> np.uint64(30))) * MIX1
    z = (z ^ (z >> np.uint64(27))) * MIX2
    z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) * (1.0 / 9007199254740992.0)


def eval_batch(kind, start, inputs, negate, top, n, bits):
    """Top-event values for a (m, n) boolean matrix of event states."""
    m = bits.shape[0]
    g = kind.shape[0]
    vals = np.empty((m, n + g), dtype=np.bool_)
    vals[:, :n] = bits
    for j in range(g):
        idx = inputs[start[j]:start[j + 1]]
        cols = vals[:, idx] ^ negate[start[j]:start[j + 1]]
        k = kind[j]
        if k == 0:
            out = cols.all(axis=1)
        elif k == 1:
            out = cols.any(axis=1)
        elif k == 2:
            out = ~cols.any(axis=1)
        elif k == 3:
            out = cols[:, 0] ^ cols[:, 1]
        else:
            out = ~cols[:, 0]
        vals[:, n + j] = out
    return vals[:, top]


def enum_sum(kind, start, inputs, negate, top, n, p, lo, hi):
    shifts = np.arange(n, dtype=np.int64)
    partials = []
    for a in range(lo, hi, CHUNK):
        states = np.arange(a, min(a + CHUNK, hi), dtype=np.int64)
        bits = ((states[:, None] >> shifts) & 1).astype(np.bool_)
        hit = eval_batch(kind, start, inputs, negate, top, n, bits)
        if not hit.any():
            continue
        w = np.where(bits[hit], p, 1.0 - p).prod(axis=1)
        partials.append(math.fsum(w))
    return math.fsum(partials)


def mc_count(kind, start, inputs, negate, top, n, p, seed, lo, hi):
    events = np.arange(n, dtype=np.uint64)
    total = 0
    for a in range(lo, hi, CHUNK):
        samples = np.arange(a, min(a + CHUNK, hi), dtype=np.uint64)
        u = uniform01(seed, samples[:, None] * np.uint64(n) + events)
        hit = eval_batch(kind, start, inputs, negate, top, n, u < p)
        total += int(hit.sum())
    return total


def pie_sum(members, offsets, p, lo, hi):
    """Signed inclusion-exclusion sum over subset masks in [lo, hi); returns (sum, terms)."""
    q = offsets.shape[0] - 1
    n = p.shape[0]
    incidence = np.zeros((q, n), dtype=np.int64)
    for i in range(q):
        incidence[i, members[offsets[i]:offsets[i + 1]]] = 1
    shifts = np.arange(q, dtype=np.int64)
    partials = []
    terms = 0
    for a in range(lo, hi, CHUNK):
        masks = np.arange(a, min(a + CHUNK, hi), dtype=np.int64)
        chosen = (masks[:, None] >> shifts) & 1
        merged = (chosen @ incidence) > 0
        values = np.where(merged, p, 1.0).prod(axis=1)
        sign = np.where(chosen.sum(axis=1) % 2 == 1, 1.0, -1.0)
        partials.append(math.fsum(sign * values))
        terms += masks.shape[0]
    return math.fsum(partials), terms
