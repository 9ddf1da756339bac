"""numba kernels. Sums use Neumaier compensation in enumeration order."""
import numpy as np
from numba import njit

GAMMA = np.uint64(0x9E3779B97F4A7C15)
MIX1 = np.uint64(0xBF58476D1CE4E5B9)
MIX2 = np.uint64(0x94D049BB133111EB)
S30 = np.uint64(30)
S27 = np.uint64(27)
S31 = np.uint64(31)
S11 = np.uint64(11)
ONE = np.uint64(1)
INV53 = 1.0 / 9007199254740992.0


@njit(cache=True, nogil=True)
def uniform01(seed, counter):
    z = seed + (counter + ONE) * GAMMA
    z = (z ^ (z >> S30)) * MIX1
    z = (z ^ (z >> S27)) * MIX2
    z = z ^ (z >> S31)
    return np.float64(z >> S11) * INV53


@njit(cache=True, nogil=True)
def _eval(kind, start, inputs, negate, top, n, vals):
    for j in range(kind.shape[0]):
        k = kind[j]
        a = start[j]
        b = start[j + 1]
        if k == 0:
            out = True
            for s in range(a, b):
                if vals[inputs[s]] == negate[s]:
                    out = False
                    break
        elif k == 1 or k == 2:
            out = False
            for s in range(a, b):
                if vals[inputs[s]] != negate[s]:
                    out = True
                    break
            if k == 2:
                out = not out
        elif k == 3:
            out = vals[inputs[a]] != vals[inputs[a + 1]]
        else:
            out = not vals[inputs[a]]
        vals[n + j] = out
    return vals[top]


@njit(cache=True, nogil=True)
def enum_sum(kind, start, inputs, negate, top, n, p, lo, hi):
    vals = np.empty(n + kind.shape[0], dtype=np.bool_)
    total = 0.0
    comp = 0.0
    for state in range(lo, hi):
        for e in range(n):
            vals[e] = (state >> e) & 1
        if not _eval(kind, start, inputs, negate, top, n, vals):
            continue
        w = 1.0
        for e in range(n):
            w *= p[e] if vals[e] else 1.0 - p[e]
        t = total + w
        if abs(total) >= abs(w):
            comp += (total - t) + w
        else:
            comp += (w - t) + total
        total = t
    return total + comp


@njit(cache=True, nogil=True)
def mc_count(kind, start, inputs, negate, top, n, p, seed, lo, hi):
    vals = np.empty(n + kind.shape[0], dtype=np.bool_)
    nn = np.uint64(n)
    count = 0
    for i in range(lo, hi):
        base = np.uint64(i) * nn
        for e in range(n):
            vals[e] = uniform01(seed, base + np.uint64(e)) < p[e]
        if _eval(kind, start, inputs, negate, top, n, vals):
            count += 1
    return count


@njit(cache=True, nogil=True)
def pie_sum(members, offsets, p, lo, hi):
    q = offsets.shape[0] - 1
    stamp = np.zeros(p.shape[0], dtype=np.int64)
    total = 0.0
    comp = 0.0
    terms = 0
    for mask in range(lo, hi):
        tag = mask + 1
        value = 1.0
        size = 0
        for i in range(q):
            if (mask >> i) & 1:
                size += 1
                for s in range(offsets[i], offsets[i + 1]):
                    e = members[s]
                    if stamp[e] != tag:
                        stamp[e] = tag
                        value *= p[e]
        term = value if size % 2 == 1 else -value
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        terms += 1
    return total + comp, terms
