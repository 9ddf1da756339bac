#!/usr/bin/env python3
"""Time the numba and pure-numpy kernels on the same inputs.

    python benchmarks/bench_kernels.py [--events 20] [--cut-sets 18] [--samples 1000000]
"""
import argparse
import time

import numpy as np

from ftpie import _kernels
from ftpie.distributions import FixedProb
from ftpie.model import And, Or, build_tree
from ftpie.oracle import enum_prob, mc_prob
from ftpie.pie import pie_sum


def ladder_tree(n):
    # Or over pairs And(e_2k, e_2k+1) plus a shared event: non-trivial and easy to scale
    names = [f"e{i}" for i in range(n)]
    rng = np.random.default_rng(0)
    events = [(x, FixedProb(float(p))) for x, p in zip(names, rng.uniform(0.01, 0.3, n))]
    gates = [(f"a{k}", And((names[2 * k], names[2 * k + 1]))) for k in range(n // 2)]
    tops = tuple(g for g, _ in gates) + ((names[-1],) if n % 2 else ())
    return build_tree(events, gates + [("top", Or(tops))], "top")


def timed(fn, repeat):
    fn()  # warm-up (JIT compile)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--events", type=int, default=20)
    ap.add_argument("--cut-sets", type=int, default=18)
    ap.add_argument("--samples", type=int, default=1_000_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    tree = ladder_tree(args.events)
    probs = {n: m.p for n, m in tree.events.items()}
    rng = np.random.default_rng(1)
    universe = [f"e{i}" for i in range(args.cut_sets + 4)]
    sets = [frozenset(rng.choice(universe, size=int(rng.integers(1, 4)), replace=False))
            for _ in range(args.cut_sets)]
    pie_probs = {e: float(p) for e, p in zip(universe, rng.uniform(0, 0.2, len(universe)))}

    cases = {
        f"enum  2^{args.events} states": lambda: enum_prob(tree, probs),
        f"pie   2^{args.cut_sets}-1 terms": lambda: pie_sum(sets, pie_probs)[0],
        f"mc    {args.samples} samples": lambda: mc_prob(tree, probs, args.samples, 42).estimate,
    }
    print(f"{'kernel':<28}" + "".join(f"{b:>14}" for b in _kernels.BACKENDS) + f"{'speedup':>10}")
    for label, fn in cases.items():
        times, values = {}, {}
        for backend in _kernels.BACKENDS:
            with _kernels.use_backend(backend):
                times[backend], values[backend] = timed(fn, args.repeat)
        vals = list(values.values())
        assert max(vals) - min(vals) <= 1e-12, values
        row = "".join(f"{times[b]:>13.3f}s" for b in _kernels.BACKENDS)
        speed = f"{times['numpy'] / times['numba']:>9.1f}x" if "numba" in times else ""
        print(f"{label:<28}{row}{speed}")


if __name__ == "__main__":
    main()
