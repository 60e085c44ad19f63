"""Compiled kernels against the pure-Python fallback on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Each case is timed with both implementations and their outputs compared.
"""

import argparse
import time
from array import array

from igrowth import _pykernels
from igrowth.group import alternating, direct_product
from igrowth.lattice import Lattice
from igrowth.lowindex import harvest_relators

try:
    from igrowth import _kernels
except ImportError:
    _kernels = None


def closure_case(G):
    # the cyclic-subgroup sweep: one closure per element, as the lattice build does
    lat = Lattice(G)
    n = lat.n
    cols = [array("i", [lat._col(i)]) for i in range(n)]
    table = lat._table
    seeds = [bytes([1]) + bytes((n + 7) // 8 - 1)] * n

    def run(impl):
        return [impl.closure(table, n, c, s) for c, s in zip(cols, seeds)]
    return run


def lattice_case(G):
    from igrowth import lattice

    def run(impl):
        saved = lattice.kernels.closure
        lattice.kernels.closure = impl.closure
        try:
            return Lattice(G).masks
        finally:
            lattice.kernels.closure = saved
    return run


def low_index_case(G, n):
    rels = harvest_relators(G)
    k = len(G.raw_generators)

    def run(impl):
        return impl.low_index(k, rels, n, 0)
    return run


CASES = [
    ("closure sweep Alt(6)", lambda: closure_case(alternating(6))),
    ("full lattice Alt(6)", lambda: lattice_case(alternating(6))),
    ("low_index Alt(5) n=60", lambda: low_index_case(alternating(5), 60)),
    ("low_index Alt(7) n=7", lambda: low_index_case(alternating(7), 7)),
    ("low_index Alt(5)xAlt(6) n=5",
     lambda: low_index_case(direct_product(alternating(5), alternating(6)), 5)),
]


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled extension not built; only the fallback is available")
    print(f"{'case':32} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, make in CASES:
        run = make()
        tp, outp = best_of(lambda: run(_pykernels), args.repeat)
        if _kernels is None:
            print(f"{name:32} {tp:10.4f} {'-':>11} {'-':>8}")
            continue
        tc, outc = best_of(lambda: run(_kernels), args.repeat)
        if outp != outc:
            raise SystemExit(f"{name}: implementations disagree")
        print(f"{name:32} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
