"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload is run on both backends, the results are checked for equality,
and the best-of-N wall time is printed with the speedup.
"""

import argparse
import sys
import timeit

from k3moduli import _kernels_py
from k3moduli.heegner import admissible_norms

try:
    from k3moduli import _kernels
except ImportError:
    _kernels = None


def _realizations(mod, ds):
    return [mod.realization_pairs(d, n) for d in ds for n in admissible_norms(d)]


def _oracle(mod, ds):
    return [mod.oracle_hits(d, n, 2 * d) for d in ds for n in admissible_norms(d)]


def _roots(mod, ds):
    return [mod.unit_square_roots(d) for d in ds]


WORKLOADS = [
    ("unit_square_roots d<=2000", _roots, range(1, 2001)),
    ("realization_pairs d in {210,330,2310}", _realizations, (210, 330, 2310)),
    ("oracle_hits d<=60, bound 2d", _oracle, range(1, 61)),
    ("oracle_hits d in {120,210}, bound 2d", _oracle, (120, 210)),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; run `pip install -e .` first", file=sys.stderr)
        return 1
    print(f"{'workload':42s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn, ds in WORKLOADS:
        if fn(_kernels_py, ds) != fn(_kernels, ds):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        times = [
            min(timeit.repeat(lambda m=mod: fn(m, ds), number=1, repeat=args.repeat))
            for mod in (_kernels_py, _kernels)
        ]
        print(f"{name:42s} {times[0]:10.4f} {times[1]:10.4f} {times[0] / times[1]:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
