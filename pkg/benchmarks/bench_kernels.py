"""Compiled kernels vs numpy fallback on the exhaustive searches.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends run single-threaded so the comparison is per-core.
"""

import argparse
import time

from metricdim import _backend, _fallback, search
from metricdim.graph import all_pairs_distances
from metricdim.products import explicit_cylinder, explicit_prism

CASES = [
    ("beta", "cylinder", (6, 3)),
    ("psi", "cylinder", (6, 3)),
    ("sdim", "cylinder", (6, 3)),
    ("beta", "prism", (4, 3, 2)),
    ("psi", "prism", (4, 3, 2)),
    ("sdim", "prism", (4, 3, 2)),
    ("psi", "prism", (5, 3, 2)),
    ("psi", "prism", (4, 3, 4)),
]

SEARCHES = {
    "beta": search.min_resolving,
    "psi": search.min_doubly_resolving,
    "sdim": search.min_strong_resolving,
}


def build(kind, params):
    g = (explicit_cylinder if kind == "cylinder" else explicit_prism)(*params).graph
    return g, all_pairs_distances(g)


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        res = fn()
        best = min(best, time.perf_counter() - start)
    return res, best


def with_backend(module, fn):
    saved = (_backend.NAME, _backend.first_hit_distinct, _backend.first_hit_cover)
    _backend.NAME = module.__name__.rsplit(".", 1)[-1]
    _backend.first_hit_distinct = module.first_hit_distinct
    _backend.first_hit_cover = module.first_hit_cover
    try:
        return fn()
    finally:
        _backend.NAME, _backend.first_hit_distinct, _backend.first_hit_cover = saved


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    try:
        from metricdim import _kernels
    except ImportError:
        _kernels = None
        print("compiled kernels not built; timing the fallback only")

    print(f"{'case':<28}{'value':>6}{'subsets':>10}{'cython s':>11}{'numpy s':>11}{'speedup':>9}")
    for parameter, kind, params in CASES:
        g, d = build(kind, params)
        run = lambda: SEARCHES[parameter](g, d, workers=1)  # noqa: E731
        res, t_py = with_backend(_fallback, lambda: timed(run, args.repeat))
        t_cy = float("nan")
        if _kernels is not None:
            res_cy, t_cy = with_backend(_kernels, lambda: timed(run, args.repeat))
            assert res_cy == res, (res_cy, res)
        name = f"{parameter} {kind}{params}"
        print(f"{name:<28}{res.value:>6}{res.examined:>10}{t_cy:>11.4f}{t_py:>11.4f}{t_py / t_cy:>8.1f}x")


if __name__ == "__main__":
    main()
