"""Compare the compiled and pure-Python multiplication kernels.

    python benchmarks/bench_kernel.py [--repeat 3]

Each workload is timed under both backends. The results are also compared,
so a faster backend that gives a different answer is reported as an error.
"""
from __future__ import annotations

import argparse
import sys
import time
from contextlib import contextmanager

from schurlab.exact import kernel
from schurlab.identities.series_ids import phi_truncated
from schurlab.identities.determinants import alternant
from schurlab.partitions import enumerate_partitions
from schurlab.symfunc import _schur, xcontext


@contextmanager
def backend(name):
    saved = kernel.BACKEND
    kernel.BACKEND = name
    try:
        yield
    finally:
        kernel.BACKEND = saved


def jt_schur_n4():
    # skip the lru_cache so every run recomputes the determinants
    ctx = xcontext(4)
    return [_schur.__wrapped__(lam, 4, ctx) for lam in enumerate_partitions(max_size=9, max_length=4)]


def phi_abc():
    return phi_truncated(3, 9, "abc")


def weyl_alternant():
    return alternant(5, 12, -1)


WORKLOADS = {
    "jacobi-trudi n=4 |lam|<=9": jt_schur_n4,
    "Phi(X;a,b)/(1-cx) n=3 D=9": phi_abc,
    "alternant n=5": weyl_alternant,
}


def timed(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if kernel._ckernel is None:
        print("compiled kernel not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'workload':<28} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    status = 0
    for name, fn in WORKLOADS.items():
        with backend("python"):
            tp, rp = timed(fn, args.repeat)
        with backend("cython"):
            tc, rc = timed(fn, args.repeat)
        same = rp == rc
        status |= not same
        flag = "" if same else "  RESULTS DIFFER"
        print(f"{name:<28} {tp:>10.3f} {tc:>10.3f} {tp / tc:>7.1f}x{flag}")
    return status


if __name__ == "__main__":
    sys.exit(main())
