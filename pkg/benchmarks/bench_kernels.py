#!/usr/bin/env python3
"""Benchmark the native kernel extension against the pure-Python fallback.

Usage:
    python benchmarks/bench_kernels.py [--sweeps 20]

Times single Hermitian eigensolves, the batched phase sweep that dominates
radius computations, and one full chain verification per backend (the chain
runs in a subprocess so the import-time backend selection applies).
"""

import argparse
import json
import subprocess
import sys
import time

import numpy as np

from numrad.kernels import _native, _pure  # noqa: F401 (optional native)
from numrad.prng import Stream


def _hermitian(dim: int, seed: int) -> np.ndarray:
    g = Stream(seed, dim).complex_normals(dim * dim).reshape(dim, dim)
    return 0.5 * (g + g.conj().T)


def _time(fn, repeats: int) -> float:
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - t0) / repeats


def bench_kernels(sweeps: int):
    impls = {"native": _native, "pure": _pure}
    print(f"{'benchmark':34s} " + " ".join(f"{k:>12s}" for k in impls)
          + f" {'speedup':>9s}")
    for dim in (2, 4, 6, 12):
        h = _hermitian(dim, seed=dim)
        times = {name: _time(lambda m=mod: m.eigh(h), 200)
                 for name, mod in impls.items()}
        _row(f"eigh {dim}x{dim}", times)
    for dim in (3, 6):
        h = _hermitian(dim, seed=100 + dim)
        stack = np.repeat(h[None], 1024, axis=0)
        times = {name: _time(lambda m=mod: m.extremes_batch(stack), sweeps)
                 for name, mod in impls.items()}
        _row(f"extremes_batch 1024x{dim}x{dim}", times)


def _row(label: str, times: dict):
    per = {k: v * 1e3 for k, v in times.items()}
    speedup = per["pure"] / per["native"] if per["native"] > 0 else float("inf")
    print(f"{label:34s} " + " ".join(f"{per[k]:10.3f}ms" for k in per)
          + f" {speedup:8.1f}x")


CHAIN_SNIPPET = """
import json, time
import numpy as np
from numrad import kernels, verify_chain
from numrad.prng import Stream
a = Stream(11, 4).complex_normals(16).reshape(4, 4)
t0 = time.perf_counter()
rep = verify_chain(a)
dt = time.perf_counter() - t0
print(json.dumps({"backend": kernels.backend(), "seconds": dt,
                  "violations": len(rep.violations)}))
"""


def bench_chain():
    print("\nfull verify_chain on one 4x4 element:")
    for env_val in ("0", "1"):
        proc = subprocess.run(
            [sys.executable, "-c", CHAIN_SNIPPET],
            env={"NUMRAD_PURE": env_val, "PATH": "/usr/bin:/bin:/usr/local/bin"},
            capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"  NUMRAD_PURE={env_val}: failed: {proc.stderr.strip()}")
            continue
        info = json.loads(proc.stdout)
        print(f"  backend={info['backend']:6s} {info['seconds']*1e3:9.1f} ms "
              f"(violations: {info['violations']})")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sweeps", type=int, default=20,
                        help="repeats for the batched sweep benchmark")
    parser.add_argument("--skip-chain", action="store_true")
    args = parser.parse_args()
    bench_kernels(args.sweeps)
    if not args.skip_chain:
        bench_chain()


if __name__ == "__main__":
    main()
