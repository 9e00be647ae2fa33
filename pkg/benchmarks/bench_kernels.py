"""Time the F_p kernels under numba and under the numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--sizes 48 96 192] [--repeat 5]

Each backend runs in its own interpreter because the backend is fixed at
import time by GRADEDSPECHT_PURE_NUMPY.
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from gradedspecht.hecke import HeckeParams, kernels, verify_klr

sizes, repeat = json.loads(sys.argv[1]), int(sys.argv[2])
rng = np.random.default_rng(0)
out = {"backend": kernels.backend_name(), "rows": []}

def best(f):
    f()  # warm up, which includes numba compilation
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        f()
        times.append(time.perf_counter() - t)
    return min(times)

for n in sizes:
    a = rng.integers(0, 3, size=(n, n))
    b = rng.integers(0, 3, size=(n, n))
    out["rows"].append({
        "size": n,
        "matmul": best(lambda: kernels.matmul_mod(a, b, 3)),
        "matpow": best(lambda: kernels.matpow_mod(a, 162, 3)),
        "rref": best(lambda: kernels.rref_mod(a, 3)),
    })

t = time.perf_counter()
for p in (2, 3):
    for kappa in ((0,), (0, 1), (1, 0)):
        verify_klr(HeckeParams.degenerate(3, kappa, p))
out["klr_suite"] = time.perf_counter() - t
print(json.dumps(out))
"""


def run(flag, sizes, repeat):
    env = dict(os.environ, GRADEDSPECHT_PURE_NUMPY=flag)
    res = subprocess.run(
        [sys.executable, "-c", WORKER, json.dumps(sizes), str(repeat)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(res.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[48, 96, 192])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    fast, slow = run("0", args.sizes, args.repeat), run("1", args.sizes, args.repeat)
    print(f"{'size':>6} {'op':>7} {fast['backend']:>12} {slow['backend']:>12} {'speedup':>8}")
    for rf, rs in zip(fast["rows"], slow["rows"]):
        for op in ("matmul", "matpow", "rref"):
            print(f"{rf['size']:>6} {op:>7} {rf[op] * 1e3:>10.3f}ms {rs[op] * 1e3:>10.3f}ms {rs[op] / rf[op]:>7.1f}x")
    print(f"klr suite at n=3 (compile included): {fast['backend']} {fast['klr_suite']:.2f}s, {slow['backend']} {slow['klr_suite']:.2f}s")


if __name__ == "__main__":
    main()
