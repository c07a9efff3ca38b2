"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py            # micro + end-to-end
    python benchmarks/bench_kernels.py --micro    # kernels only

The end-to-end part runs the H8 exponent table and the indicator formula
check in subprocesses, once with HOPFTWIST_PURE=1 and once without.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from hopftwist.cyclo import cyclotomic_poly
from hopftwist.kernels import _pure

try:
    from hopftwist.kernels import _ckernels
except ImportError:
    _ckernels = None

END_TO_END = r"""
import time
from hopftwist import catalog, kernels
from hopftwist.invariants import twisted_exponent, twisted_exponent_via_q, indicator_charsums, indicator_traces
from hopftwist.reps import character, regular_representation
t0 = time.perf_counter()
pkg = catalog.builtin("h8")
H = pkg.algebra
for tau in pkg.automorphisms.values():
    for v in ["V1", "V2", "V3", "V4", "V5"]:
        rep = pkg.modules[v]
        d = twisted_exponent(H, tau, rep).d_tau
        twisted_exponent_via_q(H, tau, rep)
        ms = range(tau.order, 4 * d + 1, tau.order)
        indicator_charsums(H, tau, character(rep), ms)
        indicator_traces(H, tau, rep, ms)
    twisted_exponent_via_q(H, tau, regular_representation(H))
print(kernels.BACKEND, time.perf_counter() - t0)
"""


def micro(backend, label, repeat):
    rng = random.Random(1)
    rows = []
    for n in (8, 12, 60):
        phi = list(cyclotomic_poly(n))
        d = len(phi) - 1
        a = [rng.randint(-50, 50) for _ in range(d)]
        b = [rng.randint(-50, 50) for _ in range(d)]
        t = min(timeit.repeat(lambda: backend.poly_mulmod(a, b, phi), number=2000, repeat=repeat)) / 2000
        rows.append((label, f"poly_mulmod N={n}", t))
        k = 16
        A = [rng.randint(-9, 9) for _ in range(k * k * d)]
        B = [rng.randint(-9, 9) for _ in range(k * k * d)]
        t = min(timeit.repeat(lambda: backend.matmul(A, B, k, k, k, phi), number=5, repeat=repeat)) / 5
        rows.append((label, f"matmul 16x16 N={n}", t))
    return rows


def end_to_end(pure):
    env = dict(os.environ)
    if pure:
        env["HOPFTWIST_PURE"] = "1"
    else:
        env.pop("HOPFTWIST_PURE", None)
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    return out[0], float(out[1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--micro", action="store_true", help="skip the end-to-end run")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rows = micro(_pure, "python", args.repeat)
    if _ckernels is not None:
        rows += micro(_ckernels, "cython", args.repeat)
    else:
        print("compiled kernels not built; only the pure backend is measured")
    by_case = {}
    for label, case, t in rows:
        by_case.setdefault(case, {})[label] = t
    print(f"{'case':<22}{'python':>12}{'cython':>12}{'speedup':>10}")
    for case, ts in by_case.items():
        py, cy = ts.get("python"), ts.get("cython")
        sp = f"{py / cy:9.1f}x" if cy else ""
        print(f"{case:<22}{py * 1e6:10.1f}us{(cy or 0) * 1e6:10.1f}us{sp}")

    if not args.micro:
        print()
        for pure in (True, False):
            backend, dt = end_to_end(pure)
            print(f"H8 corpus (exponents, q-orders, both indicator formulas) [{backend}]: {dt:.2f}s")


if __name__ == "__main__":
    main()
