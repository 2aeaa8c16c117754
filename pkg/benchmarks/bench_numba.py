"""Compare compiled (numba) and pure-Python kernels on the same workload.

Each mode runs in a fresh interpreter so HUMBERT_DISABLE_NUMBA takes effect
at import time. Compilation is excluded by one warm-up call.

    python3 benchmarks/bench_numba.py --repeat 3
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, sys, time
import numpy as np
from humbert._jit import NUMBA_ENABLED
from humbert.evaluator import evaluate_many
from humbert.reference import phi1_series_2f1, phi1_taylor
from humbert.types import Phi1Params

repeat = int(sys.argv[1])
p = Phi1Params(0.5, 1.0, 1.5)
rng = np.random.default_rng(7)
xs = rng.uniform(-0.8, 0.8, 400) + 1j * rng.uniform(-0.3, 0.3, 400)
ys = rng.uniform(0, 15, 400)

def scalar():
    for x, y in zip(xs[:100], ys[:100]):
        phi1_series_2f1(p, x, y)
        phi1_taylor(p, x, y)

def batch():
    evaluate_many(p, xs, ys)

out = {"numba": NUMBA_ENABLED}
for name, fn in (("scalar", scalar), ("batch", batch)):
    fn()
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    out[name] = best
json.dump(out, sys.stdout)
"""


def run(disable: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("HUMBERT_DISABLE_NUMBA", None)
    if disable:
        env["HUMBERT_DISABLE_NUMBA"] = "1"
    res = subprocess.run([sys.executable, "-c", WORKLOAD, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="timed repetitions per mode (best is kept)")
    args = ap.parse_args()
    fast, slow = run(False, args.repeat), run(True, args.repeat)
    if not fast["numba"]:
        print("numba is not installed; both runs used the pure path")
    print(f"{'workload':<10}{'numba s':>12}{'pure s':>12}{'speed-up':>10}")
    for name in ("scalar", "batch"):
        print(f"{name:<10}{fast[name]:>12.4f}{slow[name]:>12.4f}{slow[name] / fast[name]:>9.1f}x")


if __name__ == "__main__":
    main()
