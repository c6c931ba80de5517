"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--calls 200000] [--scenes 1000]

Kernel timings call each backend directly; the end-to-end timing runs
``gyroceva table`` in a subprocess with and without GYROCEVA_PURE_PYTHON.
"""

import argparse
import os
import subprocess
import sys
import time
import timeit

import numpy as np

from gyroceva import _core_py

try:
    from gyroceva import _core
except ImportError:
    _core = None


def kernel_times(mod, calls, pts):
    out = {}
    (ax, ay), (bx, by) = pts
    for name, fn in [
        ("gw2", lambda: mod.gw2(ax, ay, bx, by, 1.0)),
        ("add2", lambda: mod.add2(ax, ay, bx, by, 1.0)),
        ("gamma2", lambda: mod.gamma2(ax, ay, 1.0)),
    ]:
        out[name] = min(timeit.repeat(fn, number=calls, repeat=3)) / calls * 1e9
    return out


def table_time(scenes, pure):
    env = dict(os.environ)
    env.pop("GYROCEVA_PURE_PYTHON", None)
    if pure:
        env["GYROCEVA_PURE_PYTHON"] = "1"
    start = time.perf_counter()
    subprocess.run([sys.executable, "-m", "gyroceva", "table", "--n", str(scenes)],
                   env=env, check=True, capture_output=True)
    return time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--calls", type=int, default=200_000)
    ap.add_argument("--scenes", type=int, default=1000)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    pts = [tuple(0.6 * rng.uniform(-1, 1, 2)) for _ in range(2)]
    py = kernel_times(_core_py, args.calls, pts)
    print(f"{'kernel':<8}{'python ns':>12}{'cython ns':>12}{'speedup':>10}")
    if _core is None:
        for name, t in py.items():
            print(f"{name:<8}{t:>12.0f}{'n/a':>12}{'n/a':>10}")
        print("compiled extension not built; end-to-end comparison skipped")
        return
    cy = kernel_times(_core, args.calls, pts)
    for name in py:
        print(f"{name:<8}{py[name]:>12.0f}{cy[name]:>12.0f}{py[name] / cy[name]:>9.1f}x")
    t_py = table_time(args.scenes, pure=True)
    t_cy = table_time(args.scenes, pure=False)
    print(f"\ntable --n {args.scenes}: python {t_py:.2f}s  cython {t_cy:.2f}s  speedup {t_py / t_cy:.2f}x")


if __name__ == "__main__":
    main()
