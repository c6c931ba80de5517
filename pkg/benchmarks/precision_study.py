"""Worst identity residual as the vertices approach the ball boundary.

Not a gate: it documents how gamma-factor conditioning grows with the
generator margin.

    python benchmarks/precision_study.py [--n 1000]
"""

import argparse

from gyroceva.cli import run_table


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=1000)
    args = ap.parse_args()
    print(f"{'margin':>8}{'failures':>10}{'gen. fail':>10}{'max residual':>15}")
    for margin in (0.5, 0.9, 0.99, 0.999):
        summary = run_table(args.n, 0, 1.0, margin)
        print(f"{margin:>8}{summary.failures:>10}{summary.generation_failures:>10}{summary.max_residual:>15.3e}")


if __name__ == "__main__":
    main()
