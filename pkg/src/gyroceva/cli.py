"""Command line front end: ``gyroceva check | table | render``.

Exit codes: 0 all identities hold, 1 an identity failed, 2 degenerate
input (or a scene that could not be generated), 3 malformed input,
unreadable/unwritable file or bad arguments.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import kernels
from .geometry import (
    GenerationError,
    GeometryError,
    GyroLine,
    GyroTriangle,
    Scene,
    random_menelaus,
    random_scene,
)
from .gyrocore import DomainError
from .render import render_svg
from .scenefile import SceneParseError, load
from .theorems import (
    DEFAULT_TOL,
    CheckReport,
    ceva_check,
    menelaus_check,
    proof_chain_check,
    smarandache_check,
    smarandache_denominator_check,
)

CHECKS = ("ceva", "menelaus", "smarandache", "chain")
EXIT_OK, EXIT_FAIL, EXIT_DEGENERATE, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


@dataclass
class Source:
    label: str
    scene: Scene
    menelaus: Optional[tuple[GyroTriangle, GyroLine]] = None


def default_seed() -> int:
    raw = os.environ.get("GYROCEVA_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"GYROCEVA_SEED must be an integer, got {raw!r}") from None


def _validate_ball(s: float, margin: float) -> None:
    if not s > 0.0:
        raise UsageError(f"--s must be positive, got {s!r}")
    if not 0.0 < margin < 1.0:
        raise UsageError(f"--margin must lie in (0, 1), got {margin!r}")


def seed_source(seed: int, s: float, margin: float) -> Source:
    return Source(f"seed {seed} (s={s:g}, margin={margin:g})", random_scene(seed, s, margin),
                  random_menelaus(seed, s, margin))


def file_source(path: str) -> Source:
    sf = load(path)
    scene = sf.to_scene()
    line = sf.transversal_line()
    if line is None:
        # triangle A A1 B cut by the cevian gyroline C C1
        a1, _, c1 = scene.feet
        menelaus = (GyroTriangle(scene.a, a1, scene.b), GyroLine(scene.c, c1))
    else:
        menelaus = (scene.triangle, line)
    return Source(f"scene {path}", scene, menelaus)


def run_check(which: str, src: Source, tol: float) -> list[CheckReport]:
    if which == "ceva":
        return [ceva_check(src.scene, tol)]
    if which == "menelaus":
        tri, line = src.menelaus
        return [menelaus_check(tri, line, tol)]
    if which == "smarandache":
        return [smarandache_check(src.scene, tol), smarandache_denominator_check(src.scene, tol)]
    if which == "chain":
        return list(proof_chain_check(src.scene, tol).steps)
    raise UsageError(f"unknown check {which!r}")


def format_report(r: CheckReport) -> str:
    status = "PASS" if r.passed else "FAIL"
    return (f"{r.name:<24} lhs={r.lhs:<22.16g} rhs={r.rhs:<22.16g} "
            f"residual={r.residual:.3e}  tol={r.tolerance:.1e}  {status}")


@dataclass
class BatchSummary:
    trials: int = 0
    failures: int = 0
    generation_failures: int = 0
    max_residual: float = 0.0
    per_check: dict = field(default_factory=lambda: {name: {"failures": 0, "max_residual": 0.0} for name in CHECKS})
    errors: list = field(default_factory=list)

    def add(self, which: str, reports: list[CheckReport]) -> None:
        entry = self.per_check[which]
        for r in reports:
            if not r.passed:
                self.failures += 1
                entry["failures"] += 1
            # a NaN residual becomes the (sticky) maximum so it stays visible
            if math.isnan(r.residual) or r.residual > entry["max_residual"]:
                entry["max_residual"] = r.residual
            if math.isnan(r.residual) or r.residual > self.max_residual:
                self.max_residual = r.residual

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "failures": self.failures,
            "generation_failures": self.generation_failures,
            "max_residual": self.max_residual,
            "per_check": self.per_check,
            "errors": self.errors,
        }


def evaluate_seed(seed: int, s: float, margin: float, tol: float):
    """All four checks for one seed, or an error string if the scene is unusable."""
    try:
        src = seed_source(seed, s, margin)
        return seed, {which: run_check(which, src, tol) for which in CHECKS}
    except (GenerationError, GeometryError, DomainError) as exc:
        return seed, f"{type(exc).__name__}: {exc}"


def run_table(n: int, seed0: int, s: float, margin: float, tol: float = DEFAULT_TOL, workers: int = 1) -> BatchSummary:
    seeds = range(seed0, seed0 + n)
    args = (seeds, [s] * n, [margin] * n, [tol] * n)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(evaluate_seed, *args, chunksize=max(1, n // (4 * workers))))
    else:
        results = list(map(evaluate_seed, *args))
    summary = BatchSummary()
    for seed, outcome in sorted(results, key=lambda item: item[0]):
        summary.trials += 1
        if isinstance(outcome, str):
            summary.generation_failures += 1
            summary.errors.append({"seed": seed, "error": outcome})
            continue
        for which in CHECKS:
            summary.add(which, outcome[which])
    return summary


def _resolve_source(args) -> Source:
    if args.scene is not None:
        return file_source(args.scene)
    _validate_ball(args.s, args.margin)
    seed = args.seed if args.seed is not None else default_seed()
    return seed_source(seed, args.s, args.margin)


def cmd_check(args) -> int:
    src = _resolve_source(args)
    reports = run_check(args.which, src, args.tol)
    ok = all(r.passed for r in reports)
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        print(f"{args.which} check on {src.label} [{kernels.BACKEND} kernels]")
        for r in reports:
            print(format_report(r))
        print("all identities hold" if ok else "IDENTITY FAILURE")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_table(args) -> int:
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    _validate_ball(args.s, args.margin)
    seed0 = args.seed0 if args.seed0 is not None else default_seed()
    summary = run_table(args.n, seed0, args.s, args.margin, args.tol, args.workers)
    if args.json:
        print(json.dumps(summary.to_dict(), indent=2))
    else:
        print(f"seeds {seed0}..{seed0 + args.n - 1}  s={args.s:g}  margin={args.margin:g}  "
              f"tol={args.tol:.1e}  [{kernels.BACKEND} kernels]")
        print(f"{'check':<14}{'failures':>10}{'max residual':>16}")
        for name, entry in summary.per_check.items():
            print(f"{name:<14}{entry['failures']:>10}{entry['max_residual']:>16.3e}")
        print(f"trials {summary.trials}  failures {summary.failures}  "
              f"generation failures {summary.generation_failures}  max residual {summary.max_residual:.3e}")
        for err in summary.errors:
            print(f"  seed {err['seed']}: {err['error']}")
    return EXIT_OK if summary.failures == 0 else EXIT_FAIL


def cmd_render(args) -> int:
    src = _resolve_source(args)
    svg = render_svg(src.scene)
    if args.out is None or args.out == "-":
        sys.stdout.write(svg)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"gyroceva: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gyroceva", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def scene_flags(p):
        group = p.add_mutually_exclusive_group()
        group.add_argument("--seed", type=int, help="random scene seed (default: $GYROCEVA_SEED or 0)")
        group.add_argument("--scene", metavar="PATH", help="JSON scene file")
        p.add_argument("--s", type=float, default=1.0, help="ball radius for generated scenes")
        p.add_argument("--margin", type=float, default=0.9, help="vertex radius as a fraction of s")

    check = sub.add_parser("check", help="verify one identity on a scene")
    check.add_argument("which", choices=CHECKS)
    scene_flags(check)
    check.add_argument("--tol", type=float, default=DEFAULT_TOL)
    check.add_argument("--json", action="store_true")
    check.set_defaults(func=cmd_check)

    table = sub.add_parser("table", help="run every check over a range of seeds")
    table.add_argument("--n", type=int, default=1000)
    table.add_argument("--seed0", "--seed", dest="seed0", type=int, help="first seed (default: $GYROCEVA_SEED or 0)")
    table.add_argument("--s", type=float, default=1.0)
    table.add_argument("--margin", type=float, default=0.9)
    table.add_argument("--tol", type=float, default=DEFAULT_TOL)
    table.add_argument("--workers", type=int, default=1)
    table.add_argument("--json", action="store_true")
    table.set_defaults(func=cmd_table)

    render = sub.add_parser("render", help="write the scene figure as SVG")
    scene_flags(render)
    render.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
    render.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help or a usage error
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    try:
        return args.func(args)
    except (SceneParseError, UsageError) as exc:
        print(f"gyroceva: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (GeometryError, GenerationError) as exc:
        print(f"gyroceva: degenerate scene: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
