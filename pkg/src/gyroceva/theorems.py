"""Numeric verifiers for the hyperbolic Ceva, Menelaus and cevian-triangle identities.

Every segment length goes through :func:`gw`, the gamma-weighted
gyrolength ``gamma_d * d``. Each proof step is evaluated from fresh
``gw`` values in the segment orientation it is written with, so no step
depends on the numbers produced by another.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import (
    DegeneratePosition,
    GyroLine,
    GyroTriangle,
    Scene,
    gyroline_intersect,
)
from .gyrocore import Point, gyrodistance

DEFAULT_TOL = 1e-9
RECOMBINATION_TOL = 1e-8
CHAIN_STEPS = tuple(f"eq{k}" for k in range(1, 10))


@dataclass(frozen=True)
class CheckReport:
    name: str
    lhs: float
    rhs: float
    residual: float
    tolerance: float
    passed: bool

    @classmethod
    def compare(cls, name: str, lhs: float, rhs: float, tol: float) -> "CheckReport":
        residual = abs(lhs - rhs) / max(1.0, abs(rhs))
        # NaN residuals fail
        return cls(name, lhs, rhs, residual, tol, bool(residual <= tol))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class ProofChainReport:
    steps: tuple[CheckReport, ...]
    overall: bool

    def to_list(self) -> list[dict]:
        return [step.to_dict() for step in self.steps]


def gw(a: Point, b: Point) -> float:
    """Gamma-weighted gyrolength of the segment ab."""
    return gyrodistance(a, b).weighted


def _ratio_product(pairs) -> float:
    """Product of gw(x, m)/gw(y, m) over ``(x, y, m)`` triples."""
    out = 1.0
    for x, y, m in pairs:
        den = gw(y, m)
        if den == 0.0:
            raise DegeneratePosition("a division point coincides with a vertex")
        out *= gw(x, m) / den
    return out


def _feet(scene: Scene):
    return scene.feet if scene.feet is not None else scene.with_feet().feet


def ceva_check(scene: Scene, tol: float = DEFAULT_TOL) -> CheckReport:
    a, b, c = scene.triangle.vertices
    a1, b1, c1 = _feet(scene)
    lhs = _ratio_product([(a, b, c1), (b, c, a1), (c, a, b1)])
    return CheckReport.compare("ceva", lhs, 1.0, tol)


def menelaus_points(tri: GyroTriangle, transversal: GyroLine) -> tuple[Point, Point, Point]:
    """Points a12, a23, a13 where the transversal meets the side gyrolines."""
    a1, a2, a3 = tri.vertices
    a12 = gyroline_intersect(transversal, GyroLine(a1, a2))
    a23 = gyroline_intersect(transversal, GyroLine(a2, a3))
    a13 = gyroline_intersect(transversal, GyroLine(a1, a3))
    return a12, a23, a13


def menelaus_check(tri: GyroTriangle, transversal: GyroLine, tol: float = DEFAULT_TOL) -> CheckReport:
    a1, a2, a3 = tri.vertices
    a12, a23, a13 = menelaus_points(tri, transversal)
    lhs = _ratio_product([(a1, a2, a12), (a2, a3, a23), (a3, a1, a13)])
    return CheckReport.compare("menelaus", lhs, 1.0, tol)


def smarandache_check(scene: Scene, tol: float = DEFAULT_TOL) -> CheckReport:
    a, b, c = scene.triangle.vertices
    a1, b1, c1 = _feet(scene)
    p = scene.p
    lhs = (gw(p, a) / gw(p, a1)) * (gw(p, b) / gw(p, b1)) * (gw(p, c) / gw(p, c1))
    rhs = (gw(a, b) * gw(b, c) * gw(c, a)) / (gw(a, b1) * gw(b, c1) * gw(c, a1))
    return CheckReport.compare("smarandache", lhs, rhs, tol)


def smarandache_denominator_check(scene: Scene, tol: float = DEFAULT_TOL) -> CheckReport:
    """Right-hand side with the AB1.BC1.CA1 denominator against the A1B.B1C.C1A one."""
    a, b, c = scene.triangle.vertices
    a1, b1, c1 = _feet(scene)
    num = gw(a, b) * gw(b, c) * gw(c, a)
    printed = num / (gw(a, b1) * gw(b, c1) * gw(c, a1))
    alternative = num / (gw(a1, b) * gw(b1, c) * gw(c1, a))
    return CheckReport.compare("smarandache_denominator", printed, alternative, tol)


def _chain_sides(scene: Scene) -> dict[int, tuple[float, float]]:
    a, b, c = scene.triangle.vertices
    a1, b1, c1 = _feet(scene)
    p = scene.p
    sides = {}
    # Ceva in ABC
    sides[1] = (gw(a, c1) * gw(b, a1) * gw(c, b1), gw(a, b1) * gw(b, c1) * gw(c, a1))
    # Menelaus in AA1B cut by CC1, BB1C cut by AA1, CC1A cut by BB1
    sides[2] = (gw(a, c1) * gw(b, c) * gw(a1, p), gw(a, p) * gw(a1, c) * gw(b, c1))
    sides[3] = (gw(b, a1) * gw(c, a) * gw(b1, p), gw(b, p) * gw(b1, a) * gw(c, a1))
    sides[4] = (gw(c, b1) * gw(a, b) * gw(c1, p), gw(c, p) * gw(c1, b) * gw(a, b1))
    sides[5] = (gw(p, a) / gw(p, a1), gw(b, c) / gw(b, a1) * (gw(b1, a) / gw(b1, c)))
    sides[6] = (gw(p, b) / gw(p, b1), gw(c, a) / gw(c, b1) * (gw(c1, b) / gw(c1, a)))
    sides[7] = (gw(p, c) / gw(p, c1), gw(a, b) / gw(a, c1) * (gw(a1, c) / gw(a1, b)))
    den = gw(a1, b) * gw(b1, c) * gw(c1, a)
    sides[8] = (
        (gw(p, a) / gw(p, a1)) * (gw(p, b) / gw(p, b1)) * (gw(p, c) / gw(p, c1)),
        (gw(a, b) * gw(b, c) * gw(c, a)) / den
        * ((gw(b1, a) * gw(c1, b) * gw(a1, c)) / (gw(a1, b) * gw(b1, c) * gw(c1, a))),
    )
    sides[9] = ((gw(b1, a) * gw(c1, b) * gw(a1, c)) / (gw(a1, b) * gw(b1, c) * gw(c1, a)), 1.0)
    return sides


def proof_chain_check(scene: Scene, tol: float = DEFAULT_TOL) -> ProofChainReport:
    """Check all nine relations of the cevian-triangle proof, each on its own."""
    sides = _chain_sides(scene)
    steps = tuple(CheckReport.compare(name, *sides[k], tol) for k, name in enumerate(CHAIN_STEPS, start=1))
    return ProofChainReport(steps, all(step.passed for step in steps))


def recombination_check(scene: Scene, tol: float = RECOMBINATION_TOL) -> CheckReport:
    """The product of the right sides of eq5, eq6, eq7 against the right side of eq8."""
    a, b, c = scene.triangle.vertices
    a1, b1, c1 = _feet(scene)
    product = (
        gw(b, c) / gw(b, a1) * (gw(b1, a) / gw(b1, c))
        * (gw(c, a) / gw(c, b1) * (gw(c1, b) / gw(c1, a)))
        * (gw(a, b) / gw(a, c1) * (gw(a1, c) / gw(a1, b)))
    )
    den = gw(a1, b) * gw(b1, c) * gw(c1, a)
    eq8 = (gw(a, b) * gw(b, c) * gw(c, a)) / den * ((gw(b1, a) * gw(c1, b) * gw(a1, c)) / den)
    return CheckReport.compare("recombination", product, eq8, tol)

