"""Gyrolines, intersections and cevian triangles in the 2-D Einstein ball.

Einstein coordinates double as the Klein chart, where every gyroline is a
straight Euclidean chord of the ball. Intersections are therefore plain
2x2 solves on full chords (never clipped to segments).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .gyrocore import (
    DomainError,
    Point,
    einstein_add,
    einstein_neg,
    einstein_scalar_mul,
)

COLLINEAR_EPS = 1e-9  # times s**2, on the 3-point determinant
MEMBERSHIP_EPS = 1e-10  # chart distance to a chord, times s
PARALLEL_EPS = 1e-12  # sine of the angle between chords
BARYCENTRIC_EPS = 1e-9
GENERATOR_MIN_WEIGHT = 0.05
MAX_TRIES = 1000


class GeometryError(ValueError):
    """Base class for degenerate geometric input."""


class NoIntersection(GeometryError):
    pass


class Coincident(GeometryError):
    pass


class DegeneratePosition(GeometryError):
    pass


class GenerationError(RuntimeError):
    """The scene generator exhausted its rejection budget."""


def _det3(a: Point, b: Point, c: Point) -> float:
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def _require_planar(*points: Point) -> float:
    s = points[0].s
    for p in points:
        if p.dim != 2:
            raise DomainError(f"planar geometry needs 2-D points, got dimension {p.dim}")
        if p.s != s:
            raise DomainError(f"mixed ball radii: {s!r} and {p.s!r}")
    return s


@dataclass(frozen=True)
class GyroLine:
    """The gyroline through two distinct anchor points."""

    p: Point
    q: Point

    def __post_init__(self):
        s = _require_planar(self.p, self.q)
        if math.hypot(self.q.x - self.p.x, self.q.y - self.p.y) <= PARALLEL_EPS * s:
            raise DegeneratePosition(f"gyroline anchors coincide: {self.p.coords!r}")

    @property
    def s(self) -> float:
        return self.p.s

    def direction(self) -> tuple[float, float]:
        return self.q.x - self.p.x, self.q.y - self.p.y


@dataclass(frozen=True)
class GyroTriangle:
    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        s = _require_planar(self.a, self.b, self.c)
        if abs(_det3(self.a, self.b, self.c)) < COLLINEAR_EPS * s * s:
            raise DegeneratePosition("triangle vertices are gyrocollinear")

    @property
    def s(self) -> float:
        return self.a.s

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return self.a, self.b, self.c


@dataclass(frozen=True)
class Scene:
    """Triangle, cevian point and (optionally) the cevian feet."""

    s: float
    triangle: GyroTriangle
    p: Point
    feet: Optional[tuple[Point, Point, Point]] = None

    def __post_init__(self):
        if self.triangle.s != self.s or self.p.s != self.s:
            raise DomainError("scene points do not share the scene radius")

    @property
    def a(self) -> Point:
        return self.triangle.a

    @property
    def b(self) -> Point:
        return self.triangle.b

    @property
    def c(self) -> Point:
        return self.triangle.c

    def with_feet(self) -> "Scene":
        if self.feet is not None:
            return self
        return Scene(self.s, self.triangle, self.p, cevian_feet(self.triangle, self.p))


def make_scene(a: Point, b: Point, c: Point, p: Point) -> Scene:
    """Build a scene and compute its cevian feet."""
    tri = GyroTriangle(a, b, c)
    return Scene(a.s, tri, p, cevian_feet(tri, p))


def gyroline_point(line: GyroLine, t: float) -> Point:
    """Point ``p + t (x) (-p + q)`` of the gyroline; t=0 gives p, t=1 gives q."""
    return einstein_add(line.p, einstein_scalar_mul(t, einstein_add(einstein_neg(line.p), line.q)))


def chart_parameter(line: GyroLine, x: Point) -> float:
    """Euclidean parameter of the projection of x onto the chord, p at 0 and q at 1."""
    dx, dy = line.direction()
    return ((x.x - line.p.x) * dx + (x.y - line.p.y) * dy) / (dx * dx + dy * dy)


def chord_residual(line: GyroLine, x: Point) -> float:
    """Chart distance from x to the chord of ``line``, in units of s."""
    dx, dy = line.direction()
    cross = dx * (x.y - line.p.y) - dy * (x.x - line.p.x)
    return abs(cross) / (math.hypot(dx, dy) * line.s)


def gyroline_intersect(l1: GyroLine, l2: GyroLine) -> Point:
    s = _require_planar(l1.p, l2.p)
    d1x, d1y = l1.direction()
    d2x, d2y = l2.direction()
    det = d1x * d2y - d1y * d2x
    if abs(det) <= PARALLEL_EPS * math.hypot(d1x, d1y) * math.hypot(d2x, d2y):
        if chord_residual(l1, l2.p) <= MEMBERSHIP_EPS:
            raise Coincident("gyrolines coincide")
        raise NoIntersection("gyrolines are parallel chords in the chart")
    ex, ey = l2.p.x - l1.p.x, l2.p.y - l1.p.y
    alpha = (ex * d2y - ey * d2x) / det
    x, y = l1.p.x + alpha * d1x, l1.p.y + alpha * d1y
    if not math.hypot(x, y) < s:
        raise NoIntersection(f"gyrolines meet outside the ball at ({x!r}, {y!r})")
    return Point((x, y), s)


def is_gyrocollinear(a: Point, b: Point, c: Point) -> bool:
    s = _require_planar(a, b, c)
    return abs(_det3(a, b, c)) < COLLINEAR_EPS * s * s


def barycentric(tri: GyroTriangle, p: Point) -> tuple[float, float, float]:
    """Chart barycentric coordinates of p with respect to the triangle."""
    total = _det3(tri.a, tri.b, tri.c)
    wa = _det3(p, tri.b, tri.c) / total
    wb = _det3(tri.a, p, tri.c) / total
    return wa, wb, 1.0 - wa - wb


def cevian_feet(tri: GyroTriangle, p: Point) -> tuple[Point, Point, Point]:
    """Feet A1 = AP.BC, B1 = BP.CA, C1 = CP.AB of the cevians through p."""
    _require_planar(tri.a, p)
    bary = barycentric(tri, p)
    if min(bary) <= BARYCENTRIC_EPS:
        if min(bary) < -BARYCENTRIC_EPS:
            raise DegeneratePosition(f"cevian point lies outside the triangle (barycentric {bary!r})")
        raise DegeneratePosition(f"cevian point lies on a side or vertex (barycentric {bary!r})")
    a, b, c = tri.vertices
    a1 = gyroline_intersect(GyroLine(a, p), GyroLine(b, c))
    b1 = gyroline_intersect(GyroLine(b, p), GyroLine(c, a))
    c1 = gyroline_intersect(GyroLine(c, p), GyroLine(a, b))
    return a1, b1, c1


def _sample_disc(rng: np.random.Generator, radius: float) -> tuple[float, float]:
    r = radius * math.sqrt(rng.random())
    theta = 2.0 * math.pi * rng.random()
    return r * math.cos(theta), r * math.sin(theta)


def _check_margin(margin: float) -> None:
    if not 0.0 < margin < 1.0:
        raise ValueError(f"margin must lie in (0, 1), got {margin!r}")


def _sample_triangle(rng: np.random.Generator, s: float, margin: float) -> GyroTriangle:
    for _ in range(MAX_TRIES):
        a, b, c = (Point(_sample_disc(rng, margin * s), s) for _ in range(3))
        if not is_gyrocollinear(a, b, c):
            return GyroTriangle(a, b, c)
    raise GenerationError(f"no non-collinear triangle after {MAX_TRIES} draws")


def random_scene(seed: int, s: float = 1.0, margin: float = 0.9) -> Scene:
    """Deterministic random scene with an interior cevian point and its feet.

    Vertices are uniform in the disc of radius ``margin * s``; the cevian
    point is a uniform barycentric mix of the vertices with every weight
    at least 0.05.
    """
    _check_margin(margin)
    rng = np.random.default_rng(seed)
    tri = _sample_triangle(rng, s, margin)
    for _ in range(MAX_TRIES):
        w = rng.dirichlet((1.0, 1.0, 1.0))
        if w.min() >= GENERATOR_MIN_WEIGHT:
            break
    else:
        raise GenerationError(f"no admissible barycentric weights after {MAX_TRIES} draws")
    a, b, c = tri.vertices
    p = Point((w[0] * a.x + w[1] * b.x + w[2] * c.x, w[0] * a.y + w[1] * b.y + w[2] * c.y), s)
    return Scene(s, tri, p, cevian_feet(tri, p))


def random_menelaus(seed: int, s: float = 1.0, margin: float = 0.9) -> tuple[GyroTriangle, GyroLine]:
    """Deterministic random triangle with a transversal gyroline.

    The transversal passes through interior points of two sides and meets
    the third side's gyroline inside the ball, away from the vertices.
    """
    _check_margin(margin)
    rng = np.random.default_rng(seed)
    tri = _sample_triangle(rng, s, margin)
    verts = tri.vertices
    sides = [(verts[0], verts[1]), (verts[1], verts[2]), (verts[2], verts[0])]
    for _ in range(MAX_TRIES):
        i, j = rng.choice(3, size=2, replace=False)
        t1, t2 = rng.uniform(0.1, 0.9, size=2)
        (p1, q1), (p2, q2) = sides[i], sides[j]
        x1 = Point((p1.x + t1 * (q1.x - p1.x), p1.y + t1 * (q1.y - p1.y)), s)
        x2 = Point((p2.x + t2 * (q2.x - p2.x), p2.y + t2 * (q2.y - p2.y)), s)
        line = GyroLine(x1, x2)
        p3, q3 = sides[3 - i - j]
        try:
            x3 = gyroline_intersect(line, GyroLine(p3, q3))
        except NoIntersection:
            continue
        if min(math.hypot(x3.x - v.x, x3.y - v.y) for v in verts) > 1e-3 * s:
            return tri, line
    raise GenerationError(f"no admissible transversal after {MAX_TRIES} draws")
