"""Einstein gyrovector operations in the s-ball and Moebius operations on the unit disc.

Points are immutable and carry their own ball radius ``s``; combining
points from balls of different radius is a :class:`DomainError`. Two
dimensional points are routed through the kernels in
:mod:`gyroceva.kernels`, higher dimensions use the generic code below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import kernels


class DomainError(ValueError):
    """A point lies outside its model (ball or disc) or models are mixed."""


def _stable_gamma(norm: float, s: float) -> float:
    r = norm / s
    if not r < 1.0:
        raise DomainError(f"point outside the ball: |v| = {norm!r} >= s = {s!r}")
    return 1.0 / math.sqrt((1.0 - r) * (1.0 + r))


@dataclass(frozen=True)
class Point:
    """A point (admissible velocity) in the open ball of radius ``s``."""

    coords: tuple[float, ...]
    s: float = 1.0

    def __post_init__(self):
        coords = tuple(float(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "s", float(self.s))
        if len(coords) < 2:
            raise DomainError(f"dimension must be >= 2, got {len(coords)}")
        if not (math.isfinite(self.s) and self.s > 0.0):
            raise DomainError(f"s must be positive and finite, got {self.s!r}")
        if not all(math.isfinite(c) for c in coords):
            raise DomainError(f"non-finite coordinates {coords!r}")
        if not math.hypot(*coords) < self.s:
            raise DomainError(f"point {coords!r} outside the ball of radius {self.s!r}")

    @classmethod
    def zero(cls, dim: int = 2, s: float = 1.0) -> "Point":
        return cls((0.0,) * dim, s)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def x(self) -> float:
        return self.coords[0]

    @property
    def y(self) -> float:
        return self.coords[1]

    def norm(self) -> float:
        return math.hypot(*self.coords)

    def __iter__(self):
        return iter(self.coords)


@dataclass(frozen=True)
class GammaLength:
    """Gyrodistance ``d`` together with its gamma factor and ``gamma * d``."""

    d: float
    gamma: float
    weighted: float


def _same_ball(*points: Point) -> float:
    s = points[0].s
    dim = points[0].dim
    for p in points[1:]:
        if p.s != s:
            raise DomainError(f"mixed ball radii: {s!r} and {p.s!r}")
        if p.dim != dim:
            raise DomainError(f"mixed dimensions: {dim} and {p.dim}")
    return s


def _dot(u: Sequence[float], v: Sequence[float]) -> float:
    return math.fsum(a * b for a, b in zip(u, v))


def gamma(v: Point) -> float:
    """Gamma factor ``1/sqrt(1 - |v|^2/s^2)``."""
    return _stable_gamma(v.norm(), v.s)


def einstein_add(u: Point, v: Point) -> Point:
    s = _same_ball(u, v)
    if u.dim == 2:
        return Point(kernels.add2(u.x, u.y, v.x, v.y, s), s)
    gu = gamma(u)
    s2 = s * s
    uv = _dot(u.coords, v.coords)
    k = gu / (s2 * (1.0 + gu)) * uv
    den = 1.0 + uv / s2
    return Point(tuple((a + b / gu + k * a) / den for a, b in zip(u.coords, v.coords)), s)


def einstein_neg(v: Point) -> Point:
    return Point(tuple(-c for c in v.coords), v.s)


def gyrodistance(a: Point, b: Point) -> GammaLength:
    """Gyrodistance ``|(-a) + b|`` between two points with its gamma weight."""
    s = _same_ball(a, b)
    if a.dim == 2:
        d, g = kernels.gyrodist2(a.x, a.y, b.x, b.y, s)
    elif a.coords == b.coords:
        d, g = 0.0, 1.0
    else:
        w = einstein_add(einstein_neg(a), b)
        d = w.norm()
        g = max(1.0, gamma(a) * gamma(b) * (1.0 - _dot(a.coords, b.coords) / (s * s)))
    return GammaLength(d, g, g * d)


def einstein_scalar_mul(r: float, v: Point) -> Point:
    """Scalar multiplication ``s tanh(r atanh(|v|/s)) v/|v|``; ``r (x) 0 = 0``."""
    n = v.norm()
    if n == 0.0:
        return Point.zero(v.dim, v.s)
    gamma(v)  # domain check
    scale = v.s * math.tanh(r * math.atanh(n / v.s)) / n
    return Point(tuple(scale * c for c in v.coords), v.s)


def gyr(u: Point, v: Point, w: Point) -> Point:
    """Gyration ``gyr[u,v]w = -(u + v) + (u + (v + w))``."""
    _same_ball(u, v, w)
    return einstein_add(einstein_neg(einstein_add(u, v)), einstein_add(u, einstein_add(v, w)))


def add_1d(x: float, y: float, s: float = 1.0) -> float:
    """Einstein addition of signed magnitudes in ``(-s, s)``."""
    return (x + y) / (1.0 + x * y / (s * s))


def scalar_mul_1d(r: float, x: float, s: float = 1.0) -> float:
    return s * math.tanh(r * math.atanh(x / s))


# Moebius submodel on the complex unit disc


@dataclass(frozen=True)
class DiscComplex:
    """A point of the open complex unit disc."""

    re: float
    im: float

    def __post_init__(self):
        object.__setattr__(self, "re", float(self.re))
        object.__setattr__(self, "im", float(self.im))
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise DomainError(f"non-finite disc point ({self.re!r}, {self.im!r})")
        if not abs(self.z) < 1.0:
            raise DomainError(f"{self.z!r} outside the unit disc")

    @classmethod
    def from_complex(cls, z: complex) -> "DiscComplex":
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)


def mobius_add(z0: DiscComplex, z: DiscComplex) -> DiscComplex:
    """Moebius addition ``(z0 + z)/(1 + conj(z0) z)``."""
    a, b = z0.z, z.z
    return DiscComplex.from_complex((a + b) / (1 + a.conjugate() * b))


def mobius_neg(z: DiscComplex) -> DiscComplex:
    return DiscComplex(-z.re, -z.im)


def mobius_gyr(a: DiscComplex, b: DiscComplex) -> complex:
    """Unimodular factor ``(1 + a conj(b))/(1 + conj(a) b)`` of ``gyr[a,b]``.

    Returned as a plain complex: it lies on the unit circle, not in the disc.
    """
    za, zb = a.z, b.z
    return (1 + za * zb.conjugate()) / (1 + za.conjugate() * zb)


def mobius_gyr_apply(a: DiscComplex, b: DiscComplex, w: DiscComplex) -> DiscComplex:
    return DiscComplex.from_complex(mobius_gyr(a, b) * w.z)


def mobius_scalar_mul(r: float, z: DiscComplex) -> DiscComplex:
    n = abs(z.z)
    if n == 0.0:
        return DiscComplex(0.0, 0.0)
    return DiscComplex.from_complex(math.tanh(r * math.atanh(n)) / n * z.z)
