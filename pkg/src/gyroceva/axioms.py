"""Randomized residual suite for the gyrovector space axioms.

Both the Einstein ball and the Moebius disc are covered. Each case
returns a residual per law, measured as ``|lhs - rhs| / max(1, |rhs|)``
(vector laws use the Euclidean norm). Inequalities and closure report
their violation, so every residual should be ~0.
"""

from __future__ import annotations

import math

import numpy as np

from .gyrocore import (
    DiscComplex,
    Point,
    add_1d,
    einstein_add,
    einstein_neg,
    einstein_scalar_mul,
    gamma,
    gyr,
    mobius_add,
    mobius_gyr,
    mobius_gyr_apply,
    mobius_neg,
    mobius_scalar_mul,
    scalar_mul_1d,
)

EINSTEIN_LAWS = (
    "closure", "left_identity", "left_cancellation", "gyrocommutative", "gyr_inner_product",
    "gyr_isometry", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "gamma_composition",
)
MOBIUS_LAWS = EINSTEIN_LAWS[:-1] + ("gyr_composition",)

R_RANGE = 1.5


def _rel(diff: float, ref: float) -> float:
    return abs(diff) / max(1.0, abs(ref))


def _vres(x, y) -> float:
    """Relative residual between two coordinate sequences."""
    return math.dist(x, y) / max(1.0, math.hypot(*y))


def _ball_point(rng: np.random.Generator, dim: int, s: float, margin: float) -> Point:
    direction = rng.standard_normal(dim)
    direction /= np.linalg.norm(direction)
    r = margin * s * rng.random() ** (1.0 / dim)
    return Point(tuple(r * direction), s)


def einstein_case(rng: np.random.Generator, dim: int = 2, s: float = 1.0, margin: float = 0.95) -> dict[str, float]:
    u, v, w, a, b = (_ball_point(rng, dim, s, margin) for _ in range(5))
    r, r1, r2 = rng.uniform(-R_RANGE, R_RANGE, size=3)
    zero = Point.zero(dim, s)
    out = {}

    uv = einstein_add(u, v)
    out["closure"] = 0.0 if uv.norm() < s else 1.0
    out["left_identity"] = _vres(einstein_add(zero, v).coords, v.coords)
    out["left_cancellation"] = _vres(einstein_add(einstein_neg(u), uv).coords, v.coords)
    out["gyrocommutative"] = _vres(uv.coords, gyr(u, v, einstein_add(v, u)).coords)

    ga, gb = gyr(u, v, a), gyr(u, v, b)
    ab = float(np.dot(a.coords, b.coords))
    out["gyr_inner_product"] = _rel(float(np.dot(ga.coords, gb.coords)) - ab, ab)
    out["gyr_isometry"] = _rel(gyr(u, v, w).norm() - w.norm(), w.norm())

    out["G1"] = _vres(einstein_scalar_mul(1.0, a).coords, a.coords)
    out["G2"] = _vres(
        einstein_add(einstein_scalar_mul(r1, a), einstein_scalar_mul(r2, a)).coords,
        einstein_scalar_mul(r1 + r2, a).coords,
    )
    out["G3"] = _vres(einstein_scalar_mul(r1, einstein_scalar_mul(r2, a)).coords,
                      einstein_scalar_mul(r1 * r2, a).coords)
    ra = einstein_scalar_mul(r, a)
    out["G4"] = _vres(
        [c / ra.norm() for c in einstein_scalar_mul(abs(r), a).coords],
        [c / a.norm() for c in a.coords],
    )
    out["G5"] = _vres(gyr(u, v, ra).coords, einstein_scalar_mul(r, gyr(u, v, a)).coords)
    r1v = einstein_scalar_mul(r1, v)
    out["G6"] = _vres(gyr(r1v, r1v, w).coords, w.coords)
    rhs7 = scalar_mul_1d(abs(r), a.norm(), s)
    out["G7"] = _rel(ra.norm() - rhs7, rhs7)
    bound = add_1d(a.norm(), b.norm(), s)
    out["G8"] = max(0.0, einstein_add(a, b).norm() - bound) / max(1.0, bound)

    composed = gamma(u) * gamma(v) * (1.0 + float(np.dot(u.coords, v.coords)) / (s * s))
    out["gamma_composition"] = _rel(gamma(uv) - composed, composed)
    return out


def _disc_point(rng: np.random.Generator, margin: float) -> DiscComplex:
    r = margin * math.sqrt(rng.random())
    theta = 2.0 * math.pi * rng.random()
    return DiscComplex(r * math.cos(theta), r * math.sin(theta))


def _cres(x: complex, y: complex) -> float:
    return abs(x - y) / max(1.0, abs(y))


def mobius_case(rng: np.random.Generator, margin: float = 0.95) -> dict[str, float]:
    u, v, w, a, b = (_disc_point(rng, margin) for _ in range(5))
    r, r1, r2 = rng.uniform(-R_RANGE, R_RANGE, size=3)
    zero = DiscComplex(0.0, 0.0)
    out = {}

    uv = mobius_add(u, v)
    out["closure"] = 0.0 if abs(uv.z) < 1.0 else 1.0
    out["left_identity"] = _cres(mobius_add(zero, v).z, v.z)
    out["left_cancellation"] = _cres(mobius_add(mobius_neg(u), uv).z, v.z)
    out["gyrocommutative"] = _cres(uv.z, mobius_gyr(u, v) * mobius_add(v, u).z)

    ga, gb = mobius_gyr_apply(u, v, a).z, mobius_gyr_apply(u, v, b).z
    ab = (a.z * b.z.conjugate()).real
    out["gyr_inner_product"] = _rel((ga * gb.conjugate()).real - ab, ab)
    out["gyr_isometry"] = _rel(abs(mobius_gyr_apply(u, v, w).z) - abs(w.z), abs(w.z))

    out["G1"] = _cres(mobius_scalar_mul(1.0, a).z, a.z)
    out["G2"] = _cres(mobius_add(mobius_scalar_mul(r1, a), mobius_scalar_mul(r2, a)).z,
                      mobius_scalar_mul(r1 + r2, a).z)
    out["G3"] = _cres(mobius_scalar_mul(r1, mobius_scalar_mul(r2, a)).z, mobius_scalar_mul(r1 * r2, a).z)
    ra = mobius_scalar_mul(r, a)
    out["G4"] = _cres(mobius_scalar_mul(abs(r), a).z / abs(ra.z), a.z / abs(a.z))
    out["G5"] = _cres(mobius_gyr_apply(u, v, ra).z, mobius_scalar_mul(r, mobius_gyr_apply(u, v, a)).z)
    r1v = mobius_scalar_mul(r1, v)
    out["G6"] = _cres(mobius_gyr_apply(r1v, r1v, w).z, w.z)
    rhs7 = scalar_mul_1d(abs(r), abs(a.z))
    out["G7"] = _rel(abs(ra.z) - rhs7, rhs7)
    bound = add_1d(abs(a.z), abs(b.z))
    out["G8"] = max(0.0, abs(mobius_add(a, b).z) - bound) / max(1.0, bound)

    composed = mobius_add(mobius_neg(uv), mobius_add(u, mobius_add(v, w)))
    out["gyr_composition"] = _cres(composed.z, mobius_gyr_apply(u, v, w).z)
    return out


def run_suite(model: str = "einstein", n: int = 1000, seed: int = 0, margin: float = 0.95,
              dim: int = 2, s: float = 1.0) -> dict[str, float]:
    """Maximum residual per law over ``n`` seeded random cases."""
    if model not in ("einstein", "mobius"):
        raise ValueError(f"unknown model {model!r}")
    rng = np.random.default_rng(seed)
    laws = EINSTEIN_LAWS if model == "einstein" else MOBIUS_LAWS
    worst = dict.fromkeys(laws, 0.0)
    for _ in range(n):
        case = einstein_case(rng, dim, s, margin) if model == "einstein" else mobius_case(rng, margin)
        for law, res in case.items():
            prev = worst[law]
            # a NaN residual is sticky so it cannot be hidden by later cases
            if not math.isnan(prev) and (math.isnan(res) or res > prev):
                worst[law] = res
    return worst
