"""Independent reference computations used by the tests.

None of these go through the library's Einstein-addition kernels or the
chart linear solve they check.
"""

import math

import mpmath

from gyroceva.gyrocore import Point, gyrodistance
from gyroceva.geometry import GyroLine, gyroline_point

mpmath.mp.dps = 50


def gamma_hp(norm, s=1.0):
    norm, s = mpmath.mpf(norm), mpmath.mpf(s)
    return 1 / mpmath.sqrt(1 - norm**2 / s**2)


def boost_add(u, v, s=1.0):
    """Einstein sum via the Lorentz boost of the 4-velocity of v by u (high precision)."""
    u = [mpmath.mpf(x) for x in u]
    v = [mpmath.mpf(x) for x in v]
    s = mpmath.mpf(s)
    uu = sum(x * x for x in u)
    gu = 1 / mpmath.sqrt(1 - uu / s**2)
    gv = 1 / mpmath.sqrt(1 - sum(x * x for x in v) / s**2)
    t, xs = gv, [gv * x for x in v]
    ux = sum(a * b for a, b in zip(u, xs))
    t_lab = gu * (t + ux / s**2)
    if uu == 0:
        x_lab = xs
    else:
        x_lab = [x + (gu - 1) * ux / uu * a + gu * t * a for x, a in zip(xs, u)]
    return [float(x / t_lab) for x in x_lab]


def euclidean_smarandache_ratio(scene):
    a1, b1, c1 = scene.feet
    p = scene.p

    def dist(u, v):
        return math.dist(u.coords, v.coords)

    return (dist(p, scene.a) / dist(p, a1)) * (dist(p, scene.b) / dist(p, b1)) * (dist(p, scene.c) / dist(p, c1))


def euclidean_ratio_product(pairs):
    out = 1.0
    for x, y, m in pairs:
        out *= math.dist(x.coords, m.coords) / math.dist(y.coords, m.coords)
    return out


def _side(line: GyroLine, x: Point) -> float:
    dx, dy = line.q.x - line.p.x, line.q.y - line.p.y
    return dx * (x.y - line.p.y) - dy * (x.x - line.p.x)


def _bisect_on(line: GyroLine, other: GyroLine, rapidity=15.0, grid=400, iters=200):
    # keep the rapidity t*atanh(d/s) bounded so sampled points stay strictly inside the ball
    d = gyrodistance(line.p, line.q).d
    t_max = rapidity / math.atanh(d / line.s)
    ts = [-t_max + 2 * t_max * k / grid for k in range(grid + 1)]
    prev_t, prev_f = None, None
    for t in ts:
        f = _side(other, gyroline_point(line, t))
        if f == 0.0:
            return gyroline_point(line, t)
        if prev_f is not None and (f > 0) != (prev_f > 0):
            lo, hi, flo = prev_t, t, prev_f
            for _ in range(iters):
                mid = 0.5 * (lo + hi)
                fm = _side(other, gyroline_point(line, mid))
                if fm == 0.0 or mid in (lo, hi):
                    break
                if (fm > 0) == (flo > 0):
                    lo, flo = mid, fm
                else:
                    hi = mid
            return gyroline_point(line, 0.5 * (lo + hi))
        prev_t, prev_f = t, f
    return None


def bisection_intersection(l1: GyroLine, l2: GyroLine):
    """Intersection found by sign-change bisection along each gyroline's own parameter.

    Returns the two estimates (one per line), or None if no crossing was bracketed.
    """
    x1 = _bisect_on(l1, l2)
    x2 = _bisect_on(l2, l1)
    if x1 is None or x2 is None:
        return None
    return x1, x2
