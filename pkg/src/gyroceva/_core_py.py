"""Pure-Python 2-D kernels. Mirrors ``_core.pyx`` function for function."""

import math


def gamma2(x, y, s):
    r = math.hypot(x, y) / s
    if not r < 1.0:
        raise ValueError("point outside the ball: |v| = %r >= s = %r" % (r * s, s))
    # (1 - r)(1 + r) avoids cancellation in 1 - r*r near the boundary
    return 1.0 / math.sqrt((1.0 - r) * (1.0 + r))


def add2(ux, uy, vx, vy, s):
    gu = gamma2(ux, uy, s)
    s2 = s * s
    uv = ux * vx + uy * vy
    k = gu / (s2 * (1.0 + gu)) * uv
    den = 1.0 + uv / s2
    return (ux + vx / gu + k * ux) / den, (uy + vy / gu + k * uy) / den


def gyrodist2(ax, ay, bx, by, s):
    """Return ``(d, gamma)`` for the segment ab.

    gamma comes from the composition identity
    gamma(-a + b) = gamma(a) gamma(b) (1 - a.b/s^2), which keeps relative
    accuracy where 1 - d^2/s^2 would cancel.
    """
    if ax == bx and ay == by:
        gamma2(ax, ay, s)
        return 0.0, 1.0
    wx, wy = add2(-ax, -ay, bx, by, s)
    d = math.hypot(wx, wy)
    g = gamma2(ax, ay, s) * gamma2(bx, by, s) * (1.0 - (ax * bx + ay * by) / (s * s))
    if g < 1.0:
        g = 1.0
    return d, g


def gw2(ax, ay, bx, by, s):
    d, g = gyrodist2(ax, ay, bx, by, s)
    return g * d
