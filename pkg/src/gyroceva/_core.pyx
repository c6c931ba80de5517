# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled 2-D kernels. Same contract as ``_core_py``."""

from libc.math cimport sqrt, hypot


cdef inline double _gamma(double x, double y, double s) except -1.0:
    cdef double r = hypot(x, y) / s
    if not r < 1.0:
        raise ValueError("point outside the ball: |v| = %r >= s = %r" % (r * s, s))
    return 1.0 / sqrt((1.0 - r) * (1.0 + r))


cdef inline int _add(double ux, double uy, double vx, double vy, double s,
                     double *ox, double *oy) except -1:
    cdef double gu = _gamma(ux, uy, s)
    cdef double s2 = s * s
    cdef double uv = ux * vx + uy * vy
    cdef double k = gu / (s2 * (1.0 + gu)) * uv
    cdef double den = 1.0 + uv / s2
    ox[0] = (ux + vx / gu + k * ux) / den
    oy[0] = (uy + vy / gu + k * uy) / den
    return 0


def gamma2(double x, double y, double s):
    return _gamma(x, y, s)


def add2(double ux, double uy, double vx, double vy, double s):
    cdef double ox, oy
    _add(ux, uy, vx, vy, s, &ox, &oy)
    return ox, oy


cdef inline int _gyrodist(double ax, double ay, double bx, double by, double s,
                          double *d, double *g) except -1:
    cdef double wx, wy
    if ax == bx and ay == by:
        _gamma(ax, ay, s)
        d[0] = 0.0
        g[0] = 1.0
        return 0
    _add(-ax, -ay, bx, by, s, &wx, &wy)
    d[0] = hypot(wx, wy)
    g[0] = _gamma(ax, ay, s) * _gamma(bx, by, s) * (1.0 - (ax * bx + ay * by) / (s * s))
    if g[0] < 1.0:
        g[0] = 1.0
    return 0


def gyrodist2(double ax, double ay, double bx, double by, double s):
    cdef double d, g
    _gyrodist(ax, ay, bx, by, s, &d, &g)
    return d, g


def gw2(double ax, double ay, double bx, double by, double s):
    cdef double d, g
    _gyrodist(ax, ay, bx, by, s, &d, &g)
    return g * d
