import math
import os

import pytest
from hypothesis import given, settings, strategies as st

from gyroceva import _core_py, kernels

try:
    from gyroceva import _core
except ImportError:  # extension not built
    _core = None

BACKENDS = [_core_py] + ([_core] if _core is not None else [])


@st.composite
def ball_xy(draw, radius=0.95):
    r = radius * math.sqrt(draw(st.floats(0.0, 1.0)))
    theta = draw(st.floats(0.0, 2 * math.pi))
    return r * math.cos(theta), r * math.sin(theta)


def test_backend_selection():
    forced = os.environ.get("GYROCEVA_PURE_PYTHON", "") not in ("", "0")
    expected = "cython" if _core is not None and not forced else "python"
    assert kernels.BACKEND == expected


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__)
def test_known_values(impl):
    assert impl.gamma2(0.0, 0.0, 1.0) == 1.0
    assert impl.gamma2(0.6, 0.0, 1.0) == pytest.approx(1.25, rel=1e-15)
    x, y = impl.add2(0.5, 0.0, 0.5, 0.0, 1.0)
    assert (x, y) == pytest.approx((0.8, 0.0), abs=1e-15)
    x, y = impl.add2(0.6, 0.0, 0.0, 0.6, 1.0)
    assert (x, y) == pytest.approx((0.6, 0.48), abs=1e-15)
    assert impl.gw2(0.0, 0.0, 0.6, 0.0, 1.0) == pytest.approx(0.75, rel=1e-15)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__)
def test_outside_ball_raises(impl):
    with pytest.raises(ValueError):
        impl.gamma2(1.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        impl.gw2(0.0, 0.0, 0.0, 2.0, 1.0)


@pytest.mark.skipif(_core is None, reason="compiled kernels not built")
@settings(max_examples=300)
@given(ball_xy(), ball_xy(), st.sampled_from([0.5, 1.0, 10.0]))
def test_backends_agree(a, b, s):
    a = (a[0] * s, a[1] * s)
    b = (b[0] * s, b[1] * s)
    px, py = _core_py.add2(*a, *b, s)
    cx, cy = _core.add2(*a, *b, s)
    assert math.dist((px, py), (cx, cy)) <= 1e-14 * s
    dp, gp = _core_py.gyrodist2(*a, *b, s)
    dc, gc = _core.gyrodist2(*a, *b, s)
    assert dc == pytest.approx(dp, rel=1e-14, abs=1e-15 * s)
    assert gc == pytest.approx(gp, rel=1e-14)
