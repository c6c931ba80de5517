import pytest

from gyroceva import Point, make_scene


@pytest.fixture
def isoceles():
    """A=(0,0.6), B=(-0.5,-0.3), C=(0.5,-0.3) with the cevian point at the origin."""
    pt = lambda x, y: Point((x, y), 1.0)
    return make_scene(pt(0.0, 0.6), pt(-0.5, -0.3), pt(0.5, -0.3), pt(0.0, 0.0))
