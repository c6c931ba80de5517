"""SVG figure of a cevian scene in the Klein chart.

Gyrolines are chords in this chart, so sides and cevians are plain
``<line>`` elements. Output depends only on the scene: coordinates are
written with three decimals and nothing else varies between runs.
"""

from __future__ import annotations

from .geometry import Scene
from .gyrocore import Point

SIZE = 600
RADIUS = 280
_C = SIZE / 2


def to_viewport(p: Point) -> tuple[float, float]:
    """Map chart coordinates to viewport pixels (ball boundary -> circle of RADIUS)."""
    return _C + RADIUS * p.x / p.s, _C - RADIUS * p.y / p.s


def _f(v: float) -> str:
    out = f"{v:.3f}"
    return "0.000" if out == "-0.000" else out


def render_svg(scene: Scene) -> str:
    scene = scene.with_feet()
    a, b, c = scene.triangle.vertices
    a1, b1, c1 = scene.feet
    pts = {"A": a, "B": b, "C": c, "P": scene.p, "A1": a1, "B1": b1, "C1": c1}
    vp = {k: to_viewport(v) for k, v in pts.items()}

    def line(ident, u, v, cls):
        (x1, y1), (x2, y2) = vp[u], vp[v]
        return f'    <line id="{ident}" class="{cls}" x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}"/>'

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        "  <style>.side{stroke:#1f3b73;stroke-width:2}.cevian{stroke:#b5452b;stroke-width:1.2;stroke-dasharray:6 3}"
        ".pt{fill:#111}text{font:15px sans-serif}</style>",
        f'  <circle id="boundary" cx="{_f(_C)}" cy="{_f(_C)}" r="{RADIUS}" fill="none" stroke="#555" stroke-width="1.5"/>',
        '  <g id="sides">',
        line("side-AB", "A", "B", "side"),
        line("side-BC", "B", "C", "side"),
        line("side-CA", "C", "A", "side"),
        "  </g>",
        '  <g id="cevians">',
        line("cevian-AA1", "A", "A1", "cevian"),
        line("cevian-BB1", "B", "B1", "cevian"),
        line("cevian-CC1", "C", "C1", "cevian"),
        "  </g>",
        '  <g id="points">',
    ]
    for name, (x, y) in vp.items():
        label = name if len(name) == 1 else f'{name[0]}<tspan baseline-shift="sub" font-size="11">{name[1]}</tspan>'
        out.append(
            f'    <rect id="pt-{name}" class="pt" data-x="{_f(x)}" data-y="{_f(y)}" '
            f'x="{_f(x - 3)}" y="{_f(y - 3)}" width="6" height="6"/>'
        )
        out.append(f'    <text x="{_f(x + 6)}" y="{_f(y - 6)}">{label}</text>')
    out += ["  </g>", "</svg>", ""]
    return "\n".join(out)
