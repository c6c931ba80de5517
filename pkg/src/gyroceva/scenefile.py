"""JSON scene files.

Format::

    {"s": 1.0, "A": [x, y], "B": [x, y], "C": [x, y], "P": [x, y]}

``s`` defaults to 1. An optional ``"transversal": [[x, y], [x, y]]`` gives
the gyroline used by the Menelaus check. A ``"feet"`` entry is accepted
but ignored: feet are always recomputed from A, B, C and P.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Optional

from .geometry import GyroLine, Scene, make_scene
from .gyrocore import DomainError, Point

Pair = tuple[float, float]


class SceneParseError(ValueError):
    """Malformed scene file; the message carries path, line and field."""

    def __init__(self, message: str, path: str = "<scene>", line: Optional[int] = None, field: Optional[str] = None):
        self.path = path
        self.line = line
        self.field = field
        where = path if line is None else f"{path}:{line}"
        what = message if field is None else f"field {field!r}: {message}"
        super().__init__(f"{where}: {what}")


@dataclass(frozen=True)
class SceneFile:
    s: float
    A: Pair
    B: Pair
    C: Pair
    P: Pair
    transversal: Optional[tuple[Pair, Pair]] = None

    def points(self) -> tuple[Point, Point, Point, Point]:
        return tuple(Point(xy, self.s) for xy in (self.A, self.B, self.C, self.P))

    def to_scene(self) -> Scene:
        """Validated scene with freshly computed feet; raises GeometryError if degenerate."""
        return make_scene(*self.points())

    def transversal_line(self) -> Optional[GyroLine]:
        if self.transversal is None:
            return None
        p, q = self.transversal
        return GyroLine(Point(p, self.s), Point(q, self.s))

    @classmethod
    def from_scene(cls, scene: Scene, transversal: Optional[GyroLine] = None) -> "SceneFile":
        def xy(p: Point) -> Pair:
            return p.x, p.y

        line = None if transversal is None else (xy(transversal.p), xy(transversal.q))
        return cls(scene.s, xy(scene.a), xy(scene.b), xy(scene.c), xy(scene.p), line)


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _pair(p: Pair) -> str:
    return f"[{_fmt(p[0])}, {_fmt(p[1])}]"


def dumps(sf: SceneFile) -> str:
    lines = [f'  "s": {_fmt(sf.s)}']
    for key in ("A", "B", "C", "P"):
        lines.append(f'  "{key}": {_pair(getattr(sf, key))}')
    if sf.transversal is not None:
        lines.append(f'  "transversal": [{_pair(sf.transversal[0])}, {_pair(sf.transversal[1])}]')
    return "{\n" + ",\n".join(lines) + "\n}\n"


def _line_of(text: str, key: str) -> Optional[int]:
    m = re.search(r'"%s"\s*:' % re.escape(key), text)
    return None if m is None else text.count("\n", 0, m.start()) + 1


def _number(value, err) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise err(f"expected a number, got {value!r}")
    if not math.isfinite(value):
        raise err(f"non-finite value {value!r}")
    return float(value)


def _as_pair(value, err) -> Pair:
    if not isinstance(value, list) or len(value) != 2:
        raise err(f"expected an [x, y] pair, got {value!r}")
    return _number(value[0], err), _number(value[1], err)


def loads(text: str, path: str = "<scene>") -> SceneFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneParseError(f"invalid JSON: {exc.msg} (column {exc.colno})", path, exc.lineno) from None
    if not isinstance(data, dict):
        raise SceneParseError("top level must be a JSON object", path, 1)

    def err_for(key):
        return lambda msg: SceneParseError(msg, path, _line_of(text, key), key)

    s = _number(data.get("s", 1.0), err_for("s"))
    if s <= 0.0:
        raise err_for("s")(f"s must be positive, got {s!r}")
    pairs = {}
    for key in ("A", "B", "C", "P"):
        if key not in data:
            raise SceneParseError("missing required field", path, None, key)
        pairs[key] = _as_pair(data[key], err_for(key))
    transversal = None
    if "transversal" in data:
        raw = data["transversal"]
        err = err_for("transversal")
        if not isinstance(raw, list) or len(raw) != 2:
            raise err(f"expected two [x, y] pairs, got {raw!r}")
        transversal = (_as_pair(raw[0], err), _as_pair(raw[1], err))
    sf = SceneFile(s, pairs["A"], pairs["B"], pairs["C"], pairs["P"], transversal)
    for key in ("A", "B", "C", "P"):
        try:
            Point(pairs[key], s)
        except DomainError as exc:
            raise err_for(key)(str(exc)) from None
    if transversal is not None:
        try:
            sf.transversal_line()
        except (DomainError, ValueError) as exc:
            raise err_for("transversal")(str(exc)) from None
    return sf


def load(path: str) -> SceneFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SceneParseError(f"cannot read scene file: {exc.strerror}", path) from None
    return loads(text, path)


def dump(sf: SceneFile, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(sf))
