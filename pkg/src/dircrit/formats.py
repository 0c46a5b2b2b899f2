"""File formats, the bundled fixture corpus and SVG rendering.

Configuration files are JSON documents::

    {"D": 5, "points": [[[0, 1, 0, 1], [1, 2, 1, 2]], ...]}

where each coordinate ``[a_num, a_den, b_num, b_den]`` stands for
``a_num/a_den + (b_num/b_den) * sqrt(D)``.
"""
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
import colorsys
import json

from .core import parse_halfperiod
from .errors import FormatError
from .geometry import Configuration, FieldScalar, RegularPolygon, directions, direction

# -- configuration files ------------------------------------------------------


def _encode(c):
    return [c.a.numerator, c.a.denominator, c.b.numerator, c.b.denominator]


def _decode(entry, D):
    if (not isinstance(entry, list) or len(entry) != 4
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in entry)):
        raise FormatError(f"coordinate must be four integers, got {entry!r}")
    an, ad, bn, bd = entry
    if ad == 0 or bd == 0:
        raise FormatError(f"zero denominator in {entry!r}")
    return FieldScalar(Fraction(an, ad), Fraction(bn, bd), D)


def config_to_dict(cfg):
    return {"D": cfg.D, "points": [[_encode(x), _encode(y)] for x, y in cfg.points]}


def config_from_dict(doc):
    if not isinstance(doc, dict) or "D" not in doc or "points" not in doc:
        raise FormatError("configuration needs fields 'D' and 'points'")
    D = doc["D"]
    if not isinstance(D, int):
        raise FormatError(f"D must be an integer, got {D!r}")
    pts = []
    for p in doc["points"]:
        if not isinstance(p, list) or len(p) != 2:
            raise FormatError(f"point must be a pair of coordinates, got {p!r}")
        pts.append((_decode(p[0], D), _decode(p[1], D)))
    return Configuration(D, tuple(pts))


def dump_config(cfg):
    return json.dumps(config_to_dict(cfg)) + "\n"


def load_config(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return config_from_dict(doc)


# -- fixture corpus -------------------------------------------------------------

@dataclass(frozen=True)
class FixtureEntry:
    name: str
    signature: tuple
    h: int
    filename: str

    def text(self):
        return resources.files("dircrit").joinpath("fixtures", self.filename).read_text()

    def load(self):
        return parse_halfperiod(self.text())


FIXTURES = {
    e.name: e for e in (
        FixtureEntry("dc_321", (3, 2, 1), 12, "dc_321.txt"),
        FixtureEntry("dc_222", (2, 2, 2), 12, "dc_222.txt"),
        FixtureEntry("dc_212", (2, 1, 2), 10, "dc_212.txt"),
        FixtureEntry("dc_222_drop1", (2, 1, 2), 12, "dc_222_drop1.txt"),
        FixtureEntry("dc_222_drop3", (2, 1, 2), 12, "dc_222_drop3.txt"),
        FixtureEntry("realized_11111111", (1,) * 8, 16, "realized_11111111.txt"),
        FixtureEntry("realized_44", (4, 4), 16, "realized_44.txt"),
        FixtureEntry("realized_53", (5, 3), 16, "realized_53.txt"),
        FixtureEntry("realized_62", (6, 2), 16, "realized_62.txt"),
        FixtureEntry("realized_71", (7, 1), 16, "realized_71.txt"),
        FixtureEntry("realized_611", (6, 1, 1), 16, "realized_611.txt"),
    )
}


# -- SVG --------------------------------------------------------------------------

def _segments_by_class(obj):
    """Float points plus point-index pairs grouped by direction class."""
    if isinstance(obj, RegularPolygon):
        pts = obj.float_points()
        m2 = 2 * obj.m
        groups = {}
        for a in range(m2):
            for b in range(a + 1, m2):
                groups.setdefault((a + b) % m2, []).append((a, b))
        return pts, [groups[k] for k in sorted(groups)]
    pts = [(float(x), float(y)) for x, y in obj.points]
    order = {u: i for i, u in enumerate(directions(obj))}
    groups = [[] for _ in order]
    P = obj.points
    for a in range(len(P)):
        for b in range(a + 1, len(P)):
            groups[order[direction(P[a], P[b])]].append((a, b))
    return pts, groups


def _color(i, k):
    r, g, b = colorsys.hls_to_rgb(i / max(k, 1), 0.45, 0.75)
    return f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}"


def render_svg(obj, size=400, margin=20):
    """SVG 1.1 drawing: every connecting segment colored by its direction
    class, and the points as circles.  Coordinates are printed with six
    decimals and used for display only."""
    pts, groups = _segments_by_class(obj)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (size - 2 * margin) / span
    cx, cy = (max(xs) + min(xs)) / 2, (max(ys) + min(ys)) / 2

    def sx(x):
        return f"{size / 2 + (x - cx) * scale:.6f}"

    def sy(y):
        return f"{size / 2 - (y - cy) * scale:.6f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
    ]
    for i, segs in enumerate(groups):
        out.append(f'<g class="direction" id="dir{i}" stroke="{_color(i, len(groups))}" '
                   f'stroke-width="1" stroke-opacity="0.7">')
        for a, b in segs:
            (x1, y1), (x2, y2) = pts[a], pts[b]
            out.append(f'<line x1="{sx(x1)}" y1="{sy(y1)}" x2="{sx(x2)}" y2="{sy(y2)}"/>')
        out.append("</g>")
    out.append('<g class="points" fill="black">')
    for i, (x, y) in enumerate(pts):
        out.append(f'<circle id="p{i + 1}" cx="{sx(x)}" cy="{sy(y)}" r="4"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
