"""Schematic SVG figures of a Napoleon configuration.

Exact points are converted to floats here and nowhere else.
"""

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field

LAYERS = ("config", "napoleon", "grunbaum")

MARGIN = 0.12

_STYLE = """
.base { stroke: #222; fill: none; }
.flank { stroke: #3465a4; fill: #3465a4; fill-opacity: 0.08; }
.napoleon { stroke: #cc0000; fill: none; }
.circle { stroke: #4e9a06; fill: none; stroke-dasharray: 4 3; }
.label { fill: #111; font-family: sans-serif; }
"""


@dataclass
class Segment:
    p: tuple
    q: tuple
    cls: str


@dataclass
class Polygon:
    pts: list
    cls: str


@dataclass
class CircleShape:
    center: tuple
    r: float
    cls: str


@dataclass
class LabeledPoint:
    label: str
    pos: tuple
    cls: str = "label"


@dataclass
class SvgScene:
    viewbox: tuple
    layers: list = field(default_factory=list)

    def labels(self):
        return [item.label for item in self.layers if isinstance(item, LabeledPoint)]


def _flip(p):
    x, y = p.to_float()
    return (x, -y)


def _extent(items):
    xs, ys = [], []
    for it in items:
        if isinstance(it, Segment):
            pts = [it.p, it.q]
        elif isinstance(it, Polygon):
            pts = it.pts
        elif isinstance(it, CircleShape):
            (cx, cy), r = it.center, it.r
            pts = [(cx - r, cy - r), (cx + r, cy + r)]
        else:
            pts = [it.pos]
        for x, y in pts:
            xs.append(x)
            ys.append(y)
    return min(xs), min(ys), max(xs), max(ys)


def build_scene(bundle, layers="config"):
    """Collect the drawables for one of ``config``, ``napoleon``, ``grunbaum``."""
    if layers not in LAYERS:
        raise ValueError(f"layers must be one of {LAYERS}, got {layers!r}")
    depth = LAYERS.index(layers)
    pts = {name: _flip(p) for name, p in bundle.points().items()}
    items = []

    def tri(a, b, c, cls):
        items.append(Polygon([pts[a], pts[b], pts[c]], cls))

    tri("A", "B", "C", "base")
    for apex, (u, v) in (("A1", ("B", "C")), ("B1", ("C", "A")), ("C1", ("A", "B"))):
        tri(apex, u, v, "flank")
        items.append(Segment(pts[apex[0]], pts[apex], "base"))
    names = ["A", "B", "C", "A1", "B1", "C1", "J"]

    if depth >= 1:
        for apex, (u, v) in (("A1p", ("B", "C")), ("B1p", ("C", "A")), ("C1p", ("A", "B"))):
            tri(apex, u, v, "flank")
        tri("G1", "G2", "G3", "napoleon")
        tri("G1p", "G2p", "G3p", "napoleon")
        for k in bundle.flank_circles:
            items.append(CircleShape(_flip(k.center), math.sqrt(float(k.r2)), "circle"))
        names += ["A1p", "B1p", "C1p", "G1", "G2", "G3", "G1p", "G2p", "G3p", "G"]

    if depth >= 2:
        tri("A2", "B2", "C2", "napoleon")
        tri("A2p", "B2p", "C2p", "napoleon")
        tri("Astar", "Bstar", "Cstar", "napoleon")
        tri("Astarstar", "Bstarstar", "Cstarstar", "napoleon")
        names += ["A2", "B2", "C2", "A2p", "B2p", "C2p", "Astar", "Bstar", "Cstar", "Astarstar", "Bstarstar", "Cstarstar"]

    items += [LabeledPoint(n, pts[n]) for n in names]
    x0, y0, x1, y1 = _extent(items)
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = MARGIN * span
    viewbox = (x0 - pad, y0 - pad, (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad)
    return SvgScene(viewbox, items)


def _fmt(v):
    return f"{v + 0.0:.6g}"


def render_svg(scene):
    vx, vy, vw, vh = scene.viewbox
    span = max(vw, vh)
    stroke = span * 0.003
    font = span * 0.025
    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "version": "1.1",
            "viewBox": " ".join(_fmt(v) for v in scene.viewbox),
            "width": "800",
            "height": _fmt(800 * vh / vw) if vw else "800",
        },
    )
    ET.SubElement(root, "style").text = _STYLE + f"* {{ stroke-width: {_fmt(stroke)}; }}\n.label {{ font-size: {_fmt(font)}px; stroke: none; }}\n"
    for it in scene.layers:
        if isinstance(it, Segment):
            ET.SubElement(root, "line", {"class": it.cls, "x1": _fmt(it.p[0]), "y1": _fmt(it.p[1]), "x2": _fmt(it.q[0]), "y2": _fmt(it.q[1])})
        elif isinstance(it, Polygon):
            ET.SubElement(root, "polygon", {"class": it.cls, "points": " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in it.pts)})
        elif isinstance(it, CircleShape):
            ET.SubElement(root, "circle", {"class": it.cls, "cx": _fmt(it.center[0]), "cy": _fmt(it.center[1]), "r": _fmt(it.r)})
        else:
            x, y = it.pos
            g = ET.SubElement(root, "g", {"class": it.cls})
            ET.SubElement(g, "circle", {"cx": _fmt(x), "cy": _fmt(y), "r": _fmt(stroke * 1.5)})
            text = ET.SubElement(g, "text", {"x": _fmt(x + font * 0.3), "y": _fmt(y - font * 0.3)})
            text.text = it.label
    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"
