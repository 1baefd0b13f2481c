"""Exact planar primitives, transforms and predicates over Q(sqrt 3).

Every function here stays inside the field: rotations are restricted to
multiples of 60 degrees and no predicate takes a square root, so all
results are exact and every predicate is decided without tolerance.
"""

from dataclasses import dataclass
from fractions import Fraction

from .qsqrt3 import F3, HALF, ONE, ZERO, f3


class GeometryError(ValueError):
    """Raised for constructions that are undefined on the given input."""


@dataclass(frozen=True, slots=True)
class Point:
    x: F3
    y: F3

    def __post_init__(self):
        if type(self.x) is not F3:
            object.__setattr__(self, "x", f3(self.x))
        if type(self.y) is not F3:
            object.__setattr__(self, "y", f3(self.y))

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k):
        return Point(self.x * k, self.y * k)

    def to_float(self):
        return float(self.x), float(self.y)

    def to_json(self):
        return {"x": self.x.to_json(), "y": self.y.to_json()}

    @classmethod
    def from_json(cls, obj):
        return cls(F3.from_json(obj["x"]), F3.from_json(obj["y"]))

    def __str__(self):
        return f"({self.x}, {self.y})"


@dataclass(frozen=True, slots=True)
class LineCoeffs:
    """The locus ``a*x + b*y + c = 0``, scaled so the first nonzero of (a, b) is 1."""

    a: F3
    b: F3
    c: F3

    def __str__(self):
        return f"[{self.a}, {self.b}, {self.c}]"

    def to_json(self):
        return {"a": self.a.to_json(), "b": self.b.to_json(), "c": self.c.to_json()}


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point
    r2: F3

    def __str__(self):
        return f"circle{{center={self.center}, r2={self.r2}}}"

    def to_json(self):
        return {"center": self.center.to_json(), "r2": self.r2.to_json()}


def point(x, y):
    return Point(f3(x), f3(y))


def _cross(ux, uy, vx, vy):
    return ux * vy - uy * vx


def midpoint(p, q):
    return Point((p.x + q.x) * HALF, (p.y + q.y) * HALF)


_THIRD = F3(Fraction(1, 3))


def centroid3(p, q, r):
    return Point((p.x + q.x + r.x) * _THIRD, (p.y + q.y + r.y) * _THIRD)


_H = Fraction(1, 2)
# (cos, sin) of k*60 degrees as F3 values
_ROT = {
    1: (F3(_H), F3(0, _H)),
    -1: (F3(_H), F3(0, -_H)),
    2: (F3(-_H), F3(0, _H)),
    -2: (F3(-_H), F3(0, -_H)),
}


def _rotate_vec(dx, dy, k):
    c, s = _ROT[k]
    return dx * c - dy * s, dx * s + dy * c


def rotate60k(center, p, k):
    """Rotate ``p`` about ``center`` by ``k*60`` degrees counterclockwise."""
    if k not in _ROT:
        raise ValueError(f"rotation multiple must be one of -2, -1, 1, 2, got {k}")
    rx, ry = _rotate_vec(p.x - center.x, p.y - center.y, k)
    return Point(center.x + rx, center.y + ry)


def equilateral_apex(p, q, side):
    """Third vertex of the equilateral triangle on ``pq``.

    ``side`` is ``"left"`` or ``"right"`` of the directed line p -> q.
    """
    if p == q:
        raise GeometryError("degenerate segment")
    if side == "left":
        return rotate60k(p, q, 1)
    if side == "right":
        return rotate60k(p, q, -1)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def signed_area(p, q, r):
    return _cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y) * HALF


def orientation(p, q, r):
    return signed_area(p, q, r).sign()


def dist2(p, q):
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def _canonical_line(a, b, c):
    lead = a if a else b
    if not lead:
        raise GeometryError("degenerate segment")
    if lead == ONE:
        return LineCoeffs(a, b, c)
    return LineCoeffs(a / lead, b / lead, c / lead)


def line_through(p, q):
    if p == q:
        raise GeometryError("degenerate segment")
    a = p.y - q.y
    b = q.x - p.x
    c = p.x * q.y - q.x * p.y
    return _canonical_line(a, b, c)


def on_line(p, l):
    return not (l.a * p.x + l.b * p.y + l.c)


def intersect_lines(l1, l2):
    det = l1.a * l2.b - l2.a * l1.b
    if not det:
        if l1 == l2:
            raise GeometryError("coincident lines")
        raise GeometryError("parallel lines")
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l1.c * l2.a - l2.c * l1.a) / det
    return Point(x, y)


def circumcircle(p, q, r):
    bx, by = q.x - p.x, q.y - p.y
    cx, cy = r.x - p.x, r.y - p.y
    d = _cross(bx, by, cx, cy) * 2
    if not d:
        raise GeometryError("collinear points")
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    center = Point(p.x + ux, p.y + uy)
    return Circle(center, ux * ux + uy * uy)


def on_circle(p, k):
    return dist2(p, k.center) == k.r2


def incircle_det(p, q, r, s):
    """Lifting determinant; positive when ``s`` is inside the ccw circle pqr."""
    ax, ay = p.x - s.x, p.y - s.y
    bx, by = q.x - s.x, q.y - s.y
    cx, cy = r.x - s.x, r.y - s.y
    al = ax * ax + ay * ay
    bl = bx * bx + by * by
    cl = cx * cx + cy * cy
    return al * _cross(bx, by, cx, cy) + bl * _cross(cx, cy, ax, ay) + cl * _cross(ax, ay, bx, by)


def concyclic4(p, q, r, s):
    """True iff the four points share a circle or a line."""
    return not incircle_det(p, q, r, s)


def collinear(p, q, r):
    return not _cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y)


def on_segment(p, a, b):
    """True iff ``p`` lies on the closed segment ``ab``."""
    if not collinear(a, b, p):
        return False
    dot = (a.x - p.x) * (b.x - p.x) + (a.y - p.y) * (b.y - p.y)
    return dot.sign() <= 0


def angle_eq_120(a, v, b):
    """True iff the unsigned angle a-v-b is exactly 120 degrees."""
    if a == v or b == v:
        raise GeometryError("undefined angle")
    ux, uy = a.x - v.x, a.y - v.y
    wx, wy = b.x - v.x, b.y - v.y
    for k in (2, -2):
        rx, ry = _rotate_vec(ux, uy, k)
        if not _cross(rx, ry, wx, wy) and (rx * wx + ry * wy).sign() > 0:
            return True
    return False


def angle_lt_120(a, v, b):
    """True iff the unsigned angle a-v-b is strictly less than 120 degrees.

    cos < -1/2 is squared out: with d = u.w < 0 the angle is below 120
    exactly when 4*d**2 < |u|**2 * |w|**2.
    """
    if a == v or b == v:
        raise GeometryError("undefined angle")
    ux, uy = a.x - v.x, a.y - v.y
    wx, wy = b.x - v.x, b.y - v.y
    d = ux * wx + uy * wy
    if d.sign() >= 0:
        return True
    return (d * d * 4 - (ux * ux + uy * uy) * (wx * wx + wy * wy)).sign() < 0


def reflect_over_line(p, l):
    t = (l.a * p.x + l.b * p.y + l.c) / (l.a * l.a + l.b * l.b)
    t2 = t + t
    return Point(p.x - t2 * l.a, p.y - t2 * l.b)


def homothety(center, ratio, p):
    ratio = f3(ratio)
    return Point(center.x + ratio * (p.x - center.x), center.y + ratio * (p.y - center.y))


def is_equilateral(p, q, r):
    d = dist2(p, q)
    return bool(d) and d == dist2(q, r) and d == dist2(r, p)


def diagonals_bisect(p, q, r, s):
    """Parallelogram test for pqrs: the diagonals pr and qs share a midpoint."""
    return p.x + r.x == q.x + s.x and p.y + r.y == q.y + s.y


ORIGIN = Point(ZERO, ZERO)


def polygon_area(*pts):
    """Signed shoelace area of a simple polygon given in order."""
    total = ZERO
    n = len(pts)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        total = total + (p.x * q.y - q.x * p.y)
    return total * HALF
