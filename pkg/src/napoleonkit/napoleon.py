"""Construction of the full outward/inward Napoleon configuration of a triangle."""

from dataclasses import dataclass, fields, replace

from .geom import (
    GeometryError,
    centroid3,
    circumcircle,
    equilateral_apex,
    intersect_lines,
    line_through,
    midpoint,
    signed_area,
)
from .qsqrt3 import F3


# bundle field -> JSON names of its components, in order
POINT_FIELDS = {
    "base": ("A", "B", "C"),
    "side_midpoints": ("M1", "M2", "M3"),
    "outward_apexes": ("A1", "B1", "C1"),
    "inward_apexes": ("A1p", "B1p", "C1p"),
    "apex_midpoints_out": ("A2", "B2", "C2"),
    "apex_midpoints_in": ("A2p", "B2p", "C2p"),
    "flank_centroids_out": ("G1", "G2", "G3"),
    "flank_centroids_in": ("G1p", "G2p", "G3p"),
    "second_centroids_out": ("Astar", "Bstar", "Cstar"),
    "second_centroids_in": ("Astarstar", "Bstarstar", "Cstarstar"),
    "fermat": ("J",),
    "centroid": ("G",),
}

CIRCLE_NAMES = ("K1", "K2", "K3")


@dataclass(frozen=True)
class NapoleonBundle:
    base: tuple
    side_midpoints: tuple
    outward_apexes: tuple
    inward_apexes: tuple
    apex_midpoints_out: tuple
    apex_midpoints_in: tuple
    flank_centroids_out: tuple
    flank_centroids_in: tuple
    second_centroids_out: tuple
    second_centroids_in: tuple
    fermat: object
    flank_circles: tuple
    centroid: object

    def points(self):
        """All named points as an ordered ``{name: Point}`` dict."""
        out = {}
        for field_name, names in POINT_FIELDS.items():
            value = getattr(self, field_name)
            if len(names) == 1:
                value = (value,)
            out.update(zip(names, value))
        return out

    def with_point(self, name, p):
        """Copy of the bundle with one named point replaced (no revalidation)."""
        for field_name, names in POINT_FIELDS.items():
            if name in names:
                if len(names) == 1:
                    return replace(self, **{field_name: p})
                value = list(getattr(self, field_name))
                value[names.index(name)] = p
                return replace(self, **{field_name: tuple(value)})
        raise KeyError(name)

    def to_json(self):
        obj = {name: p.to_json() for name, p in self.points().items()}
        for name, k in zip(CIRCLE_NAMES, self.flank_circles):
            obj[name] = k.to_json()
        return obj


@dataclass(frozen=True)
class AreaLedger:
    S: F3
    flank_sum: F3
    outer_napoleon: F3
    inner_napoleon: F3
    second_outer: F3
    second_inner: F3

    def to_json(self):
        return {f.name: getattr(self, f.name).to_json() for f in fields(self)}


def _check_base(A, B, C):
    s = signed_area(A, B, C)
    if not s:
        raise GeometryError("degenerate triangle")
    return s.sign()


def erect_apex(p, q, ref, outward):
    """Apex of the equilateral triangle on ``pq``, away from or toward ``ref``."""
    ref_side = signed_area(p, q, ref).sign()
    if not ref_side:
        raise GeometryError("degenerate triangle")
    left = (ref_side > 0) != outward
    return equilateral_apex(p, q, "left" if left else "right")


def build_outward_apexes(A, B, C):
    _check_base(A, B, C)
    return erect_apex(B, C, A, True), erect_apex(C, A, B, True), erect_apex(A, B, C, True)


def build_inward_apexes(A, B, C):
    _check_base(A, B, C)
    return erect_apex(B, C, A, False), erect_apex(C, A, B, False), erect_apex(A, B, C, False)


def fermat_point(A, B, C, A1, B1):
    """Common point J of the cevian lines AA1 and BB1.

    ``C`` is not needed for the intersection itself; callers certify that
    CC1 passes through the result.
    """
    if A == A1 or B == B1:
        raise GeometryError("degenerate cevian")
    try:
        return intersect_lines(line_through(A, A1), line_through(B, B1))
    except GeometryError:
        raise GeometryError("no intersection") from None


def _midpoints_of(P, Q, R):
    return midpoint(Q, R), midpoint(R, P), midpoint(P, Q)


def _flank_centroids(A, B, C, apexes):
    A1, B1, C1 = apexes
    return centroid3(A1, B, C), centroid3(A, B1, C), centroid3(A, B, C1)


def _second_centroids(A, B, C, mids):
    A2, B2, C2 = mids
    return centroid3(A, B2, C2), centroid3(A2, B, C2), centroid3(A2, B2, C)


def build_bundle(A, B, C):
    _check_base(A, B, C)
    out = build_outward_apexes(A, B, C)
    inn = build_inward_apexes(A, B, C)
    mids_out = _midpoints_of(*out)
    mids_in = _midpoints_of(*inn)
    A1, B1, C1 = out
    return NapoleonBundle(
        base=(A, B, C),
        side_midpoints=_midpoints_of(A, B, C),
        outward_apexes=out,
        inward_apexes=inn,
        apex_midpoints_out=mids_out,
        apex_midpoints_in=mids_in,
        flank_centroids_out=_flank_centroids(A, B, C, out),
        flank_centroids_in=_flank_centroids(A, B, C, inn),
        second_centroids_out=_second_centroids(A, B, C, mids_out),
        second_centroids_in=_second_centroids(A, B, C, mids_in),
        fermat=fermat_point(A, B, C, A1, B1),
        flank_circles=(circumcircle(A1, B, C), circumcircle(A, B1, C), circumcircle(A, B, C1)),
        centroid=centroid3(A, B, C),
    )


def flank_area_sum(bundle):
    """Sum of the unsigned areas of the three outward flank triangles."""
    A, B, C = bundle.base
    A1, B1, C1 = bundle.outward_apexes
    return sum((abs(signed_area(*t)) for t in ((A1, B, C), (A, B1, C), (A, B, C1))), F3(0))


def area_ledger(bundle):
    return AreaLedger(
        S=signed_area(*bundle.base),
        flank_sum=flank_area_sum(bundle),
        outer_napoleon=signed_area(*bundle.flank_centroids_out),
        inner_napoleon=signed_area(*bundle.flank_centroids_in),
        second_outer=signed_area(*bundle.second_centroids_out),
        second_inner=signed_area(*bundle.second_centroids_in),
    )

