"""Exact certification of the Napoleon / Grünbaum claims over a bundle.

Each ``check_*`` function evaluates every sub-claim (it does not stop at
the first failure) and returns a :class:`CheckResult` whose details list
the exact quantities compared, failures first.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .geom import (
    GeometryError,
    angle_eq_120,
    angle_lt_120,
    centroid3,
    collinear,
    concyclic4,
    diagonals_bisect,
    dist2,
    homothety,
    is_equilateral,
    line_through,
    midpoint,
    on_circle,
    on_segment,
    orientation,
    polygon_area,
    reflect_over_line,
    rotate60k,
)
from .napoleon import area_ledger, build_bundle
from .qsqrt3 import F3

CLAIMS = ("basic_lemma", "napoleon", "reflection_device", "midpoints_centroids", "grunbaum")

LABELING_NOTE = (
    "labels: A* = centroid(A,B2,C2), B* = centroid(A2,B,C2), C* = centroid(A2,B2,C); "
    "A** etc. likewise with primed midpoints (opposite-vertex convention)"
)

_NEG_HALF = F3(Fraction(-1, 2))
_THIRD = F3(Fraction(1, 3))


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: str

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "details": self.details}


@dataclass
class Report:
    input: tuple
    results: list
    all_passed: bool
    ledger: dict = field(default=None, repr=False)

    def to_json(self):
        obj = {
            "input": {name: p.to_json() for name, p in zip("ABC", self.input)},
            "results": [r.to_json() for r in self.results],
            "all_passed": self.all_passed,
        }
        if self.ledger is not None:
            obj["ledger"] = self.ledger
        return obj


class _Claims:
    """Accumulates sub-claims for one check."""

    def __init__(self, name):
        self.name = name
        self.items = []

    def eq(self, label, lhs, rhs):
        self.items.append((lhs == rhs, f"{label}: {lhs} == {rhs}"))

    def holds(self, label, ok, note=""):
        self.items.append((bool(ok), f"{label}{': ' + note if note else ''}"))

    def note(self, text):
        self.items.append((None, text))

    def result(self):
        failed = [text for ok, text in self.items if ok is False]
        lines = [f"FAIL {t}" for t in failed]
        lines += [f"ok {t}" for ok, t in self.items if ok]
        lines += [f"note {t}" for ok, t in self.items if ok is None]
        return CheckResult(self.name, not failed, "; ".join(lines))


def _flank_hypotheses(c, bundle):
    """Configuration hypotheses: equilateral flanks on the correct sides."""
    A, B, C = bundle.base
    sides = (((B, C, A), "A1BC"), ((C, A, B), "AB1C"), ((A, B, C), "ABC1"))
    for apexes, tag, away in ((bundle.outward_apexes, "", True), (bundle.inward_apexes, "'", False)):
        for ((P, Q, R), label), X in zip(sides, apexes):
            name = label.replace("1", "1" + tag)
            c.holds(f"{name} equilateral", is_equilateral(X, P, Q))
            ref = orientation(P, Q, R)
            side = orientation(P, Q, X)
            # an inward apex may coincide with the opposite vertex (equilateral base)
            c.holds(f"{name} {'outward' if away else 'inward'}", ref and side == (-ref if away else ref))


def _all_angles_below_120(A, B, C):
    return angle_lt_120(B, A, C) and angle_lt_120(C, B, A) and angle_lt_120(A, C, B)


def check_basic_lemma(bundle):
    c = _Claims("basic_lemma")
    A, B, C = bundle.base
    A1, B1, C1 = bundle.outward_apexes
    J = bundle.fermat
    K1, K2, K3 = bundle.flank_circles
    _flank_hypotheses(c, bundle)

    d = dist2(A, A1)
    c.eq("|AA1|^2 = |BB1|^2", d, dist2(B, B1))
    c.eq("|AA1|^2 = |CC1|^2", d, dist2(C, C1))

    c.holds("J on line AA1", collinear(A, A1, J))
    c.holds("J on line BB1", collinear(B, B1, J))
    c.holds("J on line CC1", collinear(C, C1, J))

    for label, k, pts in (("K1", K1, (A1, B, C)), ("K2", K2, (A, B1, C)), ("K3", K3, (A, B, C1))):
        c.holds(f"{label} circumscribes its flank", all(on_circle(p, k) for p in pts))
        c.holds(f"J on {label}", on_circle(J, k), f"|J-center|^2 = {dist2(J, k.center)}, r2 = {k.r2}")

    # proof device: a 60 degree turn about A carries C to B1 and C1 to B
    k = orientation(A, B, C)
    if k:
        c.eq("R_A(C) = B1", rotate60k(A, C, k), B1)
        c.eq("R_A(C1) = B", rotate60k(A, C1, k), B)
        c.eq("R_B(A) = C1", rotate60k(B, A, k), C1)
        c.eq("R_B(A1) = C", rotate60k(B, A1, k), C)
    c.holds("C, B1, A, J concyclic", concyclic4(C, B1, A, J))

    try:
        acute_enough = _all_angles_below_120(A, B, C)
    except GeometryError:
        acute_enough = False
    if acute_enough:
        try:
            for (P, Q), label in (((A, B), "AJB"), ((B, C), "BJC"), ((C, A), "CJA")):
                c.holds(f"angle {label} = 120", angle_eq_120(P, J, Q))
        except GeometryError as exc:
            c.holds("angles at J defined", False, str(exc))
        c.holds("J on segment AA1", on_segment(J, A, A1))
        c.holds("J on segment BB1", on_segment(J, B, B1))
        c.holds("J on segment CC1", on_segment(J, C, C1))
    else:
        c.note("a base angle is >= 120 degrees; 120-degree and segment claims not asserted")
    return c.result()


def _equilateral_or_collapsed(c, label, tri, G):
    P, Q, R = tri
    if P == Q == R:
        c.eq(f"{label} collapsed to G", P, G)
    else:
        c.holds(f"{label} equilateral", is_equilateral(P, Q, R))
        c.eq(f"centroid({label}) = G", centroid3(P, Q, R), G)


def check_napoleon(bundle):
    c = _Claims("napoleon")
    A, B, C = bundle.base
    M1, M2, M3 = bundle.side_midpoints
    G = bundle.centroid
    outer = bundle.flank_centroids_out
    inner = bundle.flank_centroids_in

    c.holds("G1G2G3 equilateral", is_equilateral(*outer))
    c.eq("centroid(G1G2G3) = G", centroid3(*outer), G)
    _equilateral_or_collapsed(c, "G1'G2'G3'", inner, G)

    # intercept theorem: M G : M V = M Gi : M Vi = 1 : 3
    for M, V, tag in ((M1, A, "1"), (M2, B, "2"), (M3, C, "3")):
        c.eq(f"G = M{tag} + (V - M{tag})/3", homothety(M, _THIRD, V), G)
    for apexes, cents, tag in ((bundle.outward_apexes, outer, ""), (bundle.inward_apexes, inner, "'")):
        for i, M in enumerate((M1, M2, M3)):
            c.eq(f"G{i + 1}{tag} = M{i + 1} + (V{i + 1}{tag} - M{i + 1})/3", homothety(M, _THIRD, apexes[i]), cents[i])

    led = area_ledger(bundle)
    c.eq("area(G1G2G3) + area(G1'G2'G3') = area(ABC)", led.outer_napoleon + led.inner_napoleon, led.S)
    return c.result()


def check_reflection_device(bundle):
    c = _Claims("reflection_device")
    A, B, C = bundle.base
    G1, G2, G3 = bundle.flank_centroids_out
    J = bundle.fermat
    if not is_equilateral(G1, G2, G3):
        c.holds("G1G2G3 equilateral (precondition)", False)
        return c.result()

    P = reflect_over_line(C, line_through(G1, G2))
    c.eq("reflect(A, G2G3) = P", reflect_over_line(A, line_through(G2, G3)), P)
    c.eq("reflect(B, G3G1) = P", reflect_over_line(B, line_through(G3, G1)), P)
    c.eq("|G1P|^2 = |G1B|^2", dist2(G1, P), dist2(G1, B))
    c.eq("|G2P|^2 = |G2C|^2", dist2(G2, P), dist2(G2, C))
    c.eq("|G3P|^2 = |G3A|^2", dist2(G3, P), dist2(G3, A))
    for i, k in enumerate(bundle.flank_circles, 1):
        c.holds(f"P on K{i}", on_circle(P, k))
    c.eq("P = J", P, J)

    led = area_ledger(bundle)
    s = F3(led.S.sign())
    hexagon = polygon_area(A, G3, B, G1, C, G2)
    c.eq("area(AG3BG1CG2) = S + flank/3", hexagon, led.S + s * led.flank_sum * _THIRD)
    c.eq("area(G1G2G3) = area(AG3BG1CG2)/2", led.outer_napoleon, hexagon / 2)
    c.eq("area(G1G2G3) = S/2 + flank/6", led.outer_napoleon, led.S / 2 + s * led.flank_sum / 6)
    c.eq("area(G1'G2'G3') = S/2 - flank/6", led.inner_napoleon, led.S / 2 - s * led.flank_sum / 6)
    return c.result()


def check_midpoints_and_centroids(bundle):
    c = _Claims("midpoints_centroids")
    A, B, C = bundle.base
    M1, M2, M3 = bundle.side_midpoints
    A1, B1, C1 = bundle.outward_apexes
    A1p, B1p, C1p = bundle.inward_apexes
    A2, B2, C2 = bundle.apex_midpoints_out
    A2p, B2p, C2p = bundle.apex_midpoints_in
    G = bundle.centroid

    for mid, V, X, label in ((A2, A, A1p, "A2 = mid(A, A1')"), (B2, B, B1p, "B2 = mid(B, B1')"), (C2, C, C1p, "C2 = mid(C, C1')")):
        c.eq(label, midpoint(V, X), mid)
    for mid, V, X, label in ((A2p, A, A1, "A2' = mid(A, A1)"), (B2p, B, B1, "B2' = mid(B, B1)"), (C2p, C, C1, "C2' = mid(C, C1)")):
        c.eq(label, midpoint(V, X), mid)

    # the diagonals of B1 C1' A1 C bisect each other (and cyclic relabelings)
    c.holds("B1C1'A1C parallelogram", diagonals_bisect(B1, C1p, A1, C))
    c.holds("C1A1'B1A parallelogram", diagonals_bisect(C1, A1p, B1, A))
    c.holds("A1B1'C1B parallelogram", diagonals_bisect(A1, B1p, C1, B))

    for (P, X, Q, Y), label in (((A, C1, B, C1p), "AC1BC1'"), ((B, A1, C, A1p), "BA1CA1'"), ((C, B1, A, B1p), "CB1AB1'")):
        d = dist2(P, X)
        ok = d == dist2(X, Q) == dist2(Q, Y) == dist2(Y, P)
        c.holds(f"{label} rhombus", ok, f"side^2 = {d}")

    # mid-segment M2C2 is half of A C1'
    c.eq("2(C2 - M2) = C1' - A", (C2 - M2).scale(2), C1p - A)
    c.eq("2(A2 - M3) = A1' - B", (A2 - M3).scale(2), A1p - B)
    c.eq("2(B2 - M1) = B1' - C", (B2 - M1).scale(2), B1p - C)

    c.eq("centroid(A1B1C1) = G", centroid3(A1, B1, C1), G)
    c.eq("centroid(A2B2C2) = G", centroid3(A2, B2, C2), G)
    c.eq("centroid(A1'B1'C1') = G", centroid3(A1p, B1p, C1p), G)
    c.eq("centroid(A2'B2'C2') = G", centroid3(A2p, B2p, C2p), G)
    return c.result()


def check_grunbaum(bundle):
    c = _Claims("grunbaum")
    A, B, C = bundle.base
    M1, M2, M3 = bundle.side_midpoints
    A1, B1, C1 = bundle.outward_apexes
    G = bundle.centroid
    base_orient = orientation(A, B, C)

    for mids, tag, overlap in ((bundle.apex_midpoints_out, "", True), (bundle.apex_midpoints_in, "'", False)):
        A2, B2, C2 = mids
        stmt = "outer" if overlap else "inner"
        for tri, label in (((A2, B2, C), "A2B2C"), ((A, B2, C2), "AB2C2"), ((A2, B, C2), "A2BC2")):
            if tag:
                label = label.replace("2", "2'")
            if tri[0] == tri[1] == tri[2]:
                # a 120 degree base angle shrinks the primed triangle at that vertex to a point
                c.holds(f"{stmt} {label} collapsed to a point", True)
            else:
                c.holds(f"{stmt} {label} equilateral", is_equilateral(*tri))
        if not overlap:
            continue
        # A, B, C as overlapping apexes over the sides of A2B2C2
        for (P, Q, R), X, label in (((B2, C2, A2), A, "A"), ((C2, A2, B2), B, "B"), ((A2, B2, C2), C, "C")):
            ref = orientation(P, Q, R)
            c.holds(f"{stmt} {label} overlapping apex for A2B2C2", ref and orientation(P, Q, X) == ref)

    # rotation device: turning about C carries A2 to B2 and AA1C1*C1 is a parallelogram
    A2, B2, C2 = bundle.apex_midpoints_out
    if base_orient:
        k = base_orient
        for V, (X, Y), (P, Q), (U, W), label in (
            (C, (A, A1), (A2, B2), (C1, C1), "C"),
            (A, (B, B1), (B2, C2), (A1, A1), "A"),
            (B, (C, C1), (C2, A2), (B1, B1), "B"),
        ):
            img = rotate60k(V, U, k)
            c.holds(f"R_{label} parallelogram", diagonals_bisect(X, Y, img, W))
            c.eq(f"R_{label}({_name(P, bundle)}) = {_name(Q, bundle)}", rotate60k(V, P, k), Q)

    c.note(LABELING_NOTE)
    _equilateral_or_collapsed(c, "A*B*C*", bundle.second_centroids_out, G)
    _equilateral_or_collapsed(c, "A**B**C**", bundle.second_centroids_in, G)

    # homothety about G with ratio -1/2
    for stmt, targets, sources, tnames, snames in (
        ("outer", bundle.second_centroids_out, bundle.flank_centroids_in, ("A*", "B*", "C*"), ("G1'", "G2'", "G3'")),
        ("inner", bundle.second_centroids_in, bundle.flank_centroids_out, ("A**", "B**", "C**"), ("G1", "G2", "G3")),
    ):
        for t, s, tn, sn in zip(targets, sources, tnames, snames):
            c.eq(f"{stmt} {tn} = H(G, -1/2)({sn})", homothety(G, _NEG_HALF, s), t)
    for V, M, label in ((A, M1, "A -> M1"), (B, M2, "B -> M2"), (C, M3, "C -> M3")):
        c.eq(f"H(G, -1/2): {label}", homothety(G, _NEG_HALF, V), M)
    A2p, B2p, C2p = bundle.apex_midpoints_in
    for mids, tag in ((bundle.apex_midpoints_out, ""), (bundle.apex_midpoints_in, "'")):
        P2, Q2, R2 = mids
        c.eq(f"H(G, -1/2): C2{tag} -> mid(A2{tag}B2{tag})", homothety(G, _NEG_HALF, R2), midpoint(P2, Q2))

    led = area_ledger(bundle)
    c.eq("area(A*B*C*) = area(G1'G2'G3')/4", led.second_outer * 4, led.inner_napoleon)
    c.eq("area(A**B**C**) = area(G1G2G3)/4", led.second_inner * 4, led.outer_napoleon)
    c.eq("4(area(A*B*C*) + area(A**B**C**)) = area(ABC)", (led.second_outer + led.second_inner) * 4, led.S)
    return c.result()


def _name(p, bundle):
    for name, q in bundle.points().items():
        if q == p:
            return name
    return str(p)


CHECKS = (
    check_basic_lemma,
    check_napoleon,
    check_reflection_device,
    check_midpoints_and_centroids,
    check_grunbaum,
)


def run_checks(bundle):
    return [check(bundle) for check in CHECKS]


def ledger_summary(bundle):
    led = area_ledger(bundle)
    A, B, C = bundle.base
    obj = led.to_json()
    obj["cevian_len2"] = dist2(A, bundle.outward_apexes[0]).to_json()
    obj["four_second_sum"] = ((led.second_outer + led.second_inner) * 4).to_json()
    return obj


def run_all(A, B, C):
    """Build the configuration of ABC and run every check; never raises for bad geometry."""
    try:
        bundle = build_bundle(A, B, C)
    except GeometryError as exc:
        return Report((A, B, C), [CheckResult("construction", False, f"construction: {exc}")], False)
    results = run_checks(bundle)
    return Report((A, B, C), results, all(r.passed for r in results), ledger_summary(bundle))
