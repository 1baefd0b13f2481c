"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""

import json
import math
import time
from fractions import Fraction
from importlib import resources
from pathlib import Path

import mpmath

import conftest
import float_oracle
from napoleonkit.cli import main
from napoleonkit.fuzz import random_triangle, trial_rng
from napoleonkit.geom import Point, homothety, point, signed_area
from napoleonkit.napoleon import POINT_FIELDS, area_ledger, build_bundle
from napoleonkit.qsqrt3 import F3, field_sign
from napoleonkit.theorems import run_all, run_checks

CORPUS = resources.files("napoleonkit") / "corpus"
FIXTURES = Path(__file__).parent / "fixtures"
NEG_HALF = F3(Fraction(-1, 2))


def record(number, title, ok, detail):
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def fuzzed(count, seed, bound=50):
    return [random_triangle(trial_rng(seed, i), bound) for i in range(count)]


def f3_of(obj):
    return F3(Fraction(obj["a"]), Fraction(obj["b"]))


def test_criterion_1_canonical_instance(capsys):
    start = time.perf_counter()
    code = main(["verify", "--triangle", "0,0 4,0 0,3"])
    elapsed = time.perf_counter() - start
    report = json.loads(capsys.readouterr().out)
    led = {k: f3_of(v) for k, v in report["ledger"].items()}
    exact = (
        code == 0
        and report["all_passed"]
        and len(report["results"]) == 5
        and led["S"] == 6
        and led["outer_napoleon"] == F3(3, Fraction(25, 12))
        and led["inner_napoleon"] == F3(3, Fraction(-25, 12))
        and led["cevian_len2"] == F3(25, 12)
        and led["four_second_sum"] == 6
    )
    oracle = float_oracle.ledger((0, 0), (4, 0), (0, 3))
    worst = max(abs(float(led[k]) - v) / abs(v) for k, v in oracle.items())
    ok = exact and worst <= 1e-9 and elapsed < 1
    record(1, "canonical 3-4-5 instance", ok, f"exact ledger {exact}, float oracle rel err {worst:.1e}, {elapsed:.2f}s")


def test_criterion_2_equilateral(capsys):
    start = time.perf_counter()
    base = (point(0, 0), point(1, 0), Point(F3(Fraction(1, 2)), F3(0, Fraction(1, 2))))
    report = run_all(*base)
    led = area_ledger(build_bundle(*base))
    elapsed = time.perf_counter() - start
    ok = report.all_passed and led.inner_napoleon == 0 and led.outer_napoleon == F3(0, Fraction(1, 4)) and elapsed < 1
    record(2, "unit equilateral base", ok, f"inner {led.inner_napoleon}, outer {led.outer_napoleon}, {elapsed:.2f}s")


def test_criterion_3_fuzz(capsys):
    start = time.perf_counter()
    code = main(["fuzz", "--trials", "1000", "--seed", "42", "--bound", "50"])
    elapsed = time.perf_counter() - start
    last = capsys.readouterr().out.splitlines()[-1]
    ok = code == 0 and last.startswith("1000/1000 passed") and elapsed < 30
    record(3, "fuzz 1000 trials, seed 42, bound 50", ok, f"{last!r}, {elapsed:.1f}s")


def test_criterion_4_homothety():
    bad = 0
    for tri in fuzzed(100, seed=4):
        b = build_bundle(*tri)
        G = b.centroid
        images = [homothety(G, NEG_HALF, p) for p in b.flank_centroids_in + b.flank_centroids_out]
        area_ok = signed_area(*b.second_centroids_out) * 4 == signed_area(*b.flank_centroids_in)
        if images != list(b.second_centroids_out + b.second_centroids_in) or not area_ok:
            bad += 1
    record(4, "homothety (G, -1/2) images and quarter area", bad == 0, f"{100 - bad}/100 triangles exact")


def _pell(limit):
    # solutions of p^2 - 3 q^2 = 1 from the fundamental one (2, 1)
    p, q = 2, 1
    while p < limit:
        p, q = 2 * p + 3 * q, p + 2 * q
    return p, q


def test_criterion_5_near_ties():
    ok = field_sign(F3(97, -56)) == 1 and field_sign(F3(-97, 56)) == -1
    coarse = 97 - 56 * math.sqrt(3)
    ok = ok and math.isclose(coarse, 5.2e-3, rel_tol=0.02)
    p, q = _pell(10**13)
    with mpmath.workprec(200):
        gap = mpmath.mpf(p) - q * mpmath.sqrt(3)
    # integer oracle: p - q r3 has the sign of p^2 - 3 q^2 since p, q > 0
    want = (p * p - 3 * q * q > 0) - (p * p - 3 * q * q < 0)
    tie = 0 < gap < 1e-12 and want == 1
    tie = tie and field_sign(F3(p, -q)) == want and field_sign(F3(-p, q)) == -want
    # the neighbouring value just under the tie
    below = F3(p - 1, -q)
    tie = tie and field_sign(below) == -1 and (p - 1) ** 2 < 3 * q * q
    record(5, "sign of near ties", ok and tie, f"97-56r3 ~ {coarse:.2e}; p={p}, |p-q r3| ~ {float(gap):.1e}")


def test_criterion_6_corpus(capsys):
    claims = sorted(p for p in CORPUS.iterdir() if p.name.endswith(".geo") and p.name != "negative.geo")
    start = time.perf_counter()
    codes = {p.name: main(["run", str(p)]) for p in claims}
    capsys.readouterr()
    neg = main(["run", str(CORPUS / "negative.geo")])
    neg_out = capsys.readouterr().out
    syn = main(["run", str(FIXTURES / "syntax_error.geo")])
    syn_err = capsys.readouterr().err
    elapsed = time.perf_counter() - start
    ok = (
        len(codes) == 11
        and set(codes.values()) == {0}
        and neg == 1
        and "line 6: FAIL" in neg_out
        and syn == 2
        and "line 3, col 16" in syn_err
        and elapsed < 2
    )
    failing = [n for n, c in codes.items() if c]
    record(6, "script corpus", ok, f"{len(codes) - len(failing)}/{len(codes)} claim scripts exit 0, negative {neg}, syntax {syn}, {elapsed:.2f}s")


def test_criterion_7_tamper():
    names = [n for group in POINT_FIELDS.values() for n in group]
    bases = [
        (point(0, 0), point(4, 0), point(0, 3)),
        (point(0, 0), point(0, 3), point(4, 0)),
        (point(0, 0), point(4, 0), point(-4, 2)),
        *fuzzed(3, seed=7),
    ]
    vacuous = []
    for tri in bases:
        b = build_bundle(*tri)
        pts = b.points()
        for name in names:
            tampered = b.with_point(name, pts[name] + point(Fraction(1, 7), 0))
            if all(r.passed for r in run_checks(tampered)):
                vacuous.append(name)
    total = len(bases) * len(names)
    record(7, "tamper sensitivity", not vacuous and len(names) >= 30, f"{total - len(vacuous)}/{total} perturbations caught over {len(names)} points")


def _verdicts(tri):
    rep = run_all(*tri)
    return rep.all_passed, [(r.name, r.passed) for r in rep.results]


def test_criterion_8_symmetry():
    shift = point(Fraction(-13, 5), Fraction(22, 7))
    scale = Fraction(9, 4)
    transforms = {
        "cyclic": lambda A, B, C: (B, C, A),
        "swap": lambda A, B, C: (A, C, B),
        "translate": lambda A, B, C: (A + shift, B + shift, C + shift),
        "scale": lambda A, B, C: (A.scale(scale), B.scale(scale), C.scale(scale)),
    }
    mismatches = []
    for i, tri in enumerate(fuzzed(50, seed=8)):
        want = _verdicts(tri)
        for label, f in transforms.items():
            if _verdicts(f(*tri)) != want:
                mismatches.append(f"{i}:{label}")
    record(8, "symmetry of verdicts", not mismatches, f"{200 - len(mismatches)}/200 transformed runs agree")
