"""Exact Q(sqrt 3) geometry kernel and verifier for Napoleon configurations."""

from .geom import Circle, GeometryError, LineCoeffs, Point, point
from .napoleon import AreaLedger, NapoleonBundle, area_ledger, build_bundle
from .qsqrt3 import F3, Rat
from .theorems import CheckResult, Report, run_all

__version__ = "0.1.0"

__all__ = [
    "AreaLedger",
    "CheckResult",
    "Circle",
    "F3",
    "GeometryError",
    "LineCoeffs",
    "NapoleonBundle",
    "Point",
    "Rat",
    "Report",
    "area_ledger",
    "build_bundle",
    "point",
    "run_all",
]
