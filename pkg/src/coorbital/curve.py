"""The generic family: region classification and curve tracing.

A symmetric configuration with no vanishing kernel value must lie on
the zero set of

    C(theta1, theta2) = f(theta1)^2 - f(theta1+theta2)^2
                        - f(theta2)*f(theta4),

with theta4 = 2*pi - 2*theta1 - theta2. Positive masses additionally
require sign(f(theta2)) = sign(f(theta1) - f(theta1+theta2)), which
splits the admissible strip into bands D1..D4 by where theta2 falls
between kernel zeros; D4 turns out to be empty. Tracing scans each
theta2 line for all curve crossings and keeps the in-region ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import backend
from .exceptions import (
    AngleDomainError,
    ConsistencyError,
    DegenerateDenominatorError,
    TraceResidualError,
)
from .kernel import TWO_PI
from .rootfind import Bracket, bracket_root, brackets_from_values

PI_THIRD = math.pi / 3.0
FIVE_PI_THIRD = 5.0 * math.pi / 3.0

COLLISION_TOL = 1e-12
BOUNDARY_TOL = 1e-9
DEGENERATE_TOL = 1e-9
DENOM_TOL = 1e-12
TRACE_WIDTH_TOL = 1e-14
TRACE_RESID_GATE = 1e-10
SCAN_CELLS = 4000
EDGE_INSET = 1e-6

BANDS = {
    "D1": (0.0, PI_THIRD),
    "D2": (PI_THIRD, math.pi),
    "D3": (math.pi, FIVE_PI_THIRD),
    "D4": (FIVE_PI_THIRD, TWO_PI),
}


def _strip_check(theta1: float, theta2: float) -> Tuple[float, float, float]:
    theta1 = float(theta1)
    theta2 = float(theta2)
    if not 0.0 < theta1 < math.pi:
        raise AngleDomainError("theta1 must lie in (0, pi)")
    theta4 = TWO_PI - 2.0 * theta1 - theta2
    if theta2 <= 0.0 or theta4 <= 0.0:
        raise AngleDomainError(
            "theta2 and theta4 = 2*pi - 2*theta1 - theta2 must be positive"
        )
    for arg in (theta1, theta2, theta4, theta1 + theta2):
        if arg <= COLLISION_TOL or arg >= TWO_PI - COLLISION_TOL:
            raise AngleDomainError(
                f"kernel argument {arg!r} within collision tolerance of 0 or 2*pi"
            )
    return theta1, theta2, theta4


def curve_eval(theta1: float, theta2: float) -> float:
    """Value of the curve function C at a strip point."""
    theta1, theta2, _ = _strip_check(theta1, theta2)
    return backend.curve_eval(theta1, theta2)


def region_classify(theta1: float, theta2: float) -> str:
    """Band plus sign-coherence label for a strip point.

    Returns BOUNDARY within 1e-9 of a defining equality (theta2 at a
    kernel zero, or f(theta1) = f(theta1+theta2)), OUTSIDE when the
    band's sign condition fails.
    """
    theta1, theta2, _ = _strip_check(theta1, theta2)
    d = backend.f_eval(theta1) - backend.f_eval(theta1 + theta2)
    near_edge = min(
        abs(theta2 - PI_THIRD), abs(theta2 - math.pi), abs(theta2 - FIVE_PI_THIRD)
    )
    if near_edge < BOUNDARY_TOL or abs(d) < BOUNDARY_TOL:
        return "BOUNDARY"
    if theta2 < PI_THIRD:
        return "D1" if d < 0.0 else "OUTSIDE"
    if theta2 < math.pi:
        return "D2" if d > 0.0 else "OUTSIDE"
    if theta2 < FIVE_PI_THIRD:
        return "D3" if d < 0.0 else "OUTSIDE"
    return "D4" if d > 0.0 else "OUTSIDE"


@dataclass(frozen=True)
class CurvePoint:
    """A point of the curve with its mass-ratio data.

    mass_ratio is f(theta2)/(f(theta1)-f(theta1+theta2)); r_sum and
    r_diff are (f(theta1)+-f(theta1+theta2))/f(theta4). Fields are None
    when their denominator is below 1e-12. degenerate marks a kernel
    value within 1e-9 of zero.
    """

    theta1: float
    theta2: float
    theta4: float
    region: str
    mass_ratio: Optional[float]
    r_sum: Optional[float]
    r_diff: Optional[float]
    degenerate: bool


def curve_point(theta1: float, theta2: float) -> CurvePoint:
    """Assemble the CurvePoint record at a strip point (no on-curve gate)."""
    region = region_classify(theta1, theta2)
    theta1, theta2, theta4 = _strip_check(theta1, theta2)
    f1 = backend.f_eval(theta1)
    f2 = backend.f_eval(theta2)
    f4 = backend.f_eval(theta4)
    f12 = backend.f_eval(theta1 + theta2)
    d = f1 - f12
    ratio = f2 / d if abs(d) > DENOM_TOL else None
    if abs(f4) > DENOM_TOL:
        r_sum: Optional[float] = (f1 + f12) / f4
        r_diff: Optional[float] = (f1 - f12) / f4
    else:
        r_sum = None
        r_diff = None
    degenerate = min(abs(f1), abs(f2), abs(f4), abs(f12)) < DEGENERATE_TOL
    return CurvePoint(theta1, theta2, theta4, region, ratio, r_sum, r_diff, degenerate)


def mass_ratio(theta1: float, theta2: float) -> float:
    """f(theta2)/(f(theta1)-f(theta1+theta2)); positive on the curve
    inside D1, D2, D3."""
    theta1, theta2, _ = _strip_check(theta1, theta2)
    d = backend.f_eval(theta1) - backend.f_eval(theta1 + theta2)
    if abs(d) <= DENOM_TOL:
        raise DegenerateDenominatorError("f(theta1) - f(theta1+theta2) vanishes")
    return backend.f_eval(theta2) / d


def mass_ratio_pair(theta1: float, theta2: float) -> Tuple[float, float]:
    """(r_sum, r_diff) = (f(theta1)+-f(theta1+theta2))/f(theta4)."""
    theta1, theta2, theta4 = _strip_check(theta1, theta2)
    f4 = backend.f_eval(theta4)
    if abs(f4) <= DENOM_TOL:
        raise DegenerateDenominatorError("f(theta4) vanishes")
    f1 = backend.f_eval(theta1)
    f12 = backend.f_eval(theta1 + theta2)
    return (f1 + f12) / f4, (f1 - f12) / f4


def _line_roots(theta2: float, width_tol: float) -> List[float]:
    """All curve crossings theta1 on one theta2 line, full-strip scan."""
    lo = EDGE_INSET
    hi = math.pi - 0.5 * theta2 - EDGE_INSET
    if hi <= lo:
        return []
    values = backend.curve_scan(theta2, lo, hi, SCAN_CELLS)
    fn = lambda t: backend.curve_eval(t, theta2)
    return [
        bracket_root(fn, br, width_tol=width_tol, resid_tol=0.0).root
        for br in brackets_from_values(lo, hi, values)
    ]


def trace_curve(
    region: str,
    theta2_grid: Sequence[float],
    width_tol: float = TRACE_WIDTH_TOL,
) -> List[CurvePoint]:
    """Trace the curve across a theta2 grid inside one region band.

    Every crossing on each line is refined and classified; OUTSIDE
    points are dropped, everything else is kept (flagged when
    degenerate). Results are sorted by (theta2, theta1).
    """
    if region not in ("D1", "D2", "D3"):
        raise ValueError(f"region must be one of D1, D2, D3; got {region!r}")
    band_lo, band_hi = BANDS[region]
    points: List[CurvePoint] = []
    for raw in theta2_grid:
        theta2 = float(raw)
        if not band_lo < theta2 < band_hi:
            raise AngleDomainError(
                f"theta2 {theta2!r} outside the {region} band ({band_lo}, {band_hi})"
            )
        for root in _line_roots(theta2, width_tol):
            resid = backend.curve_eval(root, theta2)
            if abs(resid) >= TRACE_RESID_GATE:
                raise TraceResidualError(
                    f"traced point ({root}, {theta2}) has residual {resid}"
                )
            point = curve_point(root, theta2)
            if point.region == "OUTSIDE":
                continue
            points.append(point)
    points.sort(key=lambda p: (p.theta2, p.theta1))
    return points


def r_diff_pole(
    theta2_lo: float = 2.4,
    theta2_hi: float = 2.5,
    width_tol: float = TRACE_WIDTH_TOL,
) -> float:
    """theta2 where f(theta4) crosses zero along the middle-band branch,
    sending r_diff through a pole between the bracketing grid rows."""

    def f4_on_branch(theta2: float) -> float:
        roots = [
            r
            for r in _line_roots(theta2, width_tol)
            if region_classify(r, theta2) != "OUTSIDE"
        ]
        if len(roots) != 1:
            raise ConsistencyError(
                f"pole search expected one branch root at theta2={theta2}, "
                f"found {len(roots)}"
            )
        return backend.f_eval(TWO_PI - 2.0 * roots[0] - theta2)

    f_lo = f4_on_branch(theta2_lo)
    f_hi = f4_on_branch(theta2_hi)
    if not f_lo * f_hi < 0.0:
        raise ConsistencyError("f(theta4) does not change sign across the window")
    res = bracket_root(
        f4_on_branch,
        Bracket(theta2_lo, theta2_hi, f_lo, f_hi),
        width_tol=1e-12,
    )
    return res.root


def d4_region_count(n: int = 200) -> int:
    """Number of D4 classifications on an n x n grid over the high
    theta2 band; the sign condition never holds there, so zero."""
    count = 0
    for theta2 in np.linspace(FIVE_PI_THIRD + 1e-3, TWO_PI - 1e-3, n):
        hi = math.pi - 0.5 * float(theta2) - EDGE_INSET
        if hi <= EDGE_INSET:
            continue
        for theta1 in np.linspace(EDGE_INSET, hi, n):
            if region_classify(float(theta1), float(theta2)) == "D4":
                count += 1
    return count
