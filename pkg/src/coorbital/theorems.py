"""Solvers for the degenerate symmetric cases.

Exactly one kernel value may vanish at a symmetric central
configuration, which splits the degenerate family into six cases,
tagged T32..T37: the pair sum theta1+theta2 sitting at each kernel zero
(T32, T33, T34), theta1 itself at a zero (T35, impossible), and theta2
or theta4 at a zero (T36, T37). Each case reduces to one bracketed
scalar equation plus linear mass conditions; branches whose mass
conditions force a non-positive mass are recorded as rejected with the
numerical evidence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from .exceptions import ConsistencyError
from .kernel import TWO_PI, f_eval
from .model import MassVector, SymmetricConfig, residual_four
from .rootfind import bracket_root, scan_brackets

BRACKET_INSET = 1e-9
CASE_WIDTH_TOL = 1e-14
RESIDUAL_GATE = 1e-9
SQUARE_RESIDUAL_GATE = 1e-12
GRID_POINTS = 2000
GRID_INSET = 1e-4

PI_THIRD = math.pi / 3.0
FIVE_PI_THIRD = 5.0 * math.pi / 3.0


def pair_span_condition(theta: float, span: float) -> float:
    """Solvability residual when the two leading gaps sum to ``span``
    and the kernel vanishes there: f(theta)^2 - f(span-theta)*f(2*pi-span-theta)."""
    return f_eval(theta) ** 2 - f_eval(span - theta) * f_eval(TWO_PI - span - theta)


def opposite_pair_condition(theta: float) -> float:
    """Factor controlling the mirrored-pair branch of the half-turn
    case: 1/|sin(theta/2)|^3 + 1/|cos(theta/2)|^3 - 16."""
    s = abs(math.sin(0.5 * theta))
    c = abs(math.cos(0.5 * theta))
    return 1.0 / (s * s * s) + 1.0 / (c * c * c) - 16.0


def equal_shift_condition(theta: float) -> float:
    """Kernel match one third-turn apart: f(theta + pi/3) - f(theta)."""
    return f_eval(theta + PI_THIRD) - f_eval(theta)


def mirror_shift_condition(theta: float) -> float:
    """Kernel anti-match across the 5*pi/3 mirror: f(5*pi/3 - theta) + f(theta)."""
    return f_eval(FIVE_PI_THIRD - theta) + f_eval(theta)


@dataclass(frozen=True)
class RejectedBranch:
    """A candidate subcase ruled out by a sign argument on a grid."""

    label: str
    reason: str
    evidence: Mapping[str, float]


@dataclass(frozen=True)
class MassCondition:
    """Linear constraints admissible masses must satisfy, with one
    compliant sample vector when the case exists."""

    equalities: Tuple[str, ...]
    ratios: Tuple[str, ...]
    sample: Optional[MassVector]


@dataclass(frozen=True)
class Certificate:
    """Numerical evidence backing a case solution: the back-substituted
    residual for existing cases, or a strictly-signed grid minimum for
    non-existence."""

    max_residual: Optional[float]
    grid_min: Optional[float]
    grid_points: int
    description: str


@dataclass(frozen=True)
class CaseSolution:
    theorem_tag: str
    config: Optional[SymmetricConfig]
    mass_condition: Optional[MassCondition]
    exists: bool
    certificate: Certificate
    rejected: Tuple[RejectedBranch, ...]


def _single_root(fn, lo: float, hi: float, tag: str) -> float:
    brackets = scan_brackets(fn, lo + BRACKET_INSET, hi - BRACKET_INSET)
    if len(brackets) != 1:
        raise ConsistencyError(
            f"{tag}: expected exactly one sign change on ({lo}, {hi}), "
            f"found {len(brackets)}"
        )
    return bracket_root(fn, brackets[0], width_tol=CASE_WIDTH_TOL).root


def _residual_gate(config: SymmetricConfig, sample: MassVector, tag: str,
                   gate: float = RESIDUAL_GATE) -> float:
    resid = max(abs(v) for v in residual_four(config, sample))
    if resid >= gate:
        raise ConsistencyError(f"{tag}: back-substitution residual {resid} >= {gate}")
    return resid


def _band(lo: float, hi: float) -> np.ndarray:
    return np.linspace(lo + GRID_INSET, hi - GRID_INSET, GRID_POINTS)


def _half_turn_product_branch(label: str, tag: str) -> RejectedBranch:
    # theta2 (or theta4) = pi forces the remaining two gaps to satisfy
    # f(theta1)*f(pi - 2*theta1) > 0, but the product is negative on
    # the whole admissible band (0, pi/2)
    grid = _band(0.0, 0.5 * math.pi)
    worst = max(f_eval(t) * f_eval(math.pi - 2.0 * t) for t in grid)
    if worst >= 0.0:
        raise ConsistencyError(f"{tag}: half-turn product grid found a sign change")
    return RejectedBranch(
        label=label,
        reason="positive masses need f(theta1)*f(pi - 2*theta1) > 0, "
        "but the product is negative across the band",
        evidence={"grid_points": float(GRID_POINTS), "max_product": float(worst)},
    )


@lru_cache(maxsize=1)
def solve_T32() -> CaseSolution:
    """Pair sum theta1 + theta2 at the low kernel zero pi/3.

    The configuration is (theta0, pi/3 - theta0, theta0, 5*pi/3 - theta0)
    where theta0 is the unique root of the span solvability residual on
    (0, pi/3); masses satisfy mu1*mu2 = mu3*mu4 with ratio
    mu1/mu3 = mu4/mu2 = f(theta2)/f(theta1) > 0.
    """
    fn = lambda t: pair_span_condition(t, PI_THIRD)
    theta0 = _single_root(fn, 0.0, PI_THIRD, "T32")
    config = SymmetricConfig.from_pair(theta0, PI_THIRD - theta0)
    ratio = f_eval(config.theta2) / f_eval(config.theta1)
    if ratio <= 0.0:
        raise ConsistencyError("T32: mass ratio is not positive")
    sample = MassVector((ratio, 1.0, 1.0, ratio))
    resid = _residual_gate(config, sample, "T32")
    condition = MassCondition(
        equalities=("mu1*mu2 == mu3*mu4",),
        ratios=(
            "mu1/mu3 == f(theta2)/f(theta1)",
            "mu4/mu2 == f(theta2)/f(theta1)",
        ),
        sample=sample,
    )
    certificate = Certificate(
        max_residual=resid,
        grid_min=None,
        grid_points=0,
        description="back-substitution with mu = (r, 1, 1, r)",
    )
    return CaseSolution("T32", config, condition, True, certificate, ())


@lru_cache(maxsize=1)
def solve_T33() -> CaseSolution:
    """Pair sum theta1 + theta2 at the half-turn kernel zero pi.

    The equal-value branch pins the square (pi/2, pi/2, pi/2, pi/2)
    with mu1 = mu3 and mu2 = mu4. The mirrored-pair branch has two
    roots, both rejected because f(theta1)/f(theta4) < 0 there.
    """
    config = SymmetricConfig(0.5 * math.pi, 0.5 * math.pi, 0.5 * math.pi)
    sample = MassVector((1.0, 2.0, 1.0, 2.0))
    resid = _residual_gate(config, sample, "T33", gate=SQUARE_RESIDUAL_GATE)

    brackets = scan_brackets(
        opposite_pair_condition, BRACKET_INSET, math.pi - BRACKET_INSET
    )
    if len(brackets) != 2:
        raise ConsistencyError(
            f"T33: expected two mirrored-pair roots, found {len(brackets)}"
        )
    rejected = []
    for br in brackets:
        root = bracket_root(opposite_pair_condition, br, width_tol=CASE_WIDTH_TOL).root
        ratio = f_eval(root) / f_eval(math.pi - root)
        if ratio >= 0.0:
            raise ConsistencyError("T33: mirrored-pair root has a positive mass ratio")
        rejected.append(
            RejectedBranch(
                label=f"mirrored pair at theta1 = {root:.12f}",
                reason="required mass ratio f(theta1)/f(theta4) is negative",
                evidence={"theta1": float(root), "ratio": float(ratio)},
            )
        )
    condition = MassCondition(
        equalities=("mu1 == mu3", "mu2 == mu4"),
        ratios=(),
        sample=sample,
    )
    certificate = Certificate(
        max_residual=resid,
        grid_min=None,
        grid_points=0,
        description="back-substitution with mu = (1, 2, 1, 2)",
    )
    return CaseSolution("T33", config, condition, True, certificate, tuple(rejected))


@lru_cache(maxsize=1)
def solve_T34() -> CaseSolution:
    """Pair sum theta1 + theta2 at the high kernel zero 5*pi/3.

    Shares its scalar equation with the pi/3 case, so it reuses that
    root: configuration (theta0, 5*pi/3 - theta0, theta0, pi/3 - theta0)
    with ratio mu1/mu3 = mu4/mu2 = f(theta2)/f(theta1) > 0.
    """
    theta0 = solve_T32().config.theta1
    config = SymmetricConfig.from_pair(theta0, FIVE_PI_THIRD - theta0)
    ratio = f_eval(config.theta2) / f_eval(config.theta1)
    if ratio <= 0.0:
        raise ConsistencyError("T34: mass ratio is not positive")
    sample = MassVector((ratio, 1.0, 1.0, ratio))
    resid = _residual_gate(config, sample, "T34")
    condition = MassCondition(
        equalities=("mu1*mu2 == mu3*mu4",),
        ratios=(
            "mu1/mu3 == f(theta2)/f(theta1)",
            "mu4/mu2 == f(theta2)/f(theta1)",
        ),
        sample=sample,
    )
    certificate = Certificate(
        max_residual=resid,
        grid_min=None,
        grid_points=0,
        description="back-substitution with mu = (r, 1, 1, r)",
    )
    return CaseSolution("T34", config, condition, True, certificate, ())


@lru_cache(maxsize=1)
def check_T35() -> CaseSolution:
    """f(theta1) = 0 admits no configuration.

    With theta1 at the only zero below pi, solvability would need
    f(theta2)*f(4*pi/3 - theta2) + f(pi/3 + theta2)^2 = 0, but the left
    side is strictly positive across the whole theta2 band.
    """
    hi = 4.0 * math.pi / 3.0
    kept = [
        float(t)
        for t in _band(0.0, hi)
        if abs(t - PI_THIRD) >= 1e-6 and abs(t - math.pi) >= 1e-6
    ]
    values = [
        f_eval(t) * f_eval(hi - t) + f_eval(PI_THIRD + t) ** 2 for t in kept
    ]
    grid_min = min(values)
    if grid_min <= 0.0:
        raise ConsistencyError("T35: solvability grid found a non-positive value")
    certificate = Certificate(
        max_residual=None,
        grid_min=float(grid_min),
        grid_points=len(values),
        description="min of f(theta2)*f(4*pi/3 - theta2) + f(pi/3 + theta2)^2",
    )
    return CaseSolution("T35", None, None, False, certificate, ())


@lru_cache(maxsize=1)
def solve_T36() -> CaseSolution:
    """theta2 at the low kernel zero pi/3.

    The surviving branch needs f(theta1 + pi/3) = f(theta1), with the
    unique root theta0 in (pi/3, 2*pi/3); masses satisfy mu1 = mu4 and
    (mu2 + mu3)*f(theta1) = mu1*f(theta4). The theta2 = pi and
    theta2 = 5*pi/3 placements are rejected on sign grounds.
    """
    theta0 = _single_root(
        equal_shift_condition, PI_THIRD, 2.0 * PI_THIRD, "T36"
    )
    config = SymmetricConfig.from_pair(theta0, PI_THIRD)
    m = f_eval(config.theta4) / (2.0 * f_eval(config.theta1))
    if m <= 0.0:
        raise ConsistencyError("T36: sample masses are not positive")
    sample = MassVector((1.0, m, m, 1.0))
    resid = _residual_gate(config, sample, "T36")

    band = _band(0.0, math.pi / 6.0)
    worst_f1 = max(f_eval(t) for t in band)
    least_pair = min(f_eval(t + FIVE_PI_THIRD) for t in band)
    if worst_f1 >= 0.0 or least_pair <= 0.0:
        raise ConsistencyError("T36: high-zero rejection grid found a sign change")
    rejected = (
        _half_turn_product_branch("theta2 = pi", "T36"),
        RejectedBranch(
            label="theta2 = 5*pi/3",
            reason="f(theta1 + theta2) > 0 > f(theta1) across the band; the "
            "only sign-consistent match forces mu1 = -mu4",
            evidence={
                "grid_points": float(GRID_POINTS),
                "max_f_theta1": float(worst_f1),
                "min_f_pair_sum": float(least_pair),
            },
        ),
    )
    condition = MassCondition(
        equalities=("mu1 == mu4",),
        ratios=("(mu2 + mu3)*f(theta1) == mu1*f(theta4)",),
        sample=sample,
    )
    certificate = Certificate(
        max_residual=resid,
        grid_min=None,
        grid_points=0,
        description="back-substitution with mu = (1, m, m, 1)",
    )
    return CaseSolution("T36", config, condition, True, certificate, rejected)


@lru_cache(maxsize=1)
def solve_T37() -> CaseSolution:
    """theta4 at the low kernel zero pi/3.

    Mirror of the theta2 case: the match f(5*pi/3 - theta) = -f(theta)
    has the same root theta0, the configuration is
    (theta0, 5*pi/3 - 2*theta0, theta0, pi/3), and masses satisfy
    mu2 = mu3 with (mu1 + mu4)*f(theta1) = mu2*f(theta2).
    """
    theta0 = _single_root(
        mirror_shift_condition, PI_THIRD, 2.0 * PI_THIRD, "T37"
    )
    config = SymmetricConfig.from_pair(theta0, FIVE_PI_THIRD - 2.0 * theta0)
    m = f_eval(config.theta2) / (2.0 * f_eval(config.theta1))
    if m <= 0.0:
        raise ConsistencyError("T37: sample masses are not positive")
    sample = MassVector((m, 1.0, 1.0, m))
    resid = _residual_gate(config, sample, "T37")

    band = _band(0.0, math.pi / 6.0)
    worst_sum = max(f_eval(PI_THIRD - t) + f_eval(t) for t in band)
    if worst_sum >= 0.0:
        raise ConsistencyError("T37: high-zero rejection grid found a sign change")
    rejected = (
        _half_turn_product_branch("theta4 = pi", "T37"),
        RejectedBranch(
            label="theta4 = 5*pi/3",
            reason="matching needs f(pi/3 - theta1) + f(theta1) = 0, but the "
            "sum stays negative across the band (both kernel values are "
            "negative there)",
            evidence={
                "grid_points": float(GRID_POINTS),
                "max_sum": float(worst_sum),
            },
        ),
    )
    condition = MassCondition(
        equalities=("mu2 == mu3",),
        ratios=("(mu1 + mu4)*f(theta1) == mu2*f(theta2)",),
        sample=sample,
    )
    certificate = Certificate(
        max_residual=resid,
        grid_min=None,
        grid_points=0,
        description="back-substitution with mu = (m, 1, 1, m)",
    )
    return CaseSolution("T37", config, condition, True, certificate, rejected)


SOLVERS: Dict[str, object] = {
    "T32": solve_T32,
    "T33": solve_T33,
    "T34": solve_T34,
    "T35": check_T35,
    "T36": solve_T36,
    "T37": solve_T37,
}
