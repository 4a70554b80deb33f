"""Acceptance gate: ten go/no-go checks, one printed line each.

Run with `pytest -s tests/test_acceptance.py` to see the PASS/FAIL
lines. Every check recomputes its quantities through the public API;
reference numbers live in table_data.py.
"""
import math

import numpy as np

from coorbital.catalog import build_catalog
from coorbital.curve import curve_eval, d4_region_count, r_diff_pole
from coorbital.kernel import TWO_PI, critical_points, f_eval, f_prime
from coorbital.model import (
    AngleConfig,
    MassVector,
    SymmetricConfig,
    coefficient_matrix,
    mass_matrix,
    residual_four,
    residual_general,
)
from coorbital.theorems import SOLVERS, check_T35, solve_T32, solve_T33, solve_T36

import table_data

SEED = 20260815


def _report(num, ok, detail):
    print(f"{'PASS' if ok else 'FAIL'} criterion {num}: {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_01_kernel_zeros():
    residues = {
        "f(pi/3)": abs(f_eval(math.pi / 3.0)),
        "f(pi)": abs(f_eval(math.pi)),
        "f(5pi/3)": abs(f_eval(5.0 * math.pi / 3.0)),
        "f'(pi)+7/8": abs(f_prime(math.pi) + 7.0 / 8.0),
    }
    worst = max(residues.values())
    _report(1, worst < 1e-12, f"kernel zeros and f'(pi) exact to 1e-12 (worst {worst:.2e})")


def test_criterion_02_critical_points():
    prof = critical_points()
    ok = (
        3.0 * math.pi / 5.0 < prof.theta_c < 2.0 * math.pi / 3.0
        and abs(prof.theta_l - (TWO_PI - prof.theta_c)) < 1e-15
        and abs(f_prime(prof.theta_c)) < 1e-10
        and abs(f_prime(prof.theta_l)) < 1e-10
    )
    _report(2, ok, f"critical angles theta_c={prof.theta_c:.10f}, theta_l=2pi-theta_c")


def test_criterion_03_case_roots():
    r32 = solve_T32().config.theta1
    r36 = solve_T36().config.theta1
    ok = abs(r32 - 0.6281) <= 5e-4 and abs(r36 - 1.4127) <= 5e-4
    _report(3, ok, f"case roots {r32:.6f} (0.6281 +- 5e-4) and {r36:.6f} (1.4127 +- 5e-4)")


def test_criterion_04_back_substitution():
    worst = 0.0
    for tag, solver in SOLVERS.items():
        sol = solver()
        if not sol.exists:
            continue
        res = residual_four(sol.config, sol.mass_condition.sample)
        worst = max(worst, max(abs(r) for r in res))
    _report(4, worst < 1e-9, f"all existing cases close the system (worst residual {worst:.2e})")


def test_criterion_05_nonexistence_certificates():
    t35 = check_T35()
    t33 = solve_T33()
    ratios = [rej.evidence["ratio"] for rej in t33.rejected]
    ok = (
        not t35.exists
        and t35.certificate.grid_points == 2000
        and t35.certificate.grid_min > 0.0
        and len(ratios) == 2
        and all(r < 0.0 for r in ratios)
    )
    _report(
        5,
        ok,
        f"non-existence certified (grid min {t35.certificate.grid_min:.4f}, "
        f"mirrored-pair ratios {ratios[0]:.4f}, {ratios[1]:.4f})",
    )


def _check_row(pt, ref, failures, skip_r_diff=False):
    theta2, theta1, lam, r_diff = ref
    if abs(pt.theta1 - theta1) > 1e-3:
        failures.append(f"theta1@{theta2}")
    if not table_data.ratio_ok(pt.mass_ratio, lam):
        failures.append(f"lambda@{theta2}")
    if not table_data.ratio_ok(pt.r_sum, lam):
        failures.append(f"r_sum@{theta2}")
    if not skip_r_diff and not table_data.ratio_ok(pt.r_diff, r_diff):
        failures.append(f"r_diff@{theta2}")


def test_criterion_06_table_regression(traced_tables):
    failures = []
    checked = 0
    by_theta2 = {}
    for pt in traced_tables["D1"]:
        by_theta2.setdefault(pt.theta2, []).append(pt)
    for lower, upper in zip(table_data.TABLE_D1_LOWER, table_data.TABLE_D1_UPPER):
        pts = by_theta2[lower[0]]
        if len(pts) != 2:
            failures.append(f"branch count@{lower[0]}")
            continue
        _check_row(pts[0], lower, failures)
        _check_row(pts[1], upper, failures)
        checked += 2
    if len(traced_tables["D2"]) != len(table_data.TABLE_D2):
        failures.append("D2 row count")
    if len(traced_tables["D3"]) != len(table_data.TABLE_D3):
        failures.append("D3 row count")
    for pt, ref in zip(traced_tables["D2"], table_data.TABLE_D2):
        _check_row(pt, ref, failures, skip_r_diff=ref[0] == table_data.POLE_THETA2)
        checked += 1
    for pt, ref in zip(traced_tables["D3"], table_data.TABLE_D3):
        _check_row(pt, ref, failures)
        checked += 1
    pole = r_diff_pole()
    pole_ok = 2.4 < pole < 2.5
    if not pole_ok:
        failures.append("pole location")
    _report(
        6,
        not failures,
        f"{checked} table rows match (theta1 1e-3, ratios 1%/5%); r_diff row at "
        f"theta2=2.4 excluded, pole detected at theta2={pole:.6f}",
    )


def test_criterion_07_special_points():
    cat = build_catalog()
    worst = max(p.delta for p in cat.points)
    vanishing = {
        p.label: p.vanishing for p in cat.points if p.label in ("J", "K", "L", "M")
    }
    degenerate = all(cat.by_label(l).degenerate for l in ("J", "K", "L", "M"))
    ok = (
        len(cat.points) == 12
        and worst < 1e-3
        and degenerate
        and vanishing["J"] == vanishing["K"] == vanishing["L"] == "f(theta1+theta2)"
        and vanishing["M"] == "f(theta4)"
    )
    _report(7, ok, f"all 12 special points recomputed (worst delta {worst:.2e})")


def test_criterion_08_structural_identities():
    rng = np.random.default_rng(SEED)
    worst_pf = 0.0
    checked = 0
    while checked < 1000:
        t1 = rng.uniform(0.05, math.pi - 0.05)
        t2 = rng.uniform(0.05, TWO_PI - 0.05)
        if TWO_PI - 2.0 * t1 - t2 < 0.05 or t1 + t2 > TWO_PI - 0.05:
            continue
        det = np.linalg.det(mass_matrix(SymmetricConfig.from_pair(t1, t2)).entries)
        ref = curve_eval(t1, t2) ** 2
        worst_pf = max(worst_pf, abs(det - ref) / abs(ref))
        checked += 1

    worst_det = max(
        abs(np.linalg.det(A)) / np.linalg.norm(A) ** 4
        for A in (
            coefficient_matrix(MassVector(tuple(rng.uniform(0.1, 10.0, 4))))
            for _ in range(100)
        )
    )

    worst_ngon = max(
        max(
            abs(r)
            for r in residual_general(
                AngleConfig((TWO_PI / n,) * n), MassVector((1.0,) * n)
            )
        )
        for n in range(3, 11)
    )

    anti_ok = all(
        abs(f_eval(TWO_PI - t) + f_eval(t)) <= 1e-12 * max(1.0, abs(f_eval(t)))
        for t in (k * math.pi / 513.0 for k in range(1, 513))
    )
    sign_ok = True
    inset = 1e-6
    for lo, hi, sign in (
        (inset, math.pi / 3.0 - inset, -1.0),
        (math.pi / 3.0 + inset, math.pi - inset, 1.0),
        (math.pi + inset, 5.0 * math.pi / 3.0 - inset, -1.0),
        (5.0 * math.pi / 3.0 + inset, TWO_PI - inset, 1.0),
    ):
        sign_ok = sign_ok and all(sign * f_eval(t) > 0.0 for t in np.linspace(lo, hi, 200))

    ok = worst_pf <= 1e-9 and worst_det < 1e-12 and worst_ngon < 1e-12 and anti_ok and sign_ok
    _report(
        8,
        ok,
        "structural identities hold (det(M)=F^2 rel "
        f"{worst_pf:.2e}, det(A) rel {worst_det:.2e}, n-gon {worst_ngon:.2e}, "
        "antisymmetry and sign table on grids)",
    )


def test_criterion_09_ratio_identity(traced_tables):
    worst = 0.0
    counted = 0
    for pts in traced_tables.values():
        for pt in pts:
            if pt.degenerate:
                continue
            worst = max(worst, abs(pt.mass_ratio - pt.r_sum) / abs(pt.r_sum))
            counted += 1
    _report(
        9,
        counted > 0 and worst <= 1e-9,
        f"lambda equals r_sum at {counted} traced points (worst rel {worst:.2e})",
    )


def test_criterion_10_d4_empty():
    count = d4_region_count(200)
    _report(10, count == 0, f"no D4 classifications on the 200x200 band grid (count {count})")
