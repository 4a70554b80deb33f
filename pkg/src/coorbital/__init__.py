"""Symmetric central configurations of a planar four-satellite coorbital ring.

A heavy central body and four infinitesimal satellites share one
circular orbit; the first and third angular gaps are equal. This
package evaluates the scalar interaction kernel that governs the
tangential balance, solves the degenerate cases where one kernel value
vanishes, traces the curve of generic configurations with its mass
ratios, and recomputes the catalog of special points. A command line
(``coorbital``) exposes the same operations with deterministic CSV and
JSON output.
"""

__version__ = "0.1.0"

from .backend import BACKEND
from .catalog import SpecialPoint, SpecialPointCatalog, build_catalog
from .curve import (
    CurvePoint,
    curve_eval,
    curve_point,
    d4_region_count,
    mass_ratio,
    mass_ratio_pair,
    r_diff_pole,
    region_classify,
    trace_curve,
)
from .exceptions import (
    AngleDomainError,
    CatalogMismatchError,
    ConsistencyError,
    CoorbitalError,
    DegenerateDenominatorError,
    MassDomainError,
    NoSignChangeError,
    RankDeficiencyAbsentError,
    TraceResidualError,
)
from .kernel import (
    KernelProfile,
    critical_points,
    f_double_prime,
    f_eval,
    f_prime,
)
from .model import (
    AngleConfig,
    MassMatrix,
    MassVector,
    NullSpaceResult,
    SymmetricConfig,
    coefficient_matrix,
    kernel_values,
    mass_matrix,
    positive_null_masses,
    residual_four,
    residual_general,
)
from .rootfind import Bracket, RootResult, bracket_root, scan_brackets
from .theorems import (
    CaseSolution,
    Certificate,
    MassCondition,
    RejectedBranch,
    SOLVERS,
    check_T35,
    solve_T32,
    solve_T33,
    solve_T34,
    solve_T36,
    solve_T37,
)

__all__ = [
    "AngleConfig",
    "AngleDomainError",
    "BACKEND",
    "Bracket",
    "CaseSolution",
    "CatalogMismatchError",
    "Certificate",
    "ConsistencyError",
    "CoorbitalError",
    "CurvePoint",
    "DegenerateDenominatorError",
    "KernelProfile",
    "MassCondition",
    "MassDomainError",
    "MassMatrix",
    "MassVector",
    "NoSignChangeError",
    "NullSpaceResult",
    "RankDeficiencyAbsentError",
    "RejectedBranch",
    "RootResult",
    "SOLVERS",
    "SpecialPoint",
    "SpecialPointCatalog",
    "SymmetricConfig",
    "TraceResidualError",
    "__version__",
    "bracket_root",
    "build_catalog",
    "check_T35",
    "coefficient_matrix",
    "critical_points",
    "curve_eval",
    "curve_point",
    "d4_region_count",
    "f_double_prime",
    "f_eval",
    "f_prime",
    "kernel_values",
    "mass_matrix",
    "mass_ratio",
    "mass_ratio_pair",
    "positive_null_masses",
    "r_diff_pole",
    "region_classify",
    "residual_four",
    "residual_general",
    "scan_brackets",
    "solve_T32",
    "solve_T33",
    "solve_T34",
    "solve_T36",
    "solve_T37",
    "trace_curve",
]
