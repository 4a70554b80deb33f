"""Exception types shared across the package."""


class CoorbitalError(Exception):
    """Base class for all package-specific errors."""


class AngleDomainError(CoorbitalError, ValueError):
    """An angle left the open, collision-free domain."""


class MassDomainError(CoorbitalError, ValueError):
    """A mass factor violated strict positivity."""


class NoSignChangeError(CoorbitalError):
    """A root bracket does not straddle a strict sign change."""


class ConsistencyError(CoorbitalError):
    """An internal cross-check failed; indicates an implementation bug,
    not bad user input."""


class RankDeficiencyAbsentError(CoorbitalError):
    """The mass matrix has a trivial null space, so no nonzero mass vector
    solves the balance equations at this point."""


class DegenerateDenominatorError(CoorbitalError):
    """A ratio denominator vanished at a degenerate configuration."""


class CatalogMismatchError(CoorbitalError):
    """A recomputed special point deviates from its reference coordinates
    by more than the catalog tolerance."""


class TraceResidualError(CoorbitalError):
    """A traced curve point failed the curve-residual bound."""
