"""Exception hierarchy shared across the package."""


class ActschedError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(ActschedError):
    """Matrix dimensions are inconsistent."""


class SingularGramian(ActschedError):
    """The Gramian is singular: the system is uncontrollable at this horizon."""


class MissingDesignPool(ActschedError):
    """A design pool is required for V- and G-optimality but was not supplied."""


class BarrierViolation(ActschedError):
    """A spectral barrier potential was evaluated on the wrong side of the spectrum."""


class DegenerateDenominator(ActschedError):
    """A barrier-potential difference is too close to zero to divide by."""


class NoFeasibleIndex(ActschedError):
    """No column satisfies the selection inequality (numerical failure)."""


class InvalidBudget(ActschedError):
    """The sparsity budget is outside the feasible range."""


class InvalidEps(ActschedError):
    """The approximation factor is outside its admissible interval."""


class TooLarge(ActschedError):
    """The instance exceeds the hard size limit of an exhaustive solver."""


class ParseError(ActschedError):
    """A system or schedule file could not be parsed."""
