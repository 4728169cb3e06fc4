"""Exception hierarchy shared by all stokeslab modules."""


class StokeslabError(Exception):
    """Base class for all errors raised by stokeslab."""


class GammaPoleError(StokeslabError):
    """Argument of Gamma hit (or came too close to) a pole."""


class NonHermitianError(StokeslabError):
    """A matrix that must be Hermitian is not, beyond tolerance."""


class RootFindingError(StokeslabError):
    """Polynomial root finder failed to meet its residual contract."""


class QuadratureError(StokeslabError):
    """Adaptive quadrature did not converge within the refinement budget."""


class StepSizeError(StokeslabError):
    """ODE step size underflowed; problem is stiffer than the budget allows."""


class SheetAmbiguityError(StokeslabError):
    """Sheet continuation could not resolve a root-matching ambiguity."""


class RadiusWindowError(StokeslabError):
    """No admissible radius window between branch-cut families."""


class DegenerateCurveError(StokeslabError):
    """Curve construction hit a degenerate configuration (repeated
    eigenvalues, identically vanishing discriminant, ...)."""


class CutCrossingError(StokeslabError):
    """A propagation path would cross the log branch cut."""


class RegularizationError(StokeslabError):
    """Triangular refactorization of a regularized Stokes matrix failed."""


class WkbBreakdownError(StokeslabError):
    """WKB fit is undefined (vanishing quantity or oscillating sign)."""


class ConfigError(StokeslabError):
    """Scenario/CLI configuration violates the schema."""
