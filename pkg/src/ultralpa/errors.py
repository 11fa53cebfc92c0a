"""Exception types shared across the package."""


class UltraLPAError(Exception):
    """Base class for all domain errors raised by this package."""


class ContextError(UltraLPAError):
    """A vertex set mentions labels or families unknown to its ultragraph."""


class ValidationError(UltraLPAError):
    """An ultragraph description violates a model invariant."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class NotInAlgebraError(UltraLPAError):
    """A generator lies outside the algebra generated by singletons and ranges."""


class AdmissibilityError(UltraLPAError):
    """S is not a subset of the breaking vertices of H."""


class TotalIdealError(UltraLPAError):
    """The operation requires a proper ideal but received the total one."""


class LoopError(UltraLPAError):
    """A loop argument is not a loop of the requested complement."""


class ParameterError(UltraLPAError):
    """A Laurent parameter is zero, a unit, or reducible."""


class EngineError(UltraLPAError):
    """The symbolic engine cannot handle the given input."""


class EnumerationError(UltraLPAError):
    """Ideal enumeration would exceed the supported problem size."""
