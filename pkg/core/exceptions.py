class MjplError(Exception):
    """Base class for every error raised by the toolkit."""


class DimensionMismatch(MjplError, ValueError):
    pass


class NotPositiveDefinite(MjplError, ArithmeticError):
    pass


class SingularInformation(MjplError, ArithmeticError):
    """X̄ᵀWX̄ could not be factorized."""


class NonFiniteObjective(MjplError, ArithmeticError):
    pass


class DegenerateDesign(MjplError, ValueError):
    pass


class NonPositiveResponse(MjplError, ValueError):
    pass


class QuadratureUnstable(MjplError, ArithmeticError):
    pass


class UnknownConfig(MjplError, ValueError):
    pass


class NonPositiveInput(MjplError, ValueError):
    pass


class NonPositiveScale(MjplError, ValueError):
    pass


class LengthMismatch(MjplError, ValueError):
    pass


class DegenerateBootstrap(MjplError, ArithmeticError):
    pass


class DegenerateObservations(MjplError, ValueError):
    pass


class DatasetParseError(MjplError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
