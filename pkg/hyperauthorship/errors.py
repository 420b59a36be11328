class HyperauthorshipError(ValueError):
    """Base class for every error raised by the package."""


class InputError(HyperauthorshipError):
    pass


class CorpusParseError(InputError):
    def __init__(self, line_number: int | None, message: str):
        self.line_number = line_number
        self.message = message
        where = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{where}{message}")


class ConfigurationError(InputError):
    pass


class NotFoundError(InputError):
    pass


class ComputationError(HyperauthorshipError):
    pass


class InsufficientDataError(ComputationError):
    pass


class InvalidParameterError(ComputationError):
    pass


class UndefinedMetricError(ComputationError):
    pass


class DisconnectedGraphError(ComputationError):
    pass


class ConvergenceError(ComputationError):
    def __init__(self, iterations: int, residual: float):
        self.iterations = iterations
        self.residual = residual
        super().__init__(
            f"Power iteration did not converge after {iterations} iterations (residual {residual:.3e})."
        )


class FittingError(ComputationError):
    pass


class DegenerateReferenceError(ComputationError):
    pass


class RewiringWarning(UserWarning):
    """Raised through warnings.warn when a reference graph cannot be rewired."""
