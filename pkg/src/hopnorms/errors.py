"""Exception types shared across the package."""


class DomainError(ValueError):
    """Inputs outside an operation's admissible parameter domain."""


class SingularEvaluation(ArithmeticError):
    """Evaluation requested exactly at a non-removable singularity."""


class NumericalFailure(RuntimeError):
    """A numerical procedure did not reach its target accuracy.

    Carries the best available result in ``best`` when one exists.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class UnsupportedAsymptotics(DomainError):
    """Requested an asymptotic regime with no known closed leading term."""
