"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input (bad dimensions, zero direction, ...)."""


class InfeasibleError(Exception):
    """The constraint system is empty; ``farkas`` certifies it."""

    def __init__(self, message, farkas=None):
        super().__init__(message)
        self.farkas = farkas


class NoSolutionError(Exception):
    """Feasible, but the lineality space of the upper image meets the cone.

    ``certificate`` is a nonzero vector in that intersection.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class InconsistencyError(RuntimeError):
    """An internal invariant was violated (a bug, or inputs breaking a precondition)."""


class VerificationError(Exception):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
