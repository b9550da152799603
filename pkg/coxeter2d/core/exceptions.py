# coxeter2d/core/exceptions.py


class Coxeter2DError(Exception):
    """
    Base error carrying a process exit code and a human readable detail.

    Raise the subclass that matches the failure; the CLI maps
    ``exit_code`` straight onto the process status.
    """

    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidInputError(Coxeter2DError, ValueError):
    """Malformed arguments: parse failures, dimension mismatch, bad indices."""

    exit_code = 64


class ConfigError(Coxeter2DError):
    exit_code = 64


class ResourceLimitError(Coxeter2DError):
    """A coset, element or enumeration bound was hit before closure."""

    exit_code = 3


class HypothesisError(Coxeter2DError):
    """Neither coset-representative proposition applies to the pair."""

    exit_code = 65
