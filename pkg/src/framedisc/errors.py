"""Exception types shared across the toolkit."""


class FrameDiscError(Exception):
    """Base class for toolkit errors."""


class InvalidParameterError(FrameDiscError, ValueError):
    """A parameter is outside its documented domain."""


class InfeasibleError(FrameDiscError, ValueError):
    """The requested construction is infeasible for the given input."""


class BudgetExceededError(FrameDiscError):
    """An enumeration or sampling budget would be exceeded; the operation refuses to run."""


class EigensolverError(FrameDiscError, RuntimeError):
    """The eigensolver failed to converge; carries the off-diagonal residual."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
