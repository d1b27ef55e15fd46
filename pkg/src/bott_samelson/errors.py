"""Exception types shared across the package."""


class ShapeError(ValueError):
    """A tableau, point or multiplicity vector does not fit the declared shape."""


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class HypothesisViolation(PreconditionError):
    """The hypothesis of a structural check does not hold for the given input."""


class ResourceBoundExceeded(RuntimeError):
    """A brute-force routine was asked to run beyond its configured size bound."""
