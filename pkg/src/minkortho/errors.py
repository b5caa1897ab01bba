"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid norm or scene configuration (asymmetric polygon, p < 1, bad JSON...)."""


class PreconditionError(ValueError):
    """A documented operation precondition does not hold for the given inputs."""


class DegenerateInputError(PreconditionError):
    """Collinear / duplicated points where non-degenerate geometry is required."""


class ConstructionFailure(RuntimeError):
    """A numerical search (root bracketing, bisection) failed to produce a result."""
