"""Exception types shared across the package."""


class InstanceTooLargeError(ValueError):
    """Requested Gr(k,n) has rank binomial(n,k) above the configured cap."""


class IterationFailureError(RuntimeError):
    """Power iteration did not converge; carries the last iterate."""

    def __init__(self, message, last_value=None, last_vector=None, iterations=None):
        super().__init__(message)
        self.last_value = last_value
        self.last_vector = last_vector
        self.iterations = iterations


class CrossCheckError(RuntimeError):
    """Two independent routes to the same quantity disagree beyond tolerance."""
